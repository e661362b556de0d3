class InconsistentTupleError(ValueError):
    """A change set does not fit the snapshot it is applied to."""


class DegenerateInputError(ValueError):
    """A measure's denominator is zero (empty graphs)."""


class EmptyLogError(ValueError):
    pass


class InvalidSpecError(ValueError):
    pass


class TooFewSnapshotsError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed input; ``lineno`` is 1-based when known."""

    def __init__(self, message, lineno=None, path=None):
        self.lineno = lineno
        self.path = path
        if path is not None:
            where = f"{path}:{lineno}: " if lineno is not None else f"{path}: "
        else:
            where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)
