"""Distance measures over change sets and measure series over snapshot runs."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from netevo.errors import DegenerateInputError, InvalidSpecError, TooFewSnapshotsError
from netevo.graph import GraphDifferentialTuple, GraphSnapshot, diff

MEASURES = ("sum", "normalized_sum", "relative_sum", "edge_modification")


@dataclass(frozen=True)
class CoefficientVector:
    """Importance of each change-set component, each in ``[0, 1]``."""

    alpha_plus: float = 0.0
    alpha_minus: float = 0.0
    beta_plus: float = 0.0
    beta_minus: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        for name, value in zip(("alpha_plus", "alpha_minus", "beta_plus", "beta_minus", "gamma"), self.as_tuple()):
            if not 0.0 <= value <= 1.0:
                raise InvalidSpecError(f"{name} must lie in [0, 1], got {value}")

    @classmethod
    def ones(cls) -> CoefficientVector:
        return cls(1.0, 1.0, 1.0, 1.0, 1.0)

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.alpha_plus, self.alpha_minus, self.beta_plus, self.beta_minus, self.gamma)

    def swapped(self) -> CoefficientVector:
        """Exchange the added/removed coefficients (for reversed diffs)."""
        return CoefficientVector(self.alpha_minus, self.alpha_plus, self.beta_minus, self.beta_plus, self.gamma)


# Row order matters: combinations are referred to by 1-based row number.
_TABLE2 = (
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
    (1, 1, 0, 0, 0),
    (1, 0, 1, 0, 0),
    (1, 0, 0, 1, 0),
    (1, 0, 0, 0, 1),
    (0, 1, 1, 0, 0),
    (0, 1, 0, 1, 0),
    (0, 1, 0, 0, 1),
    (0, 0, 1, 1, 0),
    (0, 0, 1, 0, 1),
    (0, 0, 0, 1, 1),
    (0, 0, 1, 1, 1),
    (0, 1, 0, 1, 1),
    (0, 1, 1, 0, 1),
    (0, 1, 1, 1, 0),
    (1, 0, 1, 1, 0),
    (1, 0, 0, 1, 1),
    (1, 0, 1, 0, 1),
    (1, 1, 0, 1, 0),
    (1, 1, 0, 0, 1),
    (1, 1, 1, 0, 0),
    (1, 1, 1, 1, 0),
    (0, 1, 1, 1, 1),
    (1, 0, 1, 1, 1),
    (1, 1, 0, 1, 1),
    (1, 1, 1, 0, 1),
    (1, 1, 1, 1, 1),
)


def table2_combinations() -> list[CoefficientVector]:
    """The 31 binary coefficient vectors, in their canonical numbering (row 1 first)."""
    return [CoefficientVector(*map(float, row)) for row in _TABLE2]


def combination(index: int) -> CoefficientVector:
    if not 1 <= index <= len(_TABLE2):
        raise InvalidSpecError(f"combination index must be in 1..{len(_TABLE2)}, got {index}")
    return CoefficientVector(*map(float, _TABLE2[index - 1]))


def sum_distance(t: GraphDifferentialTuple, c: CoefficientVector) -> float:
    return sum(w * n for w, n in zip(c.as_tuple(), t.cardinalities))


def normalized_sum(t: GraphDifferentialTuple, c: CoefficientVector) -> float:
    """Sum distance over the node and edge counts of both graphs; 0 for identical graphs."""
    denom = sum(t.source_sizes) + sum(t.target_sizes)
    if denom == 0:
        raise DegenerateInputError("normalized sum is undefined for two empty graphs")
    return sum_distance(t, c) / denom


def relative_sum(t: GraphDifferentialTuple, c: CoefficientVector) -> float:
    """Sum distance relative to the size of the first graph (may exceed 1)."""
    denom = sum(t.source_sizes)
    if denom == 0:
        raise DegenerateInputError("relative sum is undefined when the first graph is empty")
    return sum_distance(t, c) / denom


def edge_modification(t: GraphDifferentialTuple) -> float:
    """Mean absolute weight change over edges present in both graphs.

    Unchanged shared edges count in the denominator with a zero change; with
    no shared edges the measure is 0.
    """
    if t.common_edge_count == 0:
        return 0.0
    return sum(abs(d.delta) for d in t.modified_weights) / t.common_edge_count


@dataclass(frozen=True)
class MeasurePoint:
    pair_index: int
    sum: float
    normalized_sum: float
    relative_sum: float
    edge_modification: float

    def values(self) -> tuple[float, float, float, float]:
        return (self.sum, self.normalized_sum, self.relative_sum, self.edge_modification)


@dataclass(frozen=True)
class MeasureSeries:
    combination: int | str
    points: tuple[MeasurePoint, ...]
    normalized: bool = False

    def __len__(self):
        return len(self.points)

    def column(self, measure: str) -> list[float]:
        if measure not in MEASURES:
            raise KeyError(measure)
        return [getattr(p, measure) for p in self.points]


def measure_point(t: GraphDifferentialTuple, c: CoefficientVector, pair_index: int) -> MeasurePoint:
    return MeasurePoint(
        pair_index=pair_index,
        sum=sum_distance(t, c),
        normalized_sum=normalized_sum(t, c),
        relative_sum=relative_sum(t, c),
        edge_modification=edge_modification(t),
    )


def consecutive_diffs(snapshots: Sequence[GraphSnapshot]) -> list[GraphDifferentialTuple]:
    if len(snapshots) < 2:
        raise TooFewSnapshotsError(f"need at least 2 snapshots, got {len(snapshots)}")
    return [diff(a, b) for a, b in zip(snapshots, snapshots[1:])]


def series_from_diffs(
    tuples: Sequence[GraphDifferentialTuple], c: CoefficientVector, combination: int | str = "custom"
) -> MeasureSeries:
    """Series for pre-computed consecutive diffs; point ``i`` (1-based) compares snapshot i+1 to i."""
    points = tuple(measure_point(t, c, i) for i, t in enumerate(tuples, start=1))
    return MeasureSeries(combination, points)


def measure_series(
    snapshots: Sequence[GraphSnapshot], c: CoefficientVector, combination: int | str = "custom"
) -> MeasureSeries:
    """All four measures for every consecutive snapshot pair."""
    return series_from_diffs(consecutive_diffs(snapshots), c, combination)


def normalize_series(s: MeasureSeries) -> MeasureSeries:
    """Divide each measure's column by its own maximum; all-zero columns stay zero."""
    if not s.points:
        raise ValueError("cannot normalize an empty series")
    scale = {}
    for name in MEASURES:
        peak = max(s.column(name))
        scale[name] = peak if peak > 0 else 1.0
    points = tuple(
        replace(p, **{name: getattr(p, name) / scale[name] for name in MEASURES}) for p in s.points
    )
    return MeasureSeries(s.combination, points, normalized=True)
