"""Event-log ingestion, fixed-length time windows, and per-window snapshots."""

from __future__ import annotations

import logging
from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from netevo.errors import EmptyLogError, InvalidSpecError, ParseError
from netevo.graph import GraphSnapshot

log = logging.getLogger(__name__)

DAY = 86400


class EventRecord(NamedTuple):
    sender: str
    recipient: str
    timestamp: int


@dataclass
class IngestStats:
    lines: int = 0
    events: int = 0
    comments: int = 0
    self_loops: int = 0
    bad_lines: int = 0


def parse_event_line(line: str) -> EventRecord:
    parts = line.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 3 comma-separated fields, got {len(parts)}")
    sender, recipient, ts = (p.strip() for p in parts)
    if not sender or not recipient:
        raise ValueError("empty sender or recipient")
    try:
        timestamp = int(ts)
    except ValueError:
        raise ValueError(f"timestamp {ts!r} is not an integer") from None
    if timestamp < 0:
        raise ValueError(f"negative timestamp {timestamp}")
    return EventRecord(sender, recipient, timestamp)


def read_events(lines: Iterable[str], skip_bad_lines: bool = False, path=None) -> tuple[list[EventRecord], IngestStats]:
    """Parse ``sender,recipient,unix_seconds`` lines.

    ``#`` lines and blank lines are ignored.  A malformed line raises
    :class:`ParseError` carrying its line number, unless ``skip_bad_lines`` is
    set, in which case it is counted in the returned stats.  Self-addressed
    events are dropped and counted.
    """
    stats = IngestStats()
    events = []
    for lineno, raw in enumerate(lines, start=1):
        stats.lines += 1
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            stats.comments += 1
            continue
        try:
            ev = parse_event_line(line)
        except ValueError as exc:
            if skip_bad_lines:
                stats.bad_lines += 1
                continue
            raise ParseError(str(exc), lineno, path) from None
        if ev.sender == ev.recipient:
            stats.self_loops += 1
            continue
        events.append(ev)
    stats.events = len(events)
    if stats.self_loops:
        log.warning("dropped %d self-addressed events", stats.self_loops)
    if stats.bad_lines:
        log.warning("skipped %d malformed lines", stats.bad_lines)
    return events, stats


def load_events(path, skip_bad_lines: bool = False) -> tuple[list[EventRecord], IngestStats]:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        return read_events(fh, skip_bad_lines=skip_bad_lines, path=path)


def format_events(events: Iterable[EventRecord]) -> Iterable[str]:
    for ev in events:
        yield f"{ev.sender},{ev.recipient},{ev.timestamp}\n"


@dataclass(frozen=True)
class WindowSpec:
    """Window length and step in whole days; ``origin`` in unix seconds.

    ``step == window_days`` gives disjoint windows, a smaller step gives
    overlapping ones.  With ``origin=None`` the first window starts at UTC
    midnight of the earliest event's day.
    """

    window_days: int
    step_days: int
    origin: int | None = None

    def __post_init__(self):
        for name in ("window_days", "step_days"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InvalidSpecError(f"{name} must be a positive integer, got {value!r}")
        if self.step_days > self.window_days:
            raise InvalidSpecError(f"step ({self.step_days} days) exceeds window length ({self.window_days} days)")
        if self.origin is not None and self.origin < 0:
            raise InvalidSpecError("origin must be non-negative")

    @property
    def overlapping(self) -> bool:
        return self.step_days < self.window_days

    @property
    def length(self) -> int:
        return self.window_days * DAY

    @property
    def step(self) -> int:
        return self.step_days * DAY


@dataclass(frozen=True)
class Window:
    index: int
    start: int
    end: int
    events: Sequence[EventRecord] = field(repr=False)

    def __len__(self):
        return len(self.events)


def default_origin(events: Sequence[EventRecord]) -> int:
    first = min(ev.timestamp for ev in events)
    return first - first % DAY


def window_count(span_days: int, spec: WindowSpec) -> int:
    """Number of complete windows fitting in ``span_days`` whole days."""
    if span_days < spec.window_days:
        return 0
    return (span_days - spec.window_days) // spec.step_days + 1


def slice_windows(events: Sequence[EventRecord], spec: WindowSpec) -> list[Window]:
    """Cut the log into half-open windows ``[start, start + length)``.

    The covered span runs from the origin to the end of the day holding the
    last event.  Only windows that fit completely inside it are produced;
    events after the last complete window (or before the origin) are
    discarded with a warning.  An event lands in every window containing it.
    """
    if not events:
        raise EmptyLogError("event log is empty")
    ordered = sorted(events, key=lambda ev: ev.timestamp)
    times = [ev.timestamp for ev in ordered]
    origin = spec.origin if spec.origin is not None else default_origin(ordered)

    last = times[-1]
    span_days = (last - origin) // DAY + 1 if last >= origin else 0
    n = window_count(span_days, spec)

    windows = []
    for index in range(1, n + 1):
        start = origin + (index - 1) * spec.step
        end = start + spec.length
        lo = bisect_left(times, start)
        hi = bisect_left(times, end)
        windows.append(Window(index, start, end, ordered[lo:hi]))

    covered_end = windows[-1].end if windows else origin
    before = bisect_left(times, origin)
    after = len(times) - bisect_left(times, covered_end)
    # step <= window length, so nothing between origin and covered_end is lost
    if before:
        log.warning("discarded %d events before the window origin", before)
    if after:
        log.warning("discarded %d trailing events not covering a full window", after)
    return windows


def build_snapshot(window: Window | Iterable[EventRecord]) -> GraphSnapshot:
    """Weighted snapshot of one window.

    The weight of ``(x, y)`` is the number of messages x sent to y divided by
    the total number of messages x sent inside the window, so every sender's
    outgoing weights sum to one.
    """
    events = window.events if isinstance(window, Window) else window
    pair_counts = Counter((ev.sender, ev.recipient) for ev in events)
    sent = Counter()
    nodes = set()
    for (src, dst), count in pair_counts.items():
        sent[src] += count
        nodes.add(src)
        nodes.add(dst)
    edges = {pair: count / sent[pair[0]] for pair, count in pair_counts.items()}
    return GraphSnapshot(frozenset(nodes), edges)
