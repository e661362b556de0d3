"""Bursty synthetic communication logs.

Every node sends messages as an independent renewal process whose gaps follow
a continuous power law ``p(t) ~ t**-alpha`` for ``t >= min_gap`` (a Pareto
distribution), and each message goes to a uniformly chosen other node.

Reproducibility: all randomness comes from the raw 64-bit output of numpy's
PCG64 bit generator seeded with ``SeedSequence(seed)``.  Raw outputs are
turned into uniforms here rather than through ``numpy.random.Generator``
methods, whose algorithms numpy does not promise to keep stable, so a spec
maps to the same log on every platform and numpy release.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from netevo.errors import InvalidSpecError
from netevo.windowing import DAY, EventRecord

ALPHA_RANGE = (1.5, 2.5)
_CHUNK = 256
_TWO_M53 = 2.0**-53


@dataclass(frozen=True)
class SynthSpec:
    node_count: int
    span_days: int
    alpha: float = 2.0
    min_gap: int = 600
    seed: int = 0

    def __post_init__(self):
        if self.node_count < 2:
            raise InvalidSpecError(f"node_count must be at least 2, got {self.node_count}")
        if self.span_days < 1:
            raise InvalidSpecError(f"span_days must be positive, got {self.span_days}")
        lo, hi = ALPHA_RANGE
        if not lo < self.alpha < hi:
            raise InvalidSpecError(f"alpha must lie in the open interval ({lo}, {hi}), got {self.alpha}")
        if int(self.min_gap) != self.min_gap or self.min_gap < 1:
            raise InvalidSpecError(f"min_gap must be a positive whole number of seconds, got {self.min_gap}")
        if not 0 <= self.seed < 2**64:
            raise InvalidSpecError("seed must be an unsigned 64-bit integer")

    @property
    def span_seconds(self) -> int:
        return self.span_days * DAY


def node_names(n: int) -> list[str]:
    width = len(str(n - 1))
    return [f"n{i:0{width}d}" for i in range(n)]


class _Uniforms:
    """Uniform doubles from raw PCG64 output, 53 bits each."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(np.random.SeedSequence(seed))

    def half_open(self, size: int) -> np.ndarray:
        """Values in [0, 1)."""
        raw = self._bits.random_raw(size)
        return (raw >> np.uint64(11)).astype(np.float64) * _TWO_M53

    def open_closed(self, size: int) -> np.ndarray:
        """Values in (0, 1]."""
        raw = self._bits.random_raw(size)
        return ((raw >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * _TWO_M53


def pareto_gaps(u: np.ndarray, alpha: float, min_gap: int, cap: int) -> np.ndarray:
    """Integer gaps ``floor(min_gap * u**(-1/(alpha-1)))``, clipped at ``cap``.

    ``u`` must lie in (0, 1]; every gap is at least ``min_gap``.
    """
    with np.errstate(over="ignore"):
        gaps = min_gap * np.power(u, -1.0 / (alpha - 1.0))
    return np.floor(np.minimum(gaps, float(cap))).astype(np.int64)


def _node_times(rng: _Uniforms, spec: SynthSpec) -> np.ndarray:
    span = spec.span_seconds
    # the first event sits at a uniform phase inside an initial gap so that
    # the process is already running at t = 0
    first_gap = pareto_gaps(rng.open_closed(1), spec.alpha, spec.min_gap, span)[0]
    t0 = int(rng.half_open(1)[0] * first_gap)
    if t0 >= span:
        return np.empty(0, dtype=np.int64)
    chunks = [np.array([t0], dtype=np.int64)]
    last = t0
    while True:
        gaps = pareto_gaps(rng.open_closed(_CHUNK), spec.alpha, spec.min_gap, span)
        times = last + np.cumsum(gaps)
        inside = times[times < span]
        chunks.append(inside)
        if len(inside) < _CHUNK:
            break
        last = int(times[-1])
    return np.concatenate(chunks)


def generate_arrays(spec: SynthSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(senders, recipients, timestamps)`` as index arrays sorted by time."""
    rng = _Uniforms(spec.seed)
    n = spec.node_count
    senders, recipients, stamps = [], [], []
    for node in range(n):
        times = _node_times(rng, spec)
        picks = np.floor(rng.half_open(len(times)) * (n - 1)).astype(np.int64)
        picks[picks >= node] += 1
        senders.append(np.full(len(times), node, dtype=np.int64))
        recipients.append(picks)
        stamps.append(times)
    senders = np.concatenate(senders)
    recipients = np.concatenate(recipients)
    stamps = np.concatenate(stamps)
    order = np.argsort(stamps, kind="stable")
    return senders[order], recipients[order], stamps[order]


def generate_log(spec: SynthSpec) -> list[EventRecord]:
    """Time-ordered synthetic event log; a pure function of ``spec``."""
    names = node_names(spec.node_count)
    senders, recipients, stamps = generate_arrays(spec)
    return [
        EventRecord(names[s], names[r], t)
        for s, r, t in zip(senders.tolist(), recipients.tolist(), stamps.tolist())
    ]


def interevent_gaps(events) -> np.ndarray:
    """Gaps between consecutive events of the same sender."""
    last: dict[str, int] = {}
    gaps = []
    for ev in events:
        prev = last.get(ev.sender)
        if prev is not None:
            gaps.append(ev.timestamp - prev)
        last[ev.sender] = ev.timestamp
    return np.asarray(gaps, dtype=np.int64)
