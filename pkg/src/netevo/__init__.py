"""Change sets and distance measures for time-windowed communication networks."""

from netevo.errors import (
    DegenerateInputError,
    EmptyLogError,
    InconsistentTupleError,
    InvalidSpecError,
    ParseError,
    TooFewSnapshotsError,
)
from netevo.graph import (
    EPSILON,
    GraphDifferentialTuple,
    GraphSnapshot,
    WeightDelta,
    apply_diff,
    diff,
    equivalent,
)
from netevo.measures import (
    CoefficientVector,
    MeasurePoint,
    MeasureSeries,
    edge_modification,
    measure_series,
    normalize_series,
    normalized_sum,
    relative_sum,
    sum_distance,
    table2_combinations,
)
from netevo.synth import SynthSpec, generate_log
from netevo.windowing import (
    EventRecord,
    Window,
    WindowSpec,
    build_snapshot,
    read_events,
    slice_windows,
)

__version__ = "0.1.0"

__all__ = [
    "EPSILON",
    "CoefficientVector",
    "DegenerateInputError",
    "EmptyLogError",
    "EventRecord",
    "GraphDifferentialTuple",
    "GraphSnapshot",
    "InconsistentTupleError",
    "InvalidSpecError",
    "MeasurePoint",
    "MeasureSeries",
    "ParseError",
    "SynthSpec",
    "TooFewSnapshotsError",
    "WeightDelta",
    "Window",
    "WindowSpec",
    "apply_diff",
    "build_snapshot",
    "diff",
    "edge_modification",
    "equivalent",
    "generate_log",
    "measure_series",
    "normalize_series",
    "normalized_sum",
    "read_events",
    "relative_sum",
    "slice_windows",
    "sum_distance",
    "table2_combinations",
]
