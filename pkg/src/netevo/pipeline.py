"""End-to-end batch runs: log -> windows -> snapshots -> diffs -> series files."""

from __future__ import annotations

import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from netevo.errors import InvalidSpecError, TooFewSnapshotsError
from netevo.graph import GraphSnapshot, format_snapshot
from netevo.measures import (
    MEASURES,
    CoefficientVector,
    MeasureSeries,
    combination,
    consecutive_diffs,
    normalize_series,
    series_from_diffs,
)
from netevo.svg import line_chart
from netevo.windowing import Window, WindowSpec, build_snapshot, load_events, slice_windows

log = logging.getLogger(__name__)

CSV_HEADER = "pair_index,combination,sum,normalized_sum,relative_sum,edge_modification"


def parse_combinations(text: str) -> list[tuple[int | str, CoefficientVector]]:
    """Parse ``"all"``, ``"7,31"`` or explicit vectors such as ``"7,1:0:1:0:0.5"``.

    Table indices keep their number as label; explicit vectors are labelled
    ``custom1``, ``custom2``... in order of appearance.
    """
    text = text.strip()
    if text.lower() == "all":
        return [(i, combination(i)) for i in range(1, 32)]
    out: list[tuple[int | str, CoefficientVector]] = []
    customs = 0
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if ":" in item:
            parts = item.split(":")
            if len(parts) != 5:
                raise InvalidSpecError(f"explicit coefficient vector needs 5 values, got {item!r}")
            try:
                values = [float(p) for p in parts]
            except ValueError:
                raise InvalidSpecError(f"bad coefficient vector {item!r}") from None
            customs += 1
            out.append((f"custom{customs}", CoefficientVector(*values)))
        else:
            try:
                index = int(item)
            except ValueError:
                raise InvalidSpecError(f"bad combination {item!r}") from None
            out.append((index, combination(index)))
    if not out:
        raise InvalidSpecError("no combinations selected")
    labels = [label for label, _ in out]
    if len(set(labels)) != len(labels):
        raise InvalidSpecError("combination listed twice")
    return out


def file_tag(label: int | str) -> str:
    return f"c{label:02d}" if isinstance(label, int) else str(label)


def fmt_real(x: float) -> str:
    return format(x, ".9g")


def series_csv(series: Sequence[MeasureSeries]) -> str:
    """Rows ordered by pair index, then by the order of ``series``."""
    lines = [CSV_HEADER]
    if series:
        for rows in zip(*(s.points for s in series)):
            for s, p in zip(series, rows):
                lines.append(",".join([str(p.pair_index), str(s.combination)] + [fmt_real(v) for v in p.values()]))
    return "\n".join(lines) + "\n"


def windows_manifest(windows: Sequence[Window], snapshots: Sequence[GraphSnapshot]) -> str:
    lines = ["index,start,end,nodes,edges"]
    for w, g in zip(windows, snapshots):
        lines.append(f"{w.index},{w.start},{w.end},{len(g.nodes)},{len(g.edges)}")
    return "\n".join(lines) + "\n"


def atomic_write(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@dataclass
class RunResult:
    windows: list[Window]
    snapshots: list[GraphSnapshot]
    series: list[MeasureSeries]
    files: list[Path] = field(default_factory=list)


def snapshots_for(events, spec: WindowSpec) -> tuple[list[Window], list[GraphSnapshot]]:
    windows = slice_windows(events, spec)
    return windows, [build_snapshot(w) for w in windows]


def run_pipeline(
    input_path,
    output_dir,
    spec: WindowSpec,
    combinations: Sequence[tuple[int | str, CoefficientVector]],
    emit_svg: bool = False,
    normalized_csv: bool = False,
    skip_bad_lines: bool = False,
    prefix: str = "series",
) -> RunResult:
    """Run the full analysis and write one CSV per combination plus ``windows.txt``.

    Everything is computed before the first file is written, and each file is
    written through a temporary file and renamed, so a failed run leaves no
    partial output.
    """
    events, _ = load_events(input_path, skip_bad_lines=skip_bad_lines)
    windows, snapshots = snapshots_for(events, spec)
    if len(snapshots) < 2:
        raise TooFewSnapshotsError(f"the log yields {len(snapshots)} complete window(s); at least 2 are needed")
    tuples = consecutive_diffs(snapshots)

    outputs: dict[str, str] = {"windows.txt": windows_manifest(windows, snapshots)}
    all_series = []
    for label, coeffs in combinations:
        raw = series_from_diffs(tuples, coeffs, label)
        all_series.append(raw)
        normed = normalize_series(raw)
        tag = file_tag(label)
        outputs[f"{prefix}_{tag}.csv"] = series_csv([normed if normalized_csv else raw])
        if emit_svg:
            for measure in MEASURES:
                outputs[f"{prefix}_{tag}_{measure}.svg"] = line_chart(
                    {measure: normed.column(measure)},
                    title=f"{measure.replace('_', ' ')}, combination {label} (normalized)",
                )

    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(outputs):
        atomic_write(out / name, outputs[name])
        written.append(out / name)
    log.info("wrote %d files to %s", len(written), out)
    return RunResult(windows, snapshots, all_series, written)


def write_window_snapshots(windows, snapshots, output_dir) -> list[Path]:
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    width = max(3, len(str(len(windows))))
    texts = {f"window_{w.index:0{width}d}.txt": format_snapshot(g) for w, g in zip(windows, snapshots)}
    texts["windows.txt"] = windows_manifest(windows, snapshots)
    paths = []
    for name in sorted(texts):
        atomic_write(out / name, texts[name])
        paths.append(out / name)
    return paths
