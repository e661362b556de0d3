"""Command-line entry point: ``netevo {synth,run,diff,slice}``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from netevo.errors import (
    DegenerateInputError,
    EmptyLogError,
    InvalidSpecError,
    ParseError,
    TooFewSnapshotsError,
)
from netevo.graph import GraphDifferentialTuple, diff, load_snapshot
from netevo.measures import CoefficientVector, edge_modification, normalized_sum, relative_sum, sum_distance
from netevo.pipeline import atomic_write, fmt_real, parse_combinations, run_pipeline, snapshots_for, write_window_snapshots
from netevo.synth import SynthSpec, generate_log
from netevo.windowing import DAY, WindowSpec, format_events, load_events

log = logging.getLogger("netevo")

FORMATS_HELP = """\
formats:
  event log     one event per line: <sender>,<recipient>,<unix_seconds>; '#' starts a comment
  snapshot      '# nodes: <n> edges: <m>', then 'N <id>' lines, then 'E <from> <to> <weight>' lines
  series CSV    pair_index,combination,sum,normalized_sum,relative_sum,edge_modification
  windows.txt   index,start,end,nodes,edges (one row per window)
"""


def _edge(pair) -> str:
    return f"<{pair[0]}, {pair[1]}>"


def _delta(d: float, signed: bool = False) -> str:
    text = format(round(d, 9), "g")
    return f"+{text}" if signed and d > 0 else text


def diff_report(t: GraphDifferentialTuple) -> str:
    """Human-readable change set, one labelled section per component."""
    added_edges = sorted(t.added_edges)
    removed_edges = sorted(t.removed_edges)
    deltas = t.sorted_deltas()
    lines = [
        "V+ = {" + ", ".join(sorted(t.added_nodes)) + "}",
        "V- = {" + ", ".join(sorted(t.removed_nodes)) + "}",
        "E+ = {" + ", ".join(_edge(e) for e in added_edges) + "}",
        "E- = {" + ", ".join(_edge(e) for e in removed_edges) + "}",
        "E~ = {" + ", ".join(f"<{_edge(d.edge)}, {_delta(d.delta)}>" for d in deltas) + "}",
        "",
    ]
    sections = [
        ("Who is new in the network? (V+)", sorted(t.added_nodes)),
        ("Who is no longer in the network? (V-)", sorted(t.removed_nodes)),
        ("Where are new connections in the network? (E+)", [_edge(e) for e in added_edges]),
        ("Which connections have disappeared? (E-)", [_edge(e) for e in removed_edges]),
        (
            "Which connections are now stronger/weaker? (E~)",
            [f"{_edge(d.edge)} {_delta(d.delta, signed=True)}" for d in deltas],
        ),
    ]
    for heading, items in sections:
        lines.append(heading)
        lines.extend(f"  {item}" for item in items)
        if not items:
            lines.append("  (none)")
    c = CoefficientVector.ones()
    lines += ["", "Measures (all coefficients 1)", f"  sum                {fmt_real(sum_distance(t, c))}"]
    for name, fn in (("normalized_sum", normalized_sum), ("relative_sum", relative_sum)):
        try:
            value = fmt_real(fn(t, c))
        except DegenerateInputError:
            value = "undefined (empty graphs)"
        lines.append(f"  {name:<18} {value}")
    lines.append(f"  {'edge_modification':<18} {fmt_real(edge_modification(t))}")
    return "\n".join(lines) + "\n"


def cmd_synth(args) -> int:
    spec = SynthSpec(node_count=args.nodes, span_days=args.days, alpha=args.alpha, min_gap=args.min_gap, seed=args.seed)
    events = generate_log(spec)
    header = (
        f"# synthetic log: nodes={spec.node_count} days={spec.span_days} alpha={spec.alpha!r} "
        f"min_gap={spec.min_gap} seed={spec.seed} rng=PCG64\n"
    )
    atomic_write(Path(args.output), header + "".join(format_events(events)))
    if events:
        span = (events[-1].timestamp - events[0].timestamp) / DAY
        print(f"{len(events)} events, span {span:.2f} days ({events[0].timestamp}..{events[-1].timestamp}) -> {args.output}")
    else:
        print(f"0 events -> {args.output}")
    return 0


def _window_spec(args) -> WindowSpec:
    return WindowSpec(args.window, args.step if args.step is not None else args.window, args.origin)


def cmd_run(args) -> int:
    combos = parse_combinations(args.combinations)
    result = run_pipeline(
        args.input,
        args.output_dir,
        _window_spec(args),
        combos,
        emit_svg=args.svg,
        normalized_csv=args.normalized,
        skip_bad_lines=args.skip_bad_lines,
    )
    print(
        f"{len(result.windows)} windows, {len(result.windows) - 1} pairs, "
        f"{len(combos)} combination(s), {len(result.files)} files written to {args.output_dir}"
    )
    return 0


def cmd_diff(args) -> int:
    g1 = load_snapshot(args.snapshot_a)
    g2 = load_snapshot(args.snapshot_b)
    sys.stdout.write(diff_report(diff(g1, g2)))
    return 0


def cmd_slice(args) -> int:
    events, _ = load_events(args.input, skip_bad_lines=args.skip_bad_lines)
    windows, snapshots = snapshots_for(events, _window_spec(args))
    paths = write_window_snapshots(windows, snapshots, args.output_dir)
    print(f"{len(windows)} windows, {len(paths)} files written to {args.output_dir}")
    return 0


def _add_window_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="event log (sender,recipient,unix_seconds per line)")
    p.add_argument("--window", type=int, default=30, help="window length in days (default 30)")
    p.add_argument("--step", type=int, default=None, help="window step in days (default: window length, i.e. disjoint)")
    p.add_argument("--origin", type=int, default=None, help="unix time of the first window start (default: midnight UTC of the first event's day)")
    p.add_argument("--skip-bad-lines", action="store_true", help="count and skip malformed lines instead of aborting")
    p.add_argument("-o", "--output-dir", required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netevo",
        description="Measure how a communication network changes between time windows.",
        epilog=FORMATS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a bursty synthetic event log", epilog=FORMATS_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--days", type=int, required=True)
    p.add_argument("--alpha", type=float, default=2.0, help="power-law exponent of interevent times, in (1.5, 2.5)")
    p.add_argument("--min-gap", type=int, default=600, help="smallest interevent time in seconds (default 600)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("run", help="windows -> snapshots -> measure series CSVs", epilog=FORMATS_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_window_flags(p)
    p.add_argument("--combinations", default="all",
                   help="'all', table indices such as '7,31', and/or explicit vectors a+:a-:b+:b-:g")
    p.add_argument("--svg", action="store_true", help="also write one normalized line chart per measure and combination")
    p.add_argument("--normalized", action="store_true", help="write max-normalized values to the CSVs")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("diff", help="compare two snapshot files", epilog=FORMATS_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("snapshot_a")
    p.add_argument("snapshot_b")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("slice", help="write one snapshot file per window", epilog=FORMATS_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_window_flags(p)
    p.set_defaults(func=cmd_slice)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, InvalidSpecError, EmptyLogError, TooFewSnapshotsError, DegenerateInputError, OSError) as exc:
        print(f"netevo {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
