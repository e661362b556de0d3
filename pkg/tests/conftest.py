from pathlib import Path

import pytest

from netevo.graph import GraphSnapshot

DATA = Path(__file__).parent / "data"

# edge weights of the two case-study graphs (None = edge absent)
CASE_WEIGHTS = {
    ("A", "B"): (0.3, 0.3),
    ("A", "G"): (None, 0.3),
    ("B", "A"): (0.5, 0.5),
    ("B", "C"): (0.8, 0.8),
    ("C", "D"): (1.0, None),
    ("C", "E"): (0.7, 0.3),
    ("D", "C"): (0.9, None),
    ("D", "E"): (0.2, None),
    ("E", "C"): (None, 0.1),
    ("E", "D"): (0.1, None),
    ("F", "B"): (0.6, 0.9),
    ("F", "E"): (0.4, None),
    ("G", "A"): (None, 0.4),
}


def _case_graph(column, nodes):
    edges = {e: w[column] for e, w in CASE_WEIGHTS.items() if w[column] is not None}
    return GraphSnapshot(frozenset(nodes), edges)


@pytest.fixture
def case_g1():
    return _case_graph(0, "ABCDEF")


@pytest.fixture
def case_g2():
    return _case_graph(1, "ABCEFG")


@pytest.fixture
def data_dir():
    return DATA


# --- acceptance reporting -----------------------------------------------------

_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.setdefault(marker, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        outcomes = _criteria[name]
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
