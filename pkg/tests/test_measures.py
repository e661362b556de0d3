import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netevo.errors import DegenerateInputError, InvalidSpecError, TooFewSnapshotsError
from netevo.graph import GraphSnapshot, diff
from netevo.measures import (
    CoefficientVector,
    MeasurePoint,
    MeasureSeries,
    combination,
    edge_modification,
    measure_series,
    normalize_series,
    normalized_sum,
    relative_sum,
    sum_distance,
    table2_combinations,
)

from oracles import random_pairs

ONES = CoefficientVector.ones()

# Parameter table as printed: left block rows 1-16, right block rows 17-31.
TABLE_TEXT = """
1 1 0 0 0 0   17 0 1 0 1 1
2 0 1 0 0 0   18 0 1 1 0 1
3 0 0 1 0 0   19 0 1 1 1 0
4 0 0 0 1 0   20 1 0 1 1 0
5 0 0 0 0 1   21 1 0 0 1 1
6 1 1 0 0 0   22 1 0 1 0 1
7 1 0 1 0 0   23 1 1 0 1 0
8 1 0 0 1 0   24 1 1 0 0 1
9 1 0 0 0 1   25 1 1 1 0 0
10 0 1 1 0 0  26 1 1 1 1 0
11 0 1 0 1 0  27 0 1 1 1 1
12 0 1 0 0 1  28 1 0 1 1 1
13 0 0 1 1 0  29 1 1 0 1 1
14 0 0 1 0 1  30 1 1 1 0 1
15 0 0 0 1 1  31 1 1 1 1 1
16 0 0 1 1 1
"""


def printed_table():
    rows = {}
    for line in TABLE_TEXT.strip().splitlines():
        nums = [int(x) for x in line.split()]
        for k in range(0, len(nums), 6):
            rows[nums[k]] = tuple(float(v) for v in nums[k + 1 : k + 6])
    return [rows[i] for i in range(1, 32)]


def test_table_matches_printed_rows():
    assert [c.as_tuple() for c in table2_combinations()] == printed_table()


def test_table_is_all_nonzero_binary_vectors():
    vectors = [c.as_tuple() for c in table2_combinations()]
    assert len(vectors) == 31 == len(set(vectors))
    assert set(vectors) == {tuple(map(float, v)) for v in itertools.product((0, 1), repeat=5) if any(v)}


@pytest.mark.parametrize(
    "index, expected",
    [(7, (1, 0, 1, 0, 0)), (14, (0, 0, 1, 0, 1)), (26, (1, 1, 1, 1, 0)), (31, (1, 1, 1, 1, 1))],
)
def test_named_rows(index, expected):
    assert combination(index).as_tuple() == expected
    assert table2_combinations()[index - 1].as_tuple() == expected


@pytest.mark.parametrize("index", [0, 32, -1])
def test_bad_combination_index(index):
    with pytest.raises(InvalidSpecError):
        combination(index)


@pytest.mark.parametrize("bad", [(1.5, 0, 0, 0, 0), (0, 0, 0, 0, -0.1)])
def test_coefficients_in_unit_interval(bad):
    with pytest.raises(InvalidSpecError):
        CoefficientVector(*bad)


# hand-counted: |V+|=1, |V-|=1, |E+|=3, |E-|=5, |E delta|=2; |V1|=|V2|=6, |E1|=10, |E2|=8; 5 shared edges
def test_case_study_sum(case_g1, case_g2):
    t = diff(case_g1, case_g2)
    assert sum_distance(t, ONES) == 12
    assert sum_distance(t, combination(7)) == 4
    assert sum_distance(t, CoefficientVector()) == 0


def test_case_study_ratios(case_g1, case_g2):
    t = diff(case_g1, case_g2)
    assert normalized_sum(t, ONES) == 0.4
    assert relative_sum(t, ONES) == 0.75
    assert edge_modification(t) == pytest.approx(0.14, abs=1e-12)


def test_identical_graphs_score_zero(case_g1):
    t = diff(case_g1, case_g1)
    assert normalized_sum(t, ONES) == 0
    assert relative_sum(t, ONES) == 0
    assert edge_modification(t) == 0


def test_disjoint_graphs_normalized_sum_is_one():
    g1 = GraphSnapshot.from_edges({("a", "b"): 1.0, ("b", "c"): 0.5}, nodes=["d"])
    g2 = GraphSnapshot.from_edges({("x", "y"): 0.2, ("y", "x"): 1.0})
    t = diff(g1, g2)
    assert normalized_sum(t, ONES) == 1.0
    assert edge_modification(t) == 0


def test_relative_sum_can_exceed_one():
    g1 = GraphSnapshot(frozenset({"a"}), {})
    g2 = GraphSnapshot(frozenset({"a", "b", "c", "d"}), {})
    assert relative_sum(diff(g1, g2), CoefficientVector(alpha_plus=1.0)) == 3.0


def test_degenerate_denominators():
    empty = GraphSnapshot.empty()
    with pytest.raises(DegenerateInputError):
        normalized_sum(diff(empty, empty), ONES)
    with pytest.raises(DegenerateInputError):
        relative_sum(diff(empty, GraphSnapshot(frozenset({"a"}), {})), ONES)
    # only the second graph is empty: both are defined
    t = diff(GraphSnapshot(frozenset({"a"}), {}), empty)
    assert normalized_sum(t, ONES) == 1.0 and relative_sum(t, ONES) == 1.0


def test_edge_modification_counts_unchanged_shared_edges():
    g1 = GraphSnapshot.from_edges({("a", "b"): 0.5, ("a", "c"): 0.5, ("b", "a"): 1.0, ("c", "a"): 1.0})
    g2 = GraphSnapshot.from_edges({("a", "b"): 0.25, ("a", "c"): 0.75, ("b", "a"): 1.0, ("c", "a"): 1.0})
    assert edge_modification(diff(g1, g2)) == (0.25 + 0.25) / 4


# --- properties over the random corpus ---------------------------------------

CORPUS = [p for p in random_pairs(400, seed=21) if p[0].nodes]


def test_bounds():
    for g1, g2 in CORPUS:
        t = diff(g1, g2)
        for c in table2_combinations():
            assert 0.0 <= normalized_sum(t, c) <= 1.0
        assert 0.0 <= edge_modification(t) <= 1.0


def test_monotone_in_each_coefficient():
    rng = random.Random(3)
    for g1, g2 in CORPUS[:150]:
        t = diff(g1, g2)
        base = [rng.random() for _ in range(5)]
        c = CoefficientVector(*base)
        for k in range(5):
            raised = list(base)
            raised[k] = min(1.0, base[k] + rng.random())
            c2 = CoefficientVector(*raised)
            assert sum_distance(t, c2) >= sum_distance(t, c)
            assert normalized_sum(t, c2) >= normalized_sum(t, c)
            assert relative_sum(t, c2) >= relative_sum(t, c)


def test_swap_symmetry():
    for g1, g2 in CORPUS:
        if not g2.nodes:
            continue
        fwd, back = diff(g1, g2), diff(g2, g1)
        for c in table2_combinations():
            assert sum_distance(fwd, c) == sum_distance(back, c.swapped())
            assert normalized_sum(fwd, c) == pytest.approx(normalized_sum(back, c.swapped()), abs=1e-12)
        assert edge_modification(fwd) == pytest.approx(edge_modification(back), abs=1e-12)


def test_relative_sum_is_not_symmetric_in_general(case_g1, case_g2):
    assert relative_sum(diff(case_g1, case_g2), ONES) != relative_sum(diff(case_g2, case_g1), ONES)


def test_zero_law():
    for g1, g2 in CORPUS:
        if not g2.nodes:
            continue
        t = diff(g1, g2)
        same = t.is_empty()
        assert (sum_distance(t, ONES) == 0) == same
        assert (normalized_sum(t, ONES) == 0) == same
        assert (relative_sum(t, ONES) == 0) == same


def test_linearity_against_singleton_rows():
    singles = table2_combinations()[:5]
    rng = random.Random(8)
    for g1, g2 in CORPUS:
        t = diff(g1, g2)
        parts = [sum_distance(t, s) for s in singles]
        for c in table2_combinations() + [CoefficientVector(*[rng.random() for _ in range(5)])]:
            expected = sum(w * p for w, p in zip(c.as_tuple(), parts))
            assert sum_distance(t, c) == pytest.approx(expected, abs=1e-9)


# --- series -----------------------------------------------------------------


def test_series_length_and_pairing():
    snaps = [p[0] for p in random_pairs(40, seed=2) if p[0].nodes][:10]
    s = measure_series(snaps, ONES, combination=31)
    assert len(s) == len(snaps) - 1
    for i, p in enumerate(s.points, start=1):
        t = diff(snaps[i - 1], snaps[i])
        assert p.pair_index == i
        assert p.sum == sum_distance(t, ONES)
        assert p.edge_modification == edge_modification(t)
    assert s.combination == 31 and not s.normalized


def test_forty_snapshots_give_39_points():
    g = GraphSnapshot.from_edges({("a", "b"): 1.0})
    assert len(measure_series([g] * 40, ONES)) == 39


def test_two_identical_snapshots(case_g1):
    (p,) = measure_series([case_g1, case_g1], ONES).points
    assert p.values() == (0, 0, 0, 0)


def test_middle_equals_first(case_g1, case_g2):
    p1, p2 = measure_series([case_g1, case_g1, case_g2], ONES).points
    assert p1.values() == (0, 0, 0, 0)
    t = diff(case_g1, case_g2)
    assert p2.values() == (sum_distance(t, ONES), normalized_sum(t, ONES), relative_sum(t, ONES), edge_modification(t))


def test_too_few_snapshots(case_g1):
    with pytest.raises(TooFewSnapshotsError):
        measure_series([case_g1], ONES)


def _series(columns):
    pts = tuple(MeasurePoint(i + 1, *vals) for i, vals in enumerate(zip(*columns)))
    return MeasureSeries("custom", pts)


def test_normalize_divides_by_max():
    s = normalize_series(_series([[4, 8, 2], [0, 0, 0], [1, 1, 1], [0.5, 0.25, 0.0]]))
    assert s.column("sum") == [0.5, 1.0, 0.25]
    assert s.column("normalized_sum") == [0, 0, 0]
    assert s.column("relative_sum") == [1, 1, 1]
    assert s.column("edge_modification") == [1.0, 0.5, 0.0]
    assert s.normalized


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(*[st.floats(0, 1e6, allow_nan=False)] * 4), min_size=1, max_size=50))
def test_normalized_max_is_exactly_one(rows):
    s = normalize_series(_series(list(zip(*rows))))
    for name in ("sum", "normalized_sum", "relative_sum", "edge_modification"):
        col = s.column(name)
        assert max(col) in (0.0, 1.0)
        assert all(0.0 <= v <= 1.0 for v in col)
