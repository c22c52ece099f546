import pytest
from hypothesis import given
from hypothesis import strategies as st

from manhattan_domino import (
    InternalInvariantError,
    Skyline,
    build_network,
    build_tiling,
    d_oracle,
    is_included,
    max_flow_reference,
    validate_tiling,
)
from manhattan_domino.tiler import (
    Domino,
    Orientation,
    Tiling,
    planing_level,
    planing_steps,
    tile_strip,
    vertical_fill,
)
from manhattan_domino.skyline import Cell

from conftest import FIG2, FIG4, FIG5A, FIG5B

H, V = Orientation.HORIZONTAL, Orientation.VERTICAL
heights = st.lists(st.integers(0, 9), max_size=30)


def doms(*spec):
    return {Domino.at(c, r, o) for o, c, r in spec}


def strip_cells(cur, p, q, a):
    return {(k, r) for k in range(p, q + 1) for r in range(a, cur[k])}


def test_planing_level_examples():
    assert planing_level(FIG5A.tolist(), 0, 5) == 2
    assert planing_level(FIG4.tolist(), 0, 3) == 2
    assert planing_level([1, 1], 0, 1) == 0


@pytest.mark.parametrize(
    "cur, p, q",
    [
        ([2, 1], 0, 1),  # even endpoint
        ([1, 1, 1], 0, 2),  # same colour
        ([1, 3], 1, 0),  # reversed
        ([3, 3, 0, 3], 0, 3),  # odd interior
        ([3, 0, 0, 3], 0, 3),  # interior below 2
    ],
)
def test_planing_level_rejects_bad_pairs(cur, p, q):
    with pytest.raises(InternalInvariantError):
        planing_level(cur, p, q)


def test_strip_fig4c():
    assert set(tile_strip(FIG4.tolist(), 0, 3, 2)) == doms(
        (H, 0, 2), (H, 2, 2), (H, 1, 3), (V, 0, 3)
    )


def test_strip_fig5a():
    got = set(tile_strip(FIG5A.tolist(), 0, 5, 2))
    assert got == doms(
        (H, 0, 2), (H, 2, 2), (H, 4, 2), (H, 1, 3), (H, 3, 3), (V, 5, 3),
        (V, 1, 4), (V, 2, 4), (V, 3, 4), (V, 4, 4), (V, 2, 6),
    )


def test_strip_fig5b():
    got = set(tile_strip(FIG5B.tolist(), 4, 7, 2))
    assert got == doms(
        (H, 4, 2), (H, 6, 2), (H, 5, 3), (V, 4, 3), (V, 4, 5), (V, 5, 4), (V, 7, 3)
    )


def test_strip_single_domino():
    assert tile_strip([1, 1], 0, 1, 0) == [Domino.at(0, 0, H)]


def test_strip_rejects_wrong_level():
    with pytest.raises(InternalInvariantError):
        tile_strip(FIG4.tolist(), 0, 3, 0)


def test_vertical_fill_examples():
    # Fig. 4b draws 6 + 3 vertical dominoes over 21 cells
    dominoes, uncovered = vertical_fill(FIG4.tolist())
    assert len(dominoes) == 9
    assert uncovered == [Cell(0, 4), Cell(3, 2), Cell(5, 2)]
    assert vertical_fill([2]) == ([Domino.at(0, 0, V)], [])
    assert vertical_fill([]) == ([], [])


@pytest.mark.parametrize(
    "sk, n_dom, n_unc",
    [(FIG4, 10, 1), (FIG2, 17, 2), (Skyline([2, 4, 2]), 4, 0)],
)
def test_build_tiling_examples(sk, n_dom, n_unc):
    t = build_tiling(sk)
    assert (len(t.dominoes), len(t.uncovered)) == (n_dom, n_unc)
    assert validate_tiling(sk, t).ok
    assert n_unc == d_oracle(sk)


@given(heights)
def test_tiling_valid_and_optimal(hs):
    sk = Skyline(hs)
    t = build_tiling(sk)
    report = validate_tiling(sk, t)
    assert report.ok, report.violations
    assert len(t.uncovered) == d_oracle(sk)


@given(heights)
def test_planing_steps_invariants(hs):
    sk = Skyline(hs)
    base = len(build_network(sk)) - 2 * max_flow_reference(build_network(sk))
    prev = sk
    cur_before = sk.tolist()
    for step, cur in planing_steps(sk):
        p, q, a = step.left_col, step.right_col, step.level
        assert (q - p + 1) % 2 == 0 and a % 2 == 0 and a >= 0
        assert {c for d in step.emitted for c in d.cells()} == strip_cells(cur_before, p, q, a)
        assert len(strip_cells(cur_before, p, q, a)) == 2 * len(step.emitted)
        residual = Skyline(cur)
        assert is_included(residual, prev)
        net = build_network(residual)
        assert len(net) - 2 * max_flow_reference(net) == base
        prev, cur_before = residual, cur


def test_validate_reports_overlap_and_containment():
    sk = Skyline([2, 2])
    overlap = Tiling([Domino.at(0, 0, V), Domino.at(0, 0, H)], [])
    report = validate_tiling(sk, overlap)
    assert not report.ok
    assert any(v.startswith("disjointness") for v in report.violations)
    outside = Tiling([Domino.at(0, 1, V), Domino.at(1, 0, V)], [])
    assert any(v.startswith("containment") for v in validate_tiling(sk, outside).violations)
    missing = Tiling([Domino.at(0, 0, V)], [])
    violations = validate_tiling(sk, missing).violations
    assert any(v.startswith("count") for v in violations)
    assert any("not listed" in v for v in violations)


def test_monotone_balanced_tiles_perfectly():
    sk = Skyline([1, 1, 2, 3, 3, 4])
    t = build_tiling(sk)
    assert validate_tiling(sk, t).ok and t.uncovered == []
