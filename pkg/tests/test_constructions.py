"""Construction tests: grid coordinates, the remark family, lifts, and the
five explicit grid colorings."""

import math

import pytest

from homotriple import (
    Coloring,
    ConstructionError,
    GridIndex,
    UnsupportedInstanceError,
    complement,
    enumerate_valid,
    extremal_witness,
    formula_f,
    grid_coloring,
    grid_to_index,
    index_to_grid,
    is_valid,
    lift,
    match_grid_case,
    normalize_instance,
    remark_coloring,
    remark_parameters,
    search_f,
)

GRID_INSTANCES = {
    "C1a": [(12, 7), (20, 11), (28, 15)],
    "C1b": [(36, 23), (44, 27), (48, 31)],
    "C2a": [(16, 9), (24, 13), (32, 17)],
    "C2b": [(8, 5), (20, 13), (28, 17)],
    "C3": [(7, 4), (13, 8), (19, 12)],
}


def test_index_bijection_small_pairs():
    for s in range(1, 40):
        for t in range(1, s + 1):
            if s + t > 40 or math.gcd(s, t) != 1:
                continue
            inst = normalize_instance(s, t)
            seen = set()
            for n in range(1, 4 * s + 4 * t + 1):
                g = index_to_grid(n, inst)
                assert 0 <= g.j < s
                assert n == 1 + g.i * s + g.j * t
                assert grid_to_index(g, inst) == n
                seen.add((g.i, g.j))
            assert len(seen) == 4 * s + 4 * t


def test_index_requires_coprimality():
    inst = normalize_instance(6, 4)
    with pytest.raises(ValueError):
        index_to_grid(5, inst)
    with pytest.raises(ValueError):
        grid_to_index(GridIndex(i=0, j=1), inst)


def test_index_range_checks():
    inst = normalize_instance(5, 3)
    with pytest.raises(ValueError):
        index_to_grid(0, inst)
    with pytest.raises(ValueError):
        index_to_grid(4 * 8 + 1, inst)
    with pytest.raises(ValueError):
        grid_to_index(GridIndex(i=0, j=5), inst)
    with pytest.raises(ValueError):
        grid_to_index(GridIndex(i=-1, j=0), inst)


def test_remark_parameters():
    assert remark_parameters(1) == [3]
    assert remark_parameters(2) == [3, 7]
    assert remark_parameters(3) == [3, 7, 11]
    with pytest.raises(ValueError):
        remark_parameters(0)


def test_remark_coloring_m1_explicit():
    assert remark_coloring(1, 3).text == "0110010010011011001"
    assert remark_coloring(1, 3, swap=True).text == "1001101101100100110"


def test_remark_coloring_rejects_bad_phase():
    with pytest.raises(ValueError):
        remark_coloring(1, 4)
    with pytest.raises(ValueError):
        remark_coloring(1, 7)
    with pytest.raises(ValueError):
        remark_coloring(0, 3)


@pytest.mark.parametrize("m", [1, 2])
def test_remark_family_is_the_full_extremal_set(m):
    inst = normalize_instance(4 * m, 1)
    family = {
        remark_coloring(m, k, swap=swap).text
        for k in remark_parameters(m)
        for swap in (False, True)
    }
    assert len(family) == 2 * m
    extremal = {c.text for c in enumerate_valid(inst, 16 * m + 3)}
    assert family == extremal


@pytest.mark.parametrize("m,k", [(1, 3), (2, 3), (2, 7), (3, 11)])
def test_remark_coloring_valid(m, k):
    inst = normalize_instance(4 * m, 1)
    c = remark_coloring(m, k)
    assert c.n == 16 * m + 3
    assert is_valid(c, inst)


def test_lift_expands_blocks():
    c = Coloring.from_text("010")
    assert lift(c, 3).text == "000111000"
    assert lift(c, 1) == c
    with pytest.raises(ValueError):
        lift(c, 0)


def test_lift_preserves_validity():
    base_inst = normalize_instance(4, 1)
    base = remark_coloring(1, 3)
    for cf in (2, 3):
        lifted = lift(base, cf, base_inst)
        scaled = normalize_instance(4 * cf, cf)
        assert lifted.n == cf * base.n
        assert is_valid(lifted, scaled)


def test_lift_detects_invalid_base():
    # An all-zero base is far from valid; lifting it must fail the check.
    with pytest.raises(ConstructionError):
        lift(Coloring.from_text("0" * 9), 2, normalize_instance(1, 1))


def test_match_grid_case_table():
    for case, pairs in GRID_INSTANCES.items():
        for s, t in pairs:
            assert match_grid_case(normalize_instance(s, t)) == case
    # Outside the ratio window, non-coprime, or residue mismatch.
    for s, t in [(4, 1), (5, 3), (2, 1), (24, 14), (9, 5), (11, 6)]:
        assert match_grid_case(normalize_instance(s, t)) is None


@pytest.mark.parametrize(
    "s,t",
    [pair for pairs in GRID_INSTANCES.values() for pair in pairs],
)
def test_grid_coloring_certifies_lower_bound(s, t):
    inst = normalize_instance(s, t)
    c = grid_coloring(inst)
    assert c.n == 4 * (s + t)
    assert is_valid(c, inst)


def test_grid_coloring_unsupported():
    with pytest.raises(UnsupportedInstanceError):
        grid_coloring(normalize_instance(5, 1))
    with pytest.raises(UnsupportedInstanceError):
        grid_coloring(normalize_instance(24, 14))


def test_grid_matches_search_on_smallest():
    inst = normalize_instance(7, 4)
    assert search_f(inst).f == 4 * (7 + 4) + 1


@pytest.mark.parametrize(
    "s,t",
    [(4, 1), (8, 2), (12, 3), (5, 1), (12, 7), (16, 10), (6, 4), (14, 8)],
)
def test_extremal_witness_dispatch(s, t):
    inst = normalize_instance(s, t)
    w = extremal_witness(inst)
    assert w.n == formula_f(inst) - 1
    assert is_valid(w, inst)


def test_complement_of_grid_coloring_also_valid():
    inst = normalize_instance(8, 5)
    assert is_valid(complement(grid_coloring(inst)), inst)
