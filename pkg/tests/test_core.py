"""Domain type tests: colorings, instances, witnesses."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homotriple import (
    CapacityError,
    Coloring,
    CopyWitness,
    Instance,
    complement,
    normalize_instance,
    restrict,
    triple_of,
)


def test_normalize_orders_and_attaches_gcd():
    inst = normalize_instance(3, 12)
    assert (inst.s, inst.t, inst.g) == (12, 3, 3)
    assert normalize_instance(12, 3) == inst


def test_normalize_rejects_nonpositive():
    with pytest.raises(ValueError):
        normalize_instance(0, 1)
    with pytest.raises(ValueError):
        normalize_instance(3, -1)


def test_instance_validates_invariants():
    with pytest.raises(ValueError):
        Instance(s=2, t=3, g=1)  # not ordered
    with pytest.raises(ValueError):
        Instance(s=4, t=2, g=1)  # wrong gcd


def test_triple_of_arithmetic():
    inst = normalize_instance(5, 3)
    assert triple_of(CopyWitness(x=2, y=3), inst) == (2, 17, 26)


def test_witness_coordinates_positive():
    with pytest.raises(ValueError):
        CopyWitness(x=0, y=1)
    with pytest.raises(ValueError):
        CopyWitness(x=1, y=0)


def test_from_text_round_trip():
    c = Coloring.from_text("0110010010011011001\n")
    assert c.n == 19
    assert c.text == "0110010010011011001"
    assert c.color_of(1) == 0
    assert c.color_of(2) == 1
    assert c.colors() == tuple(int(ch) for ch in c.text)


def test_from_text_rejects_garbage():
    with pytest.raises(ValueError):
        Coloring.from_text("01x0")
    with pytest.raises(ValueError):
        Coloring.from_text("")


def test_from_colors_matches_from_text():
    assert Coloring.from_colors([0, 1, 1, 0]) == Coloring.from_text("0110")
    with pytest.raises(ValueError):
        Coloring.from_colors([0, 2])
    with pytest.raises(ValueError):
        Coloring.from_colors([])


def test_capacity_cap_enforced():
    with pytest.raises(CapacityError):
        Coloring.from_text("0" * 11, max_n=10)
    with pytest.raises(CapacityError):
        Coloring.from_colors([0] * 11, max_n=10)


def test_bitmask_partition_invariant():
    with pytest.raises(ValueError):
        Coloring(n=3, bits0=0b011, bits1=0b110)  # overlap at position 2
    with pytest.raises(ValueError):
        Coloring(n=3, bits0=0b001, bits1=0b100)  # position 2 uncolored


def test_color_of_bounds():
    c = Coloring.from_text("01")
    with pytest.raises(ValueError):
        c.color_of(0)
    with pytest.raises(ValueError):
        c.color_of(3)


def test_complement_is_involution():
    c = Coloring.from_text("0110100")
    assert complement(c).text == "1001011"
    assert complement(complement(c)) == c


def test_restrict_is_prefix():
    c = Coloring.from_text("0110100")
    assert restrict(c, 4).text == "0110"
    assert restrict(c, c.n) == c
    with pytest.raises(ValueError):
        restrict(c, 0)
    with pytest.raises(ValueError):
        restrict(c, 8)


@given(st.text(alphabet="01", min_size=1, max_size=300))
def test_text_round_trip_random(text):
    c = Coloring.from_text(text)
    assert c.text == text
    assert complement(c).text == "".join("10"[int(ch)] for ch in text)
