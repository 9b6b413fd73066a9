"""Structural-rule checker tests.

The rules are consequences of copy-freeness at dilations 1..3, so on any
coloring that passes the hypothesis gate they must hold; the tests confirm
emptiness over whole enumerated families and exercise the gate and the
pattern reader directly.
"""

import pytest

from homotriple import (
    Coloring,
    LemmaHypothesisError,
    check_lemma1_rules,
    check_lemma2_periodicity,
    enumerate_valid,
    extremal_witness,
    normalize_instance,
    v_pattern,
)


def test_v_pattern_reads_quadruple():
    inst = normalize_instance(4, 1)
    c = Coloring.from_text("0110010010011011001")
    assert v_pattern(c, 1, inst) == (0, 0, 1, 1)
    assert v_pattern(c, 2, inst) == (1, 1, 0, 0)
    assert v_pattern(c, 3, inst) == (1, 0, 0, 1)


def test_v_pattern_bounds():
    inst = normalize_instance(4, 1)
    c = Coloring.from_text("0" * 13)
    assert v_pattern(c, 1, inst) == (0, 0, 0, 0)
    with pytest.raises(ValueError):
        v_pattern(c, 2, inst)
    with pytest.raises(ValueError):
        v_pattern(c, 0, inst)


def test_gate_rejects_small_dilation_triples():
    inst = normalize_instance(1, 1)
    c = Coloring.from_text("000")
    with pytest.raises(LemmaHypothesisError):
        check_lemma1_rules(c, inst)
    with pytest.raises(LemmaHypothesisError):
        check_lemma2_periodicity(c, inst)


def test_gate_ignores_larger_dilations():
    # The only monochromatic 3-AP here has dilation 4, beyond the
    # hypothesis, so the checkers run (and the rules still hold).
    inst = normalize_instance(1, 1)
    c = Coloring.from_text("001100110")
    assert check_lemma1_rules(c, inst) == []
    assert check_lemma2_periodicity(c, inst) == []


@pytest.mark.parametrize(
    "s,t,n",
    [(1, 1, 8), (2, 1, 12), (3, 2, 18), (4, 1, 16), (4, 1, 19)],
)
def test_rules_hold_on_every_valid_coloring(s, t, n):
    inst = normalize_instance(s, t)
    found = enumerate_valid(inst, n)
    assert found, "enumeration should be nonempty below f"
    for c in found:
        assert check_lemma1_rules(c, inst) == []
        assert check_lemma2_periodicity(c, inst) == []


@pytest.mark.parametrize("s,t", [(8, 5), (7, 4), (12, 7)])
def test_rules_hold_on_construction_witnesses(s, t):
    inst = normalize_instance(s, t)
    w = extremal_witness(inst)
    assert check_lemma1_rules(w, inst) == []
    assert check_lemma2_periodicity(w, inst) == []
