"""Oracle tests: the exhaustive 2^n ground truth."""

import pytest

from homotriple import (
    CapacityError,
    OracleLimit,
    complement,
    is_valid,
    normalize_instance,
    oracle_enumerate,
    oracle_f,
)


def test_classical_value():
    assert oracle_f(normalize_instance(1, 1)) == 9


def test_small_values():
    assert oracle_f(normalize_instance(2, 1)) == 13
    assert oracle_f(normalize_instance(3, 1)) == 17
    assert oracle_f(normalize_instance(2, 2)) == 17
    assert oracle_f(normalize_instance(3, 2)) == 21


def test_capacity_cap():
    with pytest.raises(CapacityError):
        oracle_f(normalize_instance(9, 9))
    with pytest.raises(CapacityError):
        oracle_f(normalize_instance(1, 1), OracleLimit(n_max=5))
    with pytest.raises(CapacityError):
        oracle_enumerate(normalize_instance(1, 1), 27)


def test_limit_validation():
    with pytest.raises(ValueError):
        OracleLimit(n_max=0)
    with pytest.raises(ValueError):
        oracle_enumerate(normalize_instance(1, 1), 0)


def test_enumerate_is_sorted_and_valid():
    inst = normalize_instance(1, 1)
    found = oracle_enumerate(inst, 8)
    texts = [c.text for c in found]
    assert texts == sorted(texts)
    assert len(texts) == len(set(texts))
    assert all(is_valid(c, inst) for c in found)


def test_enumerate_closed_under_complement():
    inst = normalize_instance(2, 1)
    found = oracle_enumerate(inst, 12)
    texts = {c.text for c in found}
    assert texts == {complement(c).text for c in found}
    assert len(found) % 2 == 0


def test_enumerate_at_f_is_empty():
    inst = normalize_instance(1, 1)
    assert oracle_enumerate(inst, 9) == []
    assert len(oracle_enumerate(inst, 8)) > 0
