import pytest

from src.bounds.formulas import (
    discrepancy_guarantee,
    erdos_graph_bound,
    erdos_hypergraph_bound,
    erdos_multicolor_bound,
    hypergraph_exponent,
    relaxed_discrepancy_threshold,
    satisfies_discrepancy_condition,
)
from src.bounds.magnitude import Magnitude, Rounding
from src.core.exceptions import InvalidInputException


@pytest.mark.parametrize(
    "n, expected",
    [(2, 1), (3, 1), (4, 2), (10, 16), (51, 2**24)],
)
def test_erdos_graph_bound(n, expected):
    assert erdos_graph_bound(n) == Magnitude.of(expected)


def test_multicolor_and_hypergraph_bounds():
    assert erdos_multicolor_bound(12, 4) == Magnitude.of(1024)
    assert erdos_multicolor_bound(6, 3) == Magnitude.of(9)
    assert hypergraph_exponent(10, 3) == 10
    assert erdos_hypergraph_bound(10, 2, 3) == Magnitude.of(1024)
    assert erdos_hypergraph_bound(10, 2, 2) == Magnitude.of(16)
    assert erdos_hypergraph_bound(3, 2, 3) == Magnitude.of(1)


def test_huge_bounds_become_lower_log2():
    bound = erdos_graph_bound(10**9)
    assert not bound.is_exact
    assert bound.rounding is Rounding.LOWER
    assert bound.log2 == (10**9 - 2) // 2


def test_invalid_bounds():
    with pytest.raises(InvalidInputException):
        erdos_graph_bound(1)
    with pytest.raises(InvalidInputException):
        erdos_multicolor_bound(4, 1)
    with pytest.raises(InvalidInputException):
        erdos_hypergraph_bound(2, 2, 3)


def test_discrepancy_guarantee_examples():
    assert discrepancy_guarantee(1, 1) == 2
    assert discrepancy_guarantee(1000, 300) == 136
    assert discrepancy_guarantee(1000, 300) <= 150
    assert satisfies_discrepancy_condition(150, 1000, 300)
    assert not satisfies_discrepancy_condition(135, 1000, 300)
    assert relaxed_discrepancy_threshold(1000, 300) == 150


def test_discrepancy_guarantee_is_minimal():
    for n in range(1, 31):
        for s in range(1, 31):
            a = discrepancy_guarantee(n, s)
            assert 2 ** (a * a) >= (2 * s) ** (2 * n)
            assert 2 ** ((a - 1) ** 2) < (2 * s) ** (2 * n)


def test_discrepancy_guarantee_is_monotone():
    previous = 0
    for n in range(1, 200, 7):
        a = discrepancy_guarantee(n, 10)
        assert a >= previous
        previous = a
    previous = 0
    for s in range(1, 200, 7):
        a = discrepancy_guarantee(50, s)
        assert a >= previous
        previous = a


def test_log2_tier_agrees_with_exact():
    for a, n, s in [(150, 1000, 300), (136, 1000, 300), (135, 1000, 300), (40, 100, 50), (37, 100, 50)]:
        assert satisfies_discrepancy_condition(a, n, s, bit_cap=64) == satisfies_discrepancy_condition(a, n, s)


def test_condition_validation():
    with pytest.raises(InvalidInputException):
        satisfies_discrepancy_condition(1, 0, 1)
    with pytest.raises(InvalidInputException):
        discrepancy_guarantee(1, 0)
