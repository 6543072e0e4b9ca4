from math import comb

import pytest

from src.bounds.magnitude import Verdict
from src.core.cliques import has_anticlique, has_clique
from src.core.entities import Graph
from src.core.exceptions import InvalidInputException, ResourceLimitException
from src.oracle.graphs import count_ramsey_graphs, subset_pair_masks


@pytest.mark.parametrize(
    "r, n, count",
    [(2, 2, 2), (5, 3, 1012), (6, 3, 32768)],
)
def test_exact_ramsey_counts(r, n, count):
    result = count_ramsey_graphs(r, n)
    assert result.count == count
    assert result.total == 2 ** comb(r, 2)
    assert result.bound is not None
    assert result.holds


def test_counts_agree_with_the_detectors():
    for r, n in [(4, 2), (4, 3), (5, 4)]:
        expected = 0
        for mask in range(1 << comb(r, 2)):
            g = Graph.from_edge_mask(r, mask)
            expected += has_clique(g, n) or has_anticlique(g, n)
        assert count_ramsey_graphs(r, n).count == expected


def test_bound_dominates_the_count():
    result = count_ramsey_graphs(6, 4)
    assert result.bound.bad_bound.less_than(result.bound.total) is Verdict.TRUE
    assert result.bound.bad_bound.exact >= result.count
    assert result.holds


def test_clique_larger_than_the_graph():
    result = count_ramsey_graphs(1, 2)
    assert result.count == 0
    assert result.total == 1
    assert result.bound is None


def test_pair_masks():
    masks = subset_pair_masks(4, 2)
    assert sorted(masks) == [1 << e for e in range(6)]
    assert subset_pair_masks(4, 4) == ((1 << 6) - 1,)


def test_caps_and_validation():
    with pytest.raises(ResourceLimitException):
        count_ramsey_graphs(9, 3)
    with pytest.raises(InvalidInputException):
        count_ramsey_graphs(0, 2)


def test_workers_do_not_change_the_count(small_chunks):
    for r, n in [(6, 3), (5, 3), (6, 4)]:
        assert count_ramsey_graphs(r, n, workers=8) == count_ramsey_graphs(r, n, workers=1)
    assert count_ramsey_graphs(6, 3, workers=8).count == 32768
    assert count_ramsey_graphs(5, 3, workers=8).count == 1012
