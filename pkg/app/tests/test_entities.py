from itertools import combinations
from math import comb

import pytest

from src.core.entities import (
    BLUE,
    RED,
    EdgeColoring,
    Graph,
    SetSystem,
    SignColoring,
    SubsetColoring,
    TrialFailure,
    TrialReport,
    check_color_count,
    iter_bits,
    mask_of,
    pair_index,
    subset_index,
)
from src.core.exceptions import InvalidInputException


def test_pair_index_follows_lexicographic_order():
    for r in range(2, 8):
        for e, (i, j) in enumerate(combinations(range(r), 2)):
            assert pair_index(i, j, r) == e
            assert pair_index(j, i, r) == e


def test_bits_and_masks():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert list(iter_bits(0)) == []


def test_graph_rejects_bad_adjacency():
    with pytest.raises(InvalidInputException):
        Graph(2, (0b10, 0))
    with pytest.raises(InvalidInputException):
        Graph(1, (0b1,))
    with pytest.raises(InvalidInputException):
        Graph(0, ())
    with pytest.raises(InvalidInputException):
        Graph.from_edges(3, [(0, 3)])


def test_cycle_and_complement(c5):
    assert list(c5.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    complement = c5.complement()
    assert len(list(complement.edges())) == 5
    assert not complement.has_edge(0, 1)
    assert complement.has_edge(0, 2)
    assert complement.complement() == c5


def test_edge_mask_matches_pair_order(k4):
    assert k4.edge_mask() == (1 << 6) - 1
    g = Graph.from_edge_mask(4, 0b100001)
    assert list(g.edges()) == [(0, 1), (2, 3)]
    assert g.edge_mask() == 0b100001


def test_edge_coloring_from_graph(c5):
    c = EdgeColoring.from_graph(c5)
    assert c.k == 2
    for i, j in combinations(range(5), 2):
        assert (c.color(i, j) == 0) == c5.has_edge(i, j)
    assert c.color_graph(0) == c5
    assert c.color_graph(1) == c5.complement()


def test_edge_coloring_validation():
    with pytest.raises(InvalidInputException):
        EdgeColoring(3, 2, (0, 1))
    with pytest.raises(InvalidInputException):
        EdgeColoring(3, 2, (0, 1, 2))
    with pytest.raises(InvalidInputException):
        EdgeColoring(3, 1, (0, 0, 0))


def test_subset_coloring_lookup():
    colors = tuple(i % 3 for i in range(10))
    c = SubsetColoring(5, 3, 3, colors)
    for rank, subset in enumerate(c.subsets()):
        assert c.color(subset) == colors[rank]
        assert c.color(tuple(reversed(subset))) == colors[rank]
    with pytest.raises(InvalidInputException):
        SubsetColoring(5, 3, 2, (0,) * 9)
    with pytest.raises(InvalidInputException):
        c.color((0, 0, 1))
    with pytest.raises(InvalidInputException):
        c.color((1, 2, 5))


def test_subset_index_is_the_lexicographic_rank():
    for m in range(0, 10):
        for l in range(1, 5):
            for rank, subset in enumerate(combinations(range(m), l)):
                assert subset_index(subset, m) == rank
    for i, j in combinations(range(7), 2):
        assert subset_index((i, j), 7) == pair_index(i, j, 7)
    assert subset_index(tuple(range(10, 20)), 20) == comb(20, 10) - 1


def test_set_system_from_lists():
    sys = SetSystem.from_lists(4, [[0, 2], [], [3]])
    assert sys.s == 3
    assert sys.sets == (0b101, 0, 0b1000)
    assert sys.members(0) == (0, 2)
    with pytest.raises(InvalidInputException):
        SetSystem.from_lists(2, [[2]])
    with pytest.raises(InvalidInputException):
        SetSystem(2, (0b100,))


def test_sign_coloring():
    x = SignColoring.from_red_mask(4, 0b0101)
    assert x.x == (RED, BLUE, RED, BLUE)
    assert x.n == 4
    assert x.red_mask == 0b0101
    assert x.negated().red_mask == 0b1010
    assert SignColoring.all_red(3).red_mask == 0b111
    with pytest.raises(InvalidInputException):
        SignColoring((1, 0, -1))


def test_color_count():
    with pytest.raises(InvalidInputException):
        check_color_count(1)
    check_color_count(2)


def test_color_count_one_in_testing_mode(testing_mode):
    check_color_count(1)
    with pytest.raises(InvalidInputException):
        check_color_count(0)


def test_trial_report_rates():
    report = TrialReport(seed=0, generator="g", trials_run=4, successes=1, failures=(TrialFailure(0, "x"),))
    assert not report.succeeded
    assert report.success_rate == 0.25
    assert TrialReport(seed=0, generator="g", trials_run=0).success_rate == 0.0
