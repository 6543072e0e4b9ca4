from itertools import product

import numpy as np
import pytest

from src.bounds.counting import below_lemma_bound
from src.bounds.formulas import discrepancy_guarantee
from src.construct.constructors import find_low_discrepancy_coloring
from src.core.discrepancy import delta, max_abs_discrepancy
from src.core.entities import SetSystem, SignColoring, mask_of
from src.core.exceptions import InvalidInputException, ResourceLimitException
from src.oracle.colorings import (
    CountMode,
    bad_coloring_report,
    count_bad_colorings,
    count_exceeding_colorings,
    min_max_discrepancy,
)
from src.oracle.enumeration import gray_codes, partition, prefix_ranges


def all_colorings(n: int):
    """Every coloring of [n] in lexicographic order, +1 before -1."""
    for signs in product((1, -1), repeat=n):
        yield SignColoring(signs)


def random_system(rng, n: int, s: int) -> SetSystem:
    return SetSystem.from_lists(n, ([j for j in range(n) if rng.random() < 0.5] for _ in range(s)))


def test_gray_codes_and_partition():
    assert gray_codes(3).tolist() == [0, 1, 3, 2, 6, 7, 5, 4]
    part = partition(20, chunk_bits=16)
    assert (part.low_bits, part.high_bits, part.prefixes) == (16, 4, 16)
    assert partition(3).low_bits == 3
    assert prefix_ranges(10, 1) == [(0, 10)]
    assert prefix_ranges(10, 2) == [(0, 2), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10)]


def test_count_bad_example():
    assert count_bad_colorings(4, 0b1111, 2) == 5
    report = bad_coloring_report(4, 0b1111, 2)
    assert report.holds
    assert report.bound_log2 == 3.5


def test_lemma_holds_exhaustively_for_small_n():
    for n in range(1, 13):
        for size in range(0, n + 1):
            members = (1 << size) - 1
            for a in range(1, n + 1):
                count = count_bad_colorings(n, members, a)
                assert count == count_bad_colorings(n, members, a, CountMode.CLOSED_FORM)
                assert below_lemma_bound(count, n, a)


def test_modes_agree_on_random_instances():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        n = int(rng.integers(1, 25))
        members = mask_of(j for j in range(n) if rng.random() < 0.5)
        a = int(rng.integers(1, n + 1))
        assert count_bad_colorings(n, members, a) == count_bad_colorings(n, members, a, "closed-form")


def test_enumeration_cap():
    with pytest.raises(ResourceLimitException):
        count_bad_colorings(30, 0b1, 1)
    assert count_bad_colorings(1000, (1 << 100) - 1, 50, CountMode.CLOSED_FORM) > 0
    with pytest.raises(InvalidInputException):
        count_bad_colorings(3, 0b1000, 1)
    with pytest.raises(InvalidInputException):
        count_bad_colorings(3, 0b1, 0)


def test_count_exceeding_examples():
    assert count_exceeding_colorings(SetSystem.from_lists(1, [[0]]), 1).count == 2
    result = count_exceeding_colorings(SetSystem.from_lists(4, [[0, 1, 2, 3]]), 2)
    assert result.count == 10
    assert result.per_set == (10,)
    assert result.holds


def test_count_exceeding_matches_brute_force_and_union_bound():
    rng = np.random.default_rng(7)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        sys = random_system(rng, n, int(rng.integers(0, 5)))
        a = int(rng.integers(1, n + 1))
        expected = sum(1 for x in all_colorings(n) if max_abs_discrepancy(sys, x) >= a)
        result = count_exceeding_colorings(sys, a)
        assert result.count == expected
        assert result.count <= result.union_sum
        assert result.holds


def test_counts_are_symmetric_under_negation():
    rng = np.random.default_rng(11)
    for _ in range(60):
        n = int(rng.integers(1, 9))
        members = mask_of(j for j in range(n) if rng.random() < 0.6)
        a = int(rng.integers(1, n + 1))
        deltas = [delta(members, x) for x in all_colorings(n)]
        at_least = sum(1 for d in deltas if d >= a)
        assert at_least == sum(1 for d in deltas if d <= -a)
        assert count_bad_colorings(n, members, a) == at_least


def test_counts_do_not_increase_with_the_threshold():
    for n in range(1, 11):
        for size in range(0, n + 1):
            members = (1 << size) - 1
            counts = [count_bad_colorings(n, members, a) for a in range(1, n + 2)]
            assert counts == sorted(counts, reverse=True)
            assert counts[-1] == 0


def test_union_bound_sandwich_for_small_systems():
    rng = np.random.default_rng(5)
    for n in range(1, 13):
        for s in range(1, 6):
            sys = random_system(rng, n, s)
            for a in range(1, n + 1):
                result = count_exceeding_colorings(sys, a)
                assert max(result.per_set) <= result.count <= result.union_sum


def test_min_max_discrepancy_examples():
    empty = min_max_discrepancy(SetSystem(3, ()))
    assert empty.value == 0
    assert empty.witness == SignColoring.all_red(3)

    single = min_max_discrepancy(SetSystem.from_lists(1, [[0]]))
    assert single.value == 1
    assert single.witness == SignColoring((1,))

    pair = min_max_discrepancy(SetSystem.from_lists(2, [[0, 1]]))
    assert pair.value == 0
    assert pair.witness == SignColoring((1, -1))


def test_min_max_discrepancy_matches_brute_force():
    rng = np.random.default_rng(19)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        sys = random_system(rng, n, int(rng.integers(1, 6)))
        value, witness = min((max_abs_discrepancy(sys, x), i, x) for i, x in enumerate(all_colorings(n)))[::2]
        result = min_max_discrepancy(sys)
        assert result.value == value
        assert result.witness == witness


def test_results_do_not_depend_on_workers(small_chunks):
    rng = np.random.default_rng(3)
    sys = random_system(rng, 12, 5)
    serial = (count_exceeding_colorings(sys, 3, workers=1), min_max_discrepancy(sys, workers=1))
    parallel = (count_exceeding_colorings(sys, 3, workers=8), min_max_discrepancy(sys, workers=8))
    assert serial == parallel
    assert count_bad_colorings(12, sys.sets[0], 2, workers=8) == count_bad_colorings(12, sys.sets[0], 2, workers=1)


@pytest.mark.slow
def test_discrepancy_theorem_end_to_end():
    rng = np.random.default_rng(42)
    checked = 0
    while checked < 50:
        n = int(rng.integers(8, 17))
        s = int(rng.integers(1, 5))
        a = discrepancy_guarantee(n, s)
        if a > n:
            continue
        sys = random_system(rng, n, s)
        assert count_exceeding_colorings(sys, a).count < 2**n
        assert find_low_discrepancy_coloring(sys, a, seed=0, max_trials=1000).succeeded
        assert min_max_discrepancy(sys).value < a
        checked += 1
