"""
Exact counts over all 2^n red/blue colorings of [n].
"""
from dataclasses import dataclass
from enum import Enum
from functools import partial
from math import comb
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from logger import get_logger
from settings import settings
from src.bounds.counting import below_lemma_bound
from src.bounds.formulas import satisfies_discrepancy_condition
from src.core.entities import SetSystem, SignColoring
from src.core.exceptions import InvalidInputException, ResourceLimitException
from src.oracle.enumeration import (
    Partition,
    gray_codes,
    gray_deltas,
    lexicographic_keys,
    map_prefix_ranges,
    partition,
)


logger = get_logger(__name__)


class CountMode(str, Enum):
    ENUMERATE = "enumerate"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class BadColoringCount:
    """
    #{x : delta_M(x) >= a} next to its bound 2^(n - a^2/(2n)).
    """

    n: int
    size: int
    a: int
    count: int
    bound_log2: float
    holds: bool


@dataclass(frozen=True)
class ExceedingCount:
    """
    #{x : some |delta_{M_k}(x)| >= a}, the per-set counts it is a union of, and
    whether every step of the union bound holds.
    """

    n: int
    s: int
    a: int
    count: int
    total: int
    per_set: Tuple[int, ...]
    union_sum: int
    guaranteed: bool
    holds: bool


@dataclass(frozen=True)
class MinMaxDiscrepancy:
    value: int
    witness: SignColoring


def _check_enumeration(n: int, max_n: Optional[int]):
    cap = settings.ENUMERATION_MAX_N if max_n is None else max_n
    if n > cap:
        raise ResourceLimitException(
            f"enumerating 2^{n} colorings exceeds the cap of 2^{cap}; raise the cap to force it"
        )


def _chunk_deltas(
    sets: Sequence[int], part: Partition, start: int, stop: int
) -> Iterator[Tuple[int, np.ndarray]]:
    """
    (prefix, deltas) for every prefix in [start, stop); deltas has one row per set
    and one column per low coloring in Gray order.
    """
    low_mask = (1 << part.low_bits) - 1
    low = gray_deltas(np.array([m & low_mask for m in sets], dtype=np.int64), part.low_bits)
    high_sets = [m >> part.low_bits for m in sets]
    high_sizes = [h.bit_count() for h in high_sets]
    for prefix in range(start, stop):
        base = np.array(
            [2 * (h & prefix).bit_count() - size for h, size in zip(high_sets, high_sizes)],
            dtype=np.int16,
        ).reshape(-1, 1)
        yield prefix, low + base


def _count_task(sets: Tuple[int, ...], a: int, absolute: bool, part: Partition, start: int, stop: int) -> int:
    total = 0
    for _, deltas in _chunk_deltas(sets, part, start, stop):
        values = np.abs(deltas) if absolute else deltas
        total += int(np.count_nonzero((values >= a).any(axis=0)))
    return total


def _min_max_task(sets: Tuple[int, ...], n: int, part: Partition, start: int, stop: int) -> Tuple[int, int, int]:
    codes = gray_codes(part.low_bits)
    best = None
    for prefix, deltas in _chunk_deltas(sets, part, start, stop):
        values = np.abs(deltas).max(axis=0)
        value = int(values.min())
        if best is not None and value > best[0]:
            continue
        masks = (prefix << part.low_bits) | codes[values == value]
        keys = lexicographic_keys(masks, n)
        i = int(np.argmin(keys))
        candidate = (value, int(keys[i]), int(masks[i]))
        if best is None or candidate < best:
            best = candidate
    return best


def count_bad_colorings(
    n: int,
    members: int,
    a: int,
    mode: CountMode = CountMode.ENUMERATE,
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> int:
    """
    Exact number of x in {-1,1}^n with delta_M(x) >= a.
    """
    if n < 0 or members < 0 or members >> n:
        raise InvalidInputException(f"set is not a subset of the ground set of size {n}")
    if a < 1:
        raise InvalidInputException(f"threshold must be a positive integer, got a={a}")
    mode = CountMode(mode)
    size = members.bit_count()

    if mode is CountMode.CLOSED_FORM:
        first = (a + size + 1) // 2
        if first > size:
            return 0
        # C(size, j) for j = first..size, each from the one before
        term = comb(size, first)
        total = term
        for j in range(first, size):
            term = term * (size - j) // (j + 1)
            total += term
        return total << (n - size)

    _check_enumeration(n, max_n)
    part = partition(n)
    counts = map_prefix_ranges(partial(_count_task, (members,), a, False, part), part, workers)
    return sum(counts)


def bad_coloring_report(
    n: int,
    members: int,
    a: int,
    mode: CountMode = CountMode.ENUMERATE,
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> BadColoringCount:
    count = count_bad_colorings(n, members, a, mode, max_n, workers)
    bound_log2 = n - a * a / (2 * n) if n else 0.0
    holds = below_lemma_bound(count, n, a) if n else count == 0
    if not holds:
        logger.warning("lemma_bound_violated", n=n, a=a, count=count)
    return BadColoringCount(n, members.bit_count(), a, count, bound_log2, holds)


def count_exceeding_colorings(
    sys: SetSystem,
    a: int,
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> ExceedingCount:
    """
    Exact number of colorings with |delta_{M_k}(x)| >= a for some k, by enumeration.
    """
    if a < 1:
        raise InvalidInputException(f"threshold must be a positive integer, got a={a}")
    _check_enumeration(sys.n, max_n)

    count = 0
    if sys.s:
        part = partition(sys.n, rows=sys.s)
        count = sum(map_prefix_ranges(partial(_count_task, sys.sets, a, True, part), part, workers))

    one_sided = [count_bad_colorings(sys.n, m, a, CountMode.CLOSED_FORM) for m in sys.sets]
    per_set = tuple(2 * c for c in one_sided)
    union_sum = sum(per_set)
    total = 1 << sys.n
    guaranteed = sys.s > 0 and sys.n > 0 and satisfies_discrepancy_condition(a, sys.n, sys.s)
    holds = (
        count <= union_sum
        and (sys.n == 0 or all(below_lemma_bound(c, sys.n, a) for c in one_sided))
        and (not guaranteed or count < total)
    )
    if not holds:
        logger.warning("union_bound_violated", n=sys.n, s=sys.s, a=a, count=count)
    return ExceedingCount(sys.n, sys.s, a, count, total, per_set, union_sum, guaranteed, holds)


def min_max_discrepancy(
    sys: SetSystem,
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> MinMaxDiscrepancy:
    """
    The smallest achievable max_k |delta_{M_k}(x)| and the lexicographically first
    coloring achieving it (+1 before -1, element 1 most significant).
    """
    _check_enumeration(sys.n, max_n)
    if not sys.s:
        return MinMaxDiscrepancy(0, SignColoring.all_red(sys.n))
    part = partition(sys.n, rows=sys.s)
    results = map_prefix_ranges(partial(_min_max_task, sys.sets, sys.n, part), part, workers)
    value, _, red = min(results)
    return MinMaxDiscrepancy(value, SignColoring.from_red_mask(sys.n, red))
