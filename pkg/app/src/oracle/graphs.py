"""
Exact count of "Ramsey" graphs (with an n-clique or an n-anticlique) on r labeled vertices.
"""
from dataclasses import dataclass
from functools import partial
from itertools import combinations
from math import comb
from typing import Optional, Tuple

import numpy as np

from logger import get_logger
from settings import settings
from src.bounds.counting import BadCountBound, ramsey_bad_count_bound
from src.bounds.magnitude import Magnitude, Verdict
from src.core.entities import mask_of, pair_index
from src.core.exceptions import InvalidInputException, ResourceLimitException
from src.oracle.enumeration import Partition, map_prefix_ranges, partition


logger = get_logger(__name__)


@dataclass(frozen=True)
class RamseyCount:
    r: int
    n: int
    count: int
    total: int
    bound: Optional[BadCountBound]
    holds: bool


def subset_pair_masks(r: int, n: int) -> Tuple[int, ...]:
    """
    For every n-subset of [r], the edge mask of its pairs (bit e is the e-th pair in lex order).
    """
    return tuple(
        mask_of(pair_index(i, j, r) for i, j in combinations(subset, 2))
        for subset in combinations(range(r), n)
    )


def _ramsey_task(masks: Tuple[int, ...], part: Partition, start: int, stop: int) -> int:
    low = np.arange(part.chunk_size, dtype=np.int64)
    pair_masks = [np.int64(mask) for mask in masks]
    total = 0
    for prefix in range(start, stop):
        graphs = (prefix << part.low_bits) | low
        ramsey = np.zeros(part.chunk_size, dtype=bool)
        for mask in pair_masks:
            inside = graphs & mask
            ramsey |= (inside == mask) | (inside == 0)
        total += int(np.count_nonzero(ramsey))
    return total


def count_ramsey_graphs(
    r: int,
    n: int,
    max_edge_bits: Optional[int] = None,
    workers: Optional[int] = None,
) -> RamseyCount:
    """
    Enumerate all 2^C(r,2) graphs on r labeled vertices and count those with an
    n-clique or an n-anticlique.
    """
    if r < 1 or n < 1:
        raise InvalidInputException(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    edge_bits = comb(r, 2)
    cap = settings.ENUMERATION_MAX_EDGE_BITS if max_edge_bits is None else max_edge_bits
    if edge_bits > cap:
        raise ResourceLimitException(
            f"enumerating graphs on {r} vertices needs 2^{edge_bits} graphs, over the cap of 2^{cap}"
        )

    masks = subset_pair_masks(r, n)
    part = partition(edge_bits)
    count = sum(map_prefix_ranges(partial(_ramsey_task, masks, part), part, workers))

    bound = ramsey_bad_count_bound(r, n) if 2 <= n <= r else None
    holds = bound is None or bound.bad_bound.less_than(Magnitude.of(count)) is not Verdict.TRUE
    if not holds:
        logger.warning("ramsey_bound_violated", r=r, n=n, count=count)
    logger.info("ramsey_graphs_counted", r=r, n=n, count=count, total=1 << edge_bits)
    return RamseyCount(r, n, count, 1 << edge_bits, bound, holds)
