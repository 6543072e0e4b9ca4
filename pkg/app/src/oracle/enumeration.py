"""
Fixed-prefix partitioning of an exhaustive search over n-bit words.

The low bits of a word are enumerated inside a chunk with numpy; the high bits
(the prefix) select the chunk. Prefix ranges are handed to worker processes and
the results come back in prefix order, so any reduction is independent of the
number of workers.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple, TypeVar

import numpy as np

from logger import get_logger
from settings import settings
from src.core.exceptions import InvalidInputException


logger = get_logger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class Partition:
    bits: int
    low_bits: int

    @property
    def high_bits(self) -> int:
        return self.bits - self.low_bits

    @property
    def prefixes(self) -> int:
        return 1 << self.high_bits

    @property
    def chunk_size(self) -> int:
        return 1 << self.low_bits


def partition(bits: int, rows: int = 1, chunk_bits: Optional[int] = None) -> Partition:
    """
    Split `bits` so a chunk of `rows` x 2^low_bits cells stays within the configured budget.
    """
    chunk_bits = settings.ENUMERATION_CHUNK_BITS if chunk_bits is None else chunk_bits
    low_bits = min(bits, chunk_bits)
    while low_bits > 0 and max(rows, 1) << low_bits > settings.ENUMERATION_CHUNK_CELLS:
        low_bits -= 1
    return Partition(bits, low_bits)


def resolve_workers(workers: Optional[int]) -> int:
    workers = settings.WORKERS if workers is None else workers
    if workers < 1:
        raise InvalidInputException(f"worker count must be positive, got {workers}")
    return workers


def prefix_ranges(prefixes: int, workers: int) -> List[Tuple[int, int]]:
    """
    Contiguous [start, stop) prefix ranges, a few per worker.
    """
    pieces = min(prefixes, workers * 4) if workers > 1 else 1
    step, extra = divmod(prefixes, pieces)
    ranges, start = [], 0
    for i in range(pieces):
        stop = start + step + (1 if i < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def map_prefix_ranges(
    task: Callable[[int, int], T], part: Partition, workers: Optional[int] = None
) -> List[T]:
    """
    Run `task(start, stop)` over every prefix range; results come back in prefix order.

    `task` must be picklable (a module-level function or a partial of one) when workers > 1.
    """
    workers = resolve_workers(workers)
    ranges = prefix_ranges(part.prefixes, workers)
    logger.debug(
        "enumeration_started",
        bits=part.bits,
        low_bits=part.low_bits,
        ranges=len(ranges),
        workers=workers,
    )
    if workers == 1 or len(ranges) == 1:
        return [task(start, stop) for start, stop in ranges]
    starts, stops = zip(*ranges)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, starts, stops))


def gray_codes(size_bits: int) -> np.ndarray:
    """
    Reflected Gray code of every position 0..2^size_bits - 1.
    """
    positions = np.arange(1 << size_bits, dtype=np.int64)
    return positions ^ (positions >> 1)


def gray_deltas(low_sets: np.ndarray, low_bits: int) -> np.ndarray:
    """
    Discrepancy of every set restricted to the low elements, for every low coloring
    in reflected Gray order (column i colors red the elements of gray_codes(low_bits)[i]).

    Starts from all blue and doubles: the second half mirrors the first with
    element j flipped to red, which adds 2 to every set containing j.
    """
    sizes = np.array([int(mask).bit_count() for mask in low_sets.tolist()], dtype=np.int16)
    deltas = -sizes.reshape(-1, 1)
    for j in range(low_bits):
        flip = (2 * ((low_sets >> j) & 1)).astype(np.int16).reshape(-1, 1)
        deltas = np.hstack([deltas, deltas[:, ::-1] + flip])
    return deltas


def lexicographic_keys(red_masks: np.ndarray, n: int) -> np.ndarray:
    """
    Sort keys ordering colorings lexicographically with +1 before -1, element 0 most significant.
    """
    keys = np.zeros_like(red_masks)
    for j in range(n):
        blue = 1 - ((red_masks >> j) & 1)
        keys |= blue << (n - 1 - j)
    return keys
