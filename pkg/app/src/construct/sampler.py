"""
Seeded random streams for the constructors.

Trial t of a run with seed s draws from PCG64 seeded by SeedSequence(s, spawn_key=(t,)).
Within a trial, values are drawn in a fixed order: edges in lexicographic pair
order, l-subsets in lexicographic order, ground-set elements in index order.
"""
from itertools import combinations
from math import comb
from typing import Tuple

import numpy as np

from src.core.entities import BLUE, RED, EdgeColoring, Graph, SetSystem, SignColoring, SubsetColoring, mask_of
from src.core.exceptions import InvalidInputException


GENERATOR = "numpy-PCG64/SeedSequence(seed, spawn_key=(trial,))/v1"
SYSTEM_STREAM = 2**32


def check_seed(seed: int) -> int:
    if not 0 <= seed < 2**64:
        raise InvalidInputException(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(check_seed(seed), spawn_key=(trial,)))
    )


def uniform_colors(rng: np.random.Generator, count: int, k: int) -> Tuple[int, ...]:
    return tuple(int(c) for c in rng.integers(0, k, size=count))


def sample_edge_coloring(rng: np.random.Generator, r: int, k: int) -> EdgeColoring:
    return EdgeColoring(r, k, uniform_colors(rng, comb(r, 2), k))


def sample_graph(rng: np.random.Generator, r: int) -> Graph:
    """
    Each edge present with probability 1/2; the draw is the 2-coloring with color 0 meaning present.
    """
    colors = uniform_colors(rng, comb(r, 2), 2)
    return Graph.from_edges(
        r, (pair for pair, color in zip(combinations(range(r), 2), colors) if color == 0)
    )


def sample_subset_coloring(rng: np.random.Generator, m: int, l: int, k: int) -> SubsetColoring:
    return SubsetColoring(m, l, k, uniform_colors(rng, comb(m, l), k))


def sample_signs(rng: np.random.Generator, n: int) -> SignColoring:
    bits = rng.integers(0, 2, size=n)
    return SignColoring(tuple(RED if bit == 0 else BLUE for bit in bits.tolist()))


def random_set_system(n: int, s: int, size: int, seed: int) -> SetSystem:
    """
    s sets of `size` distinct elements of [n] each, drawn uniformly from a dedicated stream.
    """
    if n < 0 or s < 0 or not 0 <= size <= n:
        raise InvalidInputException(f"need n >= 0, s >= 0 and 0 <= size <= n, got n={n}, s={s}, size={size}")
    rng = trial_generator(seed, SYSTEM_STREAM)
    return SetSystem(
        n, tuple(mask_of(rng.choice(n, size=size, replace=False).tolist()) for _ in range(s))
    )
