"""
Clique, anticlique and monochromatic (hyper)clique detectors.

All searches walk vertices in increasing order, so the first set found is the
lexicographically smallest one.
"""
from itertools import combinations
from typing import List, NamedTuple, Optional, Sequence, Tuple

from src.core.entities import EdgeColoring, Graph, SubsetColoring
from src.core.exceptions import InvalidInputException


class MonochromaticSet(NamedTuple):
    color: int
    vertices: Tuple[int, ...]


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _greedy_color_bound(candidates: int, adj: Sequence[int]) -> int:
    """
    Number of classes of a greedy coloring of the candidates; no clique among them is larger.
    """
    colors = 0
    uncolored = candidates
    while uncolored:
        colors += 1
        available = uncolored
        while available:
            v = _lsb_index(available)
            uncolored &= ~(1 << v)
            available &= ~(1 << v) & ~adj[v]
    return colors


def _extend(
    adj: Sequence[int], chosen: Tuple[int, ...], candidates: int, needed: int
) -> Optional[Tuple[int, ...]]:
    if needed == 0:
        return chosen
    if candidates.bit_count() < needed:
        return None
    if needed > 2 and _greedy_color_bound(candidates, adj) < needed:
        return None
    rest = candidates
    while rest:
        v = _lsb_index(rest)
        rest &= rest - 1
        if rest.bit_count() + 1 < needed:
            return None
        found = _extend(adj, chosen + (v,), rest & adj[v], needed - 1)
        if found is not None:
            return found
    return None


def find_clique(g: Graph, n: int) -> Optional[Tuple[int, ...]]:
    """
    Lexicographically first n-clique of g, or None.
    """
    if n < 1:
        raise InvalidInputException(f"clique size must be positive, got n={n}")
    if n > g.r:
        return None
    return _extend(g.adj, (), (1 << g.r) - 1, n)


def has_clique(g: Graph, n: int) -> bool:
    return find_clique(g, n) is not None


def find_anticlique(g: Graph, n: int) -> Optional[Tuple[int, ...]]:
    return find_clique(g.complement(), n)


def has_anticlique(g: Graph, n: int) -> bool:
    return find_anticlique(g, n) is not None


def find_monochromatic_clique(c: EdgeColoring, n: int) -> Optional[MonochromaticSet]:
    for q in range(c.k):
        vertices = find_clique(c.color_graph(q), n)
        if vertices is not None:
            return MonochromaticSet(q, vertices)
    return None


def find_monochromatic_hyperclique(c: SubsetColoring, n: int) -> Optional[MonochromaticSet]:
    """
    First color q and n-subset S of [m] such that every l-subset of S has color q.
    """
    if n < c.l:
        raise InvalidInputException(f"hyperclique size n={n} is smaller than the subset size l={c.l}")
    if n > c.m:
        return None
    for q in range(c.k):
        vertices = _extend_hyperclique(c, q, [], 0, n)
        if vertices is not None:
            return MonochromaticSet(q, vertices)
    return None


def _extend_hyperclique(
    c: SubsetColoring, q: int, chosen: List[int], start: int, n: int
) -> Optional[Tuple[int, ...]]:
    if len(chosen) == n:
        return tuple(chosen)
    for v in range(start, c.m - (n - len(chosen)) + 1):
        # every l-subset gets checked once: when its largest element joins
        if all(c.color(others + (v,)) == q for others in combinations(chosen, c.l - 1)):
            chosen.append(v)
            found = _extend_hyperclique(c, q, chosen, v + 1, n)
            chosen.pop()
            if found is not None:
                return found
    return None
