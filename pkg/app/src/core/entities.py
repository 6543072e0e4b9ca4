from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from settings import settings
from src.core.exceptions import InvalidInputException


RED = 1
BLUE = -1


def pair_index(i: int, j: int, r: int) -> int:
    """
    Position of the unordered pair {i, j} in the lexicographic order of pairs of [r].
    """
    if i > j:
        i, j = j, i
    return i * r - i * (i + 1) // 2 + (j - i - 1)


def subset_index(subset: Sequence[int], m: int) -> int:
    """
    Position of a sorted l-subset in the lexicographic order of l-subsets of [m].

    Reflecting j -> m-1-j reverses that order, and the reflected set is ranked
    by the combinatorial number system.
    """
    l = len(subset)
    colex = sum(comb(m - 1 - element, l - t) for t, element in enumerate(subset))
    return comb(m, l) - 1 - colex


def iter_bits(mask: int) -> Iterator[int]:
    """
    Indices of the set bits of a mask, lowest first.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


@dataclass(frozen=True)
class Graph:
    """
    A simple undirected graph on r labeled vertices, each adjacency row a bitset.
    """

    r: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise InvalidInputException(f"graph needs at least one vertex, got r={self.r}")
        if len(self.adj) != self.r:
            raise InvalidInputException(
                f"graph on {self.r} vertices needs {self.r} adjacency rows, got {len(self.adj)}"
            )
        full = (1 << self.r) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidInputException(f"row {i} addresses vertices beyond r={self.r}")
            if row >> i & 1:
                raise InvalidInputException(f"vertex {i} has a loop")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise InvalidInputException(f"adjacency is not symmetric at ({i}, {j})")

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adj = [0] * max(r, 0)
        for u, v in edges:
            if u == v:
                raise InvalidInputException(f"edge ({u}, {v}) is a loop")
            if not (0 <= u < r and 0 <= v < r):
                raise InvalidInputException(f"edge ({u}, {v}) out of bounds for r={r}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(r, tuple(adj))

    @classmethod
    def from_edge_mask(cls, r: int, mask: int) -> "Graph":
        """
        Build a graph from a mask whose bit e is the e-th pair in lexicographic order.
        """
        return cls.from_edges(
            r, (pair for e, pair in enumerate(combinations(range(r), 2)) if mask >> e & 1)
        )

    @classmethod
    def empty(cls, r: int) -> "Graph":
        return cls(r, (0,) * r)

    @classmethod
    def complete(cls, r: int) -> "Graph":
        full = (1 << r) - 1
        return cls(r, tuple(full ^ (1 << i) for i in range(r)))

    @classmethod
    def cycle(cls, r: int) -> "Graph":
        return cls.from_edges(r, ((i, (i + 1) % r) for i in range(r)))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in iter_bits(row >> (i + 1)):
                yield i, i + 1 + j

    def edge_mask(self) -> int:
        return mask_of(pair_index(i, j, self.r) for i, j in self.edges())

    def complement(self) -> "Graph":
        full = (1 << self.r) - 1
        return Graph(self.r, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))


@dataclass(frozen=True)
class EdgeColoring:
    """
    A coloring of the edges of the complete graph on r vertices in k colors.

    Colors are 0-based internally and stored in lexicographic pair order.
    """

    r: int
    k: int
    colors: Tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise InvalidInputException(f"coloring needs at least one vertex, got r={self.r}")
        check_color_count(self.k)
        if len(self.colors) != comb(self.r, 2):
            raise InvalidInputException(
                f"K_{self.r} has {comb(self.r, 2)} edges, got {len(self.colors)} colors"
            )
        _check_colors(self.colors, self.k)

    @classmethod
    def from_graph(cls, g: Graph) -> "EdgeColoring":
        """
        The 2-coloring identified with a graph: edge present is color 0, absent color 1.
        """
        return cls(
            g.r, 2, tuple(0 if g.has_edge(i, j) else 1 for i, j in combinations(range(g.r), 2))
        )

    def color(self, i: int, j: int) -> int:
        return self.colors[pair_index(i, j, self.r)]

    def color_graph(self, q: int) -> Graph:
        """
        The graph formed by the edges of color q.
        """
        return Graph.from_edges(
            self.r,
            (pair for pair, color in zip(combinations(range(self.r), 2), self.colors) if color == q),
        )


@dataclass(frozen=True)
class SubsetColoring:
    """
    A coloring of all l-subsets of [m] in k colors, in lexicographic subset order.
    """

    m: int
    l: int
    k: int
    colors: Tuple[int, ...]

    def __post_init__(self):
        if self.l < 1:
            raise InvalidInputException(f"subset size must be at least 1, got l={self.l}")
        if self.m < 0:
            raise InvalidInputException(f"ground set size must be nonnegative, got m={self.m}")
        check_color_count(self.k)
        if len(self.colors) != comb(self.m, self.l):
            raise InvalidInputException(
                f"[{self.m}] has {comb(self.m, self.l)} subsets of size {self.l}, "
                f"got {len(self.colors)} colors"
            )
        _check_colors(self.colors, self.k)

    def subsets(self) -> Iterator[Tuple[int, ...]]:
        return combinations(range(self.m), self.l)

    def color(self, subset: Sequence[int]) -> int:
        ordered = sorted(subset)
        if len(set(ordered)) != self.l or not all(0 <= v < self.m for v in ordered):
            raise InvalidInputException(f"{tuple(subset)} is not a {self.l}-subset of [{self.m}]")
        return self.colors[subset_index(ordered, self.m)]


@dataclass(frozen=True)
class SetSystem:
    """
    A family M_1..M_s of subsets of [n], each one a bitset.
    """

    n: int
    sets: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputException(f"ground set size must be nonnegative, got n={self.n}")
        for k, members in enumerate(self.sets):
            if members < 0 or members >> self.n:
                raise InvalidInputException(f"set {k} is not a subset of the ground set of size {self.n}")

    @classmethod
    def from_lists(cls, n: int, sets: Iterable[Iterable[int]]) -> "SetSystem":
        built = []
        for members in sets:
            members = list(members)
            if any(not 0 <= j < n for j in members):
                raise InvalidInputException(f"set {members} has elements outside the ground set of size {n}")
            built.append(mask_of(members))
        return cls(n, tuple(built))

    @property
    def s(self) -> int:
        return len(self.sets)

    def members(self, k: int) -> Tuple[int, ...]:
        return tuple(iter_bits(self.sets[k]))


@dataclass(frozen=True)
class SignColoring:
    """
    A red/blue coloring of [n]: red is +1, blue is -1.
    """

    x: Tuple[int, ...]

    def __post_init__(self):
        for j, sign in enumerate(self.x):
            if sign not in (RED, BLUE):
                raise InvalidInputException(f"entry {j} of a sign coloring must be +1 or -1, got {sign}")

    @classmethod
    def from_red_mask(cls, n: int, red: int) -> "SignColoring":
        return cls(tuple(RED if red >> j & 1 else BLUE for j in range(n)))

    @classmethod
    def all_red(cls, n: int) -> "SignColoring":
        return cls((RED,) * n)

    @property
    def n(self) -> int:
        return len(self.x)

    @cached_property
    def red_mask(self) -> int:
        return mask_of(j for j, sign in enumerate(self.x) if sign == RED)

    def negated(self) -> "SignColoring":
        return SignColoring(tuple(-sign for sign in self.x))


Witness = Union[Graph, EdgeColoring, SubsetColoring, SignColoring]


@dataclass(frozen=True)
class TrialFailure:
    trial: int
    reason: str


@dataclass(frozen=True)
class TrialReport:
    """
    Outcome of a Las Vegas run: a verified witness, or the failures of every trial.
    """

    seed: int
    generator: str
    trials_run: int
    witness: Optional[Witness] = None
    witness_trial: Optional[int] = None
    successes: int = 0
    failures: Tuple[TrialFailure, ...] = ()
    parameters: Mapping[str, int] = field(default_factory=dict)
    verification: Optional[str] = None

    @property
    def succeeded(self) -> bool:
        return self.witness is not None

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials_run if self.trials_run else 0.0


def check_color_count(k: int):
    if k < 2 and not (settings.TESTING and k == 1):
        raise InvalidInputException(f"color count must be at least 2, got k={k}")


def _check_colors(colors: Sequence[int], k: int):
    for color in colors:
        if not 0 <= color < k:
            raise InvalidInputException(f"color {color + 1} is outside [1, {k}]")
