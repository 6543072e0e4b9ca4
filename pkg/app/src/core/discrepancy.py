from typing import Optional, Tuple

from src.core.entities import SetSystem, SignColoring
from src.core.exceptions import InvalidInputException


def delta(members: int, x: SignColoring) -> int:
    """
    Discrepancy of the set `members` (a bitset) under x: number of red minus number of blue.
    """
    if members < 0 or members >> x.n:
        raise InvalidInputException(
            f"set has elements outside the ground set of the coloring (n={x.n})"
        )
    return 2 * (members & x.red_mask).bit_count() - members.bit_count()


def worst_set(sys: SetSystem, x: SignColoring) -> Optional[Tuple[int, int]]:
    """
    Index and discrepancy of the first set whose |delta| is maximal, None when s=0.
    """
    _check_lengths(sys, x)
    worst = None
    for k, members in enumerate(sys.sets):
        value = delta(members, x)
        if worst is None or abs(value) > abs(worst[1]):
            worst = (k, value)
    return worst


def first_violation(sys: SetSystem, x: SignColoring, a: int) -> Optional[Tuple[int, int]]:
    """
    First set k with |delta(M_k, x)| >= a, with its discrepancy.
    """
    _check_lengths(sys, x)
    for k, members in enumerate(sys.sets):
        value = delta(members, x)
        if abs(value) >= a:
            return k, value
    return None


def max_abs_discrepancy(sys: SetSystem, x: SignColoring) -> int:
    worst = worst_set(sys, x)
    return 0 if worst is None else abs(worst[1])


def _check_lengths(sys: SetSystem, x: SignColoring):
    if sys.n != x.n:
        raise InvalidInputException(
            f"coloring has length {x.n} but the set system lives on {sys.n} elements"
        )
