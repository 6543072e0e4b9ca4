"""
Closed-form sizes guaranteed by the Ramsey lower bounds and the discrepancy theorem.

Every exponent is evaluated with integer arithmetic.
"""
from math import factorial, isqrt
from typing import Optional

from logger import get_logger
from settings import settings
from src.bounds.magnitude import Magnitude, Rounding, log2_power_interval
from src.core.exceptions import InvalidInputException


logger = get_logger(__name__)


def erdos_exponent(n: int) -> int:
    return (n - 2) // 2


def hypergraph_exponent(n: int, l: int) -> int:
    return (n - l + 1) ** (l - 1) // factorial(l)


def erdos_graph_bound(n: int, bit_cap: Optional[int] = None) -> Magnitude:
    """
    2^floor((n-2)/2): a graph on this many vertices with no n-clique and no n-anticlique exists.
    """
    if n < 2:
        raise InvalidInputException(f"clique size must be at least 2, got n={n}")
    return Magnitude.power(2, erdos_exponent(n), Rounding.LOWER, bit_cap)


def erdos_multicolor_bound(n: int, k: int, bit_cap: Optional[int] = None) -> Magnitude:
    """
    k^floor((n-2)/2): the edges of a complete graph this large can be k-colored
    with no monochromatic n-clique.
    """
    if n < 2 or k < 2:
        raise InvalidInputException(f"need n >= 2 and k >= 2, got n={n}, k={k}")
    return Magnitude.power(k, erdos_exponent(n), Rounding.LOWER, bit_cap)


def erdos_hypergraph_bound(n: int, k: int, l: int, bit_cap: Optional[int] = None) -> Magnitude:
    """
    k^floor((n-l+1)^(l-1) / l!): the l-subsets of a set this large can be k-colored
    with no monochromatic n-hyperclique.
    """
    if not n >= l >= 1 or k < 2:
        raise InvalidInputException(f"need n >= l >= 1 and k >= 2, got n={n}, l={l}, k={k}")
    return Magnitude.power(k, hypergraph_exponent(n, l), Rounding.LOWER, bit_cap)


def satisfies_discrepancy_condition(
    a: int, n: int, s: int, bit_cap: Optional[int] = None
) -> bool:
    """
    Decide 2^(a^2) >= (2s)^(2n).

    Exact integers are used when both sides fit the bit cap; otherwise log2
    intervals decide, with an exact comparison when they cannot.
    """
    if a < 0 or n < 1 or s < 1:
        raise InvalidInputException(f"need a >= 0, n >= 1, s >= 1, got a={a}, n={n}, s={s}")
    bit_cap = bit_cap or settings.EXACT_BIT_CAP
    lhs_bits = a * a
    rhs_bits = 2 * n * (1 + (s - 1).bit_length())
    if lhs_bits < bit_cap and rhs_bits < bit_cap:
        return 1 << lhs_bits >= (2 * s) ** (2 * n)

    lo, hi = log2_power_interval(2 * s, 2 * n)
    if lhs_bits >= hi:
        return True
    if lhs_bits < lo:
        return False
    logger.info("exact_escalation", a=a, n=n, s=s, lhs_bits=lhs_bits, rhs_bits=rhs_bits)
    return 1 << lhs_bits >= (2 * s) ** (2 * n)


def discrepancy_guarantee(n: int, s: int, bit_cap: Optional[int] = None) -> int:
    """
    Smallest positive a with 2^(a^2) >= (2s)^(2n); some coloring of [n] then keeps
    every |delta(M_k)| below a.
    """
    if n < 1 or s < 1:
        raise InvalidInputException(f"need n >= 1 and s >= 1, got n={n}, s={s}")
    lo, _ = log2_power_interval(2 * s, 2 * n)
    a = max(1, isqrt(int(lo)))
    while not satisfies_discrepancy_condition(a, n, s, bit_cap):
        a += 1
    while a > 1 and satisfies_discrepancy_condition(a - 1, n, s, bit_cap):
        a -= 1
    logger.debug("discrepancy_guarantee", n=n, s=s, a=a)
    return a


def relaxed_discrepancy_threshold(n: int, s: int, step: int = 10) -> int:
    """
    Smallest multiple of `step` with a^2 >= 2n * ceil(log2(2s)), the hand-checkable
    route 2^(a^2) >= 2^(2n * ceil(log2 2s)) >= (2s)^(2n).
    """
    if n < 1 or s < 1 or step < 1:
        raise InvalidInputException(f"need n >= 1, s >= 1, step >= 1, got n={n}, s={s}, step={step}")
    target = 2 * n * (2 * s - 1).bit_length()
    root = isqrt(target - 1) + 1 if target > 1 else 1
    return -(-root // step) * step
