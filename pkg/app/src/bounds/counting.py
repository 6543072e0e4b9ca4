"""
Counting bounds: Markov, the exponential-moment (Chernoff) chain, and the
"bad objects are fewer than all objects" bounds behind the Ramsey lower bounds.
"""
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from logger import get_logger
from settings import settings
from src.bounds.magnitude import (
    Magnitude,
    Rounding,
    Verdict,
    add_directed,
    log2_interval,
    mul_directed,
)
from src.core.exceptions import InvalidInputException, ResourceLimitException


logger = get_logger(__name__)

Real = Union[int, float]

_LN2 = math.log(2.0)
_LOG2_E = 1.0 / _LN2


class Arithmetic(str, Enum):
    AUTO = "auto"
    EXACT = "exact"
    LOG2 = "log2"


@dataclass(frozen=True)
class MarkovBound:
    bound: float
    count: int


def markov_count_bound(weights: Sequence[Real], a: Real) -> MarkovBound:
    """
    (w_1 + ... + w_s) / a together with the number of i such that w_i >= a.

    The sum and quotient are exact rationals, so the float bound never drops below the count.
    """
    if a <= 0 or any(w <= 0 for w in weights):
        raise InvalidInputException("Markov bound needs positive weights and a positive threshold")
    total = sum((Fraction(w) for w in weights), Fraction(0))
    bound = float(total / Fraction(a))
    count = sum(1 for w in weights if w >= a)
    return MarkovBound(bound, count)


@dataclass(frozen=True)
class ChernoffBound:
    """
    The chain bounding #{x : delta_M(x) >= a}, each step as log2 of its value.

    value is the first (tightest) step, biased upward by the configured slack.
    """

    n: int
    m: int
    a: float
    lam: float
    log2_moment: float
    log2_after_cosh: float
    log2_relaxed: float
    log2_optimized: float
    log2_closed_form: float
    value: float
    closed_form: float


def _pow2(exponent: float) -> float:
    return math.inf if exponent >= 1024 else 2.0**exponent


def _log_cosh(lam: float) -> float:
    return float(np.logaddexp(lam, -lam)) - _LN2


def chernoff_count_bound(n: int, m: int, a: Real, lam: Optional[Real] = None) -> ChernoffBound:
    """
    e^(-lam a) 2^n ((e^lam + e^-lam) / 2)^m, with lam = a/n by default.

    Also returns each later step of the chain down to 2^(n - a^2/(2n)).
    """
    if n < 1 or not 0 <= m <= n or a <= 0:
        raise InvalidInputException(f"need n >= 1, 0 <= m <= n and a > 0, got n={n}, m={m}, a={a}")
    if lam is not None and lam <= 0:
        raise InvalidInputException(f"lambda must be positive, got {lam}")
    a = float(a)
    lam = a / n if lam is None else float(lam)

    log2_moment = (m * _log_cosh(lam) - lam * a) * _LOG2_E + n
    log2_after_cosh = (m * lam * lam / 2 - lam * a) * _LOG2_E + n
    log2_relaxed = (n * lam * lam / 2 - lam * a) * _LOG2_E + n
    log2_optimized = n - a * a / (2 * n) * _LOG2_E
    log2_closed_form = n - a * a / (2 * n)

    return ChernoffBound(
        n=n,
        m=m,
        a=a,
        lam=lam,
        log2_moment=log2_moment,
        log2_after_cosh=log2_after_cosh,
        log2_relaxed=log2_relaxed,
        log2_optimized=log2_optimized,
        log2_closed_form=log2_closed_form,
        value=_pow2(log2_moment) * (1 + settings.CHERNOFF_SLACK),
        closed_form=_pow2(log2_closed_form),
    )


def cosh_gap(lam: Real, precision: int = 80) -> Tuple[Decimal, Decimal]:
    """
    lam^2/2 - ln cosh(lam) in high precision, with a bound on its rounding error.

    A positive gap larger than the slack certifies (e^lam + e^-lam)/2 < e^(lam^2/2).
    """
    with localcontext() as ctx:
        ctx.prec = precision
        value = Decimal(lam)
        cosh = (value.exp() + (-value).exp()) / 2
        gap = value * value / 2 - cosh.ln()
        slack = Decimal(10) ** -(precision - 10) * max(Decimal(1), value * value)
    return gap, slack


def below_lemma_bound(count: int, n: int, a: int) -> bool:
    """
    Exact decision of count < 2^(n - a^2/(2n)), via count^(2n) < 2^(2n^2 - a^2).
    """
    if count < 0 or n < 1:
        raise InvalidInputException(f"need count >= 0 and n >= 1, got count={count}, n={n}")
    if count == 0:
        return True
    exponent = 2 * n * n - a * a
    # 2^(bits-1) <= count < 2^bits
    bits = count.bit_length()
    if 2 * n * (bits - 1) >= exponent:
        return False
    if 2 * n * bits <= exponent:
        return True
    lo, hi = log2_interval(count)
    if 2 * n * hi < exponent:
        return True
    if 2 * n * lo >= exponent:
        return False
    return count ** (2 * n) < 1 << exponent


@dataclass(frozen=True)
class BadCountBound:
    """
    Upper bound on the bad objects, the total count, and whether bad < total.

    `arithmetic` names the tier that produced the verdict.
    """

    bad_bound: Magnitude
    total: Magnitude
    verdict: Verdict
    arithmetic: Arithmetic


def _bad_count_bound(
    k: int,
    universe: int,
    size: int,
    total_exponent: int,
    clique_exponent: int,
    arithmetic: Arithmetic,
    bit_cap: Optional[int],
) -> BadCountBound:
    """
    Bad objects: k * C(universe, size) * k^(total_exponent - clique_exponent);
    all objects: k^total_exponent.
    """
    arithmetic = Arithmetic(arithmetic)
    bit_cap = bit_cap or settings.EXACT_BIT_CAP
    k_bits = k.bit_length()
    free_exponent = total_exponent - clique_exponent

    if arithmetic is not Arithmetic.LOG2:
        if total_exponent * k_bits <= bit_cap:
            bad = k * comb(universe, size) * k**free_exponent
            total = k**total_exponent
            return BadCountBound(
                Magnitude.of(bad), Magnitude.of(total), Verdict.of(bad < total), Arithmetic.EXACT
            )
        if size * universe.bit_length() + clique_exponent * k_bits <= bit_cap:
            # the common factor k^free_exponent cancels from both sides
            reduced = k * comb(universe, size)
            verdict = Verdict.of(reduced < k**clique_exponent)
            k_lo, k_hi = log2_interval(k)
            _, reduced_hi = log2_interval(reduced)
            bad_hi = add_directed(
                Rounding.UPPER, reduced_hi, mul_directed(Rounding.UPPER, k_hi, Decimal(free_exponent))
            )
            total_lo = mul_directed(Rounding.LOWER, k_lo, Decimal(total_exponent))
            return BadCountBound(
                Magnitude.approx(bad_hi, Rounding.UPPER),
                Magnitude.approx(total_lo, Rounding.LOWER),
                verdict,
                Arithmetic.EXACT,
            )
        if arithmetic is Arithmetic.EXACT:
            raise ResourceLimitException(
                f"C({universe},{size}) needs about {size * universe.bit_length()} bits, "
                f"over the exact cap of {bit_cap}"
            )

    # C(universe, size) < universe^size
    k_lo, k_hi = log2_interval(k)
    _, universe_hi = log2_interval(universe)
    bad_hi = add_directed(
        Rounding.UPPER,
        mul_directed(Rounding.UPPER, k_hi, Decimal(1 + free_exponent)),
        mul_directed(Rounding.UPPER, universe_hi, Decimal(size)),
    )
    bad = Magnitude.approx(bad_hi, Rounding.UPPER)
    total = Magnitude.approx(mul_directed(Rounding.LOWER, k_lo, Decimal(total_exponent)), Rounding.LOWER)
    verdict = bad.less_than(total)
    logger.debug("log2_bad_count_bound", k=k, universe=universe, size=size, verdict=verdict.value)
    return BadCountBound(bad, total, verdict, Arithmetic.LOG2)


def multicolor_bad_count_bound(
    r: int,
    n: int,
    k: int,
    arithmetic: Arithmetic = Arithmetic.AUTO,
    bit_cap: Optional[int] = None,
) -> BadCountBound:
    """
    k-colorings of K_r with a monochromatic n-clique number fewer than
    k * C(r,n) * k^(C(r,2) - C(n,2)), out of k^C(r,2).
    """
    if not 2 <= n <= r or k < 2:
        raise InvalidInputException(f"need 2 <= n <= r and k >= 2, got r={r}, n={n}, k={k}")
    return _bad_count_bound(k, r, n, comb(r, 2), comb(n, 2), arithmetic, bit_cap)


def ramsey_bad_count_bound(
    r: int, n: int, arithmetic: Arithmetic = Arithmetic.AUTO, bit_cap: Optional[int] = None
) -> BadCountBound:
    """
    Graphs on r labeled vertices with an n-clique or n-anticlique: at most
    2 * C(r,n) * 2^(C(r,2) - C(n,2)), out of 2^C(r,2).
    """
    if not 2 <= n <= r:
        raise InvalidInputException(f"need 2 <= n <= r, got r={r}, n={n}")
    return _bad_count_bound(2, r, n, comb(r, 2), comb(n, 2), arithmetic, bit_cap)


def hypergraph_bad_count_bound(
    m: int,
    n: int,
    l: int,
    k: int = 2,
    arithmetic: Arithmetic = Arithmetic.AUTO,
    bit_cap: Optional[int] = None,
) -> BadCountBound:
    """
    k-colorings of the l-subsets of [m] with a monochromatic n-hyperclique:
    at most k * C(m,n) * k^(C(m,l) - C(n,l)), out of k^C(m,l).
    """
    if not 1 <= l <= n <= m or k < 2:
        raise InvalidInputException(f"need 1 <= l <= n <= m and k >= 2, got m={m}, n={n}, l={l}, k={k}")
    return _bad_count_bound(k, m, n, comb(m, l), comb(n, l), arithmetic, bit_cap)
