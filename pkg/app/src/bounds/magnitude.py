"""
Sound arithmetic for astronomically large nonnegative quantities.

A Magnitude is either an exact integer or a log2 value carrying the direction
it was rounded in. Comparisons answer true, false or indeterminate, and never
give an answer the exact values would contradict.
"""
import sys
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from enum import Enum
from typing import Dict, Optional, Tuple

from settings import settings
from src.core.exceptions import InvalidInputException


NEG_INFINITY = Decimal("-Infinity")
# log10(2) rounded up
_LOG10_2_UP = 0.30103


class Rounding(str, Enum):
    LOWER = "lower-bound"
    UPPER = "upper-bound"


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"

    @classmethod
    def of(cls, value: bool) -> "Verdict":
        return cls.TRUE if value else cls.FALSE


def allow_long_digit_strings(digits: Optional[int] = None):
    """
    Lift the interpreter's int/str conversion limit up to the display cap.
    """
    if hasattr(sys, "set_int_max_str_digits"):
        limit = digits or settings.DISPLAY_DIGITS_CAP
        current = sys.get_int_max_str_digits()
        if current and current < limit:
            sys.set_int_max_str_digits(limit)


def log2_interval(value: int, precision: Optional[int] = None) -> Tuple[Decimal, Decimal]:
    """
    Decimal bounds lo <= log2(value) <= hi.
    """
    if value < 0:
        raise InvalidInputException(f"log2 of a negative number ({value})")
    if value == 0:
        return NEG_INFINITY, NEG_INFINITY
    top = value.bit_length() - 1
    if value == 1 << top:
        return Decimal(top), Decimal(top)

    precision = precision or settings.LOG2_PRECISION
    shift = max(top - 63, 0)
    mantissa = value >> shift
    truncated = mantissa << shift != value
    with localcontext() as ctx:
        ctx.prec = precision
        ln2 = Decimal(2).ln()
        lo_fraction = Decimal(mantissa).ln() / ln2
        hi_fraction = Decimal(mantissa + 1).ln() / ln2 if truncated else lo_fraction

    # ln and division are each within an ulp; log2(mantissa) is at most 64
    slack = Decimal(10) ** -(precision - 5)
    with localcontext() as ctx:
        ctx.prec = precision + 20
        ctx.rounding = ROUND_FLOOR
        lo = Decimal(shift) + lo_fraction - slack
    with localcontext() as ctx:
        ctx.prec = precision + 20
        ctx.rounding = ROUND_CEILING
        hi = Decimal(shift) + hi_fraction + slack
    return lo, hi


def log2_power_interval(
    base: int, exponent: int, precision: Optional[int] = None
) -> Tuple[Decimal, Decimal]:
    """
    Bounds on log2(base ** exponent) without forming the power.
    """
    if base < 1 or exponent < 0:
        raise InvalidInputException(f"power {base}^{exponent} is outside the supported range")
    lo, hi = log2_interval(base, precision)
    with localcontext() as ctx:
        ctx.prec = (precision or settings.LOG2_PRECISION) + 40
        ctx.rounding = ROUND_FLOOR
        lo = lo * exponent
        ctx.rounding = ROUND_CEILING
        hi = hi * exponent
    return lo, hi


def add_directed(rounding: Rounding, *terms: Decimal) -> Decimal:
    """
    Sum of Decimal terms rounded in the given direction.
    """
    with localcontext() as ctx:
        ctx.prec = settings.LOG2_PRECISION + 40
        ctx.rounding = ROUND_FLOOR if rounding is Rounding.LOWER else ROUND_CEILING
        total = Decimal(0)
        for term in terms:
            total += term
    return total


def mul_directed(rounding: Rounding, left: Decimal, right: Decimal) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = settings.LOG2_PRECISION + 40
        ctx.rounding = ROUND_FLOOR if rounding is Rounding.LOWER else ROUND_CEILING
        return left * right


@dataclass(frozen=True)
class Magnitude:
    exact: Optional[int] = None
    log2: Optional[Decimal] = None
    rounding: Optional[Rounding] = None

    def __post_init__(self):
        if self.exact is None:
            if self.log2 is None or self.rounding is None:
                raise InvalidInputException("approximate magnitudes need a log2 value and a rounding")
        elif self.exact < 0:
            raise InvalidInputException(f"magnitudes are nonnegative, got {self.exact}")

    @classmethod
    def of(cls, value: int) -> "Magnitude":
        return cls(exact=value)

    @classmethod
    def approx(cls, log2: Decimal, rounding: Rounding) -> "Magnitude":
        return cls(log2=Decimal(log2), rounding=Rounding(rounding))

    @classmethod
    def power(
        cls, base: int, exponent: int, rounding: Rounding, bit_cap: Optional[int] = None
    ) -> "Magnitude":
        """
        base ** exponent, exact when its bit size is within the cap.
        """
        bit_cap = bit_cap or settings.EXACT_BIT_CAP
        if exponent * max(base.bit_length(), 1) <= bit_cap:
            return cls.of(base**exponent)
        lo, hi = log2_power_interval(base, exponent)
        return cls.approx(lo if rounding is Rounding.LOWER else hi, rounding)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def log2_bounds(self) -> Tuple[Optional[Decimal], Optional[Decimal]]:
        """
        (lower, upper) bounds on log2 of the quantity; None where nothing is known.
        """
        if self.exact is not None:
            return log2_interval(self.exact)
        if self.rounding is Rounding.LOWER:
            return self.log2, None
        return None, self.log2

    def less_than(self, other: "Magnitude") -> Verdict:
        if self.exact is not None and other.exact is not None:
            return Verdict.of(self.exact < other.exact)
        self_lo, self_hi = self.log2_bounds()
        other_lo, other_hi = other.log2_bounds()
        if self_hi is not None and other_lo is not None and self_hi < other_lo:
            return Verdict.TRUE
        if self_lo is not None and other_hi is not None and self_lo >= other_hi:
            return Verdict.FALSE
        return Verdict.INDETERMINATE

    def digit_count_bound(self) -> Optional[int]:
        if self.exact is None:
            return None
        return int(self.exact.bit_length() * _LOG10_2_UP) + 1

    def describe(self, digits_cap: Optional[int] = None) -> str:
        """
        Exact digits when short enough, else 2^log2 with the rounding direction.
        """
        digits_cap = digits_cap or settings.DISPLAY_DIGITS_CAP
        if self.exact is not None and self.digit_count_bound() <= digits_cap:
            allow_long_digit_strings(digits_cap)
            return str(self.exact)
        log2, rounding = self._display_log2()
        return f"2^{log2} ({rounding.value})"

    def to_document(self, digits_cap: Optional[int] = None) -> Dict[str, str]:
        digits_cap = digits_cap or settings.DISPLAY_DIGITS_CAP
        if self.exact is not None and self.digit_count_bound() <= digits_cap:
            allow_long_digit_strings(digits_cap)
            return {"exact": str(self.exact)}
        log2, rounding = self._display_log2()
        return {"log2": str(log2), "rounding": rounding.value}

    def _display_log2(self) -> Tuple[Decimal, Rounding]:
        if self.exact is not None:
            # an exact quantity printed in log form keeps its lower bound
            lo, _ = log2_interval(self.exact)
            log2, rounding = lo, Rounding.LOWER
        else:
            log2, rounding = self.log2, self.rounding
        if log2.is_infinite():
            return log2, rounding
        step = Decimal("0.000001")
        direction = ROUND_FLOOR if rounding is Rounding.LOWER else ROUND_CEILING
        with localcontext() as ctx:
            ctx.prec = settings.LOG2_PRECISION + 40
            return log2.quantize(step, rounding=direction), rounding
