"""Exact real arithmetic with certified rational enclosures.

Everything in this module is built on `fractions.Fraction`.  Binary floats
never enter any computation here: a real number is either an exact rational,
the square root of a nonnegative rational, or a stream of nested rational
intervals whose widths shrink to zero.  Every query answered about such a
number comes with an enclosure that is correct by construction, so callers
can take floors, compare against thresholds, and extract fractional parts
without trusting any rounding mode.
"""

from __future__ import annotations

import decimal
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Union

Rational = Fraction

#: Refinement cutoff: once an enclosure is narrower than 2**-DEFAULT_MAX_BITS
#: and still straddles the decision point, we give up rather than loop.
DEFAULT_MAX_BITS = 4096


class PrecisionExhausted(Exception):
    """Raised when a certified decision cannot be made at the bit budget.

    This happens when a quantity sits so close to an integer (or to zero)
    that telling the two sides apart would need more than ``max_bits`` bits
    of refinement.  It is an honest "don't know", not a wrong answer.
    """


def _as_fraction(value: Union[int, Fraction]) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"expected int or Fraction, got {type(value).__name__}")
    return Fraction(value)


@dataclass(frozen=True)
class CertifiedValue:
    """A closed interval [lower, upper] with exact rational endpoints."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError(f"empty interval: lower={self.lower} > upper={self.upper}")

    @classmethod
    def point(cls, value: Union[int, Fraction]) -> "CertifiedValue":
        v = _as_fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def radius(self) -> Fraction:
        return self.width / 2

    def contains(self, value: Union[int, Fraction]) -> bool:
        v = _as_fraction(value)
        return self.lower <= v <= self.upper

    def shift(self, offset: Union[int, Fraction]) -> "CertifiedValue":
        d = _as_fraction(offset)
        return CertifiedValue(self.lower + d, self.upper + d)

    def scale(self, factor: Union[int, Fraction]) -> "CertifiedValue":
        c = _as_fraction(factor)
        if c >= 0:
            return CertifiedValue(self.lower * c, self.upper * c)
        return CertifiedValue(self.upper * c, self.lower * c)

    def add(self, other: "CertifiedValue") -> "CertifiedValue":
        return CertifiedValue(self.lower + other.lower, self.upper + other.upper)

    def sub(self, other: "CertifiedValue") -> "CertifiedValue":
        return CertifiedValue(self.lower - other.upper, self.upper - other.lower)

    def __str__(self) -> str:
        return f"[{self.lower}, {self.upper}]"


IntervalStream = Iterator[tuple[Fraction, Fraction]]


class RealValue:
    """A real number that can be enclosed to any requested accuracy.

    Concrete forms are `ExactRational`, `SqrtRational` and `RefinableStream`.
    The contract every form obeys: `intervals()` yields a fresh iterator of
    rational intervals, each contained in the previous one, with widths
    tending to zero, and the represented number lies in all of them.
    """

    #: True only when irrationality is established by construction
    #: (for example a square root of a non-square rational).  False means
    #: "not known irrational", not "rational".
    known_irrational: bool = False

    def intervals(self) -> IntervalStream:
        raise NotImplementedError

    def exact(self) -> Fraction | None:
        """The exact rational value if this number is known to have one."""
        return None


@dataclass(frozen=True)
class ExactRational(RealValue):
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", _as_fraction(self.value))

    def intervals(self) -> IntervalStream:
        v = self.value
        while True:
            yield (v, v)

    def exact(self) -> Fraction:
        return self.value

    def __str__(self) -> str:
        return format_rational(self.value)


def _sqrt_exact(radicand: Fraction) -> Fraction | None:
    """Return sqrt(radicand) when the radicand is a perfect rational square."""
    a, b = radicand.numerator, radicand.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def _sqrt_interval(radicand: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclose sqrt(a/b) with width at most 1/(b * 2**bits).

    Uses sqrt(a/b) = sqrt(a*b)/b and an integer square root at a dyadic
    scale.  Because the scale doubles as ``bits`` grows, successive
    enclosures are nested: if I = isqrt(N * 4**j) then isqrt(N * 4**(j+1))
    is either 2I or 2I+1, so the halved interval sits inside the old one.
    """
    a, b = radicand.numerator, radicand.denominator
    n = a * b
    scale = 1 << bits
    root = math.isqrt(n * scale * scale)
    return (Fraction(root, scale * b), Fraction(root + 1, scale * b))


@dataclass(frozen=True)
class SqrtRational(RealValue):
    """sqrt(radicand) for a nonnegative rational radicand.

    Construct through `sqrt_value`, which collapses perfect squares to
    `ExactRational`; a `SqrtRational` instance is therefore always
    irrational, and `known_irrational` is True.
    """

    radicand: Fraction

    def __post_init__(self) -> None:
        r = _as_fraction(self.radicand)
        if r < 0:
            raise ValueError(f"negative radicand: {r}")
        if _sqrt_exact(r) is not None:
            raise ValueError(
                f"perfect square radicand {r}; use sqrt_value() which returns "
                "an ExactRational for this case"
            )
        object.__setattr__(self, "radicand", r)
        object.__setattr__(self, "known_irrational", True)

    def intervals(self) -> IntervalStream:
        bits = 0
        while True:
            yield _sqrt_interval(self.radicand, bits)
            bits += 1

    def enclose(self, eps: Fraction) -> tuple[Fraction, Fraction]:
        """Direct enclosure with width <= eps, on the same dyadic ladder
        as `intervals()` so results at different eps are nested."""
        if eps <= 0:
            raise ValueError("eps must be positive")
        b = self.radicand.denominator
        # need 1/(b * 2**bits) <= eps
        need = Fraction(1, eps) / b
        bits = max(0, (need.numerator // need.denominator).bit_length())
        return _sqrt_interval(self.radicand, bits)

    def __str__(self) -> str:
        return f"sqrt({format_rational(self.radicand)})"


@dataclass(frozen=True)
class RefinableStream(RealValue):
    """A real number given only by a restartable nested-interval generator.

    ``make`` must return a fresh iterator each call, deterministic across
    calls, yielding nested intervals with widths tending to zero.  All the
    arithmetic combinators below produce values of this form.
    """

    make: Callable[[], IntervalStream]
    known_irrational: bool = field(default=False)
    label: str = field(default="<stream>")

    def intervals(self) -> IntervalStream:
        return self.make()

    def __str__(self) -> str:
        return self.label


def sqrt_value(radicand: Union[int, Fraction]) -> RealValue:
    """Square root of a nonnegative rational, exact when possible."""
    r = _as_fraction(radicand)
    if r < 0:
        raise ValueError(f"negative radicand: {r}")
    exact = _sqrt_exact(r)
    if exact is not None:
        return ExactRational(exact)
    return SqrtRational(r)


def rational_value(value: Union[int, Fraction]) -> ExactRational:
    return ExactRational(_as_fraction(value))


# ---------------------------------------------------------------------------
# arithmetic combinators
# ---------------------------------------------------------------------------

_ATOMIC_LABEL_RE = re.compile(r"-?\d+(?:/\d+)?\Z|sqrt\([^()]*\)\Z")


def _paren(x: RealValue) -> str:
    """Operand label for a composed stream, parenthesized unless atomic."""
    s = str(x)
    if _ATOMIC_LABEL_RE.fullmatch(s):
        return s
    return f"({s})"


def real_neg(x: RealValue) -> RealValue:
    return real_scale(x, Fraction(-1))


def real_scale(x: RealValue, factor: Union[int, Fraction]) -> RealValue:
    """factor * x, staying exact whenever x is exact."""
    c = _as_fraction(factor)
    if c == 0:
        return ExactRational(Fraction(0))
    if isinstance(x, ExactRational):
        return ExactRational(c * x.value)
    if isinstance(x, SqrtRational) and c > 0:
        return SqrtRational(c * c * x.radicand)

    def make() -> IntervalStream:
        for lo, hi in x.intervals():
            if c >= 0:
                yield (c * lo, c * hi)
            else:
                yield (c * hi, c * lo)

    return RefinableStream(make, known_irrational=x.known_irrational,
                           label=f"({format_rational(c)})*{_paren(x)}")


def real_add(x: RealValue, y: RealValue) -> RealValue:
    """x + y.  Irrationality is preserved when exactly one side is exact."""
    if isinstance(x, ExactRational) and isinstance(y, ExactRational):
        return ExactRational(x.value + y.value)

    if isinstance(y, ExactRational):
        x, y = y, x
    if isinstance(x, ExactRational):
        c = x.value
        other = y

        def make_shift() -> IntervalStream:
            for lo, hi in other.intervals():
                yield (c + lo, c + hi)

        return RefinableStream(make_shift,
                               known_irrational=other.known_irrational,
                               label=f"{format_rational(c)}+{_paren(other)}")

    # sum of the same irrational type: rational + irrational arguments were
    # handled above, so here irrationality of the sum is not known in general
    def make_sum() -> IntervalStream:
        for (alo, ahi), (blo, bhi) in zip(x.intervals(), y.intervals()):
            yield (alo + blo, ahi + bhi)

    return RefinableStream(make_sum, known_irrational=False,
                           label=f"{_paren(x)}+{_paren(y)}")


def real_sub(x: RealValue, y: RealValue) -> RealValue:
    return real_add(x, real_neg(y))


# ---------------------------------------------------------------------------
# certified queries
# ---------------------------------------------------------------------------


def approx(x: RealValue, eps: Union[int, Fraction]) -> CertifiedValue:
    """An enclosure of x with width at most eps.

    Deterministic: the same x and eps always give the same interval, and
    shrinking eps refines within the previous interval.
    """
    e = _as_fraction(eps)
    if e <= 0:
        raise ValueError("eps must be positive")
    if isinstance(x, ExactRational):
        return CertifiedValue.point(x.value)
    if isinstance(x, SqrtRational):
        lo, hi = x.enclose(e)
        return CertifiedValue(lo, hi)
    for lo, hi in x.intervals():
        if hi - lo <= e:
            return CertifiedValue(lo, hi)
    raise PrecisionExhausted(f"interval stream for {x} ended early")  # pragma: no cover


def _floor_fraction(v: Fraction) -> int:
    # Fraction floor division by 1 floors toward minus infinity, so
    # floor(-3/2) = -2 as required.
    return math.floor(v)


def floor_certified(x: RealValue, max_bits: int = DEFAULT_MAX_BITS) -> int:
    """floor(x), certified.

    For exact rationals this is plain integer floor.  Otherwise refine the
    enclosure until both endpoints share a floor.  If the enclosure narrows
    below 2**-max_bits while still straddling an integer, the number may
    actually be that integer (or differ from it by less than we can see),
    and `PrecisionExhausted` is raised.
    """
    exact = x.exact()
    if exact is not None:
        return _floor_fraction(exact)
    cutoff = Fraction(1, 1 << max_bits)
    steps = 0
    for lo, hi in x.intervals():
        flo, fhi = _floor_fraction(lo), _floor_fraction(hi)
        if flo == fhi:
            return flo
        if hi - lo <= cutoff:
            raise PrecisionExhausted(
                f"floor undecided for {x} at width 2**-{max_bits}"
            )
        steps += 1
        if steps > 4 * max_bits:  # defensive: stream not converging
            raise PrecisionExhausted(
                f"floor undecided for {x} after {steps} refinement steps"
            )
    raise PrecisionExhausted(f"interval stream for {x} ended early")  # pragma: no cover


def ceil_certified(x: RealValue, max_bits: int = DEFAULT_MAX_BITS) -> int:
    exact = x.exact()
    if exact is not None:
        return math.ceil(exact)
    return -floor_certified(real_neg(x), max_bits=max_bits)


def frac_certified(
    x: RealValue,
    eps: Union[int, Fraction, None] = None,
    max_bits: int = DEFAULT_MAX_BITS,
) -> tuple[int, CertifiedValue]:
    """Split x into (floor(x), enclosure of x - floor(x)).

    The returned interval is contained in [0, 1).  When ``eps`` is given the
    interval is additionally refined to width at most eps.
    """
    exact = x.exact()
    if exact is not None:
        n = _floor_fraction(exact)
        return n, CertifiedValue.point(exact - n)
    n = floor_certified(x, max_bits=max_bits)
    e = None if eps is None else _as_fraction(eps)
    if e is not None and e <= 0:
        raise ValueError("eps must be positive")
    for lo, hi in x.intervals():
        if not (_floor_fraction(lo) == _floor_fraction(hi) == n):
            continue
        if e is None or hi - lo <= e:
            frac = CertifiedValue(lo - n, hi - n)
            # floor certification guarantees the fractional part is inside
            # [0, 1); the strict upper end holds because hi < n + 1.
            return n, frac
    raise PrecisionExhausted(f"interval stream for {x} ended early")  # pragma: no cover


def certify_nonzero(x: RealValue, max_bits: int = 64) -> bool:
    """True when the enclosure separates x from zero within the bit budget.

    Exact rationals are decided immediately.  A False return means x is
    either zero or too close to zero to distinguish at 2**-max_bits.
    """
    exact = x.exact()
    if exact is not None:
        return exact != 0
    cutoff = Fraction(1, 1 << max_bits)
    for lo, hi in x.intervals():
        if lo > 0 or hi < 0:
            return True
        if hi - lo <= cutoff:
            return False
    return False  # pragma: no cover


# ---------------------------------------------------------------------------
# parsing and printing
# ---------------------------------------------------------------------------


def format_rational(v: Fraction) -> str:
    """'a/b' in lowest terms, or a bare integer when b == 1."""
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or an integer literal.  No decimals, no exponents."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def decimal_str(value: Fraction, digits: int = 12) -> str:
    """Round a rational to ``digits`` significant decimal digits.

    Display only.  Uses the decimal module with a fixed context, so output
    is deterministic across platforms.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    d = ctx.divide(decimal.Decimal(value.numerator), decimal.Decimal(value.denominator))
    return str(d)
