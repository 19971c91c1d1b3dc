"""Certified evaluation of shifted power series of bounded integer sequences.

For a sequence s with |s_i| <= B and a rational x with |x| < 1, the shifted
series S_n(x) = sum_{i>=0} s_{n+i} x^i is evaluated as an exact K-term sum
plus the geometric tail bound B*|x|^K / (1-|x|).  Everything is a Fraction;
the returned enclosures are sound, not heuristic.

The window sweep used for oscillation reports computes consecutive K-term
sums with a backward recurrence (one multiply-add per shift instead of a
fresh K-term Horner), which keeps full-length sweeps cheap even with exact
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactnum import CertifiedValue, decimal_str, format_rational
from .words import Word


class InsufficientPrefix(Exception):
    """The stored prefix is too short for the requested evaluation window."""


def _check_x(x: Union[int, Fraction]) -> Fraction:
    if isinstance(x, float):
        raise TypeError("x must be an exact rational, not a float")
    xf = Fraction(x)
    if not -1 < xf < 1:
        raise ValueError(f"|x| < 1 required, got {xf}")
    return xf


@dataclass(frozen=True)
class BoundedSeq:
    """A finite prefix of an integer sequence plus a caller-asserted bound.

    The bound covers the entire infinite sequence, including letters nobody
    has looked at; it is what makes the geometric tail estimate valid.
    """

    prefix: Word
    bound: int

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError("bound must be >= 0")
        bad = [a for a in self.prefix if abs(a) > self.bound]
        if bad:
            raise ValueError(
                f"prefix letter {bad[0]} exceeds the declared bound {self.bound}"
            )

    @classmethod
    def from_word(cls, w: Word, bound: Optional[int] = None) -> "BoundedSeq":
        if bound is None:
            bound = max((abs(a) for a in w), default=0)
        return cls(prefix=w, bound=bound)

    def __len__(self) -> int:
        return len(self.prefix)


def tail_radius(S: BoundedSeq, x: Union[int, Fraction], terms: int) -> Fraction:
    """B * |x|**terms / (1 - |x|), the tail enclosure radius."""
    xf = _check_x(x)
    if terms < 0:
        raise ValueError("terms must be >= 0")
    ax = abs(xf)
    return S.bound * ax**terms / (1 - ax)


def default_terms(
    bound: int, x: Union[int, Fraction], target_radius: Union[int, Fraction]
) -> int:
    """Smallest K whose tail radius is at most target_radius."""
    xf = _check_x(x)
    target = Fraction(target_radius)
    if target <= 0:
        raise ValueError("target_radius must be positive")
    ax = abs(xf)
    t = Fraction(bound, 1) / (1 - ax)
    k = 0
    while t > target:
        t *= ax
        k += 1
    return k


def _finite_sum(S: BoundedSeq, n: int, x: Fraction, terms: int) -> Fraction:
    """sum_{i < terms} s_{n+i} x^i by Horner's rule, exact."""
    letters = S.prefix.letters
    acc = Fraction(0)
    for i in range(terms - 1, -1, -1):
        acc = letters[n + i] + x * acc
    return acc


def _require(S: BoundedSeq, n: int, terms: int) -> None:
    if n < 0:
        raise ValueError("shift must be >= 0")
    if n + terms > len(S.prefix):
        raise InsufficientPrefix(
            f"need letters up to index {n + terms - 1}, prefix has {len(S.prefix)}"
        )


def eval_series(
    S: BoundedSeq, n: int, x: Union[int, Fraction], terms: int
) -> CertifiedValue:
    """Enclose S_n(x) = sum_{i>=0} s_{n+i} x^i.

    The midpoint is the exact K-term sum; the radius is exactly the declared
    geometric tail bound, never a rounded version of it.
    """
    xf = _check_x(x)
    if terms < 0:
        raise ValueError("terms must be >= 0")
    _require(S, n, terms)
    mid = _finite_sum(S, n, xf, terms)
    rad = tail_radius(S, xf, terms)
    return CertifiedValue(mid - rad, mid + rad)


def window_midpoints(
    S: BoundedSeq, x: Union[int, Fraction], start: int, end: int, terms: int
) -> list[Fraction]:
    """Exact K-term sums for every shift n in [start, end).

    Slides backward from n = end-1 using
        F_n = s_n + x * F_{n+1} - s_{n+terms} * x^terms,
    so the whole window costs O(end - start) ring operations after one
    Horner evaluation.  Agrees with eval_series midpoints exactly.
    """
    xf = _check_x(x)
    if not 0 <= start < end:
        raise ValueError(f"bad window [{start}, {end})")
    if terms < 0:
        raise ValueError("terms must be >= 0")
    _require(S, end - 1, terms)
    letters = S.prefix.letters
    xk = xf**terms
    mids = [Fraction(0)] * (end - start)
    cur = _finite_sum(S, end - 1, xf, terms)
    mids[end - 1 - start] = cur
    for n in range(end - 2, start - 1, -1):
        cur = letters[n] + xf * cur - letters[n + terms] * xk
        mids[n - start] = cur
    return mids


@dataclass(frozen=True)
class OscillationReport:
    """Certified brackets for sup, inf and their gap over a shift window."""

    x: Fraction
    start: int
    end: int
    terms: int
    tail: Fraction
    sup_lower: Fraction
    sup_upper: Fraction
    inf_lower: Fraction
    inf_upper: Fraction
    gap_lower: Fraction
    gap_upper: Fraction
    witness_max_index: int
    witness_min_index: int

    def to_json_dict(self) -> dict:
        def both(v: Fraction) -> dict:
            return {"exact": format_rational(v), "decimal": decimal_str(v)}

        return {
            "x": format_rational(self.x),
            "window": [self.start, self.end],
            "terms": self.terms,
            "tail_radius": both(self.tail),
            "sup_lower": both(self.sup_lower),
            "sup_upper": both(self.sup_upper),
            "inf_lower": both(self.inf_lower),
            "inf_upper": both(self.inf_upper),
            "gap_lower": both(self.gap_lower),
            "gap_upper": both(self.gap_upper),
            "witness_max_index": self.witness_max_index,
            "witness_min_index": self.witness_min_index,
        }


def oscillation(
    S: BoundedSeq, x: Union[int, Fraction], start: int, end: int, terms: int
) -> OscillationReport:
    """Bracket sup and inf of S_n(x) over n in [start, end).

    Midpoints are exact; every midpoint carries the same tail radius, so
    sup lies in [max_mid - tail, max_mid + tail] and likewise for inf.  The
    gap bracket follows: gap_lower = sup_lower - inf_upper may be negative
    when the window cannot separate the extremes (constant sequences).
    Witness indices are the first attainers of the extreme midpoints.
    """
    xf = _check_x(x)
    mids = window_midpoints(S, xf, start, end, terms)
    t = tail_radius(S, xf, terms)
    max_mid = max(mids)
    min_mid = min(mids)
    witness_max = start + mids.index(max_mid)
    witness_min = start + mids.index(min_mid)
    return OscillationReport(
        x=xf,
        start=start,
        end=end,
        terms=terms,
        tail=t,
        sup_lower=max_mid - t,
        sup_upper=max_mid + t,
        inf_lower=min_mid - t,
        inf_upper=min_mid + t,
        gap_lower=(max_mid - min_mid) - 2 * t,
        gap_upper=(max_mid - min_mid) + 2 * t,
        witness_max_index=witness_max,
        witness_min_index=witness_min,
    )


def telescope_residual(
    S: BoundedSeq,
    n: int,
    m: int,
    k: int,
    x: Union[int, Fraction],
    terms: Optional[int] = None,
) -> CertifiedValue:
    """Certified residual of the shift identity

        (S_n - S_m) - x^k (S_{n+k} - S_{m+k}) - sum_{i<k} (s_{n+i}-s_{m+i}) x^i,

    which is identically zero, so the returned interval must contain 0.
    Each series is evaluated independently to ``terms`` terms (default: the
    largest count the prefix supports), which makes the enclosure width
    exactly 4 * (1 + |x|^k) * tail radius rather than a symbolic zero; the
    point of the operation is that the enclosures agree, not that algebra
    was repeated.  The one exception is k = 0, where the expression
    collapses syntactically (x^0 = 1, empty head sum) and the exact point 0
    is returned.
    """
    xf = _check_x(x)
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 0 or m < 0:
        raise ValueError("shifts must be >= 0")
    if k == 0:
        _require(S, max(n, m), 0)
        return CertifiedValue.point(0)
    deepest = k + max(n, m)
    if terms is None:
        terms = len(S.prefix) - deepest
        if terms < 0:
            raise InsufficientPrefix(
                f"prefix of {len(S.prefix)} letters cannot reach shift {deepest}"
            )
    a = eval_series(S, n, xf, terms)
    b = eval_series(S, m, xf, terms)
    c = eval_series(S, n + k, xf, terms)
    d = eval_series(S, m + k, xf, terms)
    letters = S.prefix.letters
    head = Fraction(0)
    for i in range(k - 1, -1, -1):
        head = (letters[n + i] - letters[m + i]) + xf * head
    return a.sub(b).sub(c.sub(d).scale(xf**k)).shift(-head)
