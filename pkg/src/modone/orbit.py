"""Orbits x -> xi * (-p/q)^n + eta, their integer digit sequence, and the
finite-window gap report for the fractional parts.

With x_n = floor(xi*(-p/q)^n + eta) and y_n = frac(...) - eta, the digits
s_n = -p*x_n - q*x_{n+1} form a bounded integer sequence satisfying
s_n = p*y_n + q*y_{n+1}, and the shifted series of the digits at -q/p
collapses to p*y_n.  Rational xi, eta keep the whole pipeline exact; an
irrational xi runs through certified enclosures instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .exactnum import (
    CertifiedValue,
    RealValue,
    approx,
    certify_nonzero,
    decimal_str,
    format_rational,
    frac_certified,
    real_add,
    real_scale,
)
from .series import BoundedSeq, eval_series, tail_radius
from .words import Word

DEFAULT_Y_EPS = Fraction(1, 10**12)


@dataclass(frozen=True)
class OrbitParams:
    """xi, eta and the ratio -p/q (in lowest terms, p > q >= 1)."""

    xi: RealValue
    eta: RealValue
    p: int
    q: int

    def __post_init__(self) -> None:
        if not (self.p > self.q >= 1):
            raise ValueError(f"need p > q >= 1, got p={self.p}, q={self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got {self.p}, {self.q}")
        if not certify_nonzero(self.xi):
            raise ValueError("xi must be certifiably nonzero")

    @property
    def r(self) -> Fraction:
        return Fraction(self.q, self.p)

    @property
    def theorem_applicable(self) -> bool:
        """True when xi is known irrational or -p/q is not an integer."""
        return self.xi.known_irrational or self.q > 1

    @property
    def exact(self) -> bool:
        return self.xi.exact() is not None and self.eta.exact() is not None


@dataclass(frozen=True)
class OrbitRow:
    n: int
    x: int
    y: CertifiedValue
    s: Optional[int]


class Orbit:
    """Memoized row table for one parameter set.

    Rows are exact (point intervals for y) when xi and eta are rational;
    otherwise each y is enclosed to ``y_eps``.  The table only ever grows,
    and is computed in index order because x_{n+1} is needed for s_n.
    """

    def __init__(self, params: OrbitParams, y_eps: Fraction = DEFAULT_Y_EPS):
        if y_eps <= 0:
            raise ValueError("y_eps must be positive")
        self.params = params
        self.y_eps = y_eps
        self._x: list[int] = []
        self._y: list[CertifiedValue] = []
        self._power = Fraction(1)  # (-p/q)**len(self._x)
        self._eta_iv: Optional[CertifiedValue] = None

    def _eta_interval(self) -> CertifiedValue:
        if self._eta_iv is None:
            self._eta_iv = approx(self.params.eta, self.y_eps)
        return self._eta_iv

    def _extend_to(self, count: int) -> None:
        pm = self.params
        ratio = Fraction(-pm.p, pm.q)
        while len(self._x) < count:
            n = len(self._x)
            if pm.exact:
                v = pm.xi.exact() * self._power + pm.eta.exact()
                xn = math.floor(v)
                y = CertifiedValue.point(v - xn - pm.eta.exact())
            else:
                value = real_add(real_scale(pm.xi, self._power), pm.eta)
                xn, frac = frac_certified(value, eps=self.y_eps)
                ei = self._eta_interval()
                y = CertifiedValue(frac.lower - ei.upper, frac.upper - ei.lower)
            self._x.append(xn)
            self._y.append(y)
            self._power *= ratio

    def x(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be >= 0")
        self._extend_to(n + 1)
        return self._x[n]

    def y(self, n: int) -> CertifiedValue:
        if n < 0:
            raise ValueError("n must be >= 0")
        self._extend_to(n + 1)
        return self._y[n]

    def s(self, n: int) -> int:
        return -self.params.p * self.x(n) - self.params.q * self.x(n + 1)

    def row(self, n: int) -> OrbitRow:
        return OrbitRow(n=n, x=self.x(n), y=self.y(n), s=self.s(n))

    def digit_bound(self) -> int:
        """Bound for |s_n|, valid for every index.

        From s_n = p*y_n + q*y_{n+1}: with eta = 0 each y lies in [0, 1), so
        s_n is an integer in [0, p+q), giving p+q-1.  Otherwise |y| is at
        most max(|eta|, |1-eta|) and the bound scales accordingly.
        """
        pm = self.params
        ee = pm.eta.exact()
        if ee == 0:
            return pm.p + pm.q - 1
        ei = self._eta_interval()
        ymax = max(abs(ei.upper), abs(1 - ei.lower))
        return math.floor((pm.p + pm.q) * ymax)

    def digits(self, count: int) -> Word:
        if count < 0:
            raise ValueError("count must be >= 0")
        self._extend_to(count + 1)
        return Word(self.s(n) for n in range(count))

    def digit_seq(self, count: int) -> BoundedSeq:
        return BoundedSeq(prefix=self.digits(count), bound=self.digit_bound())

    def t_values(self, count: int) -> Word:
        """t_n = p*s_{2n} - q*s_{2n+1}, cross-checked against the closed form
        -p^2*x_{2n} + q^2*x_{2n+2}; a mismatch would mean corrupted rows."""
        if count < 1:
            raise ValueError("count must be >= 1")
        pm = self.params
        out = []
        for n in range(count):
            t = pm.p * self.s(2 * n) - pm.q * self.s(2 * n + 1)
            alt = -pm.p**2 * self.x(2 * n) + pm.q**2 * self.x(2 * n + 2)
            if t != alt:
                raise AssertionError(
                    f"t_{n} cross-check failed: {t} != {alt} (internal error)"
                )
            out.append(t)
        return Word(out)


@lru_cache(maxsize=64)
def _orbit_for(params: OrbitParams) -> Orbit:
    return Orbit(params)


def orbit_row(params: OrbitParams, n: int) -> OrbitRow:
    return _orbit_for(params).row(n)


def digit_identity_check(params: OrbitParams, n: int) -> CertifiedValue:
    """Certified p*y_n + q*y_{n+1} - s_n; contains 0, exactly 0 when exact."""
    orb = _orbit_for(params)
    lhs = orb.y(n).scale(params.p).add(orb.y(n + 1).scale(params.q))
    return lhs.shift(-orb.s(n))


def t_sequence(params: OrbitParams, count: int) -> Word:
    return _orbit_for(params).t_values(count)


def series_equals_py(params: OrbitParams, n: int, terms: int) -> CertifiedValue:
    """Certified S_n(-q/p) - p*y_n over the digit sequence; contains 0.

    For rational xi, eta the midpoint error is pure tail, so the radius is
    exactly the geometric tail bound of the digit series.
    """
    if n < 0 or terms < 0:
        raise ValueError("n and terms must be >= 0")
    orb = _orbit_for(params)
    S = orb.digit_seq(n + terms)
    ev = eval_series(S, n, -params.r, terms)
    return ev.sub(orb.y(n).scale(params.p))


@dataclass(frozen=True)
class Theorem1Report:
    """Certified gap of y_n over a finite window against (1+r-r^2)/p."""

    p: int
    q: int
    r: Fraction
    start: int
    end: int
    sup_lower: Fraction
    sup_upper: Fraction
    inf_lower: Fraction
    inf_upper: Fraction
    gap_lower: Fraction
    gap_upper: Fraction
    witness_max_index: int
    witness_min_index: int
    bound: Fraction
    slack: Fraction
    meets_bound: bool
    theorem_applicable: bool
    series_gap_lower: Optional[Fraction]
    series_gap_upper: Optional[Fraction]

    def to_json_dict(self) -> dict:
        def both(v: Fraction) -> dict:
            return {"exact": format_rational(v), "decimal": decimal_str(v)}

        out = {
            "p": self.p,
            "q": self.q,
            "r": format_rational(self.r),
            "window": [self.start, self.end],
            "sup_lower": both(self.sup_lower),
            "sup_upper": both(self.sup_upper),
            "inf_lower": both(self.inf_lower),
            "inf_upper": both(self.inf_upper),
            "gap_lower": both(self.gap_lower),
            "gap_upper": both(self.gap_upper),
            "witness_max_index": self.witness_max_index,
            "witness_min_index": self.witness_min_index,
            "bound": both(self.bound),
            "slack": format_rational(self.slack),
            "meets_bound": self.meets_bound,
            "theorem_applicable": self.theorem_applicable,
        }
        if self.series_gap_lower is not None:
            out["series_gap_lower"] = both(self.series_gap_lower)
            out["series_gap_upper"] = both(self.series_gap_upper)
        return out


def theorem1_gap(
    params: OrbitParams,
    window: tuple[int, int],
    terms: int = 0,
    slack: Union[int, Fraction] = 0,
) -> Theorem1Report:
    """Bracket sup - inf of y_n over n in [start, end).

    The gap bracket comes straight from the certified y enclosures.  When
    ``terms`` is positive the digit series is also swept over the window and
    its gap, divided by p, is reported alongside: the identity S_n(-r) =
    p*y_n makes the two brackets overlap, which is a useful cross-check but
    costs ``terms`` extra digits of lookahead.

    ``meets_bound`` records whether gap_lower >= (1+r-r^2)/p - slack.
    theorem_applicable=False (rational xi with an integer ratio) does not
    block the computation; the flag simply travels with the report.
    """
    start, end = window
    if not 0 <= start < end:
        raise ValueError(f"bad window [{start}, {end})")
    sl = Fraction(slack)
    orb = _orbit_for(params)
    ys = [orb.y(n) for n in range(start, end)]
    sup_lower = max(iv.lower for iv in ys)
    sup_upper = max(iv.upper for iv in ys)
    inf_lower = min(iv.lower for iv in ys)
    inf_upper = min(iv.upper for iv in ys)
    mids = [iv.midpoint for iv in ys]
    witness_max = start + mids.index(max(mids))
    witness_min = start + mids.index(min(mids))
    r = params.r
    bound = (1 + r - r * r) / params.p
    gap_lower = sup_lower - inf_upper
    gap_upper = sup_upper - inf_lower
    series_gap_lower = series_gap_upper = None
    if terms > 0:
        from .series import oscillation

        rep = oscillation(orb.digit_seq(end + terms), -r, start, end, terms)
        series_gap_lower = rep.gap_lower / params.p
        series_gap_upper = rep.gap_upper / params.p
    return Theorem1Report(
        p=params.p,
        q=params.q,
        r=r,
        start=start,
        end=end,
        sup_lower=sup_lower,
        sup_upper=sup_upper,
        inf_lower=inf_lower,
        inf_upper=inf_upper,
        gap_lower=gap_lower,
        gap_upper=gap_upper,
        witness_max_index=witness_max,
        witness_min_index=witness_min,
        bound=bound,
        slack=sl,
        meets_bound=gap_lower >= bound - sl,
        theorem_applicable=params.theorem_applicable,
        series_gap_lower=series_gap_lower,
        series_gap_upper=series_gap_upper,
    )
