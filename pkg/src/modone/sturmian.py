"""Mechanical binary words from an irrational slope, and the block construction
that layers zero runs between 11 separators.

A mechanical word here is s_n = floor((n+1)*theta + rho) - floor(n*theta + rho)
(or the ceiling variant), with every floor taken through certified interval
arithmetic.  On top of the driver word w the block construction emits

    S = 0^{z_0} 11 0^{z_1} 11 0^{z_2} 11 ...      with z_n = k + 2*w_n,

whose zero blocks take exactly the two even lengths k and k+2.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .exactnum import (
    ExactRational,
    RealValue,
    ceil_certified,
    floor_certified,
    rational_value,
    real_add,
    real_scale,
    real_sub,
    sqrt_value,
)
from .words import Word, WordStream


class Variant(enum.Enum):
    FLOOR = "floor"
    CEIL = "ceil"


def _certify_unit_interval(theta: RealValue, max_steps: int = 128) -> None:
    for lo, hi in itertools.islice(theta.intervals(), max_steps):
        if lo > 0 and hi < 1:
            return
        if hi <= 0 or lo >= 1:
            raise ValueError(f"theta={theta} is not inside (0, 1)")
    raise ValueError(f"cannot certify 0 < theta < 1 for {theta}")


@dataclass(frozen=True)
class SturmianSpec:
    """Slope, intercept and rounding variant of a mechanical word."""

    theta: RealValue
    rho: RealValue
    variant: Variant = Variant.FLOOR

    def __post_init__(self) -> None:
        if isinstance(self.theta, ExactRational):
            raise ValueError(
                f"rational slope {self.theta} rejected: it yields an eventually "
                "periodic word, not a Sturmian one"
            )
        _certify_unit_interval(self.theta)


def _round_term(spec: SturmianSpec, n: int) -> int:
    """floor or ceil of n*theta + rho, certified."""
    value = real_add(real_scale(spec.theta, n), spec.rho)
    if spec.variant is Variant.FLOOR:
        return floor_certified(value)
    return ceil_certified(value)


def sturmian_letter(spec: SturmianSpec, n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _round_term(spec, n + 1) - _round_term(spec, n)


def sturmian_stream(spec: SturmianSpec) -> WordStream:
    """Letters s_0, s_1, ... computed with one certified rounding per step."""

    def gen() -> Iterator[int]:
        prev = _round_term(spec, 0)
        for n in itertools.count(1):
            cur = _round_term(spec, n)
            yield cur - prev
            prev = cur

    return WordStream(gen())


def sturmian_prefix(spec: SturmianSpec, length: int) -> Word:
    return sturmian_stream(spec).prefix(length)


def partial_sum(spec: SturmianSpec, n: int) -> int:
    """sigma_n = s_0 + ... + s_{n-1}, via the telescoped closed form.

    The letter sum telescopes to round(n*theta + rho) - round(rho), so one
    certified rounding suffices.  Tests recompute the sum letter by letter.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    return _round_term(spec, n) - _round_term(spec, 0)


def partial_sums(spec: SturmianSpec, count: int) -> list[int]:
    """[sigma_0, ..., sigma_count], one incremental rounding per step."""
    if count < 0:
        raise ValueError("count must be >= 0")
    sums = [0]
    base = None
    for n in range(1, count + 1):
        if base is None:
            base = _round_term(spec, 0)
        sums.append(_round_term(spec, n) - base)
    return sums


def fibonacci_spec() -> SturmianSpec:
    """theta = sqrt(5)/2 - 1/2 (the golden-ratio conjugate), rho = 0, floor."""
    theta = real_sub(sqrt_value(Fraction(5, 4)), rational_value(Fraction(1, 2)))
    return SturmianSpec(theta=theta, rho=rational_value(0), variant=Variant.FLOOR)


@dataclass(frozen=True)
class ExtremalSpec:
    """Block construction parameters: even k >= 2 plus the driver word."""

    k: int
    driver: SturmianSpec

    def __post_init__(self) -> None:
        if self.k < 2 or self.k % 2 != 0:
            raise ValueError(f"k must be an even integer >= 2, got {self.k}")


def block_lengths(spec: ExtremalSpec, count: int, start: int = 0) -> Word:
    """z_start, ..., z_{start+count-1} where z_n = k + 2*w_n."""
    if count < 0 or start < 0:
        raise ValueError("count and start must be >= 0")
    stream = sturmian_stream(spec.driver)
    return Word(spec.k + 2 * stream.letter(start + i) for i in range(count))


def extremal_stream(spec: ExtremalSpec) -> WordStream:
    def gen() -> Iterator[int]:
        driver = sturmian_stream(spec.driver)
        for n in itertools.count():
            z = spec.k + 2 * driver.letter(n)
            for _ in range(z):
                yield 0
            yield 1
            yield 1

    return WordStream(gen())


def extremal_word(spec: ExtremalSpec, length: int) -> Word:
    if length < 0:
        raise ValueError("length must be >= 0")
    return extremal_stream(spec).prefix(length)


def marker_positions(spec: ExtremalSpec, count: int) -> list[int]:
    """Positions sigma_1..sigma_count of the second 1 in each 11 separator.

    sigma_n = -1 + (k+2)*n + 2*tau_n with tau_n the driver letter sum; both
    S[sigma_n] and S[sigma_n - 1] are 1 by construction.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    driver = sturmian_stream(spec.driver)
    out = []
    tau = 0
    for n in range(1, count + 1):
        tau += driver.letter(n - 1)
        out.append(-1 + (spec.k + 2) * n + 2 * tau)
    return out
