#!/usr/bin/env python3
"""Mechanical binary words from exact slopes.

Generates the golden-ratio word and a sqrt(2) companion, shows the floor/ceil
variants, and checks the two fingerprints of this word family: every prefix
is balanced, and the number of distinct length-n factors is exactly n+1.
"""

from fractions import Fraction

from modone import (
    SturmianSpec,
    Variant,
    balance_discrepancy,
    fibonacci_spec,
    partial_sums,
    rational_value,
    real_sub,
    sqrt_value,
    sturmian_prefix,
    subword_complexity,
)

spec = fibonacci_spec()  # slope sqrt(5/4) - 1/2, intercept 0
w = sturmian_prefix(spec, 60)
print("slope (sqrt(5)-1)/2, floor variant:")
print(f"  {w}")
print(f"  running 1-count: {partial_sums(spec, 20)}")

ceil_spec = SturmianSpec(theta=spec.theta, rho=spec.rho, variant=Variant.CEIL)
print("same slope, ceil variant (differs only in the first letter):")
print(f"  {sturmian_prefix(ceil_spec, 60)}")

sqrt2 = SturmianSpec(
    theta=real_sub(sqrt_value(2), rational_value(1)),
    rho=rational_value(0),
    variant=Variant.FLOOR,
)
print("slope sqrt(2)-1:")
print(f"  {sturmian_prefix(sqrt2, 60)}")

shifted = SturmianSpec(
    theta=spec.theta, rho=rational_value(Fraction(1, 3)), variant=Variant.FLOOR
)
print("golden slope with intercept 1/3 (same letter frequencies, new phase):")
print(f"  {sturmian_prefix(shifted, 60)}")

print()
prefix = sturmian_prefix(spec, 2000)
print(f"balance of the first 2000 letters, windows up to 200: "
      f"{balance_discrepancy(prefix, 200)} (1 = perfectly balanced)")

profile = [subword_complexity(prefix, n) for n in range(1, 13)]
print(f"factor counts for n = 1..12: {profile}")
print("minimal aperiodic growth is n+1, and that is what we get.")
