#!/usr/bin/env python3
"""Things that are supposed to fail, failing on cue.

A toolkit that certifies invariants is only trustworthy if it rejects the
counterfeits: periodic words must be detected, corrupted constructions must
trip the audit, a periodic digit stream must overshoot the oscillation
bound, and impossible queries must raise instead of guessing.
"""

from fractions import Fraction

from modone import (
    PrecisionExhausted,
    SturmianSpec,
    Variant,
    Word,
    contradiction_witness,
    decimal_str,
    detect_period,
    extremal_word,
    ExtremalSpec,
    fibonacci_spec,
    floor_certified,
    rational_value,
    real_add,
    real_scale,
    structure_audit,
    sturmian_prefix,
)

print("1. periodicity detection")
periodic = Word.from_string("0110" * 50)
print(f"   (0110)^50            -> {detect_period(periodic, 20, 10)}")
aperiodic = sturmian_prefix(fibonacci_spec(), 200)
print(f"   mechanical prefix    -> {detect_period(aperiodic, 20, 10)}")
print()

print("2. structure audit against a corrupted block word")
spec = ExtremalSpec(k=2, driver=fibonacci_spec())
good = extremal_word(spec, 1000)
letters = list(good.letters)
letters[700] ^= 1
bad = Word(letters)
print(f"   pristine word: all_ok = {structure_audit(good, 2).all_ok}")
audit = structure_audit(bad, 2)
failed = [name for name, val in audit.to_json_dict().items()
          if val is False and name != "all_ok"]
print(f"   one flipped letter: all_ok = {audit.all_ok}, tripped: {failed}")
print()

print("3. a periodic digit stream overshoots the oscillation bound")
r = Fraction(1, 2)
w01 = Word([i % 2 for i in range(80)])
witness = contradiction_witness(w01, r, (1, 0), 30)
print(f"   S_1(-1/2) - S_0(-1/2) for 010101... is about "
      f"{decimal_str(witness.midpoint, 6)}")
print(f"   bound 1+r-r^2 = {decimal_str(1 + r - r * r, 6)}: "
      f"exceeded = {witness.lower > 1 + r - r * r}")
print("   (the true difference is 1/(1-r) = 2: periodicity is punished)")
print()

print("4. rational slopes are refused")
try:
    SturmianSpec(
        theta=rational_value(Fraction(2, 3)),
        rho=rational_value(0),
        variant=Variant.FLOOR,
    )
except ValueError as exc:
    print(f"   ValueError: {exc}")
print()

print("5. the floor of an exact zero disguised as a limit is undecidable")
theta = fibonacci_spec().theta
disguised_zero = real_add(theta, real_scale(theta, -1))
try:
    floor_certified(disguised_zero, max_bits=256)
except PrecisionExhausted as exc:
    print(f"   PrecisionExhausted: {exc}")
print("   refusing to answer is the only sound output here.")
