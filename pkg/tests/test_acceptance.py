"""Acceptance gate: nine checks, one printed PASS/FAIL line each.

Every check is self-contained (builds its own inputs), enforces its runtime
budget, and prints a single summary line.  Run

    pytest tests/test_acceptance.py -v -s

to watch the lines appear; without -s they still show for any failure.
"""

import random
import time
from fractions import Fraction

import pytest

from modone import (
    BoundedSeq,
    ExtremalSpec,
    Orbit,
    OrbitParams,
    SturmianSpec,
    Variant,
    Word,
    balance_discrepancy,
    check_proof_identities,
    detect_period,
    eval_series,
    extremal_word,
    fibonacci_spec,
    left_extension_pair,
    oscillation,
    rational_value,
    real_sub,
    series_equals_py,
    sqrt_value,
    structure_audit,
    sturmian_prefix,
    subword_complexity,
    theorem1_gap,
    window_midpoints,
)

R_GRID = [Fraction(i, 10) for i in range(1, 10)]

# frozen before the library existed, by a direct fractional-part sweep of
# frac((-3/2)**n) for n < 60 using raw Fractions
PINNED_GAP_60 = Fraction(279650275399754345, 288230376151711744)


def _finish(num: int, detail: str, budget: float, started: float, ok: bool) -> None:
    elapsed = time.perf_counter() - started
    in_budget = elapsed < budget
    status = "PASS" if (ok and in_budget) else "FAIL"
    line = f"{status} {num}/9 {detail} ({elapsed:.2f}s, budget {budget:g}s)"
    print(line)
    assert ok, line
    assert in_budget, line


def _sqrt2_driver() -> SturmianSpec:
    theta = real_sub(sqrt_value(2), rational_value(1))
    return SturmianSpec(theta=theta, rho=rational_value(0), variant=Variant.FLOOR)


def test_01_proof_identities_hold_exactly_on_the_grid():
    started = time.perf_counter()
    rep = check_proof_identities(R_GRID, [2, 4, 6, 8, 10])
    ok = rep.all_equal and rep.all_rejected
    _finish(1, "identity suite exact at 9 grid points, z in {2,...,10}", 1.0,
            started, ok)


def test_02_block_word_oscillation_attains_the_bound():
    started = time.perf_counter()
    spec = ExtremalSpec(k=2, driver=fibonacci_spec())
    w = extremal_word(spec, 20_200)
    S = BoundedSeq(prefix=w, bound=1)
    tol = Fraction(5, 1000)
    rng = random.Random(20_2020)
    ok = True
    for r in R_GRID:
        target = 1 + r - r * r
        rep = oscillation(S, -r, 0, 20_000, 200)
        ok &= target - tol <= rep.gap_lower and rep.gap_upper <= target + tol
        mids = window_midpoints(S, -r, 0, 20_000, 200)
        ceiling = target + 2 * rep.tail
        for _ in range(10_000):
            j = rng.randrange(20_000)
            l = rng.randrange(20_000)
            if mids[j] - mids[l] > ceiling:
                ok = False
                break
    _finish(2, "20k-window gap within 5e-3 of 1+r-r^2, 10^4 pair checks per r",
            60.0, started, ok)


def test_03_exact_orbit_gap_meets_eleven_twentysevenths():
    started = time.perf_counter()
    params = OrbitParams(xi=rational_value(1), eta=rational_value(0), p=3, q=2)
    rep = theorem1_gap(params, (0, 60))
    ok = (
        rep.gap_lower == rep.gap_upper == PINNED_GAP_60
        and PINNED_GAP_60 >= Fraction(11, 27)
        and rep.meets_bound
    )
    # independent sweep, no library code: frac(1 * (-3/2)**n) for n < 60
    vals = [Fraction(-3, 2) ** n for n in range(60)]
    fracs = [v - (v.numerator // v.denominator) for v in vals]
    ok &= max(fracs) - min(fracs) == PINNED_GAP_60
    _finish(3, "y_n gap over [0,60) is exactly the pinned value >= 11/27", 1.0,
            started, ok)


def test_04_series_identity_residual_is_certified():
    started = time.perf_counter()
    params = OrbitParams(xi=rational_value(1), eta=rational_value(0), p=3, q=2)
    declared = 4 * Fraction(2, 3) ** 50 * 3
    ok = True
    for n in range(41):
        res = series_equals_py(params, n, 50)
        ok &= res.contains(0)
        ok &= res.radius == declared
        # the midpoint is a tail artifact: tiny, exact, and provably nonzero
        # (see the companion xfail test)
        ok &= 0 < abs(res.midpoint) <= 3 * Fraction(2, 3) ** 50
    _finish(4, "S_n(-r) vs p*y_n: contains 0, radius exactly 12*(2/3)^50 "
               "(zero-midpoint clause: see xfail companion)", 1.0, started, ok)


@pytest.mark.xfail(
    strict=True,
    reason="the 50-term residual midpoint equals -p*(-r)^50*y_{n+50}, and "
    "y_{m} = (3^m mod 2^m)/2^m is never zero, so no finite evaluation of "
    "this orbit can have an exactly-zero midpoint; the attainable content "
    "(contains 0, exact declared radius) is asserted in the main check",
)
def test_04x_zero_midpoint_clause_is_unattainable():
    params = OrbitParams(xi=rational_value(1), eta=rational_value(0), p=3, q=2)
    res = series_equals_py(params, 0, 50)
    assert res.midpoint == 0


def test_05_mechanical_prefixes_are_balanced():
    started = time.perf_counter()
    w = sturmian_prefix(fibonacci_spec(), 2000)
    ok = balance_discrepancy(w, 200) <= 1
    _finish(5, "discrepancy <= 1 over all windows k <= 200 of a 2000 prefix",
            10.0, started, ok)


def test_06_minimal_complexity_and_left_extensions():
    started = time.perf_counter()
    w = sturmian_prefix(fibonacci_spec(), 10_000)
    profile = [subword_complexity(w, n) for n in range(1, 52)]
    ok = all(profile[n - 1] == n + 1 for n in range(1, 51))
    ok &= all(b > a for a, b in zip(profile, profile[1:]))
    ok &= all(left_extension_pair(w, n) is not None for n in range(51))
    _finish(6, "complexity n+1 and a two-sided left extension for n <= 50",
            10.0, started, ok)


def test_07_digit_sequences_show_no_periodicity():
    started = time.perf_counter()
    cases = [
        OrbitParams(xi=rational_value(1), eta=rational_value(0), p=3, q=2),
        OrbitParams(
            xi=rational_value(Fraction(5, 7)), eta=rational_value(0), p=5, q=3
        ),
        OrbitParams(xi=sqrt_value(2), eta=rational_value(0), p=2, q=1),
    ]
    ok = True
    for params in cases:
        digits = Orbit(params).digits(1000)
        ok &= detect_period(digits, 200, 100) is None
    _finish(7, "no (preperiod <= 200, period <= 100) pattern in 1000 digits "
               "for three parameter sets", 10.0, started, ok)


def test_08_structure_audit_passes_and_catches_mutations():
    started = time.perf_counter()
    rng = random.Random(8_8888)
    drivers = [fibonacci_spec(), _sqrt2_driver()]
    ok = True
    for driver in drivers:
        for k in (2, 4):
            spec = ExtremalSpec(k=k, driver=driver)
            w = extremal_word(spec, 10_000)
            audit = structure_audit(w, k)
            ok &= audit.all_ok
            pos = rng.randrange(1, len(w) - 1)
            letters = list(w.letters)
            letters[pos] ^= 1
            mutated = structure_audit(Word(letters), k)
            ok &= not mutated.all_ok
    _finish(8, "audits clean for k in {2,4} x two drivers; a random interior "
               "flip is always caught", 10.0, started, ok)


def test_09_tail_bounds_are_sound_for_random_sequences():
    started = time.perf_counter()
    rng = random.Random(9_9999)
    ok = True
    for _ in range(100):
        bound = rng.randint(1, 5)
        terms = rng.randint(1, 30)
        letters = [rng.randint(-bound, bound) for _ in range(terms + 200)]
        x = Fraction(rng.randint(-89, 89), 100)
        S = BoundedSeq(prefix=Word(letters), bound=bound)
        short = eval_series(S, 0, x, terms)
        long_mid = eval_series(S, 0, x, terms + 200).midpoint
        ok &= short.contains(long_mid)
    _finish(9, "100 random K-term enclosures contain their (K+200)-term "
               "midpoints", 10.0, started, ok)
