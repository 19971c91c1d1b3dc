"""Tests for mechanical word generation and the two-block construction."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modone import (
    ExtremalSpec,
    SturmianSpec,
    Variant,
    Word,
    balance_discrepancy,
    block_lengths,
    extremal_word,
    fibonacci_spec,
    marker_positions,
    partial_sum,
    partial_sums,
    rational_value,
    sqrt_value,
    sturmian_letter,
    sturmian_prefix,
    sturmian_stream,
    subword_complexity,
)


def golden_floor(n: int) -> int:
    # closed form for floor(n * (sqrt(5)-1)/2) using integer square roots:
    # n*theta = (sqrt(5 n^2) - n) / 2, and the parity argument shows the
    # floor survives replacing sqrt(5 n^2) by isqrt(5 n^2).
    return (math.isqrt(5 * n * n) - n) // 2


def sqrt2_floor(n: int) -> int:
    # floor(n * (sqrt(2)-1)) = isqrt(2 n^2) - n
    return math.isqrt(2 * n * n) - n


class TestSturmianLetters:
    def test_first_twenty_letters_of_golden_word(self, fib_spec):
        assert str(sturmian_prefix(fib_spec, 20)) == "01011010110110101101"

    def test_letters_match_integer_sqrt_oracle(self, fib_spec, fib_word_10k):
        for n in range(2000):
            assert fib_word_10k[n] == golden_floor(n + 1) - golden_floor(n)

    def test_sqrt2_slope_matches_oracle(self, sqrt2m1_spec):
        w = sturmian_prefix(sqrt2m1_spec, 300)
        for n in range(300):
            assert w[n] == sqrt2_floor(n + 1) - sqrt2_floor(n)

    def test_stream_agrees_with_single_letter_queries(self, fib_spec):
        stream = sturmian_stream(fib_spec)
        from_stream = [stream.letter(n) for n in range(64)]
        assert from_stream == [sturmian_letter(fib_spec, n) for n in range(64)]

    def test_ceil_variant_differs_only_at_the_origin(self, fib_spec):
        ceil_spec = SturmianSpec(
            theta=fib_spec.theta, rho=fib_spec.rho, variant=Variant.CEIL
        )
        floor_word = str(sturmian_prefix(fib_spec, 200))
        ceil_word = str(sturmian_prefix(ceil_spec, 200))
        assert ceil_word == "1" + floor_word[1:]

    def test_intercept_shifts_the_word(self, fib_spec):
        shifted = SturmianSpec(
            theta=fib_spec.theta,
            rho=rational_value(Fraction(1, 3)),
            variant=Variant.FLOOR,
        )
        w = sturmian_prefix(shifted, 400)
        assert set(w.letters) == {0, 1}
        # same slope, so the density of ones is unchanged
        assert abs(sum(w.letters) - sum(sturmian_prefix(fib_spec, 400).letters)) <= 1


class TestSturmianSums:
    def test_partial_sum_ten(self, fib_spec):
        assert partial_sum(fib_spec, 10) == 6

    def test_closed_form_equals_running_total(self, fib_spec):
        w = sturmian_prefix(fib_spec, 300)
        total = 0
        for n in range(300):
            assert partial_sum(fib_spec, n) == total
            total += w[n]
        assert partial_sum(fib_spec, 300) == total

    def test_partial_sums_is_the_cumulative_sequence(self, fib_spec):
        sums = partial_sums(fib_spec, 50)
        assert len(sums) == 51
        assert sums[0] == 0
        w = sturmian_prefix(fib_spec, 50)
        assert all(sums[n + 1] - sums[n] == w[n] for n in range(50))

    @given(num=st.integers(0, 11), den=st.integers(12, 24))
    @settings(max_examples=20, deadline=None)
    def test_sums_telescope_for_any_intercept(self, num, den):
        spec = SturmianSpec(
            theta=fibonacci_spec().theta,
            rho=rational_value(Fraction(num, den)),
            variant=Variant.FLOOR,
        )
        w = sturmian_prefix(spec, 60)
        assert partial_sum(spec, 60) == sum(w.letters)


class TestSturmianStructure:
    def test_prefixes_are_balanced(self, fib_word_10k):
        prefix = fib_word_10k[:600]
        for k in (1, 2, 3, 5, 8, 13):
            assert balance_discrepancy(prefix, k) <= 1

    def test_complexity_counts_n_plus_one_factors(self, fib_word_10k):
        w = fib_word_10k[:3000]
        for n in range(1, 13):
            assert subword_complexity(w, n) == n + 1

    def test_forbidden_factors(self, fib_word_10k):
        # slope above 1/2, so zeros never repeat and ones come at most in pairs
        text = str(fib_word_10k)
        assert "00" not in text
        assert "111" not in text


class TestSpecValidation:
    def test_rational_slope_is_rejected(self):
        with pytest.raises(ValueError, match="rational slope"):
            SturmianSpec(
                theta=rational_value(Fraction(2, 3)),
                rho=rational_value(0),
                variant=Variant.FLOOR,
            )

    def test_slope_above_one_is_rejected(self):
        from modone import real_add

        big = real_add(sqrt_value(Fraction(5, 4)), rational_value(Fraction(1, 2)))
        with pytest.raises(ValueError):
            SturmianSpec(theta=big, rho=rational_value(0), variant=Variant.FLOOR)

    def test_negative_slope_is_rejected(self):
        from modone import real_sub

        neg = real_sub(rational_value(Fraction(1, 2)), sqrt_value(Fraction(5, 4)))
        with pytest.raises(ValueError):
            SturmianSpec(theta=neg, rho=rational_value(0), variant=Variant.FLOOR)


class TestExtremalConstruction:
    def test_first_blocks_for_the_golden_driver(self, extremal_k2):
        assert block_lengths(extremal_k2, 8).letters == (2, 4, 2, 4, 4, 2, 4, 2)

    def test_prefix_spells_out_the_blocks(self, extremal_k2):
        w = extremal_word(extremal_k2, 26)
        assert str(w) == "00110000110011000011000011"

    def test_first_markers(self, extremal_k2):
        assert marker_positions(extremal_k2, 4) == [3, 9, 13, 19]

    def test_markers_close_a_double_one(self, extremal_k2, extremal_word_20k):
        w = extremal_word_20k
        for sigma in marker_positions(extremal_k2, 400):
            assert w[sigma] == 1
            assert w[sigma - 1] == 1
            assert w[sigma + 1] == 0

    def test_markers_enumerate_every_double_one(self, extremal_k2, extremal_word_20k):
        w = extremal_word_20k[:5000]
        expected = [
            i
            for i in range(1, len(w))
            if w[i] == 1 and w[i - 1] == 1
        ]
        markers = marker_positions(extremal_k2, len(expected))
        assert markers == expected

    def test_marker_gaps_are_block_plus_two(self, extremal_k2):
        sig = marker_positions(extremal_k2, 50)
        blocks = block_lengths(extremal_k2, 50).letters
        for n in range(49):
            assert sig[n + 1] - sig[n] == blocks[n + 1] + 2
            assert sig[n + 1] - sig[n] >= 4

    def test_wider_gap_parameter(self):
        spec = ExtremalSpec(k=4, driver=fibonacci_spec())
        assert block_lengths(spec, 5).letters == (4, 6, 4, 6, 6)
        assert str(extremal_word(spec, 20)) == "00001100000011000011"
        assert marker_positions(spec, 3) == [5, 13, 19]

    def test_odd_gap_parameter_is_rejected(self):
        with pytest.raises(ValueError):
            ExtremalSpec(k=3, driver=fibonacci_spec())

    def test_zero_gap_parameter_is_rejected(self):
        with pytest.raises(ValueError):
            ExtremalSpec(k=0, driver=fibonacci_spec())

    def test_word_and_stream_prefixes_agree(self, extremal_k2):
        from modone import extremal_stream

        stream = extremal_stream(extremal_k2)
        assert stream.prefix(100) == extremal_word(extremal_k2, 100)
