import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modone import (
    Word,
    WordStream,
    balance_discrepancy,
    detect_period,
    find_pattern,
    left_extension_pair,
    subword_complexity,
    zero_block_profile,
)

binary_words = st.lists(st.integers(0, 1), min_size=0, max_size=80).map(Word)


class TestWord:
    def test_from_digit_string(self):
        w = Word.from_string("0110")
        assert w.letters == (0, 1, 1, 0)
        assert str(w) == "0110"

    def test_from_comma_string_with_negatives(self):
        w = Word.from_string("2,-1,13")
        assert w.letters == (2, -1, 13)
        assert str(w) == "2,-1,13"

    def test_empty(self):
        assert len(Word.from_string("")) == 0
        assert str(Word(())) == ""

    def test_slicing_returns_word(self):
        w = Word.from_string("010011")
        assert w[2:5] == Word.from_string("001")
        assert w[0] == 0
        assert w[-1] == 1

    def test_concat_eq_hash(self):
        a = Word.from_string("01")
        b = Word.from_string("10")
        assert a + b == Word.from_string("0110")
        assert hash(a + b) == hash(Word.from_string("0110"))
        assert a != b

    def test_alphabet(self):
        assert Word.from_string("2,4,2").alphabet == frozenset({2, 4})

    def test_bad_digit_string(self):
        with pytest.raises(ValueError):
            Word.from_string("01x0")


class TestWordStream:
    def test_letter_and_prefix_memoized(self):
        calls = []

        def gen():
            for i in range(100):
                calls.append(i)
                yield i % 2

        ws = WordStream(gen())
        assert ws.letter(5) == 1
        assert ws.letter(5) == 1
        assert calls == [0, 1, 2, 3, 4, 5]
        assert ws.prefix(3) == Word((0, 1, 0))

    def test_negative_index(self):
        ws = WordStream(iter([1, 2, 3]))
        with pytest.raises(IndexError):
            ws.letter(-1)


class TestSubwordComplexity:
    def test_trivial_cases(self):
        w = Word.from_string("0101010101")
        assert subword_complexity(w, 0) == 1
        assert subword_complexity(w, 11) == 0
        assert subword_complexity(w, 10) == 1

    def test_periodic_word(self):
        w = Word.from_string("0101010101")
        assert [subword_complexity(w, n) for n in (1, 2, 3)] == [2, 2, 2]

    def test_non_digit_alphabet(self):
        w = Word([12, 13, 12, 13, 12])
        assert subword_complexity(w, 2) == 2

    @given(w=binary_words, n=st.integers(0, 6))
    @settings(max_examples=80)
    def test_matches_bruteforce(self, w, n):
        if n == 0:
            expected = 1
        else:
            expected = len({tuple(w.letters[i : i + n])
                            for i in range(len(w) - n + 1)})
        assert subword_complexity(w, n) == expected


class TestLeftExtensionPair:
    def test_known_example(self):
        # in 010010 the factor "0" is preceded first by 1 (index 2), then by
        # 0 (index 3), so the scan reports (0, 1, 0)
        got = left_extension_pair(Word.from_string("010010"), 1)
        assert got == (Word.from_string("0"), 1, 0)

    def test_empty_factor_needs_two_distinct_letters(self):
        assert left_extension_pair(Word.from_string("0000"), 0) is None
        w = Word.from_string("0010")
        got = left_extension_pair(w, 0)
        assert got is not None
        u, s, t = got
        assert len(u) == 0 and {s, t} == {0, 1}

    def test_absent_when_word_too_short(self):
        assert left_extension_pair(Word.from_string("01"), 5) is None

    def test_constant_word_has_none(self):
        assert left_extension_pair(Word.from_string("1111111"), 2) is None

    @given(w=binary_words, n=st.integers(0, 5))
    @settings(max_examples=80)
    def test_reported_pair_is_real(self, w, n):
        got = left_extension_pair(w, n)
        if got is None:
            return
        u, s, t = got
        assert s != t
        assert len(u) == n
        text = w.letters
        occ = [i for i in range(1, len(text) - n + 1)
               if text[i : i + n] == u.letters]
        preds = {text[i - 1] for i in occ}
        assert {s, t} <= preds


class TestDetectPeriod:
    def test_purely_periodic(self):
        assert detect_period(Word.from_string("0101010101"), 2, 4) == (0, 2)

    def test_preperiod_then_period(self):
        assert detect_period(Word.from_string("111010010"), 4, 3) == (3, 3)

    def test_lexicographic_preference_minimizes_preperiod_first(self):
        # candidates here are (5,2), (4,3) and (1,4): the smallest preperiod
        # wins even though its period is the longest of the three
        w = Word.from_string("01011101")
        assert detect_period(w, 6, 4) == (1, 4)

    def test_none_when_caps_too_tight(self):
        assert detect_period(Word.from_string("0101010101"), 2, 1) is None

    def test_vacuous_evidence_rejected(self):
        # any (N, l) over a 2-letter word has an empty comparison range
        # except (0..1, 1), which genuinely fails on 01
        assert detect_period(Word.from_string("01"), 3, 2) is None

    def test_result_is_a_true_eventual_period(self):
        w = Word.from_string("1001100110011001")
        got = detect_period(w, 8, 8)
        assert got is not None
        n0, period = got
        for i in range(n0, len(w) - period):
            assert w[i] == w[i + period]

    @given(w=binary_words)
    @settings(max_examples=60)
    def test_detected_pair_always_verifies(self, w):
        got = detect_period(w, 10, 10)
        if got is None:
            return
        n0, period = got
        assert 0 <= n0 <= 10 and 1 <= period <= 10
        span = range(n0, len(w) - period)
        assert len(span) >= 1
        assert all(w[i] == w[i + period] for i in span)


class TestFindPattern:
    def test_overlapping_occurrences(self):
        assert find_pattern(Word.from_string("00000"), Word.from_string("00")) == [
            0, 1, 2, 3,
        ]

    def test_empty_pattern(self):
        assert find_pattern(Word.from_string("01"), Word(())) == [0, 1, 2]

    def test_no_match_and_too_long(self):
        w = Word.from_string("0110")
        assert find_pattern(w, Word.from_string("000")) == []
        assert find_pattern(w, Word.from_string("011011")) == []

    def test_wide_alphabet_path(self):
        w = Word([12, 12, 12])
        assert find_pattern(w, Word([12, 12])) == [0, 1]

    @given(w=binary_words, p=st.lists(st.integers(0, 1), min_size=1, max_size=4))
    @settings(max_examples=80)
    def test_indices_are_exactly_the_matches(self, w, p):
        pat = Word(p)
        got = find_pattern(w, pat)
        expected = [i for i in range(len(w) - len(pat) + 1)
                    if w.letters[i : i + len(pat)] == pat.letters]
        assert got == expected


class TestZeroBlockProfile:
    def test_separated_blocks(self):
        prof = zero_block_profile(Word.from_string("001100001100"))
        assert prof.leading_ones == 0
        assert prof.blocks == (2, 4)  # the trailing 00 may still grow
        assert prof.well_formed

    def test_leading_ones_counted(self):
        prof = zero_block_profile(Word.from_string("1110011001"))
        assert prof.leading_ones == 3
        assert prof.blocks == (2, 2)
        assert prof.well_formed

    def test_triple_one_run_is_malformed(self):
        prof = zero_block_profile(Word.from_string("0011100"))
        assert not prof.well_formed

    def test_single_one_separator_is_malformed(self):
        prof = zero_block_profile(Word.from_string("0010011"))
        assert not prof.well_formed

    def test_trailing_ones_at_most_two(self):
        assert zero_block_profile(Word.from_string("0011")).well_formed
        assert zero_block_profile(Word.from_string("001")).well_formed
        assert not zero_block_profile(Word.from_string("00111")).well_formed

    def test_all_zeros(self):
        prof = zero_block_profile(Word.from_string("00000"))
        assert prof.leading_ones == 0 and prof.blocks == ()

    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            zero_block_profile(Word.from_string("012"))


class TestBalanceDiscrepancy:
    def test_unbalanced_periodic_word(self):
        w = Word.from_string("0011" * 10)
        assert balance_discrepancy(w, 2) == 2

    def test_constant_word(self):
        assert balance_discrepancy(Word.from_string("11111"), 4) == 0

    def test_requires_positive_k(self):
        with pytest.raises(ValueError):
            balance_discrepancy(Word.from_string("01"), 0)

    @given(w=binary_words.filter(lambda w: len(w) >= 3))
    @settings(max_examples=60)
    def test_matches_bruteforce(self, w):
        def brute(k):
            sums = [sum(w.letters[i : i + k]) for i in range(len(w) - k + 1)]
            return max(sums) - min(sums)

        expected = max(brute(k) for k in range(1, min(6, len(w)) + 1))
        assert balance_discrepancy(w, min(6, len(w))) == expected
