"""Finite words over small integer alphabets, and a few classic analyzers.

A `Word` is an immutable sequence of small nonnegative integers.  Words over
{0, ..., 9} keep a digit-string mirror internally so that subword scans can
ride on Python's C-level string search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence


class Word:
    """Immutable finite word over a small integer alphabet."""

    __slots__ = ("_letters", "_text")

    def __init__(self, letters: Iterable[int]):
        lst = tuple(int(a) for a in letters)
        self._letters = lst
        self._text: Optional[str] = (
            "".join(str(a) for a in lst) if all(0 <= a <= 9 for a in lst) else None
        )

    @classmethod
    def from_string(cls, text: str) -> "Word":
        """Parse '0110...' (single digits) or '2,4,2' (comma separated)."""
        s = text.strip()
        if not s:
            return cls(())
        if "," in s:
            return cls(int(part) for part in s.split(","))
        if not s.isdigit():
            raise ValueError(f"not a digit string: {text!r}")
        return cls(int(ch) for ch in s)

    @property
    def letters(self) -> tuple[int, ...]:
        return self._letters

    @property
    def alphabet(self) -> frozenset[int]:
        return frozenset(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self._letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self._letters[idx])
        return self._letters[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self._letters + other._letters)

    def __str__(self) -> str:
        if self._text is not None:
            return self._text
        return ",".join(str(a) for a in self._letters)

    def __repr__(self) -> str:
        shown = str(self)
        if len(shown) > 40:
            shown = shown[:37] + "..."
        return f"Word({shown!r}, len={len(self)})"


class WordStream:
    """A one-way letter source with a growable memo.

    Wraps any iterator of letters.  `letter(n)` and `prefix(length)` are
    deterministic because every consumed letter is cached.
    """

    def __init__(self, letters: Iterator[int]):
        self._it = iter(letters)
        self._memo: list[int] = []

    def letter(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        while len(self._memo) <= n:
            self._memo.append(int(next(self._it)))
        return self._memo[n]

    def prefix(self, length: int) -> Word:
        if length < 0:
            raise ValueError("length must be >= 0")
        if length:
            self.letter(length - 1)
        return Word(self._memo[:length])


def subword_complexity(w: Word, n: int) -> int:
    """Number of distinct length-n factors of w.

    Counts what is visible in the given finite word, so for a prefix of an
    infinite word this is a lower bound on the complexity of the full word.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    if n > len(w):
        return 0
    text = w._text
    if text is not None:
        return len({text[i : i + n] for i in range(len(text) - n + 1)})
    tup = w.letters
    return len({tup[i : i + n] for i in range(len(tup) - n + 1)})


def left_extension_pair(
    w: Word, n: int
) -> Optional[tuple[Word, int, int]]:
    """First length-n factor U that occurs preceded by two distinct letters.

    Scans occurrences left to right; the moment some U has been seen after
    two different predecessor letters s != t, returns (U, s, t) with s the
    earlier predecessor.  Returns None when no factor of length n is left
    extendable in two ways within w.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if len(w) < n + 1:
        return None
    tup = w.letters
    seen: dict[tuple[int, ...], int] = {}
    for i in range(1, len(tup) - n + 1):
        u = tup[i : i + n]
        prev = tup[i - 1]
        first = seen.setdefault(u, prev)
        if first != prev:
            return Word(u), first, prev
    return None


def find_pattern(w: Word, pattern: Word) -> list[int]:
    """All start indices of pattern inside w (overlaps included)."""
    if len(pattern) == 0:
        return list(range(len(w) + 1))
    if len(pattern) > len(w):
        return []
    if w._text is not None and pattern._text is not None:
        text, pat = w._text, pattern._text
        out = []
        i = text.find(pat)
        while i != -1:
            out.append(i)
            i = text.find(pat, i + 1)
        return out
    tup, ptn = w.letters, pattern.letters
    m = len(ptn)
    return [i for i in range(len(tup) - m + 1) if tup[i : i + m] == ptn]


def detect_period(
    w: Word, max_preperiod: int, max_period: int
) -> Optional[tuple[int, int]]:
    """Least (preperiod, period) pair under which w is eventually periodic.

    Returns the lexicographically least (N, l) with N <= max_preperiod and
    1 <= l <= max_period such that w[i + l] == w[i] for every i in
    [N, len(w) - 1 - l] and that index range is nonempty (a claim backed by
    zero comparisons is rejected, so short words give None instead of a
    vacuous hit).  N is minimized first, then l.
    """
    if max_preperiod < 0 or max_period < 1:
        raise ValueError("need max_preperiod >= 0 and max_period >= 1")
    tup = w.letters
    best: Optional[tuple[int, int]] = None
    for period in range(1, max_period + 1):
        top = len(tup) - period  # exclusive end of comparison indices
        if top <= 0:
            break
        onset = 0
        for i in range(top - 1, -1, -1):
            if tup[i] != tup[i + period]:
                onset = i + 1
                break
        if onset > max_preperiod or onset > top - 1:
            continue
        if onset == 0:
            return (0, period)
        if best is None or onset < best[0]:
            best = (onset, period)
    return best


class ZeroBlockProfile(NamedTuple):
    """Run structure of a binary word viewed as 1^y 0^{z0} 11 0^{z1} 11 ..."""

    leading_ones: int
    blocks: tuple[int, ...]
    well_formed: bool


def zero_block_profile(w: Word) -> ZeroBlockProfile:
    """Decompose a binary word into its maximal zero blocks.

    `leading_ones` is the length of the initial run of 1s.  `blocks` lists
    the lengths of the complete zero runs, where the final zero run counts
    as complete only when 1s follow it.  The word is well formed when every
    zero block after the first is preceded by exactly the two 1s of a
    separator, i.e. all interior runs of 1s have length exactly 2 and the
    final run of 1s (if the word ends in 1s) has length at most 2.
    """
    if not w.alphabet <= {0, 1}:
        raise ValueError(f"not a binary word: alphabet {sorted(w.alphabet)}")
    runs: list[tuple[int, int]] = []  # (letter, run length)
    for a in w:
        if runs and runs[-1][0] == a:
            runs[-1] = (a, runs[-1][1] + 1)
        else:
            runs.append((a, 1))
    leading_ones = runs[0][1] if runs and runs[0][0] == 1 else 0
    zero_runs = [(idx, ln) for idx, (b, ln) in enumerate(runs) if b == 0]
    blocks: list[int] = []
    for idx, ln in zero_runs:
        if idx == len(runs) - 1:
            break  # trailing zeros: the block may continue past the prefix
        blocks.append(ln)
    well_formed = True
    one_runs_interior = [
        ln for idx, (b, ln) in enumerate(runs)
        if b == 1 and idx != 0 and idx != len(runs) - 1
    ]
    if any(ln != 2 for ln in one_runs_interior):
        well_formed = False
    if runs and runs[-1][0] == 1 and len(runs) > 1 and runs[-1][1] > 2:
        well_formed = False
    return ZeroBlockProfile(leading_ones, tuple(blocks), well_formed)


def balance_discrepancy(w: Word, max_k: int) -> int:
    """max over k <= max_k of (max - min) of sums over length-k windows.

    A word is balanced exactly when this is <= 1 for every k, and Sturmian
    prefixes achieve 1.  Uses prefix sums, so the cost is O(len * max_k).
    """
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    tup = w.letters
    prefix = [0]
    for a in tup:
        prefix.append(prefix[-1] + a)
    worst = 0
    for k in range(1, min(max_k, len(tup)) + 1):
        sums = [prefix[i + k] - prefix[i] for i in range(len(tup) - k + 1)]
        worst = max(worst, max(sums) - min(sums))
    return worst
