"""Reduced words in a free group.

A word is a sequence of letters (generator index >= 1, exponent +1/-1) with no
adjacent cancelling pair.  Text grammar: whitespace-separated terms
``x<INT>`` or ``x<INT>^<SIGNED_INT>``; exponents expand into repeated letters,
so the length of "x1^3" is 3.
"""

from __future__ import annotations

import re

from .errors import ParseError, TrivialWordError

__all__ = ["FreeWord", "parse_word", "concat", "self_concat", "cyclically_reduce"]

_TERM = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def _reduce(letters) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for gen, exp in letters:
        if out and out[-1][0] == gen and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


class FreeWord:
    """An immutable reduced word; letters are (generator, +-1) pairs."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        lst = []
        for gen, exp in letters:
            gen = int(gen)
            exp = int(exp)
            if gen < 1:
                raise ValueError(f"generator indices start at 1, got {gen}")
            if exp not in (1, -1):
                raise ValueError(f"letter exponents must be +-1, got {exp}")
            lst.append((gen, exp))
        object.__setattr__(self, "letters", _reduce(lst))

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def rank(self) -> int:
        """Largest generator index appearing (0 for the empty word)."""
        return max((g for g, _ in self.letters), default=0)

    def is_trivial(self) -> bool:
        return not self.letters

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def encode(self) -> str:
        out = []
        for g, e in self.letters:
            out.append(f"x{g}" if e == 1 else f"x{g}^-1")
        return " ".join(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(("FreeWord", self.letters))

    def __repr__(self) -> str:
        return f"FreeWord({self.encode()!r})"


def parse_word(text: str) -> FreeWord:
    """Parse the grammar above into a reduced word.

    Raises ParseError on a bad token and TrivialWordError if the word reduces
    to the identity.
    """
    letters: list[tuple[int, int]] = []
    tokens = text.split()
    if not tokens:
        raise TrivialWordError("empty word")
    for tok in tokens:
        m = _TERM.match(tok)
        if not m:
            raise ParseError(f"bad token {tok!r}")
        gen = int(m.group(1))
        if gen < 1:
            raise ParseError(f"generator index must be >= 1 in {tok!r}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        sign = 1 if exp >= 0 else -1
        letters.extend((gen, sign) for _ in range(abs(exp)))
    word = FreeWord(letters)
    if word.is_trivial():
        raise TrivialWordError(f"{text!r} reduces to the identity")
    return word


def concat(w1: FreeWord, w2: FreeWord) -> FreeWord:
    """Concatenation over disjoint letter sets: w2's generators are relabeled to
    start above w1's rank, so lengths and ranks add and nothing cancels."""
    shift = w1.rank
    shifted = tuple((g + shift, e) for g, e in w2.letters)
    return FreeWord(w1.letters + shifted)


def self_concat(w: FreeWord, t: int) -> FreeWord:
    """The t-fold concatenation of w with fresh letters each time."""
    if t < 1:
        raise ValueError("t must be >= 1")
    out = w
    for _ in range(t - 1):
        out = concat(out, w)
    return out


def cyclically_reduce(w: FreeWord) -> FreeWord:
    """Strip matching first/last letters until the word is cyclically reduced."""
    letters = list(w.letters)
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return FreeWord(letters)
