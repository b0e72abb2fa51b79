"""Partitions, dominant weights, and the exact dimension formulas built on them.

Everything here is integer/rational arithmetic; no floating point.  Dimension
values routinely exceed 2**64, so results are plain Python ints (arbitrary
precision) or ``fractions.Fraction`` where a ratio is involved.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial
from typing import Iterator

from .errors import ParseError, RankError

__all__ = [
    "Partition",
    "DominantWeight",
    "hook_lengths",
    "sym_dim",
    "dim_hook_content",
    "dim_weyl",
    "split_plus_minus",
    "dual_partition",
]


class Partition:
    """A weakly decreasing tuple of non-negative integers, trailing zeros stripped.

    Two partitions are equal iff their canonical (zero-stripped) forms agree;
    hashing follows equality, so partitions can key caches.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        t = tuple(int(p) for p in parts)
        while t and t[-1] == 0:
            t = t[:-1]
        for a, b in zip(t, t[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {t}")
        if t and t[-1] < 0:
            raise ValueError(f"parts must be non-negative, got {t}")
        object.__setattr__(self, "parts", t)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self) -> int:
        """Total number of boxes."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of non-zero parts."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield (row, column) cells of the Young diagram, 1-based, row-major."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """True if other's diagram fits inside this one."""
        return all(self.part(i) >= other.part(i) for i in range(1, other.length + 1))

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length n; RankError if they do not fit."""
        if self.length > n:
            raise RankError(f"partition {self} has {self.length} parts > n={n}")
        return self.parts + (0,) * (n - self.length)

    def to_weight(self, n: int) -> "DominantWeight":
        """View this partition as a dominant weight of rank n."""
        return DominantWeight(n, self.padded(n))

    def encode(self) -> str:
        """Canonical text form, e.g. "[2,1]"."""
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    @staticmethod
    def parse(text: str) -> "Partition":
        """Inverse of encode; raises ParseError on malformed input."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ParseError(f"expected bracketed partition, got {text!r}")
        body = s[1:-1].strip()
        if not body:
            return Partition()
        try:
            vals = [int(x) for x in body.split(",")]
        except ValueError as exc:
            raise ParseError(f"bad partition {text!r}") from exc
        try:
            return Partition(vals)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("Partition", self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return self.encode()


class DominantWeight:
    """A weakly decreasing integer vector of fixed length n (entries may be negative)."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries):
        n = int(n)
        if n < 1:
            raise ValueError("rank must be positive")
        t = tuple(int(e) for e in entries)
        if len(t) != n:
            raise RankError(f"expected {n} entries, got {len(t)}")
        for a, b in zip(t, t[1:]):
            if a < b:
                raise ValueError(f"entries must be weakly decreasing, got {t}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", t)

    def __setattr__(self, name, value):
        raise AttributeError("DominantWeight is immutable")

    def is_partition(self) -> bool:
        return self.entries[-1] >= 0

    def to_partition(self) -> Partition:
        """Drop trailing zeros; all entries must be non-negative."""
        if not self.is_partition():
            raise ValueError(f"{self} has negative entries")
        return Partition(self.entries)

    def fundamental_coefficients(self) -> tuple[int, ...]:
        """Coefficients a_i in the expansion over fundamental weights.

        a_i = entry_i - entry_{i+1} for i < n and a_n = entry_n; a_n may be
        negative, the rest are >= 0.
        """
        e = self.entries
        return tuple(e[i] - e[i + 1] for i in range(self.n - 1)) + (e[-1],)

    def encode(self) -> str:
        """Canonical text form, e.g. "[2,1,0,-1]@n=4"."""
        return "[" + ",".join(str(e) for e in self.entries) + f"]@n={self.n}"

    @staticmethod
    def parse(text: str) -> "DominantWeight":
        s = text.strip()
        if "@n=" not in s:
            raise ParseError(f"expected '[...]@n=k', got {text!r}")
        body, _, rank = s.partition("@n=")
        try:
            n = int(rank)
        except ValueError as exc:
            raise ParseError(f"bad rank in {text!r}") from exc
        body = body.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError(f"expected bracketed entries, got {text!r}")
        inner = body[1:-1].strip()
        try:
            vals = [int(x) for x in inner.split(",")] if inner else []
        except ValueError as exc:
            raise ParseError(f"bad entries in {text!r}") from exc
        try:
            return DominantWeight(n, vals)
        except (ValueError, RankError) as exc:
            raise ParseError(str(exc)) from exc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DominantWeight)
            and self.n == other.n
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash(("DominantWeight", self.n, self.entries))

    def __repr__(self) -> str:
        return f"DominantWeight({self.n}, {list(self.entries)})"

    def __str__(self) -> str:
        return self.encode()


def hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    """Hook length of every cell: boxes to the right in the row plus boxes below
    in the column plus the cell itself."""
    parts = lam.parts
    # column lengths: number of rows with at least j boxes
    hooks = {}
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 1):
            arm = p - j
            leg = sum(1 for q in parts[i:] if q >= j)
            hooks[(i, j)] = arm + leg + 1
    return hooks


def _hook_product(lam: Partition) -> int:
    return reduce(lambda a, b: a * b, hook_lengths(lam).values(), 1)


def sym_dim(lam: Partition) -> int:
    """Degree of the irreducible S_m character attached to lam (hook-length formula)."""
    m = lam.weight
    return factorial(m) // _hook_product(lam)


def dim_hook_content(lam: Partition, n: int) -> int:
    """Degree of the U_n irreducible with highest weight lam: the product of the
    contents n+j-i over the hooks."""
    if lam.length > n:
        raise RankError(f"partition {lam} needs rank >= {lam.length}, got {n}")
    num = 1
    for (i, j) in lam.cells():
        num *= n + j - i
    d = Fraction(num, _hook_product(lam))
    assert d.denominator == 1
    return int(d)


def dim_weyl(lam: DominantWeight) -> int:
    """Degree of the U_n irreducible with highest weight lam via the Weyl
    dimension product over positive roots."""
    e = lam.entries
    n = lam.n
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= e[i] - e[j] + j - i
            den *= j - i
    d = Fraction(num, den)
    assert d.denominator == 1
    return int(d)


def _weight_from_coeffs(n: int, coeffs) -> DominantWeight:
    # entry_j = sum of a_i over i >= j (fundamental weight i has 1 in its first i slots)
    entries = []
    total = 0
    for a in reversed(coeffs):
        total += a
        entries.append(total)
    entries.reverse()
    return DominantWeight(n, entries)


def split_plus_minus(lam: DominantWeight) -> tuple[DominantWeight, DominantWeight]:
    """Split lam = lam_minus + lam_plus along the fundamental-weight expansion:
    lam_minus keeps coefficients a_i for i <= floor(n/2), lam_plus the rest."""
    n = lam.n
    a = lam.fundamental_coefficients()
    cut = n // 2
    minus = tuple(a[i] if i < cut else 0 for i in range(n))
    plus = tuple(0 if i < cut else a[i] for i in range(n))
    return _weight_from_coeffs(n, minus), _weight_from_coeffs(n, plus)


def dual_partition(lam: Partition, n: int) -> Partition:
    """The rank-n dual: reverse lam padded to n parts, negate, and shift by lam_1.

    Involutive: applying it twice returns lam.
    """
    padded = lam.padded(n)
    top = padded[0]
    return Partition(tuple(top - padded[n - 1 - t] for t in range(n)))
