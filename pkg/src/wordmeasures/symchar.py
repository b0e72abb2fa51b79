"""Irreducible characters of the symmetric group and class-function convolution.

Characters are computed by the Murnaghan-Nakayama recursion over border-strip
removals (beta-set form) and memoized on (shape, cycle type).  All sums over
S_m are rewritten class-wise; nothing here ever enumerates m! permutations.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from .errors import CapError, DegreeMismatch, ParseError
from .partitions import Partition, sym_dim

__all__ = [
    "CycleType",
    "ClassFunction",
    "partitions_of",
    "cycle_types",
    "identity_type",
    "class_size",
    "mn_character",
    "convolve",
]

MAX_DEGREE = 16  # character tables beyond S_16 are out of scope


class CycleType:
    """A conjugacy class of S_m, recorded as the partition of cycle lengths."""

    __slots__ = ("cycles",)

    def __init__(self, cycles):
        c = cycles if isinstance(cycles, Partition) else Partition(cycles)
        object.__setattr__(self, "cycles", c)

    def __setattr__(self, name, value):
        raise AttributeError("CycleType is immutable")

    @property
    def m(self) -> int:
        return self.cycles.weight

    @property
    def n_cycles(self) -> int:
        """Number of cycles (fixed points included)."""
        return self.cycles.length

    def encode(self) -> str:
        """Text form, e.g. "(3,1,1)"."""
        return "(" + ",".join(str(p) for p in self.cycles.parts) + ")"

    @staticmethod
    def parse(text: str) -> "CycleType":
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ParseError(f"expected parenthesized cycle type, got {text!r}")
        body = s[1:-1].strip()
        vals = [int(x) for x in body.split(",")] if body else []
        return CycleType(Partition(sorted(vals, reverse=True)))

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleType) and self.cycles == other.cycles

    def __hash__(self) -> int:
        return hash(("CycleType", self.cycles.parts))

    def __repr__(self) -> str:
        return f"CycleType({list(self.cycles.parts)})"


def identity_type(m: int) -> CycleType:
    return CycleType([1] * m)


@lru_cache(maxsize=None)
def _partitions_of(m: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out = []

    def grow(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for first in range(min(cap, remaining), 0, -1):
            grow(remaining - first, first, prefix + (first,))

    grow(m, m, ())
    return tuple(out)


def partitions_of(m: int) -> Iterator[Partition]:
    """All partitions of m in descending lexicographic order."""
    for t in _partitions_of(m):
        yield Partition(t)


def cycle_types(m: int) -> Iterator[CycleType]:
    for p in partitions_of(m):
        yield CycleType(p)


def class_size(c: CycleType) -> int:
    """Size of the conjugacy class: m! / prod_j j^{a_j} a_j!."""
    m = c.m
    counts: dict[int, int] = {}
    for p in c.cycles.parts:
        counts[p] = counts.get(p, 0) + 1
    den = 1
    for j, a in counts.items():
        den *= j**a * factorial(a)
    return factorial(m) // den


def _strip_removals(parts: tuple[int, ...], t: int):
    """Yield (smaller shape, sign) for each removable border strip of size t.

    Beta-set form: the shape is the strictly decreasing set {parts[i] + k-1-i};
    removing a strip of size t replaces one beta value b by b-t (if free), and
    the sign is (-1)^(number of beta values strictly between them).
    """
    k = len(parts)
    beta = [parts[i] + (k - 1 - i) for i in range(k)]
    beta_set = set(beta)
    for b in beta:
        nb = b - t
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        # insert nb keeping descending order
        pos = 0
        while pos < len(new_beta) and new_beta[pos] > nb:
            pos += 1
        new_beta.insert(pos, nb)
        new_parts = tuple(new_beta[i] - (k - 1 - i) for i in range(k))
        yield Partition(new_parts), (-1) ** height


_mn_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
_mn_lock = threading.Lock()


def _mn(parts: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    key = (parts, cycles)
    cached = _mn_cache.get(key)
    if cached is not None:
        return cached
    t, rest = cycles[0], cycles[1:]
    total = 0
    for smaller, sign in _strip_removals(parts, t):
        total += sign * _mn(smaller.parts, rest)
    with _mn_lock:
        _mn_cache[key] = total
    return total


def mn_character(lam: Partition, c: CycleType) -> int:
    """Character value chi_lam on the class c, by border-strip recursion."""
    if lam.weight != c.m:
        raise DegreeMismatch(f"|lam|={lam.weight} but cycle type has m={c.m}")
    if c.m > MAX_DEGREE:
        raise CapError(f"degree {c.m} exceeds the S_{MAX_DEGREE} cap")
    return _mn(lam.parts, c.cycles.parts)


class ClassFunction:
    """A class function on S_m with exact rational values, stored per class."""

    __slots__ = ("m", "values")

    def __init__(self, m: int, values: dict):
        self.m = int(m)
        vals = {}
        for c in cycle_types(self.m):
            if c not in values:
                raise ValueError(f"missing value for class {c.encode()}")
            vals[c] = Fraction(values[c])
        self.values = vals

    @staticmethod
    def delta_identity(m: int) -> "ClassFunction":
        """The convolution identity: 1 at the identity class, 0 elsewhere."""
        vals = {c: Fraction(0) for c in cycle_types(m)}
        vals[identity_type(m)] = Fraction(1)
        return ClassFunction(m, vals)

    @staticmethod
    def power_of_cycles(m: int, n: int) -> "ClassFunction":
        """The function sigma -> n^(number of cycles of sigma)."""
        return ClassFunction(m, {c: Fraction(n**c.n_cycles) for c in cycle_types(m)})

    @staticmethod
    def from_char_coefficients(m: int, coeffs: dict) -> "ClassFunction":
        """Rebuild values from coefficients in the irreducible-character basis."""
        vals = {}
        for c in cycle_types(m):
            vals[c] = sum(
                (Fraction(a) * mn_character(lam, c) for lam, a in coeffs.items()),
                Fraction(0),
            )
        return ClassFunction(m, vals)

    def char_coefficients(self) -> dict[Partition, Fraction]:
        """Coefficients f_hat(lam) with f = sum_lam f_hat(lam) chi_lam."""
        m = self.m
        fact = factorial(m)
        out = {}
        for lam in partitions_of(m):
            acc = Fraction(0)
            for c, v in self.values.items():
                acc += v * class_size(c) * mn_character(lam, c)
            out[lam] = acc / fact
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.m == other.m
            and self.values == other.values
        )

    def __repr__(self) -> str:
        return f"ClassFunction(m={self.m}, {{{len(self.values)} classes}})"


def convolve(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Convolution (f*g)(pi) = sum_sigma f(sigma) g(sigma^-1 pi), class-wise.

    In the character basis chi_lam * chi_mu = delta_(lam,mu) (m!/chi_lam(1))
    chi_lam, so the coefficients simply multiply with that weight.
    """
    if f.m != g.m:
        raise DegreeMismatch(f"degrees differ: {f.m} vs {g.m}")
    m = f.m
    fhat = f.char_coefficients()
    ghat = g.char_coefficients()
    fact = factorial(m)
    coeffs = {
        lam: fact * fhat[lam] * ghat[lam] / sym_dim(lam) for lam in partitions_of(m)
    }
    return ClassFunction.from_char_coefficients(m, coeffs)
