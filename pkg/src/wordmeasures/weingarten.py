"""Exact Weingarten functions and Haar-unitary monomial integration.

Wg_{m,n} is the convolution inverse of sigma -> n^cyc(sigma) in the group
algebra of S_m; its values are computed from the character expansion

    Wg(sigma) = (1/m!^2) sum_{lam |- m} chi_lam(1)^2 / dim_U(lam) * chi_lam(sigma)

in exact rational arithmetic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .errors import CapError, DomainError
from .partitions import Partition, dim_hook_content, sym_dim
from .symchar import (
    ClassFunction,
    CycleType,
    class_size,
    cycle_types,
    mn_character,
    partitions_of,
)

__all__ = [
    "MonomialSpec",
    "weingarten",
    "weingarten_class_function",
    "integrate_monomial",
    "moment_tr_exact",
]

MAX_WG_DEGREE = 12
MAX_MONOMIAL_DEGREE = 6
MAX_TRACE_MOMENT = 10

_wg_cache: dict[tuple[int, int], dict[CycleType, Fraction]] = {}
_wg_lock = threading.Lock()


def _wg_table(m: int, n: int) -> dict[CycleType, Fraction]:
    key = (m, n)
    hit = _wg_cache.get(key)
    if hit is not None:
        return hit
    fact2 = Fraction(1, factorial(m) ** 2)
    table = {}
    lams = list(partitions_of(m))
    weights = [
        Fraction(sym_dim(lam) ** 2, dim_hook_content(lam, n)) for lam in lams
    ]
    for c in cycle_types(m):
        acc = Fraction(0)
        for lam, w in zip(lams, weights):
            acc += w * mn_character(lam, c)
        table[c] = fact2 * acc
    with _wg_lock:
        _wg_cache[key] = table
    return table


def weingarten(m: int, n: int, c: CycleType) -> Fraction:
    """Exact Wg_{m,n} on the class c.  Defined for m <= n."""
    if m > n:
        raise DomainError(f"Weingarten function requires m <= n, got m={m}, n={n}")
    if m > MAX_WG_DEGREE:
        raise CapError(f"degree m={m} exceeds the cap {MAX_WG_DEGREE}")
    if c.m != m:
        raise DomainError(f"cycle type has degree {c.m}, expected {m}")
    return _wg_table(m, n)[c]


def weingarten_class_function(m: int, n: int) -> ClassFunction:
    """Wg_{m,n} as a class function, ready for convolution."""
    if m > n:
        raise DomainError(f"Weingarten function requires m <= n, got m={m}, n={n}")
    return ClassFunction(m, dict(_wg_table(m, n)))


@dataclass(frozen=True)
class MonomialSpec:
    """Index data of a Haar-unitary matrix-entry monomial.

    Encodes E( prod_i X[F1(i),F2(i)] * prod_i conj(X[H1(i),H2(i)]) ); all four
    maps are 1-based tuples of length m with values in [1, n].
    """

    m: int
    F1: tuple[int, ...]
    F2: tuple[int, ...]
    H1: tuple[int, ...]
    H2: tuple[int, ...]

    def __post_init__(self):
        for name in ("F1", "F2", "H1", "H2"):
            t = getattr(self, name)
            if len(t) != self.m:
                raise DomainError(f"{name} must have length m={self.m}")
            if any(v < 1 for v in t):
                raise DomainError(f"{name} entries must be >= 1")

    def max_index(self) -> int:
        return max(self.F1 + self.F2 + self.H1 + self.H2)


def _cycle_type_of(perm: tuple[int, ...]) -> CycleType:
    seen = [False] * len(perm)
    lens = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        ln = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            ln += 1
        lens.append(ln)
    return CycleType(Partition(sorted(lens, reverse=True)))


def integrate_monomial(spec: MonomialSpec, n: int) -> Fraction:
    """Exact Haar expectation of the monomial: the double sum of Wg(sigma tau^-1)
    over permutations matching the row maps (sigma) and column maps (tau)."""
    m = spec.m
    if m > MAX_MONOMIAL_DEGREE:
        raise CapError(f"monomial degree {m} exceeds the cap {MAX_MONOMIAL_DEGREE}")
    if m > n:
        raise DomainError(f"integration formula requires m <= n, got m={m}, n={n}")
    if spec.max_index() > n:
        raise DomainError("index maps exceed n")

    def matches(A: tuple[int, ...], B: tuple[int, ...]) -> list[tuple[int, ...]]:
        # permutations sigma (0-based) with A[sigma[i]] == B[i] for all i
        out = []
        for perm in permutations(range(m)):
            if all(A[perm[i]] == B[i] for i in range(m)):
                out.append(perm)
        return out

    sigmas = matches(spec.F1, spec.H1)
    taus = matches(spec.F2, spec.H2)
    if not sigmas or not taus:
        return Fraction(0)
    table = _wg_table(m, n)
    total = Fraction(0)
    for s in sigmas:
        for t in taus:
            # sigma o tau^-1, 0-based composition
            t_inv = [0] * m
            for i, v in enumerate(t):
                t_inv[v] = i
            comp = tuple(s[t_inv[i]] for i in range(m))
            total += table[_cycle_type_of(comp)]
    return total


def moment_tr_exact(M: int, n: int) -> int:
    """E |tr X|^(2M) for Haar X in U_n, computed class-wise as
    M! * sum_c |c| Wg(c) n^cyc(c).  Equals M! whenever M <= n."""
    if M > n:
        raise DomainError(f"exact trace moment requires M <= n, got M={M}, n={n}")
    if M > MAX_TRACE_MOMENT:
        raise CapError(f"M={M} exceeds the cap {MAX_TRACE_MOMENT}")
    table = _wg_table(M, n)
    acc = Fraction(0)
    for c, wg in table.items():
        acc += class_size(c) * wg * n**c.n_cycles
    value = factorial(M) * acc
    assert value.denominator == 1
    return int(value)
