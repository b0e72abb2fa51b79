"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately written from first principles (enumeration,
direct sums over groups, naive arc scans) and kept separate from the fast
implementations it is used to check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

import numpy as np

from wordmeasures import CycleType, Partition, class_size, cycle_types, mn_character


# ---------------------------------------------------------------------------
# Young tableaux


@lru_cache(maxsize=None)
def count_syt(parts: tuple[int, ...]) -> int:
    """Standard Young tableaux of the given shape, counted by corner removal."""
    if sum(parts) == 0:
        return 1
    total = 0
    for i in range(len(parts)):
        below = parts[i + 1] if i + 1 < len(parts) else 0
        if parts[i] > below:
            smaller = list(parts)
            smaller[i] -= 1
            if smaller[-1] == 0:
                smaller.pop()
            total += count_syt(tuple(smaller))
    return total


def enumerate_ssyt(parts: tuple[int, ...], n: int):
    """All semistandard fillings with entries in 1..n (rows weakly increase,
    columns strictly increase); yields tuples of row tuples."""
    rows = len(parts)

    def fill(i: int, filled: list[tuple[int, ...]]):
        if i == rows:
            yield tuple(filled)
            return
        width = parts[i]

        def fill_row(j: int, row: list[int]):
            if j == width:
                yield tuple(row)
                return
            lo = row[j - 1] if j > 0 else 1
            if i > 0 and j < len(filled[i - 1]):
                lo = max(lo, filled[i - 1][j] + 1)
            for v in range(lo, n + 1):
                yield from fill_row(j + 1, row + [v])

        for row in fill_row(0, []):
            yield from fill(i + 1, filled + [row])

    yield from fill(0, [])


def count_ssyt(parts: tuple[int, ...], n: int) -> int:
    return sum(1 for _ in enumerate_ssyt(parts, n))


def schur_by_monomials(parts: tuple[int, ...], xs: np.ndarray) -> complex:
    """Schur polynomial as the sum over semistandard fillings of the monomials."""
    total = 0j
    for tab in enumerate_ssyt(parts, len(xs)):
        prod = 1.0 + 0j
        for row in tab:
            for v in row:
                prod *= xs[v - 1]
        total += prod
    return total


# ---------------------------------------------------------------------------
# S_m characters by permutation modules


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lens = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        ln, i = 0, s
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            ln += 1
        lens.append(ln)
    return tuple(sorted(lens, reverse=True))


def _set_partitions_with_sizes(elements: tuple[int, ...], sizes: tuple[int, ...]):
    """Ordered set partitions of elements into blocks of the given sizes."""
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for block in combinations(elements, first):
        remaining = tuple(e for e in elements if e not in block)
        for tail in _set_partitions_with_sizes(remaining, rest):
            yield (frozenset(block),) + tail


def brute_character_table(m: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """Character table of S_m from permutation-module characters.

    The permutation character psi_lam counts fixed tabloids; subtracting the
    projections onto previously extracted characters (partitions processed in
    descending lexicographic order) leaves chi_lam.  Returns
    {shape: {cycle_type: value}}.
    """
    perms = list(permutations(range(m)))
    classes: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for p in perms:
        classes.setdefault(_cycle_type(p), []).append(p)
    class_reps = {ct: ps[0] for ct, ps in classes.items()}
    class_sizes = {ct: len(ps) for ct, ps in classes.items()}

    def psi(shape: tuple[int, ...], perm: tuple[int, ...]) -> int:
        count = 0
        for blocks in _set_partitions_with_sizes(tuple(range(m)), shape):
            if all(frozenset(perm[e] for e in blk) == blk for blk in blocks):
                count += 1
        return count

    def inner(f: dict, g: dict) -> Fraction:
        acc = Fraction(0)
        for ct in classes:
            acc += class_sizes[ct] * f[ct] * g[ct]
        return acc / factorial(m)

    shapes = sorted(
        (tuple(p.parts) for p in _all_partitions(m)), reverse=True
    )  # descending lex refines dominance
    table: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
    for shape in shapes:
        vals = {ct: Fraction(psi(shape, class_reps[ct])) for ct in classes}
        for prev_shape, prev in table.items():
            coeff = inner(vals, prev)
            if coeff:
                vals = {ct: vals[ct] - coeff * prev[ct] for ct in classes}
        table[shape] = vals
    return table


def _all_partitions(m: int):
    from wordmeasures import partitions_of

    return list(partitions_of(m))


def brute_convolve(m: int, f_by_class, g_by_class):
    """(f*g)(pi) by the O((m!)^2) double loop; inputs/outputs keyed by cycle type."""
    perms = list(permutations(range(m)))

    def value(fn, perm):
        return fn[_cycle_type(perm)]

    def inv(perm):
        out = [0] * m
        for i, v in enumerate(perm):
            out[v] = i
        return tuple(out)

    def compose(a, b):  # a after b
        return tuple(a[b[i]] for i in range(m))

    out: dict[tuple[int, ...], Fraction] = {}
    for pi in perms:
        ct = _cycle_type(pi)
        if ct in out:
            continue
        acc = Fraction(0)
        for sigma in perms:
            acc += value(f_by_class, sigma) * value(g_by_class, compose(inv(sigma), pi))
        out[ct] = acc
    return out


# ---------------------------------------------------------------------------
# Littlewood-Richardson by S_m character inner products


def lr_by_characters(lam: Partition, mu: Partition, nu: Partition) -> int:
    """<chi_nu restricted to S_a x S_b, chi_lam x chi_mu> computed class-wise."""
    a, b = lam.weight, mu.weight
    if a + b != nu.weight:
        return 0
    total = Fraction(0)
    for ca in cycle_types(a):
        for cb in cycle_types(b):
            merged = CycleType(
                Partition(sorted(ca.cycles.parts + cb.cycles.parts, reverse=True))
            )
            total += (
                Fraction(class_size(ca) * class_size(cb))
                * mn_character(lam, ca)
                * mn_character(mu, cb)
                * mn_character(nu, merged)
            )
    val = total / (factorial(a) * factorial(b))
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# Seeded random inputs shared across test modules


def random_partition(rng: np.random.Generator, max_weight: int, max_len: int) -> Partition:
    parts = []
    budget = int(rng.integers(0, max_weight + 1))
    cap = budget
    while budget > 0 and len(parts) < max_len and cap > 0:
        p = int(rng.integers(1, cap + 1))
        parts.append(p)
        budget -= p
        cap = min(cap, p, budget)
    return Partition(sorted(parts, reverse=True))


def random_weight(rng: np.random.Generator, n: int, span: int):
    from wordmeasures import DominantWeight

    entries = sorted(
        (int(rng.integers(-span, span + 1)) for _ in range(n)), reverse=True
    )
    return DominantWeight(n, entries)


# ---------------------------------------------------------------------------
# Spectral predicates by exhaustive search


def brute_spread(angles, beta: float, eps: float) -> bool:
    """Naive scan over eigenvalue-anchored arcs of chordal diameter 2*eps."""
    n = len(angles)
    width = 2 * math.pi if eps >= 1.0 else 2.0 * math.asin(eps)
    for i in range(n):
        count = 0
        for j in range(n):
            if (angles[j] - angles[i]) % (2 * math.pi) <= width:
                count += 1
        if count > (1.0 - beta) * n:
            return False
    return True


def brute_separated(points, gamma: float, eps: float) -> bool:
    """Exhaustive O(2^n) search over bipartitions."""
    n = len(points)
    for size in range(1, n):
        for q in combinations(range(n), size):
            qs = set(q)
            r = [i for i in range(n) if i not in qs]
            if len(q) < gamma * n or len(r) < gamma * n:
                continue
            if all(abs(points[i] - points[j]) >= eps for i in q for j in r):
                return True
    return False
