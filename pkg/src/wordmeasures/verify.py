"""The aggregated property suite behind the ``verify-all`` CLI subcommand.

Every check is a falsification test: exact identities are compared exactly,
Monte Carlo identities at 5-sigma / Wilson z=5.  Checks are seeded and
deterministic.  This module is self-contained on purpose: the brute-force
oracles here are written independently of the fast implementations they
check.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Callable

import numpy as np

from .branching import power_word_fourier_exact, restrict
from .errors import PreconditionError
from .experiments import (
    mc_fourier,
    mc_projection_law,
    mc_small_ball,
    mc_trace_moment,
    mc_weingarten_crosscheck,
)
from .haar import SeededRng, UnitaryMatrix, haar_special_unitary
from .partitions import (
    DominantWeight,
    Partition,
    dim_hook_content,
    dim_weyl,
)
from .spectral import (
    char_value,
    geodesic_distance,
    hs_distance,
    is_separated,
    is_spread,
    spread_implies_separated_check,
)
from .symchar import ClassFunction, convolve
from .weingarten import MonomialSpec, weingarten_class_function
from .words import parse_word

__all__ = ["all_checks", "run_all"]


def _random_partition(rng: np.random.Generator, max_weight: int, max_len: int) -> Partition:
    parts = []
    budget = int(rng.integers(0, max_weight + 1))
    cap = budget
    while budget > 0 and len(parts) < max_len and cap > 0:
        p = int(rng.integers(1, cap + 1))
        parts.append(p)
        budget -= p
        cap = min(cap, p, budget)
    return Partition(sorted(parts, reverse=True))


def _random_weight(rng: np.random.Generator, n: int, span: int) -> DominantWeight:
    entries = sorted((int(rng.integers(-span, span + 1)) for _ in range(n)), reverse=True)
    return DominantWeight(n, entries)


def _check_weingarten_inverse() -> bool:
    for m in range(1, 5):
        for n in {m, m + 1, 2 * m, 10}:
            lhs = convolve(
                weingarten_class_function(m, n), ClassFunction.power_of_cycles(m, n)
            )
            if lhs != ClassFunction.delta_identity(m):
                return False
    return True


def _check_dimension_formulas() -> bool:
    rng = np.random.default_rng(101)
    for _ in range(100):
        lam = _random_partition(rng, 12, 6)
        n = int(rng.integers(max(1, lam.length), 11))
        if dim_weyl(lam.to_weight(n)) != dim_hook_content(lam, n):
            return False
    for _ in range(20):
        n = int(rng.integers(2, 7))
        w = _random_weight(rng, n, 3)
        d = dim_weyl(w)
        c = char_value(w, UnitaryMatrix(np.eye(n)))
        if abs(c - d) > 1e-8 * d:
            return False
    return True


def _check_branching_bookkeeping() -> bool:
    rng = np.random.default_rng(202)
    for _ in range(25):
        n = int(rng.integers(2, 6))
        w = _random_weight(rng, n, 2)
        k = int(rng.integers(1, n))
        if not restrict(w, k).dimension_check():
            return False
    return True


def _check_schur_weyl() -> bool:
    from .symchar import partitions_of
    from .partitions import sym_dim

    for m in range(1, 6):
        for n in range(m, 6):
            total = sum(
                sym_dim(lam) * dim_hook_content(lam, n)
                for lam in partitions_of(m)
                if lam.length <= n
            )
            if total != n**m:
                return False
    return True


def _brute_force_spread(angles: np.ndarray, beta: float, eps: float) -> bool:
    n = len(angles)
    width = 2.0 * math.pi if eps >= 1.0 else 2.0 * math.asin(eps)
    worst = 0
    for i in range(n):
        c = sum(1 for j in range(n) if (angles[j] - angles[i]) % (2 * math.pi) <= width)
        worst = max(worst, c)
    return worst <= (1.0 - beta) * n


def _brute_force_separated(points: np.ndarray, gamma: float, eps: float) -> bool:
    n = len(points)
    idx = range(n)
    for size in range(1, n):
        for q in combinations(idx, size):
            qs = set(q)
            r = [i for i in idx if i not in qs]
            if len(q) < gamma * n or len(r) < gamma * n:
                continue
            if all(abs(points[i] - points[j]) >= eps for i in q for j in r):
                return True
    return False


def _check_spectral_predicates() -> bool:
    rng = np.random.default_rng(303)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        angles = rng.uniform(-math.pi, math.pi, size=n)
        if rng.random() < 0.3:  # clustered spectra stress boundaries
            angles[: n // 2] = angles[0] + rng.uniform(0, 0.05, size=n // 2)
        g = UnitaryMatrix(np.diag(np.exp(1j * np.sort(angles))))
        beta = float(rng.uniform(0.1, 0.9))
        gamma = float(rng.uniform(0.1, 0.5))
        eps = float(rng.uniform(0.05, 1.2))
        if is_spread(g, beta, eps) != _brute_force_spread(np.sort(angles), beta, eps):
            return False
        if is_separated(g, gamma, eps) != _brute_force_separated(
            np.exp(1j * np.sort(angles)), gamma, eps
        ):
            return False
    return True


def _check_spread_to_separated() -> bool:
    rng = np.random.default_rng(404)
    done = 0
    while done < 100:
        n = int(rng.integers(2, 8))
        jitter = rng.uniform(-0.2 / n, 0.2 / n, size=n)
        angles = np.sort(2 * math.pi * np.arange(n) / n + jitter)
        g = UnitaryMatrix(np.diag(np.exp(1j * angles)))
        beta = float(rng.uniform(0.05, 0.45))
        eps = float(rng.uniform(0.02, 0.5))
        try:
            if not spread_implies_separated_check(g, beta, eps):
                return False
        except PreconditionError:
            continue
        done += 1
    return True


def _check_products_lemma() -> bool:
    rng = np.random.default_rng(505)
    for _ in range(100):
        size = int(rng.integers(2, 11))
        xs = sorted(set(int(v) for v in rng.integers(-50, 51, size=size)))
        if len(xs) < 2:
            continue
        mask = rng.integers(0, 2, size=len(xs))
        ys = [x for x, b in zip(xs, mask) if b]
        zs = [x for x, b in zip(xs, mask) if not b]

        def logprod(vals):
            return sum(
                math.log(b - a) for a, b in combinations(sorted(vals), 2) if b > a
            )

        ny, nz = len(ys), len(zs)
        expo = (ny * ny + nz * nz) / max(1, ny * ny + ny * nz + nz * nz)
        lhs = logprod(ys) + logprod(zs)
        rhs = len(xs) * math.log(2) + expo * logprod(xs)
        if not lhs < rhs:
            return False
    return True


def _check_small_rep_dimension() -> bool:
    rng = np.random.default_rng(606)
    for _ in range(50):
        n = int(rng.integers(2, 12))
        m = int(rng.integers(1, n + 1))
        mu = _random_partition(rng, m, m)
        m_actual = mu.weight
        if m_actual == 0:
            continue
        # dim >= (n/m)^m exactly: dim * m^m >= n^m
        if dim_hook_content(mu, n) * m_actual**m_actual < n**m_actual:
            return False
    return True


def _check_metric_sandwich() -> bool:
    rng = SeededRng(707)
    for i, n in enumerate((2, 3)):
        gen = rng.worker(i)
        for _ in range(50):
            g = haar_special_unitary(n, gen)
            h = haar_special_unitary(n, gen)
            hs = hs_distance(g, h)
            geo = geodesic_distance(g, h)
            if not (hs <= geo + 1e-9 and geo <= math.pi / 2 * hs + 1e-9):
                return False
    return True


def _check_projection_law() -> bool:
    rep = mc_projection_law(2, 5, 0.3, 20_000, seed=808)
    return bool(rep.passed)


def _check_rains_crosscheck() -> bool:
    cases = [
        ("x1 x1", 2, DominantWeight(2, [1, -1])),
        ("x1 x1", 3, DominantWeight(3, [1, 0, 0])),
    ]
    for text, n, lam in cases:
        word = parse_word(text)
        exact = power_word_fourier_exact(lam, 2)
        est = mc_fourier(word, n, lam, 30_000, seed=909)
        if abs(est.mean - exact) > 5 * est.stderr + 1e-12:
            return False
    return True


def _check_trace_moments() -> bool:
    from .weingarten import moment_tr_exact

    word = parse_word("x1")
    for M in (1, 2):
        rep = mc_trace_moment(word, 4, M, 30_000, seed=1010)
        exact = moment_tr_exact(M, 4)
        if abs(rep.mean.real - exact) > 5 * rep.stderr + 1e-12:
            return False
    return True


def _check_weingarten_mc() -> bool:
    spec = MonomialSpec(m=1, F1=(1,), F2=(1,), H1=(1,), H2=(1,))
    rep = mc_weingarten_crosscheck(1, 4, spec, 20_000, seed=1111)
    return bool(rep.passed)


def _check_small_ball_su2() -> bool:
    delta = 0.3
    rep = mc_small_ball(parse_word("x1"), 2, delta, "geodesic", 30_000, seed=1212)
    psi = math.pi * delta
    cap = (2 * psi - math.sin(2 * psi)) / (2 * math.pi)
    return rep.params["mu_lo"] <= cap <= rep.params["mu_hi"] and rep.passed is not False


def _check_determinism() -> bool:
    lam = DominantWeight(2, [1, -1])
    word = parse_word("x1 x1")
    a = mc_fourier(word, 2, lam, 5_000, seed=1313, workers=2)
    b = mc_fourier(word, 2, lam, 5_000, seed=1313, workers=2)
    return a.mean == b.mean and a.stderr == b.stderr and a.n_samples == b.n_samples


def all_checks() -> list[tuple[str, Callable[[], bool]]]:
    return [
        ("weingarten-inverse", _check_weingarten_inverse),
        ("dimension-formulas", _check_dimension_formulas),
        ("branching-bookkeeping", _check_branching_bookkeeping),
        ("schur-weyl-degrees", _check_schur_weyl),
        ("spectral-predicates-vs-brute-force", _check_spectral_predicates),
        ("spread-implies-separated", _check_spread_to_separated),
        ("products-lemma", _check_products_lemma),
        ("small-representation-dimension", _check_small_rep_dimension),
        ("metric-sandwich", _check_metric_sandwich),
        ("projection-law", _check_projection_law),
        ("rains-crosscheck", _check_rains_crosscheck),
        ("trace-moments", _check_trace_moments),
        ("weingarten-monte-carlo", _check_weingarten_mc),
        ("small-ball-su2", _check_small_ball_su2),
        ("determinism", _check_determinism),
    ]


def run_all(progress=None) -> list[tuple[str, bool]]:
    """Run every check; returns (name, passed) pairs."""
    results = []
    for name, fn in all_checks():
        ok = bool(fn())
        results.append((name, ok))
        if progress is not None:
            progress(name, ok)
    return results
