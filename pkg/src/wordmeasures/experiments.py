"""Seeded, sample-parallel Monte Carlo experiments.

Each experiment draws from counter-based per-worker streams, accumulates
moments with Welford updates, and merges worker aggregates in index order, so
a fixed (seed, workers) pair reproduces results bit for bit.  Probability
experiments are gated with Wilson score intervals at z = 5; mean experiments
use 5-sigma gates (plus a tiny absolute slack so exactly-constant estimators
with zero variance still compare cleanly).
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.stats import beta as _beta_dist

from .errors import DomainError, HypothesisError, RankError, TrivialWordError
from .haar import (
    SeededRng,
    haar_special_unitary_batch,
    haar_unitary_batch,
    word_eval_batch,
)
from .partitions import DominantWeight, dim_weyl
from .spectral import (
    ball_volume_bounds,
    beta_n,
    char_value_batch,
    max_arc_counts,
    _arc_width,
)
from .weingarten import MonomialSpec, integrate_monomial
from .words import FreeWord, concat, cyclically_reduce

__all__ = [
    "EstimateResult",
    "Report",
    "wilson_bounds",
    "mc_fourier",
    "mc_convolution_identity",
    "mc_spread_failure",
    "mc_approx_eigenvectors",
    "mc_projection_law",
    "mc_small_ball",
    "mc_trace_moment",
    "mc_weingarten_crosscheck",
]

GATE_Z = 5.0
ABS_SLACK = 1e-12


@dataclass
class EstimateResult:
    """Aggregated Monte Carlo estimate with its provenance."""

    experiment: str
    params: dict
    mean: complex
    stderr: float
    n_samples: int
    seed: int
    workers: int
    elapsed_ms: float

    def to_json_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "params": self.params,
            "estimate": {
                "mean_re": float(self.mean.real),
                "mean_im": float(self.mean.imag),
                "stderr": float(self.stderr),
            },
            "pass": None,
            "bound": None,
            "n_samples": self.n_samples,
            "seed": self.seed,
            "workers": self.workers,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class Report:
    """An estimate together with a verdict against a stated bound.

    passed is None for purely informational runs (vacuous or forced past a
    hypothesis check); notes explain why.
    """

    experiment: str
    params: dict
    mean: complex
    stderr: float
    passed: Optional[bool]
    bound: Optional[float]
    n_samples: int
    seed: int
    workers: int
    elapsed_ms: float
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "params": self.params,
            "estimate": {
                "mean_re": float(self.mean.real),
                "mean_im": float(self.mean.imag),
                "stderr": float(self.stderr),
            },
            "pass": self.passed,
            "bound": None if self.bound is None else float(self.bound),
            "n_samples": self.n_samples,
            "seed": self.seed,
            "workers": self.workers,
            "elapsed_ms": self.elapsed_ms,
        }


class Welford:
    """Streaming mean/M2 accumulator; merges are associative and commutative."""

    __slots__ = ("n", "mean", "m2")

    def __init__(self):
        self.n = 0
        self.mean = 0j
        self.m2 = 0.0

    def add(self, values: np.ndarray):
        v = np.asarray(values, dtype=np.complex128).ravel()
        if v.size == 0:
            return
        bmean = complex(v.mean())
        bm2 = float(np.square(np.abs(v - bmean)).sum())
        self._merge(v.size, bmean, bm2)

    def merge(self, other: "Welford"):
        self._merge(other.n, other.mean, other.m2)

    def _merge(self, n2: int, mean2: complex, m22: float):
        if n2 == 0:
            return
        n1, mean1, m21 = self.n, self.mean, self.m2
        n = n1 + n2
        delta = mean2 - mean1
        self.mean = mean1 + delta * (n2 / n)
        self.m2 = m21 + m22 + abs(delta) ** 2 * (n1 * n2 / n)
        self.n = n

    @property
    def stderr(self) -> float:
        if self.n <= 1:
            return 0.0
        return math.sqrt(self.m2 / (self.n - 1) / self.n)


def wilson_bounds(successes: int, total: int, z: float = GATE_Z) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if total == 0:
        return (0.0, 1.0)
    p = successes / total
    z2 = z * z
    denom = 1.0 + z2 / total
    center = (p + z2 / (2.0 * total)) / denom
    half = z * math.sqrt(p * (1.0 - p) / total + z2 / (4.0 * total * total)) / denom
    return (max(0.0, center - half), min(1.0, center + half))


def _batch_size(n: int) -> int:
    # deterministic function of n: large batches for small matrices
    return max(1, min(4096, 8_000_000 // max(16, n * n)))


def _worker_moments(
    kernel: Callable[[np.random.Generator, int], np.ndarray],
    gen: np.random.Generator,
    count: int,
    batch: int,
) -> Welford:
    acc = Welford()
    remaining = count
    while remaining > 0:
        b = min(batch, remaining)
        acc.add(kernel(gen, b))
        remaining -= b
    return acc


def _run_mc(
    experiment: str,
    params: dict,
    kernel: Callable[[np.random.Generator, int], np.ndarray],
    *,
    n: int,
    n_samples: int,
    seed: int,
    workers: int,
    stream_offset: int = 0,
) -> EstimateResult:
    if n_samples < 1:
        raise DomainError("n_samples must be >= 1")
    if workers < 1:
        raise DomainError("workers must be >= 1")
    t0 = time.perf_counter()
    batch = _batch_size(n)
    counts = [
        n_samples // workers + (1 if i < n_samples % workers else 0)
        for i in range(workers)
    ]
    gens = SeededRng(seed).streams(workers, offset=stream_offset)
    if workers == 1:
        accs = [_worker_moments(kernel, gens[0], counts[0], batch)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_worker_moments, kernel, gens[i], counts[i], batch)
                for i in range(workers)
            ]
            accs = [f.result() for f in futures]
    total = Welford()
    for acc in accs:  # merge in worker order: deterministic
        total.merge(acc)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return EstimateResult(
        experiment=experiment,
        params=params,
        mean=total.mean,
        stderr=total.stderr,
        n_samples=total.n,
        seed=seed,
        workers=workers,
        elapsed_ms=elapsed,
    )


def _require_word(word: FreeWord):
    if word.is_trivial():
        raise TrivialWordError("a non-trivial word is required")


def _word_values(
    word: FreeWord, n: int, count: int, gen: np.random.Generator, special: bool = False
) -> np.ndarray:
    sampler = haar_special_unitary_batch if special else haar_unitary_batch
    stacks = [sampler(n, count, gen) for _ in range(word.rank)]
    return word_eval_batch(word, stacks)


def _power_bound(log2_coeff: float, base: float, exponent: float) -> float:
    """2^log2_coeff * base^exponent without overflow."""
    log_e = log2_coeff * math.log(2.0) + exponent * math.log(base)
    if log_e > 700.0:
        return math.inf
    if log_e < -745.0:
        return 0.0
    return math.exp(log_e)


def _successes(est: EstimateResult) -> int:
    return int(round(est.mean.real * est.n_samples))


# ---------------------------------------------------------------------------
# Fourier coefficients


def _estimate_fourier(
    word: FreeWord,
    n: int,
    lam: DominantWeight,
    n_samples: int,
    seed: int,
    workers: int,
    stream_offset: int = 0,
) -> EstimateResult:
    _require_word(word)
    if lam.n != n:
        raise RankError(f"weight rank {lam.n} != n={n}")

    def kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        values = _word_values(word, n, count, gen)
        eigs = np.linalg.eigvals(values)
        return char_value_batch(lam, eigs)

    params = {"word": word.encode(), "n": n, "lambda": lam.encode()}
    return _run_mc(
        "fourier",
        params,
        kernel,
        n=n,
        n_samples=n_samples,
        seed=seed,
        workers=workers,
        stream_offset=stream_offset,
    )


def mc_fourier(
    word: FreeWord,
    n: int,
    lam: DominantWeight,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> EstimateResult:
    """Empirical mean of the character at random word values in U(n)."""
    return _estimate_fourier(word, n, lam, n_samples, seed, workers)


def mc_convolution_identity(
    w1: FreeWord,
    w2: FreeWord,
    n: int,
    lam: DominantWeight,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> Report:
    """Check a(w1*w2) = a(w1) a(w2) / dim from three independent estimates."""
    t0 = time.perf_counter()
    est_cat = _estimate_fourier(
        concat(w1, w2), n, lam, n_samples, seed, workers, stream_offset=0
    )
    est1 = _estimate_fourier(w1, n, lam, n_samples, seed, workers, stream_offset=workers)
    est2 = _estimate_fourier(
        w2, n, lam, n_samples, seed, workers, stream_offset=2 * workers
    )
    dim = dim_weyl(lam)
    rhs = est1.mean * est2.mean / dim
    diff = abs(est_cat.mean - rhs)
    pooled = math.sqrt(
        est_cat.stderr**2
        + (abs(est2.mean) * est1.stderr / dim) ** 2
        + (abs(est1.mean) * est2.stderr / dim) ** 2
    )
    passed = diff <= GATE_Z * pooled + ABS_SLACK
    params = {
        "word1": w1.encode(),
        "word2": w2.encode(),
        "n": n,
        "lambda": lam.encode(),
        "lhs_re": float(est_cat.mean.real),
        "lhs_im": float(est_cat.mean.imag),
        "rhs_re": float(rhs.real),
        "rhs_im": float(rhs.imag),
        "diff": float(diff),
    }
    return Report(
        experiment="conv-check",
        params=params,
        mean=est_cat.mean,
        stderr=pooled,
        passed=passed,
        bound=GATE_Z * pooled,
        n_samples=3 * n_samples,
        seed=seed,
        workers=workers,
        elapsed_ms=(time.perf_counter() - t0) * 1000.0,
    )


# ---------------------------------------------------------------------------
# Spectral probability experiments


def mc_spread_failure(
    word: FreeWord,
    n: int,
    beta: float,
    eps: float,
    n_samples: int,
    seed: int,
    workers: int = 1,
    force: bool = False,
) -> Report:
    """Empirical probability that a random word value fails to be
    (beta, eps)-spread, against the bound 2^(3 n^2) eps^(n^2 (1-beta)^2 / (4(l+1)))."""
    _require_word(word)
    if not (0.0 < beta < 1.0):
        raise DomainError(f"need 0 < beta < 1, got {beta}")
    if eps <= 0.0:
        raise DomainError(f"need eps > 0, got {eps}")
    ell = word.length
    hypothesis = n > max(4 * ell / (1 - beta), 8 / (1 - beta), 16)
    if not hypothesis and not force:
        raise HypothesisError(
            f"need n > max(4l/(1-beta), 8/(1-beta), 16); n={n} is too small "
            "(pass force=True for an informational run)"
        )
    width = _arc_width(eps)
    threshold = (1.0 - beta) * n

    def kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        values = _word_values(word, n, count, gen)
        angles = np.angle(np.linalg.eigvals(values))
        worst = max_arc_counts(angles, width)
        return (worst > threshold).astype(np.float64)

    params = {"word": word.encode(), "n": n, "beta": beta, "eps": eps}
    est = _run_mc(
        "spread-prob", params, kernel, n=n, n_samples=n_samples, seed=seed, workers=workers
    )
    bound = _power_bound(3.0 * n * n, eps, n * n * (1 - beta) ** 2 / (4.0 * (ell + 1)))
    lo, hi = wilson_bounds(_successes(est), est.n_samples)
    notes = []
    if bound >= 1.0:
        notes.append("bound >= 1: the inequality is vacuous at these parameters")
    passed: Optional[bool] = hi <= bound
    if not hypothesis:
        passed = None
        notes.append("hypothesis on n not met; informational (non-theorem) run")
    params = dict(params, p_lo=lo, p_hi=hi)
    return Report(
        experiment="spread-prob",
        params=params,
        mean=est.mean,
        stderr=est.stderr,
        passed=passed,
        bound=bound,
        n_samples=est.n_samples,
        seed=seed,
        workers=workers,
        elapsed_ms=est.elapsed_ms,
        notes=tuple(notes),
    )


def mc_approx_eigenvectors(
    word: FreeWord,
    n: int,
    m: int,
    eps: float,
    n_samples: int,
    seed: int,
    workers: int = 1,
    force: bool = False,
) -> Report:
    """Empirical probability that m independent uniform unit vectors are all
    eps-approximate eigenvectors of a random word value."""
    _require_word(word)
    if m < 1:
        raise DomainError("m must be >= 1")
    if eps <= 0.0:
        raise DomainError("eps must be > 0")
    ell = word.length
    hypothesis = n > m * (ell + 1)
    if not hypothesis and not force:
        raise HypothesisError(
            f"need n > m(l+1) = {m * (ell + 1)}, got n={n} "
            "(pass force=True for an informational run)"
        )

    def kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        values = _word_values(word, n, count, gen)
        v = gen.standard_normal((count, m, n)) + 1j * gen.standard_normal((count, m, n))
        v /= np.linalg.norm(v, axis=2, keepdims=True)
        gv = np.einsum("bij,bmj->bmi", values, v)
        coeff = np.einsum("bmi,bmi->bm", np.conjugate(v), gv)
        defect = np.linalg.norm(gv - coeff[:, :, None] * v, axis=2)
        return (defect <= eps).all(axis=1).astype(np.float64)

    params = {"word": word.encode(), "n": n, "m": m, "eps": eps}
    est = _run_mc(
        "approx-eig", params, kernel, n=n, n_samples=n_samples, seed=seed, workers=workers
    )
    bound = _power_bound(
        3.0 * n * m * (ell + 1), eps, m * (2 * n - 2 * m * (ell + 1) - 1)
    )
    lo, hi = wilson_bounds(_successes(est), est.n_samples)
    notes = []
    if bound >= 1.0:
        notes.append("bound >= 1: the inequality is vacuous at these parameters")
    passed: Optional[bool] = hi <= bound
    if not hypothesis:
        passed = None
        notes.append("hypothesis on n not met; informational (non-theorem) run")
    params = dict(params, p_lo=lo, p_hi=hi)
    return Report(
        experiment="approx-eig",
        params=params,
        mean=est.mean,
        stderr=est.stderr,
        passed=passed,
        bound=bound,
        n_samples=est.n_samples,
        seed=seed,
        workers=workers,
        elapsed_ms=est.elapsed_ms,
        notes=tuple(notes),
    )


def projection_law_exact(d: int, n: int, eps: float) -> float:
    """Exact P(|pr_W X| <= eps) for a uniform unit vector in C^n and a
    d-dimensional coordinate subspace W: the squared norm is Beta(d, n-d)."""
    if not (1 <= d <= n):
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    if d == n:
        return 1.0 if eps >= 1.0 else 0.0
    return float(_beta_dist.cdf(min(eps * eps, 1.0), d, n - d))


def mc_projection_law(
    d: int,
    n: int,
    eps: float,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> Report:
    """Sample the projection-norm law and check it against both the bracket
    4^-n eps^2d <= P <= 2^n eps^2d and the exact Beta(d, n-d) value."""
    if not (1 <= d <= n):
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    if eps <= 0.0:
        raise DomainError("eps must be > 0")

    def kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        v = gen.standard_normal((count, n)) + 1j * gen.standard_normal((count, n))
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        proj = np.linalg.norm(v[:, :d], axis=1)
        return (proj <= eps).astype(np.float64)

    params = {"d": d, "n": n, "eps": eps}
    est = _run_mc(
        "projection-law", params, kernel, n=n, n_samples=n_samples, seed=seed, workers=workers
    )
    lo, hi = wilson_bounds(_successes(est), est.n_samples)
    lower = _power_bound(-2.0 * n, eps, 2 * d)  # 4^-n eps^2d
    upper = _power_bound(float(n), eps, 2 * d)
    exact = projection_law_exact(d, n, eps)
    bracket_ok = (lo <= min(upper, 1.0)) and (hi >= min(lower, 1.0))
    exact_ok = lo <= exact <= hi
    params = dict(
        params, p_lo=lo, p_hi=hi, exact=exact, bracket_lo=lower, bracket_hi=upper
    )
    return Report(
        experiment="projection-law",
        params=params,
        mean=est.mean,
        stderr=est.stderr,
        passed=bracket_ok and exact_ok,
        bound=upper,
        n_samples=est.n_samples,
        seed=seed,
        workers=workers,
        elapsed_ms=est.elapsed_ms,
    )


# ---------------------------------------------------------------------------
# Small-ball and trace moments


def _distance_to_identity(values: np.ndarray, metric: str, n: int) -> np.ndarray:
    scale = math.sqrt(beta_n(n))
    if metric == "hs":
        return np.linalg.norm(values - np.eye(n), axis=(1, 2)) / scale
    if metric == "geodesic":
        ang = np.angle(np.linalg.eigvals(values))
        return np.sqrt((ang**2).sum(axis=1)) / scale
    raise DomainError(f"metric must be 'hs' or 'geodesic', got {metric!r}")


def mc_small_ball(
    word: FreeWord,
    n: int,
    delta: float,
    metric: str,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> Report:
    """Empirical word-measure and Haar mass of the radius-delta ball at the
    identity in SU(n); checks tau <= mu^(1/(256(l+1))) and the volume bracket."""
    _require_word(word)
    if not (0.0 < delta < 1.0):
        raise DomainError(f"need 0 < delta < 1, got {delta}")
    if n < 2:
        raise DomainError("need n >= 2")
    if metric not in ("hs", "geodesic"):
        raise DomainError(f"metric must be 'hs' or 'geodesic', got {metric!r}")

    def word_kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        values = _word_values(word, n, count, gen, special=True)
        return (_distance_to_identity(values, metric, n) <= delta).astype(np.float64)

    def haar_kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        values = haar_special_unitary_batch(n, count, gen)
        return (_distance_to_identity(values, metric, n) <= delta).astype(np.float64)

    params = {"word": word.encode(), "n": n, "delta": delta, "metric": metric}
    tau_est = _run_mc(
        "small-ball", params, word_kernel, n=n, n_samples=n_samples, seed=seed, workers=workers
    )
    mu_est = _run_mc(
        "small-ball",
        params,
        haar_kernel,
        n=n,
        n_samples=n_samples,
        seed=seed,
        workers=workers,
        stream_offset=workers,
    )
    eps_w = 1.0 / (256.0 * (word.length + 1))
    tau_lo, tau_hi = wilson_bounds(_successes(tau_est), tau_est.n_samples)
    mu_lo, mu_hi = wilson_bounds(_successes(mu_est), mu_est.n_samples)
    bracket_lo, bracket_hi = ball_volume_bounds(n, delta)
    bracket_ok = (mu_lo <= bracket_hi) and (mu_hi >= min(bracket_lo, 1.0))
    notes = []
    if mu_lo > 0.0:
        bound = mu_lo**eps_w
        passed: Optional[bool] = (tau_hi <= bound) and bracket_ok
    else:
        bound = None
        passed = None
        notes.append("no Haar samples landed in the ball; gate is informational")
    params = dict(
        params,
        tau_hat=float(tau_est.mean.real),
        mu_hat=float(mu_est.mean.real),
        tau_lo=tau_lo,
        tau_hi=tau_hi,
        mu_lo=mu_lo,
        mu_hi=mu_hi,
        eps_w=eps_w,
        bracket_lo=bracket_lo,
        bracket_hi=bracket_hi,
    )
    return Report(
        experiment="small-ball",
        params=params,
        mean=tau_est.mean,
        stderr=tau_est.stderr,
        passed=passed,
        bound=bound,
        n_samples=tau_est.n_samples + mu_est.n_samples,
        seed=seed,
        workers=workers,
        elapsed_ms=tau_est.elapsed_ms + mu_est.elapsed_ms,
        notes=tuple(notes),
    )


def mc_trace_moment(
    word: FreeWord,
    n: int,
    M: int,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> Report:
    """Empirical E|tr w|^(2M) against the bound 2^l (Ml)!^2, asserted only in
    the regime (8Ml)^(7/4) <= n; outside it the run is informational."""
    _require_word(word)
    if M < 1:
        raise DomainError("M must be >= 1")
    reduced = cyclically_reduce(word)
    ell = reduced.length

    def kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        values = _word_values(reduced, n, count, gen)
        tr = np.trace(values, axis1=1, axis2=2)
        return np.abs(tr) ** (2 * M)

    params = {"word": word.encode(), "reduced": reduced.encode(), "n": n, "M": M}
    est = _run_mc(
        "trace-moment", params, kernel, n=n, n_samples=n_samples, seed=seed, workers=workers
    )
    bound = float(2**ell * math.factorial(M * ell) ** 2)
    in_regime = (8 * M * ell) ** 7 <= n**4
    notes = []
    if in_regime:
        passed: Optional[bool] = est.mean.real - GATE_Z * est.stderr <= bound
    else:
        passed = None
        notes.append("outside the regime (8Ml)^(7/4) <= n; informational only")
    return Report(
        experiment="trace-moment",
        params=params,
        mean=est.mean,
        stderr=est.stderr,
        passed=passed,
        bound=bound,
        n_samples=est.n_samples,
        seed=seed,
        workers=workers,
        elapsed_ms=est.elapsed_ms,
        notes=tuple(notes),
    )


def mc_weingarten_crosscheck(
    m: int,
    n: int,
    spec: MonomialSpec,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> Report:
    """Empirical matrix-entry monomial expectation vs. the exact Weingarten sum."""
    if m != spec.m:
        raise DomainError(f"m={m} does not match the monomial degree {spec.m}")
    if m > 3:
        raise DomainError("m is capped at 3 for variance control")
    exact = float(integrate_monomial(spec, n))
    f1 = np.asarray(spec.F1) - 1
    f2 = np.asarray(spec.F2) - 1
    h1 = np.asarray(spec.H1) - 1
    h2 = np.asarray(spec.H2) - 1

    def kernel(gen: np.random.Generator, count: int) -> np.ndarray:
        x = haar_unitary_batch(n, count, gen)
        prod1 = np.prod(x[:, f1, f2], axis=1)
        prod2 = np.prod(x[:, h1, h2], axis=1)
        return prod1 * np.conjugate(prod2)

    params = {
        "m": m,
        "n": n,
        "F1": list(spec.F1),
        "F2": list(spec.F2),
        "H1": list(spec.H1),
        "H2": list(spec.H2),
        "exact": exact,
    }
    est = _run_mc(
        "weingarten", params, kernel, n=n, n_samples=n_samples, seed=seed, workers=workers
    )
    diff = abs(est.mean - exact)
    passed = diff <= GATE_Z * est.stderr + ABS_SLACK
    return Report(
        experiment="weingarten",
        params=params,
        mean=est.mean,
        stderr=est.stderr,
        passed=passed,
        bound=GATE_Z * est.stderr,
        n_samples=est.n_samples,
        seed=seed,
        workers=workers,
        elapsed_ms=est.elapsed_ms,
    )
