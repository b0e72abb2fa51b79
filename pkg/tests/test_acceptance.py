"""Acceptance suite: every criterion at its stated tolerance, one PASS/FAIL
line per criterion (run with `pytest tests/test_acceptance.py -v -s`).
"""

import json
import math
import re
import time
from itertools import combinations

import numpy as np

from wordmeasures import (
    ClassFunction,
    DominantWeight,
    Partition,
    UnitaryMatrix,
    SeededRng,
    char_value,
    convolve,
    cycle_types,
    dim_hook_content,
    dim_weyl,
    geodesic_distance,
    haar_special_unitary,
    haar_unitary,
    hs_distance,
    identity_type,
    is_separated,
    is_spread,
    lr_coefficient,
    mc_fourier,
    mc_small_ball,
    mc_trace_moment,
    moment_tr_exact,
    parse_word,
    partitions_of,
    power_word_fourier_exact,
    restrict,
    spread_implies_separated_check,
    weingarten,
    weingarten_class_function,
)
from wordmeasures.cli import run_cli
from wordmeasures.errors import PreconditionError
from _oracles import (
    brute_separated,
    brute_spread,
    lr_by_characters,
    random_partition,
    random_weight,
)


def _report(num: int, desc: str, ok: bool):
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {desc}")
    assert ok, f"criterion {num} failed: {desc}"


# ---------------------------------------------------------------------------


def test_criterion_01_weingarten_inverse():
    t0 = time.perf_counter()
    ok = True
    for m in range(1, 7):
        for n in sorted({m, m + 1, 2 * m, 10}):
            lhs = convolve(
                weingarten_class_function(m, n), ClassFunction.power_of_cycles(m, n)
            )
            ok = ok and lhs == ClassFunction.delta_identity(m)
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 10.0
    _report(1, f"Weingarten inverse exact for m<=6 ({elapsed:.2f}s < 10s)", ok)


def _rains_weights(n: int) -> list[DominantWeight]:
    zeros = [0] * n
    out = [
        DominantWeight(n, [1] + zeros[1:]),
        DominantWeight(n, [1, 1] + zeros[2:]),
        DominantWeight(n, [2] + zeros[1:]),
        DominantWeight(n, [1] + zeros[2:] + [-1]),
        DominantWeight(n, [2] + zeros[2:] + [-2]),
    ]
    assert len({w.entries for w in out}) == 5
    return out


def test_criterion_02_rains_crosscheck():
    t0 = time.perf_counter()
    n_samples = 200_000
    failures = []
    for n in (2, 3, 4):
        for ell in (2, 3):
            word = parse_word(f"x1^{ell}")
            for lam in _rains_weights(n):
                exact = power_word_fourier_exact(lam, ell)
                est = mc_fourier(word, n, lam, n_samples, seed=2000 + 7 * n + ell)
                if abs(est.mean - exact) > 5 * est.stderr + 1e-12:
                    failures.append((n, ell, lam.encode(), exact, est.mean, est.stderr))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300.0
    _report(
        2,
        f"Rains cross-check 30 cases at N=2e5 within 5 stderr ({elapsed:.0f}s < 300s)"
        + (f"; failures={failures}" if failures else ""),
        ok,
    )


def test_criterion_03_trace_moments():
    ok = True
    details = []
    for n in (4, 8):
        for M in (1, 2, 3):
            rep = mc_trace_moment(parse_word("x1"), n, M, 200_000, seed=3000 + 10 * n + M)
            exact = moment_tr_exact(M, n)
            good = abs(rep.mean.real - exact) <= 5 * rep.stderr
            ok = ok and good
            if not good:
                details.append((n, M, rep.mean.real, rep.stderr))
    gate = mc_trace_moment(parse_word("x1 x2"), 128, 1, 2_000, seed=3100)
    ok = ok and gate.passed is True and gate.bound == 16.0
    _report(
        3,
        "trace moments E|tr X|^2M = M! at n in {4,8} and the n=128 product-word gate"
        + (f"; off: {details}" if details else ""),
        ok,
    )


def test_criterion_04_dimension_formulas():
    rng = np.random.default_rng(4000)
    ok = True
    for _ in range(500):
        lam = random_partition(rng, 12, 6)
        n = int(rng.integers(max(1, lam.length), 11))
        ok = ok and dim_weyl(lam.to_weight(n)) == dim_hook_content(lam, n)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        lam = random_partition(rng, 20, n)
        shift = int(rng.integers(-2, 3))
        w = DominantWeight(n, [e + shift for e in lam.padded(n)])
        d = dim_weyl(w)
        ok = ok and abs(char_value(w, UnitaryMatrix(np.eye(n))) - d) <= 1e-8 * d
    _report(4, "dimension formulas: 500 exact equalities + 100 identity characters", ok)


def test_criterion_05_branching_bookkeeping():
    rng = np.random.default_rng(5000)
    ok = True
    for _ in range(200):
        n = int(rng.integers(2, 6))
        lam = random_weight(rng, n, 3)
        k = int(rng.integers(1, n))
        ok = ok and restrict(lam, k).dimension_check()
    # complete LR sweep against the character inner-product oracle, |nu| <= 6
    for w in range(0, 7):
        for nu in partitions_of(w):
            for a in range(0, w + 1):
                for lam in partitions_of(a):
                    for mu in partitions_of(w - a):
                        ok = ok and lr_coefficient(lam, mu, nu) == lr_by_characters(
                            lam, mu, nu
                        )
    _report(5, "branching bookkeeping exact on 200 restrictions; LR sweep |nu|<=6", ok)


def test_criterion_06_symmetric_square_identity():
    rng = np.random.default_rng(6000)
    gen = SeededRng(6001).worker(0)
    ok = True
    for _ in range(50):
        n = int(rng.integers(2, 6))
        m = int(rng.integers(0, 7))
        g = haar_unitary(n, gen)
        h = char_value(Partition([m]).to_weight(n), g)
        total = sum(
            char_value(DominantWeight(n, [c] + [0] * (n - 2) + [-c]), g)
            for c in range(m + 1)
        )
        ok = ok and abs(abs(h) ** 2 - total) < 1e-6
    _report(6, "|h_m|^2 = sum of two-sided weights on 50 random (g, n<=5, m<=6)", ok)


def test_criterion_07_metric_volume():
    ok = True
    details = []
    # SU(2) ball volume against the exact round-sphere cap formula
    for i, delta in enumerate((0.1, 0.3, 0.5)):
        rep = mc_small_ball(
            parse_word("x1"), 2, delta, "geodesic", 100_000, seed=7000 + i
        )
        psi = math.pi * delta
        cap = (2 * psi - math.sin(2 * psi)) / (2 * math.pi)
        good = rep.params["mu_lo"] <= cap <= rep.params["mu_hi"]
        ok = ok and good and rep.passed is True
        if not good:
            details.append(("cap", delta, cap, rep.params["mu_hat"]))
    # volume bracket and doubling for n in {2, 3}
    for n in (2, 3):
        delta = 0.3
        lo_b = delta ** (n * n - 1)
        hi_b = 6.0 ** (n * n) * delta ** (n * n - 1)
        reps = {}
        for j, d in enumerate((delta, 2 * delta)):
            reps[d] = mc_small_ball(
                parse_word("x1"), n, d, "geodesic", 100_000, seed=7100 + 10 * n
            )
        mu1 = reps[delta].params
        good = mu1["mu_lo"] <= hi_b and mu1["mu_hi"] >= min(lo_b, 1.0)
        ok = ok and good
        if not good:
            details.append(("bracket", n, mu1["mu_hat"], lo_b, hi_b))
        p1, p2 = mu1["mu_hat"], reps[2 * delta].params["mu_hat"]
        n_samp = 100_000
        rel = math.sqrt(
            (p1 * (1 - p1) / n_samp) / p1**2 + (p2 * (1 - p2) / n_samp) / p2**2
        )
        good = p2 / p1 <= 2 ** (n * n - 1) * (1 + 5 * rel)
        ok = ok and good
        if not good:
            details.append(("doubling", n, p2 / p1, 2 ** (n * n - 1)))
    _report(
        7,
        "SU(2) cap volumes, volume brackets and doubling bounds"
        + (f"; off: {details}" if details else ""),
        ok,
    )


def test_criterion_08_spectral_predicates():
    rng = np.random.default_rng(8000)
    ok = True
    for _ in range(500):
        n = int(rng.integers(2, 9))
        angles = np.sort(rng.uniform(-math.pi, math.pi, size=n))
        if rng.random() < 0.3:
            angles[: n // 2] = angles[0] + rng.uniform(0, 0.08, size=n // 2)
            angles = np.sort(angles)
        g = UnitaryMatrix(np.diag(np.exp(1j * angles)))
        beta = float(rng.uniform(0.05, 0.95))
        gamma = float(rng.uniform(0.05, 0.5))
        eps = float(rng.uniform(0.05, 1.3))
        ok = ok and is_spread(g, beta, eps) == brute_spread(angles, beta, eps)
        ok = ok and is_separated(g, gamma, eps) == brute_separated(
            np.exp(1j * angles), gamma, eps
        )
    done = 0
    while done < 1000:
        n = int(rng.integers(2, 9))
        jitter = rng.uniform(-0.3 / n, 0.3 / n, size=n)
        g = UnitaryMatrix(
            np.diag(np.exp(1j * np.sort(2 * math.pi * np.arange(n) / n + jitter)))
        )
        beta = float(rng.uniform(0.05, 0.45))
        eps = float(rng.uniform(0.02, 0.6))
        try:
            ok = ok and spread_implies_separated_check(g, beta, eps)
        except PreconditionError:
            continue
        done += 1
    _report(8, "predicates match brute force (500) and spread=>separated (1000)", ok)


def _check_chi_of_t(rng) -> bool:
    for _ in range(40):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(1, n))
        lam = random_partition(rng, 12, n)
        shift = int(rng.integers(-2, 3))
        w = DominantWeight(n, [e + shift for e in lam.padded(n)])
        a_angles = rng.uniform(-0.2, 0.2, size=m)
        b_angles = math.pi + rng.uniform(-0.2, 0.2, size=n - m)
        pts = np.exp(1j * np.concatenate([a_angles, b_angles]))
        eps = min(abs(pts[i] - pts[j]) for i in range(m) for j in range(m, n))
        val = abs(char_value(w, UnitaryMatrix(np.diag(pts))))
        expo = (n * n - 2 * m * n + 2 * m * m) / (n * n - m * n + m * m)
        log_rhs = (
            2 * n * n * math.log2(n) * math.log(2.0)
            - m * (n - m) * math.log(eps)
            + expo * math.log(dim_weyl(w))
        )
        if math.log(max(val, 1e-300)) > log_rhs + 1e-9:
            return False
    return True


def _check_products(rng) -> bool:
    checked = 0
    while checked < 200:
        size = int(rng.integers(2, 11))
        xs = sorted(set(int(v) for v in rng.integers(-40, 41, size=size)))
        if len(xs) < 2:
            continue
        mask = rng.integers(0, 2, size=len(xs))
        ys = [x for x, b in zip(xs, mask) if b]
        zs = [x for x, b in zip(xs, mask) if not b]

        def logprod(vals):
            return sum(math.log(b - a) for a, b in combinations(sorted(vals), 2))

        ny, nz = len(ys), len(zs)
        expo = (ny * ny + nz * nz) / (ny * ny + ny * nz + nz * nz)
        if not logprod(ys) + logprod(zs) < len(xs) * math.log(2) + expo * logprod(xs):
            return False
        checked += 1
    return True


def _check_dim_ineq(rng) -> bool:
    def weyl_strict(vals):
        num, den = 1, 1
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                num *= vals[i] - vals[j]
                den *= j - i
        return num // den

    for _ in range(30):
        n = int(rng.integers(3, 9))
        m = int(rng.integers(1, n))
        lam = random_partition(rng, 8, n).to_weight(n)
        xs = [lam.entries[i] + (n - 1 - i) for i in range(n)]
        c_h = 1
        for i in range(1, m):
            c_h *= i ** (m - i)
        for j in range(1, n - m):
            c_h *= j ** (n - m - j)
        c_g = 1
        for k in range(1, n):
            c_g *= k ** (n - k)
        p = n * n - 2 * m * n + 2 * m * m
        q = n * n - m * n + m * m
        rho_g = dim_weyl(lam)
        for y_idx in combinations(range(n), m):
            ys = sorted((xs[i] for i in y_idx), reverse=True)
            zs = sorted((xs[i] for i in range(n) if i not in set(y_idx)), reverse=True)
            rho_h = weyl_strict(ys) * weyl_strict(zs)
            if (c_h * rho_h) ** q > 2 ** (n * q) * (rho_g * c_g) ** p:
                return False
    return True


def _check_small_rep_dims(rng) -> bool:
    checked = 0
    while checked < 100:
        n = int(rng.integers(1, 13))
        mu = random_partition(rng, n, n)
        m = mu.weight
        if m == 0 or mu.length > n:
            continue
        if dim_hook_content(mu, n) * m**m < n**m:
            return False
        checked += 1
    return True


def _check_weingarten_bounds() -> bool:
    from fractions import Fraction

    for m in range(1, 5):
        n = 1
        while (8 * m) ** 7 > n**4:
            n += 1
        wg_e = weingarten(m, n, identity_type(m))
        if wg_e > Fraction(2, n**m):
            return False
        for c in cycle_types(m):
            if abs(weingarten(m, n, c)) > wg_e:
                return False
    return True


def _check_metric_sandwich() -> bool:
    rng = SeededRng(9100)
    for idx, n in enumerate((2, 3, 4, 5)):
        gen = rng.worker(idx)
        for _ in range(250):
            g = haar_special_unitary(n, gen)
            h = haar_special_unitary(n, gen)
            d_hs = hs_distance(g, h)
            d_geo = geodesic_distance(g, h)
            if not (d_hs <= d_geo + 1e-9 and d_geo <= math.pi / 2 * d_hs + 1e-9):
                return False
    return True


def _check_sphere_bracket() -> bool:
    from wordmeasures import mc_projection_law

    rep = mc_projection_law(2, 5, 0.3, 100_000, seed=9200)
    return bool(rep.passed)


def test_criterion_09_inequality_suite():
    t0 = time.perf_counter()
    rng = np.random.default_rng(9000)
    results = {
        "chi-of-t": _check_chi_of_t(rng),
        "products": _check_products(rng),
        "dim-ineq": _check_dim_ineq(rng),
        "small-rep-dims": _check_small_rep_dims(rng),
        "weingarten-bounds": _check_weingarten_bounds(),
        "metric-sandwich": _check_metric_sandwich(),
        "sphere-bracket": _check_sphere_bracket(),
    }
    elapsed = time.perf_counter() - t0
    bad = [k for k, v in results.items() if not v]
    ok = not bad and elapsed < 600.0
    _report(
        9,
        f"inequality verifier suite, zero violations ({elapsed:.0f}s < 600s)"
        + (f"; failed: {bad}" if bad else ""),
        ok,
    )


def test_criterion_10_determinism(tmp_path):
    argv = [
        "fourier",
        "--word", "x1 x1",
        "--n", "2",
        "--lambda", "[1,-1]",
        "--samples", "20000",
        "--seed", "42",
        "--workers", "3",
    ]
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    c1 = run_cli(argv + ["--out", str(out1)])
    c2 = run_cli(argv + ["--out", str(out2)])
    pat = re.compile(rb'"elapsed_ms": [0-9.e+-]+')
    b1 = pat.sub(b'"elapsed_ms": 0', out1.read_bytes())
    b2 = pat.sub(b'"elapsed_ms": 0', out2.read_bytes())
    ok = c1 == c2 == 0 and b1 == b2 and json.loads(b1)["seed"] == 42
    _report(10, "re-runs reproduce byte-identical JSON modulo elapsed_ms", ok)
