"""Seeded Monte Carlo experiments: Fourier coefficients of word measures,
convolution identities, spectral-spread probabilities, and small balls.

Every experiment is reproducible from (seed, workers); the same pair gives
bit-identical estimates.

Run with: python demos/06_monte_carlo_experiments.py   (about a minute)
"""

from wordmeasures import (
    DominantWeight,
    mc_convolution_identity,
    mc_fourier,
    mc_projection_law,
    mc_small_ball,
    mc_spread_failure,
    mc_trace_moment,
    parse_word,
    power_word_fourier_exact,
)

N = 50_000

# Empirical Fourier coefficient of x^2 at the SU(2) adjoint vs. its exact value.
lam = DominantWeight(2, [1, -1])
word = parse_word("x1 x1")
est = mc_fourier(word, 2, lam, N, seed=1)
print(f"a(x^2, adjoint) ~ {est.mean.real:.4f} +- {est.stderr:.4f}",
      "   exact:", power_word_fourier_exact(lam, 2))

# Concatenation multiplies Fourier coefficients (and divides by the degree).
rep = mc_convolution_identity(word, word, 2, lam, N, seed=2)
print(f"conv identity: lhs {rep.params['lhs_re']:.4f} "
      f"rhs {rep.params['rhs_re']:.4f} pass={rep.passed}")

# Probability that a word value is poorly spread, against the stated bound
# (vacuous at desk scale, which the report records via bound >> 1).
rep = mc_spread_failure(parse_word("x1"), 17, 0.5, 0.05, 5_000, seed=3)
print(f"P(Haar element not (1/2, 0.05)-spread) ~ {rep.mean.real:.4f}; "
      f"bound {rep.bound:.3g}; pass={rep.passed}")

# The commutator at n=17 sits outside the theorem's n-range, so the run is
# forced and archived as informational only.
rep = mc_spread_failure(
    parse_word("x1 x2 x1^-1 x2^-1"), 17, 0.5, 0.05, 5_000, seed=3, force=True
)
print(f"P(commutator value not (1/2, 0.05)-spread) ~ {rep.mean.real:.4f}; "
      f"informational (pass={rep.passed})")

# Projection-norm law of a uniform unit vector: Beta(d, n-d) exactly.
rep = mc_projection_law(2, 5, 0.3, N, seed=4)
print(f"P(|pr| <= 0.3) ~ {rep.mean.real:.5f}; exact {rep.params['exact']:.5f}; "
      f"bracket [{rep.params['bracket_lo']:.2g}, {rep.params['bracket_hi']:.2g}]")

# Small balls: word mass tau vs Haar mass mu, plus the volume bracket.
rep = mc_small_ball(parse_word("x1 x2"), 2, 0.3, "geodesic", N, seed=5)
print(f"tau(B(I,0.3)) ~ {rep.params['tau_hat']:.4f}; "
      f"mu ~ {rep.params['mu_hat']:.4f}; pass={rep.passed}")

# Trace moments: E|tr w|^2M stays below 2^l (Ml)!^2 in the stated regime.
rep = mc_trace_moment(parse_word("x1 x2"), 128, 1, 1_000, seed=6)
print(f"E|tr x1x2|^2 at n=128 ~ {rep.mean.real:.3f}; "
      f"bound {rep.bound}; pass={rep.passed}")
