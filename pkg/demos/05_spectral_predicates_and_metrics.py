"""Spread/separated spectra, approximate eigenvectors, characters at group
elements, and the rescaled metrics on SU(n).

Run with: python demos/05_spectral_predicates_and_metrics.py
"""

import math

import numpy as np

from wordmeasures import (
    DominantWeight,
    Partition,
    SeededRng,
    UnitaryMatrix,
    approx_eigenvector_defect,
    ball_volume_bounds,
    char_value,
    dim_weyl,
    geodesic_distance,
    haar_special_unitary,
    hs_distance,
    is_separated,
    is_spread,
    spectrum,
    spread_implies_separated_check,
    su_n_normalization,
)

# An element is (beta, eps)-spread when no arc of chordal diameter 2*eps
# holds more than (1-beta)n eigenvalues.
fourth_roots = UnitaryMatrix(np.diag([1, 1j, -1, -1j]))
print("fourth roots spread(1/2, 0.5):", is_spread(fourth_roots, 0.5, 0.5))
print("identity spread(1/2, 0.5):", is_spread(UnitaryMatrix(np.eye(4)), 0.5, 0.5))

# Separation asks for two large groups of eigenvalues far from each other.
g = UnitaryMatrix(np.diag([1, np.exp(1j * np.pi / 64), -1]))
print("clustered pair + antipode separated(1/3, 0.5):", is_separated(g, 1 / 3, 0.5))

# A (2b, e)-spread element is always (b, e/n)-separated.
print("spread => separated:", spread_implies_separated_check(fourth_roots, 0.25, 0.5))

# Approximate eigenvectors: the defect is the off-line part of g v.
v = np.array([1.0, 1.0]) / math.sqrt(2)
refl = UnitaryMatrix(np.diag([1.0, -1.0]))
print("defect of the balanced vector under diag(1,-1):",
      approx_eigenvector_defect(refl, v))

# Numerical characters at group elements via Jacobi-Trudi determinants.
rng = SeededRng(7)
h = haar_special_unitary(3, rng.worker(0))
lam = DominantWeight(3, [2, 1, -1])
print("\ncharacter value at a random SU(3) element:", char_value(lam, h))
print("character at the identity vs exact dimension:",
      char_value(lam, UnitaryMatrix(np.eye(3))), "vs", dim_weyl(lam))
print("spectrum angles:", [round(a, 3) for a in spectrum(h).angles])

# Distances: hs <= geodesic <= (pi/2) hs, and SU(n) has geodesic diameter 1.
i2, m2 = UnitaryMatrix(np.eye(2)), UnitaryMatrix(-np.eye(2))
print("\nSU(2) antipodal geodesic distance:", geodesic_distance(i2, m2))
print("SU(2) antipodal rescaled HS distance:", hs_distance(i2, m2), "= 2/pi")

alpha, beta = su_n_normalization(3)
print("beta_3 =", beta, "->", beta.to_float())
print("alpha_3 =", alpha, "->", alpha.to_float())

print("ball-volume bracket at n=3, delta=0.3:", ball_volume_bounds(3, 0.3))
