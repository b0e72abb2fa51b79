"""Eigenvalue predicates, numerical character evaluation, metrics on SU(n),
and ball-volume formulas.

Conventions fixed here:

* "arc of diameter 2*eps" is read with the chordal (Euclidean) distance
  between the arc endpoints, giving angular width 2*arcsin(eps); eps >= 1
  degenerates to the full circle.
* separation uses chordal distances between eigenvalues; the bipartition
  search treats proximity components as atoms and subset-sums their sizes.
* the geodesic distance uses the principal matrix logarithm (eigen-angles in
  (-pi, pi]) under the inner product rescaled by beta_n, so SU(n) has
  diameter 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .errors import (
    CapError,
    DomainError,
    NormError,
    PreconditionError,
    RankError,
    SizeMismatch,
)
from .haar import UnitaryMatrix
from .partitions import DominantWeight, Partition

__all__ = [
    "SpectrumOnCircle",
    "spectrum",
    "is_spread",
    "is_separated",
    "spread_implies_separated_check",
    "approx_eigenvector_defect",
    "char_value",
    "char_value_batch",
    "hs_distance",
    "geodesic_distance",
    "MetricReport",
    "metric_report",
    "ball_volume_bounds",
    "PiScaled",
    "su_n_normalization",
    "beta_n",
]

CHAR_WEIGHT_CAP = 60


@dataclass(frozen=True)
class SpectrumOnCircle:
    """Sorted eigenvalue angles in (-pi, pi] of a unitary matrix."""

    angles: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.angles)

    @property
    def points(self) -> np.ndarray:
        return np.exp(1j * np.asarray(self.angles))


def spectrum(g: UnitaryMatrix) -> SpectrumOnCircle:
    ang = np.sort(np.angle(np.linalg.eigvals(g.mat)))
    return SpectrumOnCircle(tuple(float(a) for a in ang))


def _arc_width(eps: float) -> float:
    """Angular width of an arc whose endpoints are at chordal distance 2*eps."""
    if eps >= 1.0:
        return 2.0 * math.pi
    return 2.0 * math.asin(eps)


def max_arc_counts(angles: np.ndarray, width: float) -> np.ndarray:
    """For each row of angles, the largest number of points in a closed arc of
    the given angular width (arcs anchored at the points; batched)."""
    a = np.atleast_2d(angles)
    diff = np.mod(a[:, None, :] - a[:, :, None], 2.0 * np.pi)
    counts = (diff <= width).sum(axis=2)
    return counts.max(axis=1)


def is_spread(g: UnitaryMatrix, beta: float, eps: float) -> bool:
    """True iff no closed arc of chordal diameter 2*eps holds more than
    (1-beta)*n eigenvalues."""
    if not (0.0 < beta < 1.0):
        raise DomainError(f"need 0 < beta < 1, got {beta}")
    if eps <= 0.0:
        raise DomainError(f"need eps > 0, got {eps}")
    ang = np.asarray(spectrum(g).angles)
    worst = int(max_arc_counts(ang[None, :], _arc_width(eps))[0])
    return worst <= (1.0 - beta) * g.n


def _proximity_components(points: np.ndarray, eps: float) -> list[int]:
    """Sizes of the components of the graph linking eigenvalues at chordal
    distance < eps."""
    n = len(points)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(points[i] - points[j]) < eps:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    sizes: dict[int, int] = {}
    for i in range(n):
        r = find(i)
        sizes[r] = sizes.get(r, 0) + 1
    return list(sizes.values())


def is_separated(g: UnitaryMatrix, gamma: float, eps: float) -> bool:
    """True iff the eigenvalues split into two sets of size >= gamma*n with all
    cross (chordal) distances >= eps.

    Points at distance < eps are forced onto the same side, so the search is a
    subset-sum over proximity-component sizes.  gamma = 1/2 is admitted (both
    sides then have exactly n/2 points).
    """
    if not (0.0 < gamma <= 0.5):
        raise DomainError(f"need 0 < gamma <= 1/2, got {gamma}")
    if eps <= 0.0:
        raise DomainError(f"need eps > 0, got {eps}")
    n = g.n
    comps = _proximity_components(spectrum(g).points, eps)
    lo = math.ceil(gamma * n)
    hi = n - lo
    if lo > hi:
        return False
    reachable = 1  # bitset of achievable side sizes
    for s in comps:
        reachable |= reachable << s
    mask = ((1 << (hi - lo + 1)) - 1) << lo
    return bool(reachable & mask)


def spread_implies_separated_check(g: UnitaryMatrix, beta: float, eps: float) -> bool:
    """Given a (2*beta, eps)-spread element, assert it is (beta, eps/n)-separated.

    Raises PreconditionError if g is not (2*beta, eps)-spread.  Expected to
    always return True; used as a falsification test.
    """
    if not (0.0 < beta < 0.5):
        raise DomainError(f"need 0 < beta < 1/2, got {beta}")
    if not (0.0 < eps < 1.0):
        raise DomainError(f"need 0 < eps < 1, got {eps}")
    if g.n < 2:
        raise DomainError("need n >= 2")
    if not is_spread(g, 2.0 * beta, eps):
        raise PreconditionError("input is not (2*beta, eps)-spread")
    return is_separated(g, beta, eps / g.n)


def approx_eigenvector_defect(g: UnitaryMatrix, v: np.ndarray) -> float:
    """Norm of the projection of g@v onto the orthogonal complement of v.

    v is an eps-approximate eigenvector iff the defect is <= eps.
    """
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (g.n,):
        raise SizeMismatch(f"vector shape {v.shape} does not match n={g.n}")
    nrm = np.linalg.norm(v)
    if abs(nrm - 1.0) > 1e-10:
        raise NormError(f"|v| = {nrm} is not 1 within 1e-10")
    u = g.mat @ v
    coeff = np.vdot(v, u)
    return float(np.linalg.norm(u - coeff * v))


def char_value_batch(lam: DominantWeight, eigs: np.ndarray) -> np.ndarray:
    """Character values from eigenvalue rows (batched).

    Splits off det^(lam_n), then evaluates the Schur polynomial of the
    remaining partition by the Jacobi-Trudi determinant in the complete
    homogeneous basis; the h_k come from power sums via Newton's identities.
    """
    e = np.atleast_2d(np.asarray(eigs, dtype=np.complex128))
    n = lam.n
    if e.shape[1] != n:
        raise RankError(f"eigenvalue rows have length {e.shape[1]}, weight rank {n}")
    c = lam.entries[-1]
    mu = Partition(tuple(x - c for x in lam.entries))
    if mu.weight > CHAR_WEIGHT_CAP:
        raise CapError(f"|lam - lam_n*1| = {mu.weight} exceeds {CHAR_WEIGHT_CAP}")
    det = np.prod(e, axis=1)
    detpow = det**c if c != 0 else np.ones(e.shape[0], dtype=np.complex128)
    r = mu.length
    if r == 0:
        return detpow
    kmax = mu.parts[0] + r - 1
    batch = e.shape[0]
    p = np.empty((kmax + 1, batch), dtype=np.complex128)
    pw = np.ones_like(e)
    for k in range(1, kmax + 1):
        pw = pw * e
        p[k] = pw.sum(axis=1)
    h = np.zeros((kmax + 1, batch), dtype=np.complex128)
    h[0] = 1.0
    for k in range(1, kmax + 1):
        acc = np.zeros(batch, dtype=np.complex128)
        for i in range(1, k + 1):
            acc += p[i] * h[k - i]
        h[k] = acc / k
    mat = np.zeros((batch, r, r), dtype=np.complex128)
    for i in range(r):
        for j in range(r):
            idx = mu.parts[i] - i + j
            if idx >= 0:
                mat[:, i, j] = h[idx]
    return detpow * np.linalg.det(mat)


def char_value(lam: DominantWeight, g: UnitaryMatrix) -> complex:
    """Numerical character value at g; at the identity it matches the exact
    dimension to ~1e-8 relative."""
    if lam.n != g.n:
        raise RankError(f"weight rank {lam.n} != matrix size {g.n}")
    eigs = np.linalg.eigvals(g.mat)
    return complex(char_value_batch(lam, eigs[None, :])[0])


def beta_n(n: int) -> float:
    """The Hilbert-Schmidt rescaling constant 4 pi^2 floor(n/2) ceil(n/2) / n."""
    return 4.0 * math.pi**2 * (n // 2) * ((n + 1) // 2) / n


def hs_distance(g: UnitaryMatrix, h: UnitaryMatrix) -> float:
    """Frobenius distance rescaled by sqrt(beta_n)."""
    if g.n != h.n:
        raise SizeMismatch(f"sizes differ: {g.n} vs {h.n}")
    return float(np.linalg.norm(g.mat - h.mat) / math.sqrt(beta_n(g.n)))


def geodesic_distance(g: UnitaryMatrix, h: UnitaryMatrix) -> float:
    """Bi-invariant geodesic distance via the principal log of g^-1 h."""
    if g.n != h.n:
        raise SizeMismatch(f"sizes differ: {g.n} vs {h.n}")
    w = g.mat.conj().T @ h.mat
    ang = np.angle(np.linalg.eigvals(w))
    return float(np.sqrt((ang**2).sum() / beta_n(g.n)))


@dataclass(frozen=True)
class MetricReport:
    """Both distances for one pair; hs <= geodesic <= (pi/2) * hs always."""

    hs: float
    geodesic: float


def metric_report(g: UnitaryMatrix, h: UnitaryMatrix) -> MetricReport:
    return MetricReport(hs=hs_distance(g, h), geodesic=geodesic_distance(g, h))


def ball_volume_bounds(n: int, delta: float) -> tuple[float, float]:
    """Lower and upper bounds delta^(n^2-1) and 6^(n^2) delta^(n^2-1) for the
    Haar measure of a geodesic ball of radius delta in SU(n)."""
    if not (0.0 < delta < 1.0):
        raise DomainError(f"need 0 < delta < 1, got {delta}")
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    d = n * n - 1
    return (delta**d, 6.0 ** (n * n) * delta**d)


@dataclass(frozen=True)
class PiScaled:
    """An exact constant of the form coeff * pi^pi_exp * sqrt(sqrt_of)."""

    coeff: Fraction
    pi_exp: int
    sqrt_of: Fraction

    def to_float(self) -> float:
        return (
            float(self.coeff)
            * math.pi**self.pi_exp
            * math.sqrt(float(self.sqrt_of))
        )


def su_n_normalization(n: int) -> tuple[PiScaled, PiScaled]:
    """The exact constants (alpha_n, beta_n): beta_n rescales the metric so the
    diameter is 1, and alpha_n converts Riemannian volume to Haar probability:

        alpha_n = beta_n^((n^2-1)/2) * prod_(k<n) k! / ((2 pi)^((n^2+n-2)/2) sqrt(n))
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    b = Fraction(4 * (n // 2) * ((n + 1) // 2), n)
    beta = PiScaled(coeff=b, pi_exp=2, sqrt_of=Fraction(1))
    e = n * n - 1
    big_e = (n * n + n - 2) // 2
    fact_prod = 1
    for k in range(1, n):
        fact_prod *= factorial(k)
    coeff = b ** (e // 2) * Fraction(fact_prod, 2**big_e)
    alpha = PiScaled(
        coeff=coeff,
        pi_exp=e - big_e,
        sqrt_of=Fraction(b ** (e % 2), n),
    )
    return alpha, beta
