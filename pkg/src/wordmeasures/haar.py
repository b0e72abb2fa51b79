"""Haar sampling on U(n) and SU(n), seeded streams, and word-map evaluation.

Sampling is Ginibre + QR with the R-diagonal phase fix (plain QR is not
Haar-distributed).  The SU(n) variant removes the determinant phase and then
multiplies by a uniformly random n-th root of unity, which pushes Haar measure
on U(n) to Haar measure on SU(n).

Streams are counter-based: worker i draws from the base Philox sequence jumped
i strides ahead, so distinct workers consume provably disjoint blocks and
identical (seed, workers) reproduce identical samples bit for bit.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import SizeMismatch, UnitarityError
from .words import FreeWord

__all__ = [
    "SeededRng",
    "UnitaryMatrix",
    "haar_unitary",
    "haar_special_unitary",
    "haar_unitary_batch",
    "haar_special_unitary_batch",
    "word_eval",
    "word_eval_batch",
]

UNITARITY_TOL = 1e-8


class SeededRng:
    """A 64-bit seed with counter-based derivation of per-worker substreams."""

    __slots__ = ("seed",)

    def __init__(self, seed: int):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF

    def worker(self, index: int = 0) -> np.random.Generator:
        """Generator for worker `index`; distinct indices get disjoint streams."""
        if index < 0:
            raise ValueError("worker index must be >= 0")
        return np.random.Generator(np.random.Philox(key=self.seed).jumped(index))

    def streams(self, count: int, offset: int = 0) -> list[np.random.Generator]:
        return [self.worker(offset + i) for i in range(count)]

    def __repr__(self) -> str:
        return f"SeededRng({self.seed})"


class UnitaryMatrix:
    """An n x n complex matrix validated to be unitary on construction."""

    __slots__ = ("mat",)

    def __init__(self, mat, *, special: bool = False):
        a = np.array(mat, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise SizeMismatch(f"expected a square matrix, got shape {a.shape}")
        n = a.shape[0]
        defect = np.linalg.norm(a.conj().T @ a - np.eye(n))
        if defect > UNITARITY_TOL * n:
            raise UnitarityError(f"unitarity defect {defect:.3e} exceeds tolerance")
        if special:
            det = np.linalg.det(a)
            if abs(det - 1.0) > UNITARITY_TOL:
                raise UnitarityError(f"|det - 1| = {abs(det - 1.0):.3e} too large")
        a.setflags(write=False)
        object.__setattr__(self, "mat", a)

    def __setattr__(self, name, value):
        raise AttributeError("UnitaryMatrix is immutable")

    @property
    def n(self) -> int:
        return self.mat.shape[0]

    def inverse(self) -> "UnitaryMatrix":
        return UnitaryMatrix(self.mat.conj().T)

    def __matmul__(self, other: "UnitaryMatrix") -> "UnitaryMatrix":
        if self.n != other.n:
            raise SizeMismatch(f"sizes differ: {self.n} vs {other.n}")
        return UnitaryMatrix(self.mat @ other.mat)

    def to_bytes(self) -> bytes:
        """Row-major little-endian float64 pairs (re, im), for debugging dumps."""
        flat = np.empty(2 * self.n * self.n, dtype="<f8")
        flat[0::2] = self.mat.real.ravel()
        flat[1::2] = self.mat.imag.ravel()
        return flat.tobytes()

    @staticmethod
    def from_bytes(data: bytes, n: int) -> "UnitaryMatrix":
        flat = np.frombuffer(data, dtype="<f8")
        if flat.size != 2 * n * n:
            raise SizeMismatch(f"expected {2 * n * n} floats, got {flat.size}")
        mat = (flat[0::2] + 1j * flat[1::2]).reshape(n, n)
        return UnitaryMatrix(mat)

    def __repr__(self) -> str:
        return f"UnitaryMatrix(n={self.n})"


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, SeededRng):
        return rng.worker(0)
    return SeededRng(int(rng)).worker(0)


def haar_unitary_batch(n: int, size: int, gen: np.random.Generator) -> np.ndarray:
    """A (size, n, n) stack of independent Haar unitaries."""
    z = gen.standard_normal((size, n, n)) + 1j * gen.standard_normal((size, n, n))
    z /= np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    ph = d / np.abs(d)
    return q * ph[:, None, :]


def haar_special_unitary_batch(
    n: int, size: int, gen: np.random.Generator
) -> np.ndarray:
    """Haar on SU(n): cancel the determinant phase, then twist by a uniformly
    chosen n-th root of unity."""
    q = haar_unitary_batch(n, size, gen)
    theta = np.angle(np.linalg.det(q))
    q *= np.exp(-1j * theta / n)[:, None, None]
    k = gen.integers(0, n, size=size)
    q *= np.exp(2j * np.pi * k / n)[:, None, None]
    return q


def haar_unitary(n: int, rng) -> UnitaryMatrix:
    """One Haar-distributed element of U(n)."""
    if n < 1:
        raise SizeMismatch("n must be >= 1")
    return UnitaryMatrix(haar_unitary_batch(n, 1, _as_generator(rng))[0])


def haar_special_unitary(n: int, rng) -> UnitaryMatrix:
    """One Haar-distributed element of SU(n)."""
    if n < 1:
        raise SizeMismatch("n must be >= 1")
    return UnitaryMatrix(
        haar_special_unitary_batch(n, 1, _as_generator(rng))[0], special=True
    )


def word_eval_batch(word: FreeWord, stacks: Sequence[np.ndarray]) -> np.ndarray:
    """Evaluate a word on stacks of matrices, one stack per generator.

    The product is accumulated right to left: the last letter acts first.
    Inverses use the conjugate transpose.
    """
    if word.rank > len(stacks):
        raise SizeMismatch(
            f"word uses {word.rank} generators but got {len(stacks)} stacks"
        )
    if not word.letters:
        raise SizeMismatch("cannot evaluate the empty word")
    shapes = {s.shape for s in stacks}
    if len(shapes) > 1:
        raise SizeMismatch(f"stacks have differing shapes: {shapes}")
    acc = None
    for gen, exp in reversed(word.letters):
        m = stacks[gen - 1]
        if exp < 0:
            m = np.conjugate(np.swapaxes(m, -1, -2))
        acc = m if acc is None else m @ acc
    return acc


def word_eval(word: FreeWord, matrices: Sequence[UnitaryMatrix]) -> UnitaryMatrix:
    """Substitute matrices for the generators and multiply out the word."""
    if word.rank > len(matrices):
        raise SizeMismatch(
            f"word uses {word.rank} generators but got {len(matrices)} matrices"
        )
    sizes = {m.n for m in matrices}
    if len(sizes) > 1:
        raise SizeMismatch(f"matrix sizes differ: {sizes}")
    stacks = [m.mat[None, :, :] for m in matrices]
    return UnitaryMatrix(word_eval_batch(word, stacks)[0])
