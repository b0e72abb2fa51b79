"""Haar sampling on U(n)/SU(n) and evaluating free-group words on matrices.

Run with: python demos/04_haar_sampling_and_words.py
"""

import numpy as np

from wordmeasures import (
    SeededRng,
    concat,
    haar_special_unitary,
    haar_unitary,
    parse_word,
    self_concat,
    word_eval,
)

rng = SeededRng(2024)

# Ginibre + QR with the phase fix; the result is Haar to machine precision.
g = haar_unitary(4, rng.worker(0))
print("unitarity defect:", np.linalg.norm(g.mat.conj().T @ g.mat - np.eye(4)))

s = haar_special_unitary(4, rng.worker(1))
print("SU(4) determinant:", np.linalg.det(s.mat))

# Identical seeds reproduce identical matrices, bit for bit.
again = haar_unitary(4, SeededRng(2024).worker(0))
print("bitwise reproducible:", np.array_equal(g.mat, again.mat))

# Words are whitespace-separated terms x<i> or x<i>^<k>; they parse reduced.
w = parse_word("x1 x2 x1^-1 x2^-1")
print("\ncommutator:", w.encode(), " length:", w.length, " rank:", w.rank)

# Concatenation uses disjoint letters, so lengths and ranks add.
ww = concat(w, w)
print("w * w:", ww.encode())
print("w^*3 length:", self_concat(w, 3).length)

# Evaluate the word on a random tuple; inverses are conjugate transposes.
gen = rng.worker(2)
tuple_ = [haar_unitary(4, gen) for _ in range(w.rank)]
value = word_eval(w, tuple_)
print("\ncommutator value is unitary:",
      np.linalg.norm(value.mat.conj().T @ value.mat - np.eye(4)) < 1e-12)

# On commuting inputs the commutator collapses to the identity.
d1 = np.diag(np.exp(1j * np.array([0.4, -0.8, 1.1, 2.0])))
d2 = np.diag(np.exp(1j * np.array([0.1, 0.2, -0.3, 0.7])))
from wordmeasures import UnitaryMatrix

out = word_eval(w, [UnitaryMatrix(d1), UnitaryMatrix(d2)])
print("commutator of diagonals is the identity:",
      np.linalg.norm(out.mat - np.eye(4)) < 1e-12)

# The empirical second moment of the trace matches the exact value 1.
from wordmeasures.haar import haar_unitary_batch

batch = haar_unitary_batch(5, 100_000, rng.worker(3))
tr = np.trace(batch, axis1=1, axis2=2)
print("\nE|tr X|^2 ~", np.abs(tr).__pow__(2).mean(), "(exact value 1)")
