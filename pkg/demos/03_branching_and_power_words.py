"""Littlewood-Richardson branching and exact power-word Fourier coefficients.

The Fourier coefficient of the power word x^ell at an irreducible character
equals the dimension of the invariants under a product of smaller unitary
blocks; everything here is exact integer arithmetic.

Run with: python demos/03_branching_and_power_words.py
"""

from wordmeasures import (
    BlockSubgroup,
    DominantWeight,
    Partition,
    dim_weyl,
    invariant_dim,
    lr_coefficient,
    power_word_fourier_exact,
    power_word_subgroup,
    restrict,
)

# LR coefficients count strict expansions of one diagram by another.
lam, mu = Partition([2, 1]), Partition([2, 1])
print(f"decomposition of {lam.encode()} x {mu.encode()} (U_3 tensor product):")
for w in range(lam.weight + mu.weight, lam.weight + mu.weight + 1):
    from wordmeasures import partitions_of

    for nu in partitions_of(w):
        if nu.length <= 3:
            c = lr_coefficient(lam, mu, nu)
            if c:
                print(f"  {nu.encode()} x{c}")

# Restriction of a U_4 irreducible to U_2 x U_2, with exact bookkeeping.
w = DominantWeight(4, [2, 1, 0, 0])
table = restrict(w, 2)
print(f"\n{w.encode()} restricted to U_2 x U_2 (dim {dim_weyl(w)}):")
total = 0
for (a, b), mult in sorted(table.entries.items(), key=lambda kv: str(kv[0])):
    d = dim_weyl(a) * dim_weyl(b)
    total += mult * d
    print(f"  {a.encode()} (x) {b.encode()}  mult {mult}  dim {d}")
print("dimension bookkeeping exact:", total == dim_weyl(w))

# Block-diagonal invariants: the zero-weight space of the SU(2) adjoint.
adj = DominantWeight(2, [1, -1])
print("\ninvariants of the adjoint under the diagonal torus:",
      invariant_dim(adj, BlockSubgroup(2, (1, 1))))

# The power-word subgroup: j = n mod ell big blocks, the rest small.
for n, ell in [(5, 3), (7, 2), (2, 5)]:
    print(f"power-word subgroup for n={n}, ell={ell}:",
          power_word_subgroup(n, ell).blocks)

# E(rho(X^ell)) exactly; squares land in {0,1} (the split pair is Gelfand).
print("\nexact Fourier coefficients of x^ell:")
for ell in (1, 2, 3, 4):
    vals = {
        lam.encode(): power_word_fourier_exact(lam, ell)
        for lam in (
            DominantWeight(3, [1, 0, 0]),
            DominantWeight(3, [1, 0, -1]),
            DominantWeight(3, [2, 0, -2]),
        )
    }
    print(f"  ell={ell}: {vals}")
