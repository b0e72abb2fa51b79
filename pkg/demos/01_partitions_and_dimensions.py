"""Young diagrams, hook lengths, and the two dimension formulas.

Run with: python demos/01_partitions_and_dimensions.py
"""

from wordmeasures import (
    DominantWeight,
    Partition,
    dim_hook_content,
    dim_weyl,
    dual_partition,
    hook_lengths,
    split_plus_minus,
    sym_dim,
)

# A partition is a weakly decreasing tuple; trailing zeros are stripped.
lam = Partition([4, 2, 1])
print("partition:", lam.encode(), " weight:", lam.weight, " length:", lam.length)

# Hook lengths per cell (row, column), 1-based.
print("hook lengths:", hook_lengths(lam))

# Degree of the S_m irreducible: m! / product of hooks.
print("symmetric-group degree:", sym_dim(lam))

# Degree of the U_n irreducible: product of contents n+j-i over hooks.
for n in (3, 5, 10):
    print(f"U_{n} degree (hook content):", dim_hook_content(lam, n))

# The Weyl product gives the same number, and extends to weights with
# negative entries (rational, not polynomial, representations).
w = lam.to_weight(5)
print("Weyl formula agrees:", dim_weyl(w) == dim_hook_content(lam, 5))

adjoint = DominantWeight(3, [1, 0, -1])
print("adjoint of SU(3) has dimension:", dim_weyl(adjoint))

# Splitting a weight along the fundamental-weight ladder: low half + high half.
v = DominantWeight(4, [3, 2, 2, -1])
minus, plus = split_plus_minus(v)
print("split", v.encode(), "->", minus.encode(), "+", plus.encode())

# Duality: reverse, negate, shift by the top part.
print("dual of [3,1] at n=3:", dual_partition(Partition([3, 1]), 3).encode())

# Dimensions grow fast but stay exact (plain Python integers).
big = Partition([8, 6, 4, 2])
print("a 20-box partition at n=30:", dim_hook_content(big, 30))
