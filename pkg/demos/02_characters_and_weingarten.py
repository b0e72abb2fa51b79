"""Symmetric-group characters, class functions, and exact Weingarten calculus.

Run with: python demos/02_characters_and_weingarten.py
"""

from fractions import Fraction

from wordmeasures import (
    ClassFunction,
    CycleType,
    MonomialSpec,
    Partition,
    class_size,
    convolve,
    cycle_types,
    integrate_monomial,
    mn_character,
    moment_tr_exact,
    partitions_of,
    weingarten,
    weingarten_class_function,
)

m = 5
print(f"S_{m} character table (rows = shapes, columns = cycle types)")
cols = list(cycle_types(m))
print("        ", "  ".join(f"{c.encode():>9}" for c in cols))
for lam in partitions_of(m):
    row = [mn_character(lam, c) for c in cols]
    print(f"{lam.encode():>9}", "  ".join(f"{v:>9}" for v in row))
print("class sizes:", {c.encode(): class_size(c) for c in cols})

# The Weingarten function is the convolution inverse of sigma -> n^cyc(sigma).
m, n = 3, 8
print(f"\nWg_{{{m},{n}}} per class:")
for c in cycle_types(m):
    print(f"  {c.encode():>7} -> {weingarten(m, n, c)}")

wg = weingarten_class_function(m, n)
ncyc = ClassFunction.power_of_cycles(m, n)
print("Wg * n^cyc equals the delta at the identity:",
      convolve(wg, ncyc) == ClassFunction.delta_identity(m))

# Haar-unitary moments of matrix entries, exactly.
n = 5
spec = MonomialSpec(m=2, F1=(1, 1), F2=(1, 1), H1=(1, 1), H2=(1, 1))
print(f"\nE|X_11|^4 over U({n}):", integrate_monomial(spec, n),
      "   (closed form 2/(n(n+1)) =", Fraction(2, n * (n + 1)), ")")

mixed = MonomialSpec(m=2, F1=(1, 2), F2=(1, 2), H1=(1, 2), H2=(2, 1))
print("E X_11 X_22 conj(X_12) conj(X_21):", integrate_monomial(mixed, n))

# |tr X|^(2M) has factorial moments while M <= n.
for M in (1, 2, 3, 4):
    print(f"E|tr X|^{2*M} over U(6) =", moment_tr_exact(M, 6))
