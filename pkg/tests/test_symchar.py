from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from wordmeasures import (
    ClassFunction,
    CycleType,
    DegreeMismatch,
    Partition,
    class_size,
    convolve,
    cycle_types,
    dim_hook_content,
    identity_type,
    mn_character,
    partitions_of,
    sym_dim,
)
from wordmeasures.weingarten import weingarten_class_function
from _oracles import brute_character_table, brute_convolve


class TestCycleType:
    def test_encode_parse(self):
        c = CycleType([3, 1, 1])
        assert c.encode() == "(3,1,1)"
        assert CycleType.parse("(3,1,1)") == c
        assert CycleType.parse("(1,3,1)") == c  # sorted on parse

    def test_class_sizes(self):
        for m in range(1, 8):
            assert class_size(identity_type(m)) == 1
        assert class_size(CycleType([2])) == 1
        assert class_size(CycleType([3])) == 2  # the two 3-cycles of S_3
        for m in range(1, 8):
            assert sum(class_size(c) for c in cycle_types(m)) == factorial(m)


class TestMurnaghanNakayama:
    def test_trivial_character(self):
        for m in range(1, 7):
            for c in cycle_types(m):
                assert mn_character(Partition([m]), c) == 1

    def test_sign_character(self):
        for m in range(1, 7):
            for c in cycle_types(m):
                expected = (-1) ** (m - c.n_cycles)
                assert mn_character(Partition([1] * m), c) == expected

    def test_s3_standard_on_3cycle(self):
        assert mn_character(Partition([2, 1]), CycleType([3])) == -1

    def test_identity_gives_dimension(self):
        for m in range(1, 8):
            for lam in partitions_of(m):
                assert mn_character(lam, identity_type(m)) == sym_dim(lam)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            mn_character(Partition([2, 1]), CycleType([2]))

    def test_against_permutation_module_table(self):
        for m in range(1, 6):
            table = brute_character_table(m)
            for lam in partitions_of(m):
                for c in cycle_types(m):
                    expected = table[lam.parts][c.cycles.parts]
                    assert mn_character(lam, c) == expected, (lam, c)

    def test_first_orthogonality(self):
        for m in range(1, 8):
            lams = list(partitions_of(m))
            for a in lams:
                for b in lams:
                    acc = sum(
                        class_size(c) * mn_character(a, c) * mn_character(b, c)
                        for c in cycle_types(m)
                    )
                    assert acc == (factorial(m) if a == b else 0)


class TestClassFunction:
    def test_char_coefficients_roundtrip(self):
        rng = np.random.default_rng(11)
        for m in (2, 3, 4):
            vals = {c: Fraction(int(rng.integers(-5, 6)), 3) for c in cycle_types(m)}
            f = ClassFunction(m, vals)
            g = ClassFunction.from_char_coefficients(m, f.char_coefficients())
            assert f == g

    def test_convolution_identity_element(self):
        rng = np.random.default_rng(12)
        for m in (2, 3, 4):
            vals = {c: Fraction(int(rng.integers(-4, 5))) for c in cycle_types(m)}
            g = ClassFunction(m, vals)
            assert convolve(ClassFunction.delta_identity(m), g) == g
            assert convolve(g, ClassFunction.delta_identity(m)) == g

    def test_constant_one_squared_on_s2(self):
        one = ClassFunction(2, {c: Fraction(1) for c in cycle_types(2)})
        two = ClassFunction(2, {c: Fraction(2) for c in cycle_types(2)})
        assert convolve(one, one) == two

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            convolve(ClassFunction.delta_identity(2), ClassFunction.delta_identity(3))

    def test_against_bruteforce_double_loop(self):
        rng = np.random.default_rng(13)
        for m in (2, 3):
            fv = {c: Fraction(int(rng.integers(-3, 4))) for c in cycle_types(m)}
            gv = {c: Fraction(int(rng.integers(-3, 4))) for c in cycle_types(m)}
            fast = convolve(ClassFunction(m, fv), ClassFunction(m, gv))
            brute = brute_convolve(
                m,
                {c.cycles.parts: v for c, v in fv.items()},
                {c.cycles.parts: v for c, v in gv.items()},
            )
            for c, v in fast.values.items():
                assert v == brute[c.cycles.parts]

    def test_weingarten_inverse_small_bruteforce(self):
        # N_n * Wg_{2,5} = delta_e, confirmed by the O((m!)^2) loop
        m, n = 2, 5
        wg = weingarten_class_function(m, n)
        nn = ClassFunction.power_of_cycles(m, n)
        brute = brute_convolve(
            m,
            {c.cycles.parts: v for c, v in nn.values.items()},
            {c.cycles.parts: v for c, v in wg.values.items()},
        )
        assert brute[(1, 1)] == 1
        assert brute[(2,)] == 0


class TestSchurWeyl:
    def test_degree_identity(self):
        for m in range(1, 7):
            for n in range(1, 7):
                total = sum(
                    sym_dim(lam) * dim_hook_content(lam, n)
                    for lam in partitions_of(m)
                    if lam.length <= n
                )
                assert total == n**m
