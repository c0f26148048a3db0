"""
测试精确计算内核：有理数、稀疏多项式与 Bareiss 秩/行列式
"""
import os
import random
import sys
# 将项目根目录添加到 Python 搜索路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from fractions import Fraction

import pytest
import sympy

from kernel import (
    ContractViolation,
    EnumeraError,
    InternalConsistencyError,
    RatMatrix,
    SparsePoly,
    UnsupportedDeltaError,
    as_rational,
    coefficient,
    det,
    det_of,
    exact_div,
    integer_det,
    integer_rank,
    poly_mul,
    poly_pow,
    rank,
    rank_of,
    rational_str
)


def test_as_rational_accepts_exact_values():
    assert as_rational(3) == Fraction(3)
    assert as_rational(Fraction(6, -4)) == Fraction(-3, 2)
    assert as_rational("-7/12") == Fraction(-7, 12)


@pytest.mark.parametrize("value", [0.5, True, None, "x/y"])
def test_as_rational_rejects_inexact_values(value):
    with pytest.raises(ContractViolation):
        as_rational(value)


def test_rational_str_is_locale_free():
    assert rational_str(Fraction(4, 2)) == "2"
    assert rational_str(Fraction(-14, 24)) == "-7/12"


def test_rational_field_laws():
    rng = random.Random(13)

    def draw():
        return as_rational(f"{rng.randint(-50, 50)}/{rng.randint(1, 20)}")

    for _ in range(200):
        a, b, c = draw(), draw(), draw()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(InternalConsistencyError):
        exact_div(7, 2, "odd")


def test_errors_keep_builtin_bases():
    assert issubclass(ContractViolation, ValueError)
    assert issubclass(InternalConsistencyError, RuntimeError)
    err = UnsupportedDeltaError(4)
    assert isinstance(err, EnumeraError) and isinstance(err, ValueError)
    assert err.delta == 4


class TestSparsePoly:
    UV = ("u", "v")

    def test_zero_terms_are_pruned(self):
        p = SparsePoly(self.UV, {(1, 0): 2, (0, 1): 0})
        assert dict(p.terms) == {(1, 0): 2}
        assert (p + SparsePoly(self.UV, {(1, 0): -2})).is_zero()

    def test_binomial_coefficients(self):
        p = poly_pow(SparsePoly.linear(self.UV, 1, {"u": 1}), 5)
        assert [coefficient(p, (k, 0)) for k in range(6)] == [1, 5, 10, 10, 5, 1]

    def test_zero_power_is_one(self):
        p = SparsePoly.linear(self.UV, 3, {"v": 2})
        assert poly_pow(p, 0) == SparsePoly.constant(self.UV, 1)

    def test_matches_sympy_expansion(self):
        u, v = sympy.symbols("u v")
        ours = poly_mul(
            poly_pow(SparsePoly.linear(self.UV, 1, {"u": 4, "v": 1}), 3),
            poly_pow(SparsePoly.linear(self.UV, 1, {"u": 2, "v": 1}), 4),
        )
        expected = sympy.Poly(sympy.expand((1 + 4 * u + v) ** 3 * (1 + 2 * u + v) ** 4), u, v)
        assert dict(ours.terms) == {k: int(c) for k, c in expected.terms()}

    def test_pow_is_repeated_mul(self):
        rng = random.Random(17)
        uvw = ("u", "v", "w")
        for _ in range(30):
            terms = {
                tuple(rng.randint(0, 2) for _ in uvw): rng.randint(-4, 4)
                for _ in range(rng.randint(1, 4))
            }
            a = SparsePoly(uvw, terms)
            expected = SparsePoly.constant(uvw, 1)
            for e in range(7):
                assert poly_pow(a, e) == expected
                expected = poly_mul(expected, a)

    def test_variable_mismatch(self):
        with pytest.raises(ContractViolation):
            poly_mul(SparsePoly.constant(("u",), 1), SparsePoly.constant(("v",), 1))
        with pytest.raises(ContractViolation):
            coefficient(SparsePoly.constant(self.UV, 1), (0,))
        with pytest.raises(ContractViolation):
            poly_pow(SparsePoly.constant(self.UV, 1), -1)


class TestMatrix:

    def test_identity(self):
        assert det(RatMatrix.identity(4)) == 1
        assert rank(RatMatrix.identity(3)) == 3

    def test_rational_entries(self):
        assert det_of([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == Fraction(1, 6) - 1
        assert rank_of([[1, 2, 3], [2, 4, 6]]) == 1

    def test_non_square_det(self):
        with pytest.raises(ContractViolation):
            det_of([[1, 2, 3], [4, 5, 6]])
        with pytest.raises(ContractViolation):
            integer_det([[1, 2]])

    def test_against_sympy_on_random_matrices(self):
        rng = random.Random(7)
        for _ in range(40):
            n = rng.randint(1, 5)
            m = rng.randint(1, 5)
            rows = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)]
            assert integer_rank(rows) == sympy.Matrix(rows).rank()
            if n == m:
                assert integer_det(rows) == sympy.Matrix(rows).det()

    def test_rational_against_sympy(self):
        rng = random.Random(11)
        for _ in range(20):
            rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)] for _ in range(4)]
            expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).det()
            assert det_of(rows) == Fraction(int(expected.p), int(expected.q))

    def test_rank_invariant_under_row_operations(self):
        rng = random.Random(19)
        for _ in range(40):
            n, m = rng.randint(1, 5), rng.randint(1, 5)
            rows = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)] for _ in range(n)]
            r = rank_of(rows)
            shuffled = rows[:]
            rng.shuffle(shuffled)
            assert rank_of(shuffled) == r
            i = rng.randrange(n)
            scale = Fraction(rng.choice((-1, 1)) * rng.randint(1, 7), rng.randint(1, 7))
            scaled = [[scale * x for x in row] if k == i else row for k, row in enumerate(rows)]
            assert rank_of(scaled) == r

    def test_proportional_rows_have_zero_det(self):
        rng = random.Random(23)
        for _ in range(40):
            n = rng.randint(2, 5)
            rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
            i, j = rng.sample(range(n), 2)
            q = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            rows[j] = [q * x for x in rows[i]]
            assert det_of(rows) == 0

    def test_dependent_last_row(self):
        rows = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0]]
        assert det_of(rows) == 0
        assert rank_of(rows) == 3
        assert rank_of([[0, 0, 0], [0, 0, 0]]) == 0
