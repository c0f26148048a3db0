"""
测试经典计数公式：Severi 次数、Plücker、de Jonquières 与 Euler 示性数预算
"""
import os
import sys
# 将项目根目录添加到 Python 搜索路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import pytest
import sympy

from config.models import PencilBudget
from formulas import (
    branch_curve_tangent_degrees,
    cubic_surface_line_count,
    dejonquieres,
    double_quadric_tangent_curve_degree,
    dual_surface_degree,
    pencil_nodal_count,
    plucker_bitangents,
    plucker_dual_degree,
    plucker_flexes,
    polar_tangency_correction,
    quadric_curve_invariants,
    severi_degree,
    tangent_scroll_degree
)
from kernel.errors import ContractViolation, OutOfRangeError, UnsupportedDeltaError
from verifier import plucker_property_inputs


@pytest.mark.parametrize("delta,expected", [(1, 36), (2, 480), (3, 3200)])
def test_quartic_severi_degrees(delta, expected):
    assert severi_degree(4, delta) == expected


def test_small_degree_severi_values():
    assert severi_degree(2, 1) == 2
    assert severi_degree(2, 2) == 0
    assert severi_degree(3, 1) == 12
    assert severi_degree(3, 2) == 27
    assert severi_degree(3, 3) == 45


def test_severi_one_node_is_dual_degree():
    for k in range(2, 13):
        assert severi_degree(k, 1) == dual_surface_degree(k, 0, 0)


@pytest.mark.parametrize("k,delta,error", [
    (4, 0, UnsupportedDeltaError),
    (4, 4, UnsupportedDeltaError),
    (4, True, UnsupportedDeltaError),
    (1, 1, ContractViolation),
    (4.0, 1, ContractViolation),
])
def test_severi_errors(k, delta, error):
    with pytest.raises(error):
        severi_degree(k, delta)


def test_dual_surface_degree():
    assert dual_surface_degree(4, 16, 0) == 4
    assert dual_surface_degree(3, 0, 1) == 9
    with pytest.raises(OutOfRangeError):
        dual_surface_degree(2, 2, 0)


class TestDeJonquieres:

    @pytest.mark.parametrize("args,expected", [
        ((8, 0, 1), 14),
        ((8, 0, 2), 60),
        ((8, 0, 3), 80),
        ((6, 4, 1), 18),
        ((3, 0, 1), 4),
    ])
    def test_known_values(self, args, expected):
        assert dejonquieres(*args) == expected

    def test_no_tangency_is_one(self):
        for d in range(1, 13):
            for g in range(d + 1):
                assert dejonquieres(d, g, 0) == 1

    def test_matches_sympy_coefficient(self):
        u, v = sympy.symbols("u v")
        for d, g, tau in [(8, 0, 3), (6, 4, 1), (9, 2, 2), (10, 3, 4)]:
            gf = sympy.expand((1 + 4 * u + v) ** g * (1 + 2 * u + v) ** (d - tau - g))
            expected = sympy.Poly(gf, u, v).coeff_monomial(u ** tau * v ** (d - 2 * tau))
            assert dejonquieres(d, g, tau) == int(expected)

    @pytest.mark.parametrize("args", [(4, 0, 2), (5, 0, -1), (5, 6, 0), (5, 0.5, 1)])
    def test_preconditions(self, args):
        with pytest.raises(ContractViolation):
            dejonquieres(*args)


class TestPlucker:

    def test_nodal_quartic(self):
        assert plucker_dual_degree(4, 1, 0) == 10
        assert plucker_bitangents(4, 1, 0) == 16

    def test_smooth_quartic_has_28_bitangents(self):
        assert plucker_bitangents(4, 0, 0) == 28
        assert plucker_flexes(4, 0, 0) == 24

    def test_nodal_cubic(self):
        assert plucker_dual_degree(3, 1, 0) == 4
        assert plucker_flexes(3, 1, 0) == 3

    def test_negative_genus_rejected(self):
        with pytest.raises(ContractViolation):
            plucker_dual_degree(3, 2, 0)

    def test_genus_consistency(self):
        inputs = plucker_property_inputs()
        assert (4, 1, 0) in inputs
        for d, delta, kappa in inputs:
            d_star = plucker_dual_degree(d, delta, kappa)
            b_star = plucker_bitangents(d, delta, kappa)
            iota = plucker_flexes(d, delta, kappa)
            assert (d - 1) * (d - 2) // 2 - delta - kappa == (d_star - 1) * (d_star - 2) // 2 - b_star - iota

    def test_biduality_for_nodal_curves(self):
        for d, delta, kappa in plucker_property_inputs(5):
            if kappa:
                continue
            d_star = plucker_dual_degree(d, delta, kappa)
            b_star = plucker_bitangents(d, delta, kappa)
            iota = plucker_flexes(d, delta, kappa)
            if (d_star - 1) * (d_star - 2) // 2 - b_star - iota >= 0:
                assert plucker_dual_degree(d_star, b_star, iota) == d

    def test_tricuspidal_quartic_dual_is_nodal_cubic(self):
        assert plucker_dual_degree(4, 0, 3) == 3
        assert plucker_bitangents(4, 0, 3) == 1
        assert plucker_flexes(4, 0, 3) == 0

    def test_too_many_cusps(self):
        with pytest.raises(OutOfRangeError):
            plucker_bitangents(5, 0, 6)


class TestPencils:

    @pytest.mark.parametrize("specials,expected", [([3, 2], 7), ([3, 3], 6), ([], 12)])
    def test_nodal_fibres(self, specials, expected):
        budget = PencilBudget(chi_surface=12, chi_generic_fibre=0, chi_base=2, special_fibres=specials)
        assert pencil_nodal_count(budget) == expected

    def test_smooth_elliptic_fibration(self):
        assert pencil_nodal_count(PencilBudget(chi_surface=0, chi_generic_fibre=0, chi_base=2)) == 0


def test_polar_tangency_correction():
    assert polar_tangency_correction(36, 4) == 28
    assert polar_tangency_correction(36, 18) == 0
    assert polar_tangency_correction(11, 0) == 11
    with pytest.raises(ContractViolation):
        polar_tangency_correction(36, 19)


class TestQuadricCurves:

    @pytest.mark.parametrize("a,b,expected", [(3, 3, (6, 4)), (2, 1, (3, 0)), (4, 4, (8, 9))])
    def test_invariants(self, a, b, expected):
        assert quadric_curve_invariants(a, b) == expected

    def test_rejects_degenerate_bidegree(self):
        with pytest.raises(ContractViolation):
            quadric_curve_invariants(0, 2)

    def test_scrolls(self):
        assert tangent_scroll_degree(3, 3) == 18
        assert tangent_scroll_degree(2, 1) == 4
        assert double_quadric_tangent_curve_degree() == 36

    def test_branch_curve(self):
        assert branch_curve_tangent_degrees() == (14, 60, 80)


def test_cubic_surface_lines():
    assert cubic_surface_line_count(0, 0) == 27
    assert cubic_surface_line_count(0, 1) == 9
    with pytest.raises(ContractViolation):
        cubic_surface_line_count(2, 0)
