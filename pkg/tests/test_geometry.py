"""
测试精确射影几何与四面体构型的一般性检验
"""
import os
import random
import sys
# 将项目根目录添加到 Python 搜索路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from fractions import Fraction
from math import comb

import pytest
import sympy

from geometry import (
    ProjPoint,
    all_edges,
    build_config,
    build_config_from_parameters,
    collinear,
    coordinate_plane,
    coordinate_point,
    coplanar,
    plane_through,
    verify_genericity
)
from config.defaults import TETRA_DEFAULTS
from kernel.errors import ContractViolation, GenericityError


@pytest.fixture(scope="module")
def config():
    return build_config(seed=0)


def edge_parameters(config):
    return {edge.faces: [ep.parameter for ep in config.points_on_edge(edge)] for edge in config.edges}


class TestProjective:

    def test_normalization(self):
        assert ProjPoint.of(2, 4, 0, 6) == ProjPoint.of(1, 2, 0, 3)
        assert ProjPoint.of(0, -3, 6, 0) == ProjPoint.of(0, 1, -2, 0)
        assert ProjPoint.of(Fraction(1, 2), 1, 0, 0).integer_coords == (1, 2, 0, 0)

    @pytest.mark.parametrize("coords", [(0, 0, 0, 0), (1, 2, 3), (1, 0.5, 0, 0)])
    def test_invalid_points(self, coords):
        with pytest.raises(ContractViolation):
            ProjPoint(coords)

    def test_plane_through_coordinate_points(self):
        plane = plane_through(coordinate_point(1), coordinate_point(2), coordinate_point(3))
        assert plane == coordinate_plane(0)

    def test_plane_through_collinear_points(self):
        with pytest.raises(ContractViolation):
            plane_through(ProjPoint.of(1, 0, 0, 0), ProjPoint.of(0, 1, 0, 0), ProjPoint.of(1, 1, 0, 0))

    def test_predicates_against_sympy(self):
        rng = random.Random(3)
        for _ in range(60):
            pts = [ProjPoint(tuple(rng.randint(-2, 2) or 1 for _ in range(4))) for _ in range(4)]
            rows = [list(p.coords) for p in pts]
            m3 = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows[:3]])
            m4 = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
            assert collinear(*pts[:3]) == (m3.rank() <= 2)
            assert coplanar(pts) == (m4.det() == 0)

    def test_plane_contains_its_points(self):
        rng = random.Random(5)
        for _ in range(30):
            pts = [ProjPoint(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4))) for _ in range(3)]
            if any(all(c == 0 for c in p.coords) for p in pts) or collinear(*pts):
                continue
            plane = plane_through(*pts)
            assert all(plane.contains(p) for p in pts)


class TestTetraConfig:

    def test_structure(self, config):
        assert len(config.faces) == 4 and len(config.vertices) == 4
        assert len(all_edges()) == 6
        assert len(config.points) == 24
        assert len({ep.label for ep in config.points}) == 24
        for edge in config.edges:
            on_edge = config.points_on_edge(edge)
            assert len(on_edge) == 4
            assert all(config.on_edge_line(ep.point, edge) for ep in on_edge)
            assert config.opposite_edge(edge).is_disjoint(edge)
        mapping = config.edge_points
        assert set(mapping) == set(config.edges)
        assert all(len(set(points)) == 4 for points in mapping.values())

    def test_labels(self, config):
        labels = {ep.label for ep in config.points}
        assert {"E+_12", "E-_12", "E+_21", "E-_21"} <= labels
        assert all(ep.face in ep.edge.faces and ep.meets in ep.edge.faces for ep in config.points)

    def test_generic_seed_passes(self, config):
        report = verify_genericity(config)
        assert report.passed, report.violations[:3]
        assert report.checked["collinear_triples"] == comb(28, 3)
        assert report.checked["coplanar_quadruples"] == comb(24, 4)
        assert report.checked["generic_planes"] == 1024

    def test_seed_is_recorded(self, config):
        assert config.seed == 0
        assert config.effective_seed is not None

    def test_same_seed_same_config(self, config):
        assert build_config(seed=0).points == config.points

    @pytest.mark.parametrize("seed", range(TETRA_DEFAULTS["seed_count"]))
    def test_default_seeds_are_generic(self, seed):
        config = build_config(seed=seed)
        assert config.seed == seed
        assert (config.effective_seed - seed) % TETRA_DEFAULTS["seed_step"] == 0
        assert verify_genericity(config).passed


class TestNonGeneric:

    @pytest.fixture(scope="class")
    def special(self):
        # 每条棱都取参数 1..4：(1,1,0,0)+(0,0,1,1) = (1,0,1,0)+(0,1,0,1)，出现非强制共面
        return build_config_from_parameters({edge.faces: [1, 2, 3, 4] for edge in all_edges()})

    def test_detects_coplanar_quadruple(self, special):
        report = verify_genericity(special)
        assert not report.passed
        assert any("四点共面" in v for v in report.violations)

    def test_coincident_edge_points(self, config):
        parameters = edge_parameters(config)
        t = parameters[(0, 1)]
        parameters[(0, 1)] = [t[0], t[0], t[2], t[3]]
        report = verify_genericity(build_config_from_parameters(parameters))
        assert not report.passed
        assert any(v.startswith("重合的棱上点") and "E+_12" in v and "E-_12" in v for v in report.violations)

    def test_points_on_one_edge_are_not_violations(self, config):
        for edge in config.edges:
            a, b, c, _ = [ep.point for ep in config.points_on_edge(edge)]
            assert collinear(a, b, c)
        report = verify_genericity(build_config_from_parameters(edge_parameters(config)))
        assert report.passed, report.violations[:3]

    def test_missing_parameters(self):
        with pytest.raises(ContractViolation):
            build_config_from_parameters({(0, 1): [1, 2, 3, 4]})

    def test_retry_budget_exhausted(self):
        with pytest.raises(GenericityError):
            build_config(seed=0, retry_budget=0)
