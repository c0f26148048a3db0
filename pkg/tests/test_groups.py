"""
测试置换群与 16_6 构型的对称性
"""
import os
import sys
# 将项目根目录添加到 Python 搜索路径
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import numpy as np
import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from algorithms import IncidenceAutomorphismSearch, Perm, PermGroup, count_set_orbits, set_orbits
from config.defaults import GROUP_DEFAULTS, KUMMER_GROUP_GOLDEN
from kernel.errors import ContractViolation, SearchBudgetExceeded
from kummer import (
    automorphism_group,
    automorphism_search,
    build_grid_model,
    build_theta_model,
    check_transitivity,
    grid_offtrope_orbit_count,
    grid_ontrope_orbit_count,
    ontrope_triple_orbit_count,
    theta_relabelings,
    trope_action,
    trope_stabilizer_actions
)

FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]


@pytest.fixture(scope="module")
def theta():
    inc = build_theta_model()
    return inc, automorphism_group(inc)


class TestPerm:
    def test_left_to_right_composition(self):
        p = Perm.from_cycles(3, [(0, 1)])
        q = Perm.from_cycles(3, [(1, 2)])
        # 先 p 后 q：0 → 1 → 2
        assert (p * q)(0) == 2
        assert (q * p)(0) == 1

    def test_inverse(self):
        p = Perm((2, 0, 3, 1))
        assert (p * p.inverse()).is_identity()
        assert p.first_moved() == 0
        assert Perm.identity(4).first_moved() is None

    def test_not_a_bijection(self):
        with pytest.raises(ContractViolation):
            Perm((0, 0, 1))

    def test_degree_mismatch(self):
        with pytest.raises(ContractViolation):
            Perm.identity(3) * Perm.identity(4)


class TestPermGroup:
    @pytest.mark.parametrize("n", [4, 5, 7])
    def test_symmetric_group_order(self, n):
        gens = [Perm.from_cycles(n, [(0, 1)]), Perm.from_cycles(n, [tuple(range(n))])]
        group = PermGroup(n, gens)
        oracle = PermutationGroup([Permutation(list(g.images)) for g in gens])
        assert group.order() == oracle.order()
        assert len(group.elements()) == group.order()

    def test_random_groups_against_sympy(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            gens = [Perm(tuple(int(i) for i in rng.permutation(8))) for _ in range(2)]
            oracle = PermutationGroup([Permutation(list(g.images)) for g in gens])
            assert PermGroup(8, gens).order() == oracle.order()

    def test_trivial_group(self):
        group = PermGroup(3, [])
        assert group.order() == 1
        assert not group.is_k_transitive(1)
        assert group.orbits() == [[0], [1], [2]]

    def test_cyclic_group_is_not_2_transitive(self):
        group = PermGroup(5, [Perm.from_cycles(5, [(0, 1, 2, 3, 4)])])
        assert group.is_k_transitive(1)
        assert not group.is_k_transitive(2)

    def test_membership(self):
        group = PermGroup(4, [Perm.from_cycles(4, [(0, 1), (2, 3)])])
        assert group.contains(Perm((1, 0, 3, 2)))
        assert not group.contains(Perm((1, 0, 2, 3)))

    def test_bad_k(self):
        with pytest.raises(ContractViolation):
            PermGroup(3, []).is_k_transitive(4)


class TestAutomorphismSearch:
    def test_fano_plane(self):
        matrix = np.zeros((7, 7), dtype=bool)
        for j, line in enumerate(FANO_LINES):
            matrix[list(line), j] = True
        result = IncidenceAutomorphismSearch(matrix).run()
        assert result.order == 168
        assert PermGroup(7, result.generators).order() == 168
        assert result.base == list(range(7))
        assert 0 < result.nodes_visited <= GROUP_DEFAULTS["search_budget"]

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            automorphism_search(build_theta_model(), budget=1)


class TestThetaGroup:
    def test_order_and_transitivity(self, theta):
        _, group = theta
        assert group.order() == KUMMER_GROUP_GOLDEN["order"]
        assert check_transitivity(group, 2)

    def test_trope_action_is_faithful(self, theta):
        inc, group = theta
        assert trope_action(inc, group).order() == group.order()

    @pytest.mark.parametrize("trope", [0, "t3", "t126|345"])
    def test_trope_stabilizer(self, theta, trope):
        inc, group = theta
        image, transitive = trope_stabilizer_actions(inc, group, trope)
        assert image.order() == KUMMER_GROUP_GOLDEN["trope_stabilizer_image"]
        assert transitive

    def test_stabilizer_bad_trope(self, theta):
        inc, group = theta
        with pytest.raises(ContractViolation):
            trope_stabilizer_actions(inc, group, 16)

    def test_relabelings_lie_in_group(self, theta):
        _, group = theta
        relabelings = theta_relabelings()
        assert len(set(relabelings)) == 720
        assert all(group.contains(p) for p in relabelings)

    def test_ontrope_triples_form_one_orbit(self, theta):
        inc, group = theta
        assert ontrope_triple_orbit_count(inc, group) == 1

    def test_grid_model_has_same_order(self):
        assert automorphism_group(build_grid_model()).order() == KUMMER_GROUP_GOLDEN["order"]


class TestGridOrbits:
    def test_offtrope(self):
        assert grid_offtrope_orbit_count(include_swap=True) == KUMMER_GROUP_GOLDEN["grid_offtrope_orbits_with_swap"]
        assert grid_offtrope_orbit_count(include_swap=False) == KUMMER_GROUP_GOLDEN["grid_offtrope_orbits_without_swap"]

    def test_ontrope(self):
        assert grid_ontrope_orbit_count(include_swap=True) == KUMMER_GROUP_GOLDEN["grid_ontrope_orbits_with_swap"]
        assert grid_ontrope_orbit_count(include_swap=False) == KUMMER_GROUP_GOLDEN["grid_ontrope_orbits_without_swap"]


def test_set_orbits_requires_closed_family():
    gen = Perm.from_cycles(3, [(0, 1, 2)])
    assert count_set_orbits([(0, 1), (1, 2), (0, 2)], [gen]) == 1
    with pytest.raises(ContractViolation):
        set_orbits([(0, 1)], [gen])
