"""
验收检查
把各模块的金值与性质检查汇总为一份报告，供 `verify all` 使用
"""
from typing import Callable

from config.defaults import (
    KUMMER_GROUP_GOLDEN,
    QUARTIC_SEVERI_DEGREES,
    TETRA_DEFAULTS,
    TRIANGLE_TOTALS
)
from config.models import PencilBudget, Report
from fibre import build_kummer_fibre, check_triple_point_formula, mutate_drop_triple_point
from formulas import (
    branch_curve_tangent_degrees,
    dejonquieres,
    double_quadric_tangent_curve_degree,
    dual_surface_degree,
    pencil_nodal_count,
    plucker_bitangents,
    plucker_dual_degree,
    plucker_flexes,
    severi_degree
)
from geometry.tetrahedron import build_config
from kernel.errors import EnumeraError
from kummer import (
    automorphism_group,
    build_grid_model,
    build_theta_model,
    check_transitivity,
    check_triple_partition,
    count_offtrope_triples,
    grid_offtrope_orbit_count,
    trope_stabilizer_actions,
    verify_incidence
)
from ledgers import (
    enumerate_ledger,
    general_point_audit,
    kummer_ledger,
    ledger,
    monoid_crude_limit,
    monoid_residual_degree,
    triangle_entries
)
from services import ReportService
from utils import console

_TETRA_EXPECTED = {
    1: [(24, 1), (4, 3)],
    2: [(240, 1), (48, 3), (6, 16)],
    3: [(1024, 1), (192, 3), (24, 16), (4, 304)],
}
_KUMMER_EXPECTED = {
    1: [(4, 1), (16, 2)],
    2: [(120, 4)],
    3: [(240, 8), (16, 80)],
}


def _pairs(ledger_obj) -> list[tuple[int, int]]:
    return [(e.count, e.multiplicity) for e in ledger_obj.entries]


def _expect(violations: list[str], name: str, actual, expected) -> None:
    if actual != expected:
        violations.append(f"{name}: 得到 {actual}，应为 {expected}")


class AcceptanceVerifier:
    """逐项执行验收检查，每项返回违反项列表"""

    def __init__(self, seed: int = TETRA_DEFAULTS["seed"], jobs: int = 1, seed_count: int = TETRA_DEFAULTS["seed_count"]):
        """
        初始化检查器

        Args:
            seed: 四面体构型的起始种子
            jobs: 三元组扫描的进程数
            seed_count: 种子无关性检查覆盖的种子个数
        """
        self.seed = seed
        self.jobs = jobs
        self.seed_count = seed_count

    def check_severi(self) -> list[str]:
        violations = []
        for delta, expected in QUARTIC_SEVERI_DEGREES.items():
            _expect(violations, f"severi_degree(4,{delta})", severi_degree(4, delta), expected)
        for k in range(2, 13):
            _expect(violations, f"severi_degree({k},1) vs dual", severi_degree(k, 1), dual_surface_degree(k, 0, 0))
        return violations

    def check_tetrahedron(self) -> list[str]:
        violations = []
        for offset in range(self.seed_count):
            config = build_config(seed=self.seed + offset)
            for delta, expected in _TETRA_EXPECTED.items():
                _expect(
                    violations,
                    f"tetra ledger δ={delta} seed={config.seed}",
                    _pairs(enumerate_ledger(config, delta, jobs=self.jobs)),
                    expected,
                )
        return violations

    def check_triangle(self) -> list[str]:
        violations = []
        for delta, expected in TRIANGLE_TOTALS.items():
            for entry in triangle_entries(delta):
                value = entry.derivation.evaluate()
                if value != entry.p_degree:
                    violations.append(f"triangle δ={delta} {entry.label}: 推导得 {value}，记录为 {entry.p_degree}")
            _expect(violations, f"triangle ledger δ={delta}", ledger(delta).total, expected)
        return violations

    def check_kummer_ledgers(self) -> list[str]:
        violations = []
        for delta, expected in _KUMMER_EXPECTED.items():
            result = kummer_ledger(delta)
            _expect(violations, f"kummer ledger δ={delta}", _pairs(result), expected)
            _expect(violations, f"kummer total δ={delta}", result.total, QUARTIC_SEVERI_DEGREES[delta])
        _expect(violations, "dual Kummer degree", dual_surface_degree(4, 16, 0), 4)
        _expect(violations, "off-trope triples (theta)", count_offtrope_triples(build_theta_model()), 240)
        return violations

    def check_dejonquieres(self) -> list[str]:
        violations = []
        for args, expected in {(8, 0, 1): 14, (8, 0, 2): 60, (8, 0, 3): 80, (6, 4, 1): 18, (3, 0, 1): 4}.items():
            _expect(violations, f"dejonquieres{args}", dejonquieres(*args), expected)
        for d in range(1, 13):
            for g in range(0, d + 1):
                _expect(violations, f"dejonquieres({d},{g},0)", dejonquieres(d, g, 0), 1)
        _expect(violations, "branch curve tangent degrees", branch_curve_tangent_degrees(), (14, 60, 80))
        _expect(violations, "double quadric tangent curve degree", double_quadric_tangent_curve_degree(), 36)
        return violations

    def check_plucker(self) -> list[str]:
        violations = []
        _expect(violations, "plucker dual (4,1,0)", plucker_dual_degree(4, 1, 0), 10)
        _expect(violations, "plucker bitangents (4,1,0)", plucker_bitangents(4, 1, 0), 16)
        _expect(violations, "plucker flexes (3,1,0)", plucker_flexes(3, 1, 0), 3)
        for d, delta, kappa in plucker_property_inputs():
            genus = (d - 1) * (d - 2) // 2 - delta - kappa
            d_star = plucker_dual_degree(d, delta, kappa)
            b_star = plucker_bitangents(d, delta, kappa)
            iota = plucker_flexes(d, delta, kappa)
            dual_genus = (d_star - 1) * (d_star - 2) // 2 - b_star - iota
            _expect(violations, f"genus consistency ({d},{delta},{kappa})", dual_genus, genus)
        return violations

    def check_pencils(self) -> list[str]:
        violations = []
        for specials, expected in (([3, 2], 7), ([3, 3], 6)):
            budget = PencilBudget(chi_surface=12, chi_generic_fibre=0, chi_base=2, special_fibres=specials)
            _expect(violations, f"pencil budget {specials}", pencil_nodal_count(budget), expected)
        return violations

    def check_incidence(self) -> list[str]:
        violations = []
        for inc in (build_theta_model(), build_grid_model()):
            violations += verify_incidence(inc)
            violations += check_triple_partition(inc)
        return violations

    def check_groups(self) -> list[str]:
        violations = []
        inc = build_theta_model()
        group = automorphism_group(inc)
        _expect(violations, "theta automorphism group order", group.order(), KUMMER_GROUP_GOLDEN["order"])
        if not check_transitivity(group, 2):
            violations.append("theta automorphism group is not 2-transitive on nodes")
        for t in range(len(inc.tropes)):
            image, transitive = trope_stabilizer_actions(inc, group, t)
            _expect(violations, f"stabilizer image of {inc.tropes[t]}", image.order(), KUMMER_GROUP_GOLDEN["trope_stabilizer_image"])
            if not transitive:
                violations.append(f"stabilizer of {inc.tropes[t]} is not transitive on the other nodes")
        orbits = grid_offtrope_orbit_count(include_swap=True)
        if orbits > 2:
            violations.append(f"grid off-trope orbits with swap: {orbits} > 2")
        _expect(violations, "grid off-trope orbits with swap", orbits, KUMMER_GROUP_GOLDEN["grid_offtrope_orbits_with_swap"])
        return violations

    def check_fibre(self) -> list[str]:
        fibre = build_kummer_fibre()
        violations = []
        _expect(violations, "fibre components", len(fibre.components), 33)
        _expect(violations, "fibre double curves", len(fibre.double_curves), 128)
        report = check_triple_point_formula(fibre)
        violations += report.violations
        for r in fibre.double_curves:
            for index in range(len(r.triple_points)):
                if check_triple_point_formula(mutate_drop_triple_point(fibre, r.name, index)).passed:
                    violations.append(f"removing triple point {index} of {r.name} was not detected")
        return violations

    def check_cross_module(self) -> list[str]:
        violations = []
        config = build_config(seed=self.seed)
        _expect(violations, "monoid crude limit", _pairs(monoid_crude_limit(config, 1)), [(21, 1), (1, 3), (12, 1)])
        audit = general_point_audit(config, 1)
        _expect(violations, "general point audit", _pairs(audit), [(192, 1), (36, 3), (3, 16), (132, 1)])
        _expect(violations, "monoid residual degree", monoid_residual_degree(audit), 348)
        return violations

    def checks(self) -> dict[str, Callable[[], list[str]]]:
        return {
            "severi": self.check_severi,
            "tetrahedron": self.check_tetrahedron,
            "triangle": self.check_triangle,
            "kummer_ledgers": self.check_kummer_ledgers,
            "dejonquieres": self.check_dejonquieres,
            "plucker": self.check_plucker,
            "pencils": self.check_pencils,
            "incidence": self.check_incidence,
            "groups": self.check_groups,
            "fibre": self.check_fibre,
            "cross_module": self.check_cross_module,
        }

    def run_all(self) -> Report:
        """执行全部检查；某项抛出的 EnumeraError 记为该项的违反项"""
        console.banner("🧪 验收检查")
        results = {}
        violations = []
        for name, check in self.checks().items():
            try:
                found = check()
            except EnumeraError as e:
                found = [f"{type(e).__name__}: {e}"]
            results[name] = "pass" if not found else "fail"
            violations += [f"[{name}] {v}" for v in found]
            (console.done if not found else console.warn)(f"{name}: {results[name]}")
        return ReportService.make_report("verify all", data={"checks": results}, violations=violations, seed=self.seed)


def plucker_property_inputs(max_degree: int = 6) -> list[tuple[int, int, int]]:
    """d ≤ max_degree 且对偶 Plücker 关系有非负整数解的 (d, δ, κ)"""
    inputs = []
    for d in range(2, max_degree + 1):
        arithmetic_genus = (d - 1) * (d - 2) // 2
        for delta in range(arithmetic_genus + 1):
            for kappa in range(arithmetic_genus - delta + 1):
                try:
                    plucker_bitangents(d, delta, kappa)
                except EnumeraError:
                    continue
                inputs.append((d, delta, kappa))
    return inputs

