"""
Enumera 命令行入口
复现各账本与公式表并运行验收检查；报告写到标准输出，进度日志写到标准错误

退出码：0 通过，1 检查失败，2 用法错误
"""
import argparse
import sys
from typing import Optional, TextIO

from config.dataset_loader import list_datasets, load_dataset
from config.defaults import FORMULA_TABLE_DEFAULTS, KUMMER_GROUP_GOLDEN, OUTPUT_FORMATS
from config.models import Report
from config.settings import load_settings
from fibre import FibreGraph, build_kummer_fibre, check_triple_point_formula, load_fibre
from formulas import (
    dejonquieres,
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
    grid_offtrope_orbit_count,
    grid_ontrope_orbit_count,
    offtrope_triple_orbit_count,
    ontrope_triple_orbit_count,
    to_ascii_bitmap,
    to_json_dict,
    trope_action,
    trope_stabilizer_actions,
    verify_incidence
)
from ledgers import (
    enumerate_ledger,
    general_point_audit,
    kummer_ledger,
    ledger,
    monoid_crude_limit,
    monoid_residual_degree
)
from services import ReportService, stopwatch
from utils import console
from verifier import AcceptanceVerifier

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_MODELS = {"theta": build_theta_model, "grid": build_grid_model}
_GROUP_CHECKS = ("order", "2transitive", "trope-s6", "offtrope-orbits")


def _common_flags() -> argparse.ArgumentParser:
    """全局参数；子命令中也可给出，未给出时不覆盖上一级的值"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS, default=argparse.SUPPRESS,
                        help="报告格式")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="三元组扫描的进程数")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="四面体构型的种子")
    common.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="在标准错误输出进度")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS, help="在报告中填写耗时")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="enumera", description="平面截线 Severi 次数的精确计数工具", parents=[common])
    groups = parser.add_subparsers(dest="group", required=True)

    formulas = groups.add_parser("formulas", help="公式表").add_subparsers(dest="action", required=True)
    table = formulas.add_parser("table", parents=[common], help="Severi 次数表")
    table.add_argument("--k-min", type=int, default=FORMULA_TABLE_DEFAULTS["k_min"])
    table.add_argument("--k-max", type=int, default=FORMULA_TABLE_DEFAULTS["k_max"])
    table.set_defaults(handler=cmd_formulas_table)

    dj = groups.add_parser("dejonquieres", parents=[common], help="de Jonquières 切触次数")
    dj.add_argument("--d", type=int, required=True)
    dj.add_argument("--g", type=int, required=True)
    dj.add_argument("--tau", type=int, required=True)
    dj.set_defaults(handler=cmd_dejonquieres)

    pl = groups.add_parser("plucker", parents=[common], help="Plücker 数值")
    pl.add_argument("--d", type=int, required=True)
    pl.add_argument("--delta", type=int, required=True)
    pl.add_argument("--kappa", type=int, required=True)
    pl.set_defaults(handler=cmd_plucker)

    tetra = groups.add_parser("tetra", help="四面体退化").add_subparsers(dest="action", required=True)
    tl = tetra.add_parser("ledger", parents=[common], help="四面体账本")
    tl.add_argument("--delta", type=int, choices=(1, 2, 3), required=True)
    tl.set_defaults(handler=cmd_tetra_ledger)
    tm = tetra.add_parser("monoid", parents=[common], help="单值曲面粗极限与一般点审计")
    tm.add_argument("--face", type=int, choices=(1, 2, 3, 4), required=True)
    tm.set_defaults(handler=cmd_tetra_monoid)

    triangle = groups.add_parser("triangle", help="三角形退化").add_subparsers(dest="action", required=True)
    trl = triangle.add_parser("ledger", parents=[common], help="三角形账本")
    trl.add_argument("--delta", type=int, choices=(1, 2, 3), required=True)
    trl.set_defaults(handler=cmd_triangle_ledger)

    kummer = groups.add_parser("kummer", help="Kummer 退化与 16_6 构型").add_subparsers(dest="action", required=True)
    kl = kummer.add_parser("ledger", parents=[common], help="Kummer 账本")
    kl.add_argument("--delta", type=int, choices=(1, 2, 3), required=True)
    kl.set_defaults(handler=cmd_kummer_ledger)
    ki = kummer.add_parser("incidence", parents=[common], help="16_6 关联矩阵")
    ki.add_argument("--model", choices=sorted(_MODELS), default="theta")
    ki.add_argument("--verify", action="store_true")
    ki.set_defaults(handler=cmd_kummer_incidence)
    kg = kummer.add_parser("group", parents=[common], help="自同构群检查")
    kg.add_argument("--model", choices=sorted(_MODELS), default="theta")
    kg.add_argument("--check", choices=_GROUP_CHECKS, required=True)
    kg.set_defaults(handler=cmd_kummer_group)

    fibre = groups.add_parser("fibre", help="中心纤维").add_subparsers(dest="action", required=True)
    fc = fibre.add_parser("check", parents=[common], help="三重点公式检查")
    source = fc.add_mutually_exclusive_group()
    source.add_argument("--file", help="FibreGraph JSON 文件")
    source.add_argument("--builtin", choices=["kummer"] + list_datasets(), help="内置纤维")
    fc.set_defaults(handler=cmd_fibre_check)

    verify = groups.add_parser("verify", help="验收检查").add_subparsers(dest="action", required=True)
    va = verify.add_parser("all", parents=[common], help="运行全部验收检查")
    va.set_defaults(handler=cmd_verify_all)
    return parser


def cmd_formulas_table(args) -> Report:
    rows = [
        {"k": k, **{f"d{delta}": severi_degree(k, delta) for delta in (1, 2, 3)}}
        for k in range(args.k_min, args.k_max + 1)
    ]
    return ReportService.make_report("formulas table", data={"rows": rows})


def cmd_dejonquieres(args) -> Report:
    value = dejonquieres(args.d, args.g, args.tau)
    return ReportService.make_report("dejonquieres", data={"d": args.d, "g": args.g, "tau": args.tau, "degree": value})


def cmd_plucker(args) -> Report:
    data = {
        "d": args.d,
        "delta": args.delta,
        "kappa": args.kappa,
        "dual_degree": plucker_dual_degree(args.d, args.delta, args.kappa),
        "flexes": plucker_flexes(args.d, args.delta, args.kappa),
        "bitangents": plucker_bitangents(args.d, args.delta, args.kappa),
    }
    return ReportService.make_report("plucker", data=data)


def cmd_tetra_ledger(args) -> Report:
    config = build_config(seed=args.seed)
    table = enumerate_ledger(config, args.delta, jobs=args.jobs)
    return ReportService.make_report(
        "tetra ledger", tables=[table], data={"effective_seed": config.effective_seed}, seed=args.seed
    )


def cmd_tetra_monoid(args) -> Report:
    config = build_config(seed=args.seed)
    crude = monoid_crude_limit(config, args.face)
    audit = general_point_audit(config, args.face)
    return ReportService.make_report(
        "tetra monoid",
        tables=[crude, audit],
        data={"face": args.face, "residual_degree": monoid_residual_degree(audit)},
        seed=args.seed,
    )


def cmd_triangle_ledger(args) -> Report:
    return ReportService.make_report("triangle ledger", tables=[ledger(args.delta)])


def cmd_kummer_ledger(args) -> Report:
    return ReportService.make_report("kummer ledger", tables=[kummer_ledger(args.delta)])


def cmd_kummer_incidence(args) -> Report:
    inc = _MODELS[args.model]()
    violations = verify_incidence(inc) + check_triple_partition(inc) if args.verify else []
    data = to_json_dict(inc)
    data["bitmap"] = to_ascii_bitmap(inc).splitlines()
    return ReportService.make_report("kummer incidence", data=data, violations=violations)


def cmd_kummer_group(args) -> Report:
    inc = _MODELS[args.model]()
    group = automorphism_group(inc)
    data = {"model": inc.name, "check": args.check}
    violations = []

    if args.check == "order":
        data["order"] = group.order()
        data["trope_action_order"] = trope_action(inc, group).order()
        if data["order"] != KUMMER_GROUP_GOLDEN["order"]:
            violations.append(f"群的阶 {data['order']} ≠ {KUMMER_GROUP_GOLDEN['order']}")
        if data["trope_action_order"] != data["order"]:
            violations.append("trope 上的作用与节点上的作用阶不同")
    elif args.check == "2transitive":
        data["transitive"] = check_transitivity(group, 1)
        data["two_transitive"] = check_transitivity(group, 2)
        if not data["two_transitive"]:
            violations.append("自同构群在节点上不是 2 重传递的")
    elif args.check == "trope-s6":
        rows = []
        for t, label in enumerate(inc.tropes):
            image, transitive = trope_stabilizer_actions(inc, group, t)
            rows.append({"trope": label, "image_order": image.order(), "transitive_on_others": transitive})
            if image.order() != KUMMER_GROUP_GOLDEN["trope_stabilizer_image"] or not transitive:
                violations.append(f"{label}: 像的阶 {image.order()}，在其余节点上传递 = {transitive}")
        data["tropes"] = rows
    else:
        data["ontrope_orbits"] = ontrope_triple_orbit_count(inc, group)
        data["offtrope_orbits"] = offtrope_triple_orbit_count(inc, group)
        data["grid_offtrope_orbits"] = {
            "with_swap": grid_offtrope_orbit_count(True),
            "without_swap": grid_offtrope_orbit_count(False),
        }
        data["grid_ontrope_orbits"] = {
            "with_swap": grid_ontrope_orbit_count(True),
            "without_swap": grid_ontrope_orbit_count(False),
        }
        if data["ontrope_orbits"] != 1:
            violations.append(f"trope 上三元组有 {data['ontrope_orbits']} 个轨道，应为 1")
        if data["grid_offtrope_orbits"]["with_swap"] > 2:
            violations.append("grid 离面三元组在 S4×S4⋊2 下多于 2 个轨道")
    return ReportService.make_report("kummer group", data=data, violations=violations)


def _load_fibre_source(args) -> tuple[str, FibreGraph]:
    if args.file:
        return args.file, load_fibre(args.file)
    name = args.builtin or "kummer"
    if name == "kummer":
        return name, build_kummer_fibre()
    return name, load_dataset(name, FibreGraph)


def cmd_fibre_check(args) -> Report:
    source, graph = _load_fibre_source(args)
    result = check_triple_point_formula(graph)
    data = {
        "source": source,
        "components": len(graph.components),
        "double_curves": len(graph.double_curves),
        "passed_curves": sum(c.passed for c in result.checks),
    }
    return ReportService.make_report("fibre check", data=data, violations=result.violations)


def cmd_verify_all(args) -> Report:
    return AcceptanceVerifier(seed=args.seed, jobs=args.jobs).run_all()


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    解析参数并执行子命令

    Args:
        argv: 参数列表（不含程序名），默认取 sys.argv[1:]
        out: 报告输出流，默认标准输出

    Returns:
        int: 退出码
    """
    out = out if out is not None else sys.stdout
    try:
        settings = load_settings()
    except ValueError as e:
        console.fail(f"环境变量设置无效: {e}")
        return EXIT_USAGE

    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if getattr(args, "k_min", None) is not None and not 2 <= args.k_min <= args.k_max:
            parser.error(f"需要 2 ≤ --k-min ≤ --k-max，实际 {args.k_min}..{args.k_max}")
    except SystemExit as e:
        return EXIT_PASS if e.code in (0, None) else EXIT_USAGE

    args.seed = getattr(args, "seed", settings.seed)
    args.jobs = getattr(args, "jobs", settings.jobs)
    if args.jobs < 1:
        console.fail(f"--jobs 必须 ≥ 1: {args.jobs}")
        return EXIT_USAGE
    output_format = getattr(args, "output_format", settings.output_format)
    console.set_verbose(getattr(args, "verbose", settings.verbose))
    command = f"{args.group} {args.action}" if getattr(args, "action", None) else args.group

    with stopwatch(enabled=getattr(args, "timing", False)) as clock:
        try:
            report = args.handler(args)
        except (EnumeraError, ValueError, FileNotFoundError) as e:
            console.fail(f"{command}: {e}")
            report = ReportService.make_report(command, violations=[f"{type(e).__name__}: {e}"], seed=args.seed)
    report = report.model_copy(update={"timing_ms": clock["elapsed_ms"]})

    out.write(ReportService.render(report, output_format))
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
