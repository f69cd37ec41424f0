"""把库函数的结果组装为 ReportDto，命令行与语料运行器共用."""
from logging import getLogger
from typing import Sequence

from base_cls import PreconditionError, InvariantViolation
from expr import DiffExpr, print_expr
from search import AnsatzConfig, find_symmetries, find_linear_t_symmetries
from symmetry import (
    EvolutionEquation,
    SymmetryReport,
    CheckVerdict,
    is_symmetry,
    determining_system,
    leading_structure_check,
    x_descent,
    representation_decompose,
    lead1_check,
    dim_bound,
    dim_breakdown,
)
from timedep import (
    HypothesisMode,
    classify_time,
    annihilator,
    dt_closure_check,
    scaling_test,
    mastersymmetry_test,
    hypothesis_report,
)
from .dto import ReportDto, TimeClassDto


_log = getLogger(__name__)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def equation_flags(eq: EvolutionEquation) -> dict:
    return {
        "n": eq.n,
        "constant_separant": eq.constant_separant,
        "kdv_like": eq.kdv_like,
        "time_independent": eq.time_independent,
        "deriv_depth": eq.deriv_depth,
        "nonlinearizable": eq.nonlinearizable,
    }


def classify_report(eq: EvolutionEquation) -> ReportDto:
    summary = f"constant separant: {_yes(eq.constant_separant)}; KdV-like: {_yes(eq.kdv_like)}"
    details = {"order": eq.n, "separant": str(eq.separant), "deriv depth": eq.deriv_depth}
    if eq.f is not None:
        details["f"] = str(eq.f)
    return ReportDto(
        command="classify",
        verdict="CLASSIFIED",
        summary=summary,
        order=eq.n,
        flags=equation_flags(eq),
        details=details,
    )


def _representation_line(eq: EvolutionEquation, report: SymmetryReport, refine: bool) -> str:
    try:
        rep = representation_decompose(eq, report, refine=refine)
    except PreconditionError as e:
        return f"skipped ({e})"
    parts = [f"s = {rep.s}"]
    parts.extend(f"g_{j} = {g}" for j, g in enumerate(rep.g))
    parts.append(f"psi = {rep.psi}")
    bound = "degenerate" if rep.bound is None else str(rep.bound)
    parts.append(f"bound r_{{k,n,{rep.q}}} = {bound}")
    return "; ".join(parts)


def check_report(eq: EvolutionEquation, G: DiffExpr, refine: bool = True) -> ReportDto:
    """is_symmetry + 首项结构 + x 多项式分解."""
    report = is_symmetry(eq, G)
    time_class = classify_time(G)
    details = {}
    if report.is_symmetry:
        summary = f"{report.verdict.label}, order {report.k}, time dependence: {time_class.describe()}"
        if report.k >= 2:
            structure = leading_structure_check(eq, report)
            details["leading structure"] = f"{structure.verdict.label} (c_{report.k} = {structure.c_k})"
        details["representation"] = _representation_line(eq, report, refine)
    else:
        summary = f"{report.verdict.label}, order {report.k}"
    return ReportDto(
        command="check",
        verdict=report.verdict.label,
        summary=summary,
        ok=report.is_symmetry,
        order=report.k,
        flags=equation_flags(eq),
        time_class=TimeClassDto.from_class(time_class),
        residual=None if report.is_symmetry else str(report.residual),
        details=details,
    )


def structure_failures(eq: EvolutionEquation, report: SymmetryReport) -> list[str]:
    """已验证对称性上的结构推论，返回未满足的条目."""
    failures = []
    if eq.constant_separant and report.k >= 2:
        structure = leading_structure_check(eq, report)
        if structure.verdict is CheckVerdict.FAIL:
            failures.append(f"∂G/∂u_{report.k} = {report.c_k} 不只依赖 t")
    try:
        x_descent(eq, report)
        if not report.candidate.exp_depends_on("x"):
            # 收紧的界与 s ≤ r_{k,n,1} 都要成立
            for refine in (True, False):
                representation_decompose(eq, report, refine=refine)
    except InvariantViolation as e:
        failures.append(str(e))
    if (
        eq.constant_separant
        and eq.time_independent
        and eq.n >= 3
        and report.k > eq.n - 1
    ):
        lead1 = lead1_check(eq, report)
        if lead1.verdict is CheckVerdict.FAIL:
            failures.append(f"首项时间导数校验失败: {lead1.lhs} ≠ {lead1.rhs}")
    return failures


def determine_report(eq: EvolutionEquation, G: DiffExpr) -> ReportDto:
    system = determining_system(eq, G)
    levels = [f"E_{l} = {e}" for l, e in enumerate(system.equations)]
    verdict = "VANISHES" if system.vanishes else "NONZERO"
    return ReportDto(
        command="determine",
        verdict=verdict,
        summary=f"{verdict}, {len(system.equations)} equations, order {system.k}",
        ok=system.vanishes,
        order=system.k,
        flags=equation_flags(eq),
        residual=None if system.closure.is_zero else str(system.closure),
        details={"levels": levels, "nonzero levels": system.nonzero_levels()},
    )


def timedep_report(G: DiffExpr, eq: EvolutionEquation | None = None) -> ReportDto:
    time_class = classify_time(G)
    details = {"annihilator": str(annihilator(G))}
    ok = True
    if eq is not None:
        closure = dt_closure_check(eq, G)
        details["dt"] = f"{closure.dt} (order {closure.dt_order})"
        details["omega(G)"] = f"{closure.omega_g} (order {closure.omega_order})"
        details["closure"] = closure.verdict.label
        ok = closure.verdict is CheckVerdict.PASS
    return ReportDto(
        command="timedep",
        verdict=time_class.kind.label,
        summary=f"time dependence: {time_class.describe()}",
        ok=ok,
        time_class=TimeClassDto.from_class(time_class),
        details=details,
    )


def scaling_report(eq: EvolutionEquation, Q0: DiffExpr) -> ReportDto:
    result = scaling_test(eq, Q0)
    details = {"{F, Q0}": str(result.image)}
    if result.found:
        details["lambda"] = print_expr(result.lam)
        details["certified"] = str(result.certified)
        summary = f"lambda = {print_expr(result.lam)}"
    else:
        summary = "lambda: none"
    return ReportDto(
        command="scaling",
        verdict="FOUND" if result.found else "NONE",
        summary=summary,
        ok=result.found,
        flags=equation_flags(eq),
        details=details,
    )


def master_report(eq: EvolutionEquation, G0: DiffExpr) -> ReportDto:
    result = mastersymmetry_test(eq, G0)
    details = {
        "G1": str(result.G1),
        "{F, G1} = 0": _yes(result.commutes),
        "G1 != 0": _yes(result.nontrivial),
    }
    if result.mu is not None:
        details["mu"] = print_expr(result.mu)
    if result.certified is not None:
        details["certified"] = str(result.certified)
    verdict = "MASTERSYMMETRY" if result.holds else "NO TIME-DEPENDENT SYMMETRY"
    return ReportDto(
        command="master",
        verdict=verdict,
        summary=f"{verdict}, G1 = {result.G1}",
        ok=result.holds,
        flags=equation_flags(eq),
        details=details,
    )


def find_report(eq: EvolutionEquation, cfg: AnsatzConfig, linear_t: bool = False) -> ReportDto:
    if linear_t:
        pairs = find_linear_t_symmetries(eq, cfg)
        items = [f"G0 = {p.G0}; G1 = {p.G1}" for p in pairs]
        count = len(pairs)
    else:
        basis = find_symmetries(eq, cfg)
        items = [str(G) for G in basis]
        count = len(basis)
    return ReportDto(
        command="find",
        verdict="FOUND" if count else "EMPTY",
        summary=f"{count} {'pairs' if linear_t else 'symmetries'} found",
        flags=equation_flags(eq),
        details={"basis": items},
    )


def predict_report(eq: EvolutionEquation, basis: Sequence[DiffExpr], mode: HypothesisMode) -> ReportDto:
    report = hypothesis_report(eq, basis, mode)
    return ReportDto(
        command="predict",
        verdict=report.prediction.label.upper(),
        summary=f"prediction: {report.prediction.label}",
        flags=equation_flags(eq),
        details={
            "cites": report.citation,
            "basis classes": [c.describe() for c in report.classes],
            "basis completeness": "assumed (user-supplied)",
        },
    )


def dim_report(k: int, n: int, dim_phi: int) -> ReportDto:
    total = dim_bound(k, n, dim_phi)
    breakdown = [f"level {level}: ≤ {bound}" for level, bound in dim_breakdown(k, n, dim_phi)]
    return ReportDto(
        command="dim",
        verdict="BOUND",
        summary=f"dim S^({k}) ≤ {total}",
        details={"breakdown": breakdown},
    )

