"""∂/∂t 封闭性与两类 t 依赖对称性的存在性检验."""
from logging import getLogger

import sympy as sp

from base_cls import PreconditionError, InvariantViolation
from expr import DiffExpr, T, u_order, partial, is_scalar
from symmetry import (
    EvolutionEquation,
    CheckVerdict,
    bracket,
    is_symmetry,
)
from .classify import annihilator
from .time_data import ClosureCheck, ScalingResult, MasterResult


_log = getLogger(__name__)


def _require_time_independent_equation(eq: EvolutionEquation) -> None:
    if not eq.time_independent:
        raise PreconditionError(f"要求方程右端项不含 t: {eq.F}")


def dt_closure_check(eq: EvolutionEquation, G: DiffExpr) -> ClosureCheck:
    """校验 ∂G/∂t 与 Ω(G) 仍是阶数不超过 k 的对称，Ω 消去 c_k 时 ord Ω(G) ≤ k-1.

    Raises:
        PreconditionError: 方程含 t，或 G 不是对称
    """
    _require_time_independent_equation(eq)
    report = is_symmetry(eq, G)
    if not report.is_symmetry:
        raise PreconditionError(f"{G} 不是对称，残差为 {report.residual}")
    k = report.k
    failures = []

    dt = partial(G, T)
    dt_order = u_order(dt)
    if not is_symmetry(eq, dt).is_symmetry:
        failures.append(f"∂G/∂t = {dt} 不是对称")
    if dt_order is not None and dt_order > k:
        failures.append(f"ord ∂G/∂t = {dt_order} > {k}")

    omega = annihilator(report.c_k)
    omega_g = omega.apply(G)
    omega_order = u_order(omega_g)
    if not is_symmetry(eq, omega_g).is_symmetry:
        failures.append(f"Ω(G) = {omega_g} 不是对称")
    limit = k - 1 if k >= 1 else k
    if omega_order is not None and omega_order > limit:
        failures.append(f"ord Ω(G) = {omega_order} > {limit}")

    for failure in failures:
        _log.warning(f"∂/∂t 封闭性校验失败: {failure}")
    return ClosureCheck(
        verdict=CheckVerdict.FAIL if failures else CheckVerdict.PASS,
        k=k,
        dt=dt,
        dt_order=dt_order,
        omega=omega,
        omega_g=omega_g,
        omega_order=omega_order,
        failures=tuple(failures),
    )


def scaling_test(eq: EvolutionEquation, Q0: DiffExpr) -> ScalingResult:
    """检验 {F, Q0} = λQ0；成立时确认 exp(λt)·Q0 是对称.

    λ 由规范形式的精确相除得到，商必须是常量。

    Raises:
        PreconditionError: Q0 = 0，Q0 含 t，或方程含 t
        InvariantViolation: exp(λt)·Q0 未通过对称性检验
    """
    if Q0.is_zero:
        raise PreconditionError("Q0 不能为零")
    if Q0.depends_on(T):
        raise PreconditionError(f"Q0 不能含 t: {Q0}")
    _require_time_independent_equation(eq)

    image = bracket(eq.F, Q0)
    lam = sp.cancel(image.expr / Q0.expr)
    if not is_scalar(lam) or image != DiffExpr._trusted(lam * Q0.expr):
        _log.info(f"{{F, Q0}} 与 Q0 不成比例: {image}")
        return ScalingResult(Q0=Q0, image=image, lam=None, certified=None)

    lam = sp.expand(lam)
    candidate = DiffExpr(sp.exp(lam * T) * Q0.expr)
    if not is_symmetry(eq, candidate).is_symmetry:
        raise InvariantViolation(f"{{F, Q0}} = ({lam})Q0 但 exp(λt)·Q0 不是对称: {candidate}")
    if lam == 0:
        _log.info(f"λ = 0，Q0 本身是不含 t 的对称: {Q0}")
    return ScalingResult(Q0=Q0, image=image, lam=lam, certified=candidate)


def mastersymmetry_test(eq: EvolutionEquation, G0: DiffExpr) -> MasterResult:
    """计算 G1 = {F, G0}，检验 {F, G1} = 0 且 G1 ≠ 0，成立时确认 G0 + t·G1 是对称.

    Raises:
        PreconditionError: G0 含 t，或方程含 t
        InvariantViolation: G0 + t·G1 未通过对称性检验
    """
    if G0.depends_on(T):
        raise PreconditionError(f"G0 不能含 t: {G0}")
    _require_time_independent_equation(eq)

    G1 = bracket(eq.F, G0)
    nontrivial = not G1.is_zero
    commutes = bracket(eq.F, G1).is_zero

    mu = None
    if nontrivial:
        ratio = sp.cancel(G1.expr / eq.F.expr)
        if is_scalar(ratio) and G1 == DiffExpr._trusted(ratio * eq.F.expr):
            mu = sp.expand(ratio)

    certified = None
    if commutes and nontrivial:
        certified = G0 + DiffExpr._wrap(T) * G1
        if not is_symmetry(eq, certified).is_symmetry:
            raise InvariantViolation(f"G0 + t·G1 不是对称: {certified}")
    _log.debug(f"mastersymmetry({G0}): G1 = {G1}, μ = {mu}")
    return MasterResult(G0=G0, G1=G1, commutes=commutes, nontrivial=nontrivial, mu=mu, certified=certified)
