from logging import getLogger

from base_cls import InvariantViolation
from calculus import (
    DOperator,
    frechet,
    ev_apply,
    op_apply,
    op_commutator,
    nabla_on_op,
)
from expr import DiffExpr, T, u_symbol, u_order, partial
from .equation import EvolutionEquation
from .symmetry_data import SymmetryReport


_log = getLogger(__name__)


def bracket(h: DiffExpr, r: DiffExpr) -> DiffExpr:
    """李括号 {h, r} = h_*(r) - r_*(h).

    同时按 ∇_r(h) - ∇_h(r) 计算并比对两种形式。

    Raises:
        InvariantViolation: 两种形式不一致
    """
    frechet_form = op_apply(frechet(h), r) - op_apply(frechet(r), h)
    nabla_form = ev_apply(r, h) - ev_apply(h, r)
    if frechet_form != nabla_form:
        _log.critical(f"括号两种形式不一致: h = {h}, r = {r}")
        raise InvariantViolation(
            f"{{h, r}} 的 Fréchet 形式 {frechet_form} 与 ∇ 形式 {nabla_form} 不一致"
        )
    return frechet_form


def leading_coefficients(eq: EvolutionEquation, G: DiffExpr) -> dict[int, DiffExpr]:
    """∂G/∂u_i，i 从 max(k-n+2, 0) 到 k."""
    k = u_order(G) or 0
    return {i: partial(G, u_symbol(i)) for i in range(max(k - eq.n + 2, 0), k + 1)}


def is_symmetry(eq: EvolutionEquation, G: DiffExpr) -> SymmetryReport:
    """检验 ∂G/∂t = {F, G}，非零残差是合法结论而不是错误."""
    residual = partial(G, T) - bracket(eq.F, G)
    report = SymmetryReport(
        candidate=G,
        k=u_order(G) or 0,
        residual=residual,
        leading=leading_coefficients(eq, G),
    )
    _log.debug(f"is_symmetry({G}): {report.verdict.label}")
    return report


def cr3_residual_operator(eq: EvolutionEquation, G: DiffExpr) -> DOperator:
    """∇_G(F_*) - ∇_F(G_*) + [F_*, G_*] - (∂G/∂t)_*，线性化条件成立时为零算子."""
    F_star = frechet(eq.F)
    G_star = frechet(G)
    return (
        nabla_on_op(G, F_star)
        - nabla_on_op(eq.F, G_star)
        + op_commutator(F_star, G_star)
        - frechet(partial(G, T))
    )
