"""已验证对称性的结构校验：首项系数、x 降阶、x 多项式分解与首项时间导数."""
from logging import getLogger

import sympy as sp

from base_cls import (
    ExprError,
    PreconditionError,
    DegenerateCaseError,
    InvariantViolation,
)
from expr import (
    DiffExpr,
    X,
    T,
    u_index,
    u_symbol,
    u_order,
    partial,
    is_generator,
    ONE,
)
from .bounds import r_bound
from .bracket import is_symmetry
from .equation import EvolutionEquation
from .symmetry_data import (
    SymmetryReport,
    LeadingStructure,
    DescentStep,
    Representation,
    Lead1Result,
)
from .symmetry_type import CheckVerdict


_log = getLogger(__name__)


def _require_symmetry(report: SymmetryReport) -> None:
    if not report.is_symmetry:
        raise PreconditionError(f"{report.candidate} 不是对称，残差为 {report.residual}")


def _time_only(expr: sp.Expr) -> bool:
    return not any(is_generator(s) and s != T for s in expr.free_symbols)


def _as_diff_expr(expr: sp.Expr) -> DiffExpr | None:
    try:
        return DiffExpr(expr)
    except ExprError:
        return None


def leading_structure_check(eq: EvolutionEquation, report: SymmetryReport) -> LeadingStructure:
    """校验 ∂G/∂u_k = c_k(t)(∂F/∂u_n)^{k/n}.

    分离项为 1 时归结为 ∂G/∂u_k 只依赖 t；分离项非常量时做精确整除，
    k 不是 n 的倍数时比较 c_k^n 与 (∂F/∂u_n)^k，比值含 t 以外的生成元为 FAIL，
    比值只含 t 但开不出表达式类中的 n 次根时为 INCONCLUSIVE。

    Raises:
        PreconditionError: 残差非零或 k < 2
    """
    _require_symmetry(report)
    k, n = report.k, eq.n
    if k < 2:
        raise PreconditionError(f"首项系数结构只对 k ≥ 2 成立，实际 k = {k}")
    c_k = report.c_k
    separant = eq.separant

    if separant == ONE:
        verdict = CheckVerdict.PASS if _time_only(c_k.expr) else CheckVerdict.FAIL
        return LeadingStructure(verdict=verdict, k=k, c_k=c_k, time_factor=c_k)

    if k % n == 0:
        ratio = sp.cancel(c_k.expr / separant.expr ** (k // n))
        verdict = CheckVerdict.PASS if _time_only(ratio) else CheckVerdict.FAIL
        factor = _as_diff_expr(ratio) if verdict is CheckVerdict.PASS else None
        return LeadingStructure(verdict=verdict, k=k, c_k=c_k, time_factor=factor)

    # 比较 c_k^n 与 S^k，c(t) 还需要开 n 次方
    ratio = sp.cancel(c_k.expr ** n / separant.expr ** k)
    if not _time_only(ratio):
        return LeadingStructure(verdict=CheckVerdict.FAIL, k=k, c_k=c_k, time_factor=None)
    root = sp.powdenest(sp.expand_power_base(ratio ** sp.Rational(1, n), force=True), force=True)
    factor = _as_diff_expr(root)
    if factor is None or sp.expand(factor.expr ** n - ratio) != 0:
        _log.info(f"c(t)^{n} = {ratio} 在表达式类中没有 {n} 次根，结构校验无法判定")
        return LeadingStructure(verdict=CheckVerdict.INCONCLUSIVE, k=k, c_k=c_k, time_factor=None)
    return LeadingStructure(verdict=CheckVerdict.PASS, k=k, c_k=c_k, time_factor=factor)


def x_descent(eq: EvolutionEquation, report: SymmetryReport) -> tuple[DescentStep, ...]:
    """反复对 x 求偏导，逐步校验导数仍是对称且 ord ∂G/∂x ≤ max(1, ord G - n + 1).

    导数为零或阶数不超过 n 时停止。

    Raises:
        PreconditionError: 残差非零
        InvariantViolation: 导数不是对称或阶数越界
    """
    _require_symmetry(report)
    steps = []
    current, order = report.candidate, report.k
    while True:
        derived = partial(current, X)
        derived_order = u_order(derived)
        bound = max(1, order - eq.n + 1)
        if not is_symmetry(eq, derived).is_symmetry:
            raise InvariantViolation(f"∂/∂x 降阶后不再是对称: {derived}")
        if derived_order is not None and derived_order > bound:
            raise InvariantViolation(f"ord ∂G/∂x = {derived_order} 超过界 {bound}: {derived}")
        steps.append(DescentStep(expr=derived, order=derived_order, bound=bound))
        if derived_order is None or derived_order <= eq.n:
            break
        current, order = derived, derived_order
    _log.debug(f"x 降阶 {len(steps)} 步: {[step.order for step in steps]}")
    return tuple(steps)


def representation_decompose(
    eq: EvolutionEquation,
    report: SymmetryReport,
    refine: bool = True,
) -> Representation:
    """把 G 分解为 ψ(t,x,u,u1) + Σ x^j g_j(t,u,…,u_{k-j(n-1)}).

    refine 为真且 ∂F/∂u_{n-i} (i = 0..j) 只依赖 t 时，ψ 不依赖 u_r
    (r = max(1-j,0)..1)，并把界收紧为 r_{k,n,-min(1,j)}。

    Raises:
        PreconditionError: 残差非零，或指数原子含 x
        InvariantViolation: g_j 的阶数或 s 超出理论界
    """
    _require_symmetry(report)
    G = report.candidate
    if G.exp_depends_on(X):
        raise PreconditionError(f"指数原子含 x，G 不是 x 的多项式: {G}")
    k, n, depth = report.k, eq.n, eq.deriv_depth

    if refine and depth >= 0:
        psi_limit = 0 if depth >= 1 else 1
        q = -min(1, depth)
    else:
        psi_limit = 2
        q = 1

    psi = sp.S.Zero
    by_power: dict[int, sp.Expr] = {}
    for term in sp.Add.make_args(G.expr):
        if term == 0:
            continue
        indices = [u_index(s) for s in term.free_symbols]
        if all(i < psi_limit for i in indices if i is not None):
            psi += term
            continue
        power = int(term.as_powers_dict().get(X, 0))
        by_power[power] = by_power.get(power, sp.S.Zero) + term / X ** power

    s = max(by_power, default=0)
    g = tuple(DiffExpr._trusted(by_power.get(j, sp.S.Zero)) for j in range(s + 1))

    for j, g_j in enumerate(g):
        limit = k - j * (n - 1)
        for term in sp.Add.make_args(g_j.expr):
            order = max((u_index(sym) for sym in term.free_symbols if u_index(sym) is not None), default=None)
            if order is not None and order >= 2 and order > limit:
                raise InvariantViolation(f"g_{j} 的阶数 {order} 超过 k - j(n-1) = {limit}: {g_j}")

    try:
        bound = r_bound(k, n, q)
    except DegenerateCaseError:
        _log.warning(f"n = {n} 时 r_{{k,n,{q}}} 退化，跳过 s 的上界校验")
        bound = None
    if bound is not None and s > bound:
        raise InvariantViolation(f"s = {s} 超过 r_{{{k},{n},{q}}} = {bound}: {G}")

    representation = Representation(
        s=s,
        g=g,
        psi=DiffExpr._trusted(psi),
        bound=bound,
        q=q,
        refined=refine and depth >= 0,
    )
    _log.debug(f"分解: {representation}")
    return representation


def lead1_check(eq: EvolutionEquation, report: SymmetryReport) -> Lead1Result:
    """校验 Q = ∂^r G/∂x^r (r = r_{k,n,0}) 的首项系数等于 (1/n^r) ∂^r c_k/∂t^r.

    Raises:
        PreconditionError: 方程不是常数分离项或含 t，残差非零，或 k ≤ n-1
        DegenerateCaseError: n = 2
    """
    if not eq.constant_separant or not eq.time_independent:
        raise PreconditionError("首项时间导数校验要求方程为常数分离项且不含 t")
    _require_symmetry(report)
    k, n = report.k, eq.n
    if k <= n - 1:
        raise PreconditionError(f"要求 k > n-1，实际 k = {k}, n = {n}")

    r = r_bound(k, n, 0)
    Q = report.candidate
    for _ in range(r):
        Q = partial(Q, X)
    q = k - r * (n - 1)
    lhs = partial(Q, u_symbol(q))
    rhs = DiffExpr._trusted(sp.diff(report.c_k.expr, T, r) / sp.Integer(n) ** r)

    q_order = u_order(Q)
    if q_order is not None and q_order > n - 1:
        verdict = CheckVerdict.FAIL
    elif lhs != rhs:
        verdict = CheckVerdict.FAIL
    elif Q.is_zero:
        verdict = CheckVerdict.VACUOUS
    else:
        verdict = CheckVerdict.PASS
    return Lead1Result(verdict=verdict, r=r, q=q, Q=Q, lhs=lhs, rhs=rhs)
