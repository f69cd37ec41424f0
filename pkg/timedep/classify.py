"""t 依赖形态分类与常系数 ∂/∂t 算子."""
from logging import getLogger
from typing import Sequence

import sympy as sp

from base_cls import PreconditionError
from expr import DiffExpr, T, partial
from .time_data import TimeDependenceClass, AnnihilatorOp
from .time_type import TimeKind


_log = getLogger(__name__)

_S = sp.Symbol("s")


def time_spectrum(G: DiffExpr) -> dict[sp.Expr, int]:
    """λ -> 该 exp(λt) 因子下 t 的最高次数."""
    spectrum: dict[sp.Expr, int] = {}
    for term in sp.Add.make_args(G.expr):
        if term == 0:
            continue
        lam = sp.S.Zero
        for atom in term.atoms(sp.exp):
            lam += sp.diff(atom.args[0], T)
        degree = int(term.as_powers_dict().get(T, 0))
        spectrum[lam] = max(spectrum.get(lam, 0), degree)
    return spectrum


def classify_time(G: DiffExpr) -> TimeDependenceClass:
    """按规范形式中 exp(λt) 因子与 t 的次数给出最紧的形态."""
    spectrum = time_spectrum(G)
    if set(spectrum) <= {sp.S.Zero}:
        degree = spectrum.get(sp.S.Zero, 0)
        if degree == 0:
            return TimeDependenceClass.independent()
        return TimeDependenceClass.polynomial(degree)
    return TimeDependenceClass.quasipolynomial(spectrum.items())


def operator_from_roots(roots: Sequence[tuple[sp.Expr, int]]) -> AnnihilatorOp:
    product = sp.Mul(*((_S - lam) ** mult for lam, mult in roots))
    coeffs = sp.Poly(product, _S).all_coeffs()[::-1]
    return AnnihilatorOp(coeffs=tuple(sp.expand(a) for a in coeffs), roots=tuple(roots))


def annihilator_for(time_class: TimeDependenceClass) -> AnnihilatorOp:
    """形态对应的最小常系数消去算子 ∏ (∂/∂t - λ)^{m_λ+1}.

    Raises:
        PreconditionError: 形态为 OTHER
    """
    if time_class.kind is TimeKind.OTHER:
        raise PreconditionError("t 依赖不是拟多项式形态，不存在常系数消去算子")
    if time_class.kind is TimeKind.INDEPENDENT:
        return operator_from_roots([(sp.S.Zero, 1)])
    if time_class.kind is TimeKind.POLYNOMIAL:
        return operator_from_roots([(sp.S.Zero, time_class.degree + 1)])
    return operator_from_roots([(lam, m + 1) for lam, m in time_class.spectrum])


def annihilator(G: DiffExpr) -> AnnihilatorOp:
    """消去 G 的 t 依赖的最低次常系数算子，多项式 p 次时为 ∂^{p+1}/∂t^{p+1}."""
    op = annihilator_for(classify_time(G))
    _log.debug(f"annihilator({G}) = {op}")
    return op


def apply_time_operator(coeffs: Sequence, G: DiffExpr) -> DiffExpr:
    """逐项作用 Σ a_l ∂^l G/∂t^l."""
    result = sp.S.Zero
    current = G
    for a in coeffs:
        a = sp.sympify(a)
        if a != 0:
            result += a * current.expr
        current = partial(current, T)
    return DiffExpr._trusted(result)
