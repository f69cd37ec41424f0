from logging import getLogger
from math import comb

from base_cls import InvariantViolation
from calculus import total_d, total_d_power
from expr import DiffExpr, T, u_symbol, u_order, partial, ZERO
from .bracket import bracket, cr3_residual_operator
from .equation import EvolutionEquation
from .symmetry_data import DeterminingSystem


_log = getLogger(__name__)


def _binomial(q: int, p: int) -> int:
    """C_q^p，p 不在 0..q 内时为 0."""
    return comb(q, p) if 0 <= p <= q else 0


class _DerivativeCache:
    """D^p(e) 的惰性缓存."""

    def __init__(self, base: DiffExpr):
        self._powers = [base]

    def __getitem__(self, p: int) -> DiffExpr:
        while len(self._powers) <= p:
            self._powers.append(total_d(self._powers[-1]))
        return self._powers[p]


def level_count(n: int, k: int) -> int:
    """方程个数 n+k；k = 0 时 ∇_G(∂F/∂u_n) 落在 D^n 上，额外保留这一层."""
    return n + k if k > 0 else n + 1


def literal_equations(eq: EvolutionEquation, G: DiffExpr) -> list[DiffExpr]:
    """逐项转写 D^l 系数方程 E_l (l = 0..n+k-1)，右端减去 ∂²G/∂u_l∂t."""
    F, n = eq.F, eq.n
    k = u_order(G) or 0
    F_i = [partial(F, u_symbol(i)) for i in range(n + 1)]
    G_j = [partial(G, u_symbol(j)) for j in range(k + 1)]
    D_G = [total_d_power(G, m) for m in range(n + 1)]
    D_F = [total_d_power(F, r) for r in range(k + 1)]
    D_Gj = [_DerivativeCache(g) for g in G_j]
    D_Fi = [_DerivativeCache(f) for f in F_i]

    equations = []
    for l in range(level_count(n, k)):
        u_l = u_symbol(l)
        total = ZERO
        if l <= n:
            for m in range(n + 1):
                total = total + D_G[m] * partial(F_i[m], u_l)
        if l <= k:
            for r in range(k + 1):
                total = total - D_F[r] * partial(G_j[r], u_l)
        for j in range(max(0, l + 1 - n), k + 1):
            for i in range(max(l + 1 - j, 0), n + 1):
                p = i + j - l
                c_f = _binomial(i, p)
                c_g = _binomial(j, p)
                if c_f and not F_i[i].is_zero:
                    total = total + c_f * F_i[i] * D_Gj[j][p]
                if c_g and not G_j[j].is_zero:
                    total = total - c_g * G_j[j] * D_Fi[i][p]
        if l <= k:
            total = total - partial(G_j[l], T)
        equations.append(total)
    return equations


def determining_system(eq: EvolutionEquation, G: DiffExpr) -> DeterminingSystem:
    """构造定解方程组 E_l，并用两种独立构造互相校验.

    (a) 逐项转写系数公式；(b) 从残差算子 cr3_residual_operator 中取 D^l 系数。

    Raises:
        InvariantViolation: 两种构造不一致
    """
    k = u_order(G) or 0
    literal = literal_equations(eq, G)
    operator = cr3_residual_operator(eq, G)

    if operator.degree is not None and operator.degree >= len(literal):
        raise InvariantViolation(f"残差算子次数 {operator.degree} 超过方程层数 {len(literal)}")
    for level, expected in enumerate(literal):
        extracted = operator.coeff(level)
        if expected != extracted:
            _log.critical(f"E_{level} 两种构造不一致: G = {G}")
            raise InvariantViolation(
                f"E_{level}: 逐项转写得到 {expected}，残差算子系数为 {extracted}"
            )

    closure = partial(G, T) - bracket(eq.F, G)
    system = DeterminingSystem(equations=tuple(literal), closure=closure, n=eq.n, k=k)
    _log.debug(f"定解方程组: {len(literal)} 个方程，非零层 {system.nonzero_levels()}")
    return system
