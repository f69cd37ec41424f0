from dataclasses import dataclass
from logging import getLogger

from base_cls import BaseDataMixin, EquationError
from expr import (
    DiffExpr,
    X,
    T,
    u_symbol,
    u_order,
    partial,
    ONE,
)


_log = getLogger(__name__)


@dataclass(frozen=True, repr=False)
class EvolutionEquation(BaseDataMixin):
    """发展方程 u_t = F(t, u, u1, …, un) 及其分类标记"""
    F: DiffExpr  # 右端项
    n: int  # 阶数, ≥ 2
    separant: DiffExpr  # ∂F/∂u_n
    f: DiffExpr | None  # 常数分离项时 F - u_n，否则为 None
    deriv_depth: int  # 最大的 j 使 ∂F/∂u_{n-i} 只依赖 t (i = 0..j)，不存在时为 -1
    constant_separant: bool  # 分离项等于 1
    kdv_like: bool  # 常数分离项且 ∂f/∂u_{n-1} 为常量
    time_independent: bool  # F 不含 t
    nonlinearizable: bool = False  # 用户声明方程不可线性化

    _repr_exclude = frozenset({"separant", "f"})

    @property
    def top(self) -> DiffExpr:
        """u_n."""
        return DiffExpr._wrap(u_symbol(self.n))


def _time_only(e: DiffExpr) -> bool:
    return e.max_u is None and not e.depends_on(X)


def classify(F: DiffExpr, nonlinearizable: bool = False) -> EvolutionEquation:
    """校验右端项并计算分类标记.

    Args:
        F: 右端项
        nonlinearizable: 用户对"方程不可线性化"的声明，本函数不做判定

    Raises:
        EquationError: 阶数小于 2，或 F 含 x
    """
    n = u_order(F)
    if n is None or n < 2:
        raise EquationError(f"发展方程的阶数必须 ≥ 2，实际为 {n}: {F}")
    if F.depends_on(X):
        raise EquationError(f"右端项不能依赖 x: {F}")

    top = u_symbol(n)
    separant = partial(F, top)
    constant_separant = separant == ONE
    if not constant_separant and separant.is_scalar:
        _log.info(f"分离项为常量 {separant}，对 t 伸缩后可化为常数分离项形式")

    f = F - DiffExpr._wrap(top) if constant_separant else None
    kdv_like = constant_separant and partial(f, u_symbol(n - 1)).is_scalar

    deriv_depth = -1
    for i in range(n + 1):
        if not _time_only(partial(F, u_symbol(n - i))):
            break
        deriv_depth = i

    eq = EvolutionEquation(
        F=F,
        n=n,
        separant=separant,
        f=f,
        deriv_depth=deriv_depth,
        constant_separant=constant_separant,
        kdv_like=kdv_like,
        time_independent=not F.depends_on(T),
        nonlinearizable=nonlinearizable,
    )
    _log.debug(f"方程分类: {eq}")
    return eq
