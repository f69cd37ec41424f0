"""有限拟设: 配置与按权分级的单项式池."""
from logging import getLogger
from typing import Any

import sympy as sp
from pydantic import ConfigDict, Field, field_validator, model_validator

from base_cls import BaseDataModel, PoolTooLargeError, ExprError
from context import DEFAULT_CONFIG
from expr import DiffExpr, X, T, u_symbol, is_scalar, u_index
from symmetry import EvolutionEquation


_log = getLogger(__name__)


class AnsatzConfig(BaseDataModel):
    """拟设 G = Σ c_m·t^j·exp(λt)·monomial_m 的配置.

    权重 w(u_i) = i + w0，w(x) = -1，w(t) = -n；池中只保留总权重不超过
    max_weight 的单项式。给出 monomials 时直接使用这些单项式作为池。
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    order: int = Field(ge=0)  # 目标阶数 k
    t_degree: int = Field(default=0, ge=0)  # t 的最高次数 J
    exp_lambda: Any = None  # 固定的 exp(λt) 因子
    max_weight: int | None = None  # 默认 order + base_weight
    x_degree: int = Field(default=0, ge=0)
    base_weight: int = Field(default=2, ge=1)  # w0
    max_pool: int | None = Field(default=None, ge=1)  # 默认取运行时配置
    monomials: tuple[DiffExpr, ...] | None = None  # 显式单项式池

    @field_validator("exp_lambda")
    @classmethod
    def _check_lambda(cls, value):
        if value is None:
            return None
        if isinstance(value, float):
            raise ValueError(f"λ 不能是浮点数: {value}")
        value = sp.sympify(value)
        if not is_scalar(value):
            raise ValueError(f"λ 必须是常量: {value}")
        return value

    @field_validator("monomials", mode="before")
    @classmethod
    def _coerce_monomials(cls, value):
        if value is None:
            return None
        return tuple(m if isinstance(m, DiffExpr) else DiffExpr(m) for m in value)

    @model_validator(mode="after")
    def _check_pool(self):
        if self.monomials is not None and not self.monomials:
            raise ValueError("显式单项式池不能为空")
        return self

    @property
    def weight_limit(self) -> int:
        return self.max_weight if self.max_weight is not None else self.order + self.base_weight

    @property
    def pool_cap(self) -> int:
        return self.max_pool if self.max_pool is not None else DEFAULT_CONFIG.get_config("max_pool", 400)


def monomial_weight(monomial: sp.Expr, n: int, base_weight: int) -> int:
    """按 w(u_i) = i + w0, w(x) = -1, w(t) = -n 计算单项式的权重."""
    weight = 0
    for symbol, power in monomial.as_powers_dict().items():
        if symbol == X:
            weight -= int(power)
        elif symbol == T:
            weight -= n * int(power)
        else:
            index = u_index(symbol)
            if index is not None:
                weight += (index + base_weight) * int(power)
    return weight


def _graded_monomials(cfg: AnsatzConfig, n: int) -> list[sp.Expr]:
    limit = cfg.weight_limit
    # x 与 t 的负权重最多抵消 x_degree + n·J
    budget = limit + cfg.x_degree + n * cfg.t_degree
    u_gens = [u_symbol(i) for i in range(cfg.order + 1)]
    max_u_degree = max(budget // cfg.base_weight, 0)
    result = []
    for u_mono in sorted(sp.itermonomials(u_gens, max_u_degree), key=sp.default_sort_key):
        for a in range(cfg.x_degree + 1):
            mono = u_mono * X ** a
            if monomial_weight(mono, n, cfg.base_weight) <= limit + n * cfg.t_degree:
                result.append(mono)
    return result


def build_pool(eq: EvolutionEquation, cfg: AnsatzConfig) -> list[DiffExpr]:
    """展开拟设的全部基函数 t^j·exp(λt)·monomial.

    Raises:
        PoolTooLargeError: 池的大小超过上限
    """
    n = eq.n
    if cfg.monomials is not None:
        bases = [m.expr for m in cfg.monomials]
        graded = False
    else:
        bases = _graded_monomials(cfg, n)
        graded = True

    factor = sp.exp(cfg.exp_lambda * T) if cfg.exp_lambda is not None else sp.S.One
    pool = []
    seen = set()
    for base in bases:
        for j in range(cfg.t_degree + 1):
            term = base * T ** j
            if graded and monomial_weight(term, n, cfg.base_weight) > cfg.weight_limit:
                continue
            try:
                element = DiffExpr(term * factor)
            except ExprError as e:
                raise ExprError(f"拟设基函数不在表达式类中: {term}") from e
            if element.is_zero or element in seen:
                continue
            seen.add(element)
            pool.append(element)
            if len(pool) > cfg.pool_cap:
                raise PoolTooLargeError(f"拟设池超过上限 {cfg.pool_cap}，请收紧 order/max_weight/x_degree 或调大 max_pool")
    _log.debug(f"拟设池大小 {len(pool)}")
    return pool
