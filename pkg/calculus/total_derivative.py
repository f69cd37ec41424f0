"""全导数 D、Fréchet 导数 h_* 与进化向量场 ∇_h."""
from logging import getLogger

import sympy as sp

from expr import (
    DiffExpr,
    X,
    u_symbol,
    u_order,
    partial,
    ZERO,
)
from .d_operator import DOperator


_log = getLogger(__name__)


def total_d(e: DiffExpr) -> DiffExpr:
    """D = ∂/∂x + Σ u_{i+1} ∂/∂u_i."""
    if e.is_zero:
        return ZERO
    expr = e.expr
    result = sp.diff(expr, X)
    for i in range((e.max_u if e.max_u is not None else -1) + 1):
        symbol = u_symbol(i)
        if symbol in expr.free_symbols:
            result += u_symbol(i + 1) * sp.diff(expr, symbol)
    return DiffExpr._trusted(result)


def total_d_power(e: DiffExpr, j: int) -> DiffExpr:
    """j 次全导数 D^j(e)，D^0 为恒等."""
    if j < 0:
        raise ValueError(f"D 的幂次不能为负: {j}")
    for _ in range(j):
        if e.is_zero:
            break
        e = total_d(e)
    return e


def frechet(h: DiffExpr) -> DOperator:
    """h_* = Σ ∂h/∂u_i D^i；h 不含 u 时为零算子."""
    if h.max_u is None:
        return DOperator.zero()
    return DOperator({i: partial(h, u_symbol(i)) for i in range(h.max_u + 1)})


def ev_apply(h: DiffExpr, r: DiffExpr) -> DiffExpr:
    """∇_h(r) = Σ_j D^j(h) ∂r/∂u_j，只展开 r 实际依赖的有限项."""
    order = u_order(r)
    if r.max_u is None or h.is_zero:
        return ZERO
    result = sp.S.Zero
    derivative = h
    for j in range(order + 1):
        symbol = u_symbol(j)
        if symbol in r.expr.free_symbols:
            result += derivative.expr * sp.diff(r.expr, symbol)
        derivative = total_d(derivative)
    return DiffExpr._trusted(result)


def nabla_on_op(h: DiffExpr, op: DOperator) -> DOperator:
    """把 ∇_h 作用到算子的每个系数上."""
    return DOperator({degree: ev_apply(h, coeff) for degree, coeff in op.items()})
