"""规范形式的微分表达式.

规范形式 = 对生成元完全展开的多项式，每一项的全部指数因子合并为一个
指数原子 exp(p)，p 是 x, t, u 的常系数齐次线性组合。
规范形式唯一，因此语义相等、结构相等与差为零三者等价。
"""
from logging import getLogger
from typing import Mapping, Union

import sympy as sp

from base_cls import (
    ExprError,
    ExponentError,
    NonScalarDivisionError,
    ExpArgumentError,
)
from .scalar import (
    X,
    T,
    U,
    u_index,
    u_symbol,
    is_generator,
    generator,
    is_scalar,
    is_unit,
    constants_of,
)


_log = getLogger(__name__)

RawExpr = Union["DiffExpr", sp.Expr, int]


def _sanitize(node: sp.Basic) -> sp.Expr:
    """校验原始表达式树并重建，拒绝表达式类之外的一切结构."""
    if isinstance(node, sp.Symbol):
        index = u_index(node)
        if index is not None and node != u_symbol(index):
            raise ExprError(f"生成元 '{node}' 应写作 '{u_symbol(index)}'")
        if node.name == "exp":
            raise ExprError("'exp' 只能作为函数使用")
        return node
    if isinstance(node, sp.Float):
        raise ExprError(f"不允许浮点数: {node}")
    if node.is_Rational:
        return node
    if node in (sp.zoo, sp.nan, sp.oo, -sp.oo) or node.is_Number:
        raise ExprError(f"不是有理数: {node}")
    if isinstance(node, sp.exp):
        argument = sp.expand(_sanitize(node.args[0]))
        _check_exp_argument(argument)
        return sp.exp(argument)
    if isinstance(node, sp.Add):
        return sp.Add(*(_sanitize(arg) for arg in node.args))
    if isinstance(node, sp.Mul):
        return sp.Mul(*(_sanitize(arg) for arg in node.args))
    if isinstance(node, sp.Pow):
        base, exponent = node.args
        if isinstance(base, sp.exp):
            if not exponent.is_Rational:
                raise ExponentError(f"指数原子的幂次必须是有理数: {node}")
            return _sanitize(sp.exp(base.args[0] * exponent))
        if not exponent.is_Integer:
            raise ExponentError(f"非原子底数上的非整数指数: {node}")
        base = _sanitize(base)
        if exponent < 0 and not is_unit(base):
            raise NonScalarDivisionError(f"只能除以单项式常量与指数原子之积: {base}")
        return sp.Pow(base, exponent)
    raise ExprError(f"表达式类不支持的结构: {node}")


def _check_exp_argument(argument: sp.Expr) -> None:
    """指数参数必须是 x, t, u 的常系数齐次线性组合(零除外)."""
    for term in sp.Add.make_args(argument):
        if term == 0:
            continue
        gens = [s for s in term.free_symbols if is_generator(s)]
        if len(gens) != 1 or gens[0] not in (X, T, U):
            raise ExpArgumentError(f"指数参数不是 x, t, u 的线性组合: {argument}")
        coeff, rest = term.as_independent(gens[0], as_Add=False)
        if rest != gens[0] or not is_scalar(coeff):
            raise ExpArgumentError(f"指数参数不是 x, t, u 的线性组合: {argument}")


def _merge_exp(term: sp.Expr) -> sp.Expr:
    """把一项中的所有指数因子合并为单个指数原子."""
    arguments = []
    rest = []
    for factor in sp.Mul.make_args(term):
        if isinstance(factor, sp.exp):
            arguments.append(factor.args[0])
        elif factor.is_Pow and isinstance(factor.base, sp.exp):
            arguments.append(factor.base.args[0] * factor.exp)
        else:
            rest.append(factor)
    if arguments:
        argument = sp.expand(sp.Add(*arguments))
        if argument != 0:
            rest.append(sp.exp(argument))
    return sp.Mul(*rest)


def _canonical(expr: sp.Expr) -> sp.Expr:
    """对已知合法的表达式求规范形式."""
    expanded = sp.expand(expr, power_exp=False, log=False)
    return sp.Add(*(_merge_exp(term) for term in sp.Add.make_args(expanded)))


def _split_term(term: sp.Expr) -> tuple[sp.Expr, sp.Expr]:
    """把规范形式中的一项拆成 (常量系数, 生成元单项式与指数原子之积)."""
    coeff = []
    basis = []
    for factor in sp.Mul.make_args(term):
        (coeff if is_scalar(factor) else basis).append(factor)
    return sp.Mul(*coeff), sp.Mul(*basis)


class DiffExpr:
    """x, t, u, u1, ... 与指数原子上的规范形式微分表达式.

    实例不可变；算术运算返回新的规范形式。
    """
    __slots__ = ("_expr", "_max_u", "_x_degree", "_t_degree")

    def __init__(self, raw: RawExpr = 0):
        if isinstance(raw, DiffExpr):
            expr = raw._expr
        else:
            if isinstance(raw, str):
                raise TypeError("字符串表达式请使用 cli.parse 解析")
            if isinstance(raw, float):
                raise ExprError(f"不允许浮点数: {raw}")
            expr = _canonical(_sanitize(sp.sympify(raw)))
        self._set(expr)

    def _set(self, expr: sp.Expr) -> None:
        object.__setattr__(self, "_expr", expr)
        indices = [u_index(s) for s in expr.free_symbols]
        indices = [i for i in indices if i is not None]
        object.__setattr__(self, "_max_u", max(indices) if indices else None)
        object.__setattr__(self, "_x_degree", self._degree_in(expr, X))
        object.__setattr__(self, "_t_degree", self._degree_in(expr, T))

    @staticmethod
    def _degree_in(expr: sp.Expr, symbol: sp.Symbol) -> int:
        # 只统计指数原子之外的多项式次数
        degrees = [int(term.as_powers_dict().get(symbol, 0)) for term in sp.Add.make_args(expr)]
        return max(degrees, default=0)

    @classmethod
    def _wrap(cls, expr: sp.Expr) -> "DiffExpr":
        """包装已是规范形式的 sympy 表达式."""
        obj = cls.__new__(cls)
        obj._set(expr)
        return obj

    @classmethod
    def _trusted(cls, expr: sp.Expr) -> "DiffExpr":
        """规范化由合法表达式经环运算或求导得到的结果(跳过校验)."""
        return cls._wrap(_canonical(expr))

    def __setattr__(self, key, value):
        raise AttributeError("DiffExpr 不可变")

    # ---------- 属性 ----------

    @property
    def expr(self) -> sp.Expr:
        """底层 sympy 表达式(规范形式)."""
        return self._expr

    @property
    def is_zero(self) -> bool:
        return self._expr == 0

    @property
    def max_u(self) -> int | None:
        """出现的最高 u 阶数，不含 u 时为 None."""
        return self._max_u

    @property
    def x_degree(self) -> int:
        return self._x_degree

    @property
    def t_degree(self) -> int:
        return self._t_degree

    @property
    def constants(self) -> frozenset[sp.Symbol]:
        return frozenset(constants_of(self._expr))

    @property
    def is_scalar(self) -> bool:
        return is_scalar(self._expr)

    def depends_on(self, ref) -> bool:
        return generator(ref) in self._expr.free_symbols

    def exp_depends_on(self, ref) -> bool:
        """是否有指数原子的参数含有给定生成元."""
        symbol = generator(ref)
        return any(symbol in atom.args[0].free_symbols for atom in self._expr.atoms(sp.exp))

    def terms(self) -> dict[sp.Expr, sp.Expr]:
        """按 生成元单项式(含指数原子) -> 常量系数 展开."""
        result: dict[sp.Expr, sp.Expr] = {}
        if self.is_zero:
            return result
        for term in sp.Add.make_args(self._expr):
            coeff, basis = _split_term(term)
            result[basis] = result.get(basis, 0) + coeff
        return result

    # ---------- 运算 ----------

    @staticmethod
    def _coerce(other) -> "DiffExpr":
        if isinstance(other, DiffExpr):
            return other
        return DiffExpr(other)

    def __add__(self, other) -> "DiffExpr":
        return DiffExpr._trusted(self._expr + self._coerce(other)._expr)

    __radd__ = __add__

    def __sub__(self, other) -> "DiffExpr":
        return DiffExpr._trusted(self._expr - self._coerce(other)._expr)

    def __rsub__(self, other) -> "DiffExpr":
        return DiffExpr._trusted(self._coerce(other)._expr - self._expr)

    def __mul__(self, other) -> "DiffExpr":
        return DiffExpr._trusted(self._expr * self._coerce(other)._expr)

    __rmul__ = __mul__

    def __neg__(self) -> "DiffExpr":
        return DiffExpr._wrap(-self._expr)

    def __pow__(self, power: int) -> "DiffExpr":
        if not isinstance(power, int) or power < 0:
            raise ExponentError(f"DiffExpr 只支持非负整数次幂: {power}")
        return DiffExpr._trusted(self._expr ** power)

    def __truediv__(self, other) -> "DiffExpr":
        divisor = self._coerce(other)
        if not is_unit(divisor._expr):
            raise NonScalarDivisionError(f"只能除以单项式常量与指数原子之积: {divisor}")
        return DiffExpr(self._expr / divisor._expr)

    # ---------- 比较与展示 ----------

    def __eq__(self, other) -> bool:
        if isinstance(other, DiffExpr):
            return self._expr == other._expr
        if isinstance(other, (int, sp.Expr)):
            return self._expr == DiffExpr(other)._expr
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._expr)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        from .printer import print_expr
        return print_expr(self._expr)

    def __repr__(self) -> str:
        return f"DiffExpr({self})"


def normalize(raw: RawExpr) -> DiffExpr:
    """把由 +, -, *, 整数次幂, exp, 生成元和常量组成的表达式树化为规范形式.

    Raises:
        ExponentError: 非原子底数上出现非整数指数
        NonScalarDivisionError: 除数不是单项式常量
        ExpArgumentError: 指数参数不是 x, t, u 的齐次线性组合
        ExprError: 其他不受支持的结构(浮点数、未知函数等)
    """
    return DiffExpr(raw)


def partial(e: DiffExpr, ref) -> DiffExpr:
    """把全部生成元视为独立变量的形式偏导数."""
    symbol = generator(ref)
    if symbol not in e.expr.free_symbols:
        return ZERO
    return DiffExpr._trusted(sp.diff(e.expr, symbol))


def substitute(e: DiffExpr, bindings: Mapping) -> DiffExpr:
    """同时代换若干生成元后规范化.

    Raises:
        ExpArgumentError: 代换后指数参数不再是线性组合
    """
    replacements = {
        generator(key): (value.expr if isinstance(value, DiffExpr) else sp.sympify(value))
        for key, value in bindings.items()
    }
    return DiffExpr(e.expr.xreplace(replacements))


def u_order(e: DiffExpr) -> int | None:
    """最大的 k 使 ∂e/∂u_k ≠ 0；不含 u 时为 0，e = 0 时为 None."""
    if e.is_zero:
        return None
    return e.max_u if e.max_u is not None else 0


def x_expr() -> DiffExpr:
    return DiffExpr._wrap(X)


def t_expr() -> DiffExpr:
    return DiffExpr._wrap(T)


def u_expr(index: int = 0) -> DiffExpr:
    return DiffExpr._wrap(u_symbol(index))


ZERO = DiffExpr._wrap(sp.S.Zero)
ONE = DiffExpr._wrap(sp.S.One)
