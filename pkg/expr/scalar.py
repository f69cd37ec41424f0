"""生成元与具名常量.

生成元是 x, t 以及 u 的各阶 x 导数 u, u1, u2, ...；
其余符号都是具名常量，被视为不透明的超越常数。
"""
import re
from functools import lru_cache
from typing import Iterable

import sympy as sp

from base_cls import ExprError


X = sp.Symbol("x")
T = sp.Symbol("t")

_U_NAME = re.compile(r"u(0|[1-9]\d*)?$")
_RESERVED = {"x", "t", "exp"}


@lru_cache(maxsize=None)
def u_symbol(index: int) -> sp.Symbol:
    """返回 u 的 index 阶 x 导数对应的符号，0 阶为 ``u``."""
    if index < 0:
        raise ValueError(f"导数阶数不能为负: {index}")
    return sp.Symbol("u" if index == 0 else f"u{index}")


U = u_symbol(0)


def u_index(symbol: sp.Basic) -> int | None:
    """u 族生成元的阶数，其余符号返回 None."""
    if not isinstance(symbol, sp.Symbol):
        return None
    match = _U_NAME.match(symbol.name)
    if match is None:
        return None
    digits = match.group(1)
    return int(digits) if digits else 0


def is_generator(symbol: sp.Basic) -> bool:
    return symbol == X or symbol == T or u_index(symbol) is not None


def generator(ref: "sp.Symbol | int | str") -> sp.Symbol:
    """把 ``u_symbol``、整数阶数或名字 ("x", "t", "u", "u3") 统一为生成元符号."""
    if isinstance(ref, int):
        return u_symbol(ref)
    if isinstance(ref, str):
        ref = sp.Symbol(ref)
    if ref == X or ref == T:
        return ref
    index = u_index(ref)
    if index is None:
        raise ExprError(f"'{ref}' 不是生成元")
    if ref != u_symbol(index):
        # u0 这样的别名不是规范名
        raise ExprError(f"生成元 '{ref}' 应写作 '{u_symbol(index)}'")
    return ref


def constant(name: str) -> sp.Symbol:
    """声明一个具名常量.

    Raises:
        ExprError: 名字不是合法标识符，或与生成元/函数名冲突
    """
    if not name.isidentifier():
        raise ExprError(f"常量名 '{name}' 不是合法标识符")
    if name in _RESERVED or _U_NAME.match(name) or re.match(r"u_\d+$", name):
        raise ExprError(f"常量名 '{name}' 与生成元或函数名冲突")
    return sp.Symbol(name)


def constants(names: Iterable[str]) -> tuple[sp.Symbol, ...]:
    return tuple(constant(name) for name in names)


def is_scalar(value: sp.Expr) -> bool:
    """判断是否为常量：不含生成元、指数原子和浮点数."""
    value = sp.sympify(value)
    if value.has(sp.Float) or value.has(sp.exp):
        return False
    return not any(is_generator(s) for s in value.free_symbols)


def is_monomial_scalar(value: sp.Expr) -> bool:
    """有理数乘以具名常量的整数次幂之积，且非零."""
    value = sp.sympify(value)
    if value == 0 or not is_scalar(value):
        return False
    return len(sp.Add.make_args(sp.expand(value))) == 1


def is_unit(value: sp.Expr) -> bool:
    """单项式常量乘以若干指数原子，其倒数仍在表达式类中."""
    value = sp.expand(sp.sympify(value))
    if value == 0 or len(sp.Add.make_args(value)) != 1:
        return False
    scalars = [
        factor for factor in sp.Mul.make_args(value)
        if not (isinstance(factor, sp.exp) or (factor.is_Pow and isinstance(factor.base, sp.exp)))
    ]
    return is_monomial_scalar(sp.Mul(*scalars))


def generators_of(value: sp.Expr) -> set[sp.Symbol]:
    return {s for s in value.free_symbols if is_generator(s)}


def constants_of(value: sp.Expr) -> set[sp.Symbol]:
    return {s for s in value.free_symbols if not is_generator(s)}
