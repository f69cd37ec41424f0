from .scalar import (
    X,
    T,
    U,
    u_symbol,
    u_index,
    is_generator,
    generator,
    constant,
    constants,
    is_scalar,
    is_monomial_scalar,
    is_unit,
)
from .diff_expr import (
    DiffExpr,
    normalize,
    partial,
    substitute,
    u_order,
    x_expr,
    t_expr,
    u_expr,
    ZERO,
    ONE,
)
from .printer import (
    ExprPrinter,
    print_expr,
)

__all__ = [
    # 生成元与常量
    "X",
    "T",
    "U",
    "u_symbol",
    "u_index",
    "is_generator",
    "generator",
    "constant",
    "constants",
    "is_scalar",
    "is_monomial_scalar",
    "is_unit",
    # 表达式
    "DiffExpr",
    "normalize",
    "partial",
    "substitute",
    "u_order",
    "x_expr",
    "t_expr",
    "u_expr",
    "ZERO",
    "ONE",
    # 输出
    "ExprPrinter",
    "print_expr",
]
