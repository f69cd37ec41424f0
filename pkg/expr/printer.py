import sympy as sp
from sympy.printing.str import StrPrinter


class ExprPrinter(StrPrinter):
    """输出可被 ``cli.parse`` 读回的文本：幂用 ``^``，有理数写作 ``p/q``."""

    printmethod = "_evosym_str"

    def _print_Float(self, expr):
        raise TypeError(f"规范形式中不应出现浮点数: {expr}")

    def doprint(self, expr) -> str:
        return super().doprint(expr).replace("**", "^")


_printer = ExprPrinter()


def print_expr(expr: sp.Expr) -> str:
    return _printer.doprint(sp.sympify(expr))
