"""框架内的异常层级.

所有异常都继承自内置异常，调用方既可以捕获具体子类，
也可以按 ValueError / RuntimeError 粗粒度处理。
"""


class ExprError(ValueError):
    """表达式不合法(超出表达式类)."""


class ExponentError(ExprError):
    """非原子底数上出现了非整数指数."""


class NonScalarDivisionError(ExprError):
    """除数不是单项式常量."""


class ExpArgumentError(ExprError):
    """指数原子的参数不是 x, t, u 的常系数齐次线性组合."""


class ExprSyntaxError(ExprError):
    """表达式源码的语法错误，携带行号与列号(均从1开始)."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (第 {line} 行, 第 {column} 列)")
        self.reason = message
        self.line = line
        self.column = column


class UnknownIdentifierError(ExprSyntaxError):
    """未声明的标识符."""


class PreconditionError(ValueError):
    """操作的前置条件不满足."""


class DegenerateCaseError(PreconditionError):
    """公式在该参数下退化，拒绝给出结果."""


class EquationError(PreconditionError):
    """右端项不构成合法的发展方程."""


class InvariantViolation(RuntimeError):
    """理论推论或双重构造的交叉校验失败，意味着实现错误."""


class PoolTooLargeError(RuntimeError):
    """拟设单项式池超过配置上限."""


class CorpusFormatError(ValueError):
    """语料文件格式错误."""

    def __init__(self, message: str, line: int | None = None):
        where = f"第 {line} 行: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line
