"""表达式源码解析: 分词 + 优先级爬升.

文法::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' unary)?          # 右结合
    atom    := INT | IDENT | 'exp' '(' expr ')' | '(' expr ')'

标识符为 x, t, u, u1 … u99 (也接受 u_1)，以及事先声明的常量；
不支持隐式乘法，``6uu1`` 是错误。
"""
import re
from dataclasses import dataclass
from logging import getLogger
from typing import Iterable

import sympy as sp

from base_cls import (
    ExprSyntaxError,
    UnknownIdentifierError,
    ExponentError,
    NonScalarDivisionError,
)
from expr import DiffExpr, X, T, u_symbol, constant, is_unit


_log = getLogger(__name__)

# 运算符 -> (优先级, 结合性)
OPERATORS = {
    "+": (1, "left"),
    "-": (1, "left"),
    "*": (2, "left"),
    "/": (2, "left"),
    "^": (4, "right"),
}
_UNARY_PREC = 3

_U_NAME = re.compile(r"u(?:_?([1-9]\d?))?$")


@dataclass(frozen=True)
class Token:
    kind: str  # int | ident | op | lparen | rparen | end
    text: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    line, column = 1, 1
    i = 0
    while i < len(source):
        c = source[i]
        if c == "\n":
            line, column = line + 1, 1
            i += 1
            continue
        if c.isspace():
            i += 1
            column += 1
            continue
        start = i
        if c.isdigit():
            while i < len(source) and source[i].isdigit():
                i += 1
            kind = "int"
        elif c.isalpha() or c == "_":
            while i < len(source) and (source[i].isalnum() or source[i] == "_"):
                i += 1
            kind = "ident"
        elif c in OPERATORS:
            i += 1
            kind = "op"
        elif c in "()":
            i += 1
            kind = "lparen" if c == "(" else "rparen"
        else:
            raise ExprSyntaxError(f"无法识别的字符 {c!r}", line, column)
        text = source[start:i]
        tokens.append(Token(kind, text, line, column))
        column += len(text)
    tokens.append(Token("end", "", line, column))
    return tokens


class ExprParser:
    """把源码解析为 DiffExpr；常量必须事先声明."""

    def __init__(self, constants: Iterable[str] = ()):
        self._constants = {name: constant(name) for name in constants}

    @property
    def constants(self) -> tuple[str, ...]:
        return tuple(self._constants)

    def parse(self, source: str) -> DiffExpr:
        """解析并规范化.

        Raises:
            ExprSyntaxError: 语法错误，携带行号与列号
            UnknownIdentifierError: 未声明的标识符
            ExponentError: 非整数指数
            NonScalarDivisionError: 除以非单项式常量
        """
        self._tokens = tokenize(source)
        self._pos = 0
        if self._peek().kind == "end":
            token = self._peek()
            raise ExprSyntaxError("表达式为空", token.line, token.column)
        tree = self._expression(0)
        token = self._peek()
        if token.kind != "end":
            raise ExprSyntaxError(f"多余的记号 {token.text!r}", token.line, token.column)
        return DiffExpr(tree)

    # ---------- 记号流 ----------

    def _peek(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _expect(self, kind: str, what: str) -> Token:
        token = self._advance()
        if token.kind != kind:
            found = token.text or "输入结尾"
            raise ExprSyntaxError(f"期望 {what}，实际为 {found!r}", token.line, token.column)
        return token

    # ---------- 优先级爬升 ----------

    def _expression(self, min_prec: int) -> sp.Expr:
        lhs = self._unary()
        while True:
            token = self._peek()
            if token.kind != "op":
                return lhs
            prec, assoc = OPERATORS[token.text]
            if prec < min_prec:
                return lhs
            self._advance()
            if token.text == "^":
                rhs = self._expression(prec)
                lhs = self._power(lhs, rhs, token)
                continue
            rhs = self._expression(prec + 1 if assoc == "left" else prec)
            lhs = self._binary(token, lhs, rhs)

    def _unary(self) -> sp.Expr:
        token = self._peek()
        if token.kind == "op" and token.text in "+-":
            self._advance()
            operand = self._expression(_UNARY_PREC)
            return -operand if token.text == "-" else operand
        return self._atom()

    def _binary(self, token: Token, lhs: sp.Expr, rhs: sp.Expr) -> sp.Expr:
        if token.text == "+":
            return lhs + rhs
        if token.text == "-":
            return lhs - rhs
        if token.text == "*":
            return lhs * rhs
        divisor = sp.expand(rhs)
        if not is_unit(divisor):
            raise NonScalarDivisionError(
                f"只能除以单项式常量与指数原子之积，实际为 {divisor} (第 {token.line} 行, 第 {token.column} 列)"
            )
        return lhs / divisor

    def _power(self, base: sp.Expr, exponent: sp.Expr, token: Token) -> sp.Expr:
        if not exponent.is_Integer:
            raise ExponentError(f"指数必须是整数，实际为 {exponent} (第 {token.line} 行, 第 {token.column} 列)")
        if exponent < 0 and not is_unit(base):
            raise NonScalarDivisionError(
                f"负指数只能作用于单项式常量与指数原子之积，实际底数为 {base} (第 {token.line} 行, 第 {token.column} 列)"
            )
        return sp.Pow(base, exponent)

    def _atom(self) -> sp.Expr:
        token = self._advance()
        if token.kind == "int":
            return sp.Integer(int(token.text))
        if token.kind == "lparen":
            inner = self._expression(0)
            self._expect("rparen", "')'")
            return inner
        if token.kind == "ident":
            return self._identifier(token)
        found = token.text or "输入结尾"
        raise ExprSyntaxError(f"意外的记号 {found!r}", token.line, token.column)

    def _identifier(self, token: Token) -> sp.Expr:
        name = token.text
        if name == "exp":
            self._expect("lparen", "'('")
            argument = self._expression(0)
            self._expect("rparen", "')'")
            return sp.exp(argument)
        if name == "x":
            return X
        if name == "t":
            return T
        match = _U_NAME.match(name)
        if match is not None:
            return u_symbol(int(match.group(1)) if match.group(1) else 0)
        if name in self._constants:
            return self._constants[name]
        raise UnknownIdentifierError(f"未声明的标识符 {name!r}", token.line, token.column)


def parse(source: str, constants: Iterable[str] = ()) -> DiffExpr:
    """按文法解析表达式源码并规范化."""
    return ExprParser(constants).parse(source)
