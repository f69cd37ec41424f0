import pytest
import sympy as sp

from base_cls import (
    ExprError,
    ExprSyntaxError,
    UnknownIdentifierError,
    ExponentError,
    NonScalarDivisionError,
    ExpArgumentError,
)
from cli import tokenize, parse, ExprParser
from expr import DiffExpr, X, T, U, u_symbol


u1, u3 = u_symbol(1), u_symbol(3)
c = sp.Symbol("c")


def test_tokens_carry_positions():
    tokens = tokenize("u3 +\n  6*u")
    assert [(t.kind, t.text, t.line, t.column) for t in tokens] == [
        ("ident", "u3", 1, 1),
        ("op", "+", 1, 4),
        ("int", "6", 2, 3),
        ("op", "*", 2, 4),
        ("ident", "u", 2, 5),
        ("end", "", 2, 6),
    ]


@pytest.mark.parametrize("source, expected", [
    ("u3 + 6*u*u1", u3 + 6 * U * u1),
    ("u^2^3", U ** 8),
    ("-u^2", -U ** 2),
    ("2^-1*u", U / 2),
    ("u/2", U / 2),
    ("u_1 - u1", 0),
    ("(x + t)*u", X * U + T * U),
    ("exp(2*u)*exp(-u)", sp.exp(U)),
    ("exp(x)^2", sp.exp(2 * X)),
    ("exp(u)^-1", sp.exp(-U)),
    ("1/exp(u)", sp.exp(-U)),
    ("u/(2*exp(x))", U * sp.exp(-X) / 2),
    ("u1*exp(x)^-2*exp(u)^-1", u1 * sp.exp(-2 * X - U)),
    ("--u", U),
    ("u - -u", 2 * U),
    ("2*3^2", 18),
])
def test_parse(source, expected):
    assert parse(source) == DiffExpr(expected)


def test_constants():
    assert parse("c*u/c^2", ["c"]) == DiffExpr(U / c)
    assert ExprParser(["c", "d"]).constants == ("c", "d")
    with pytest.raises(ExprError):
        ExprParser(["u2"])


@pytest.mark.parametrize("source, error, line, column", [
    ("6uu1", ExprSyntaxError, 1, 2),
    ("6 u", ExprSyntaxError, 1, 3),
    ("1.5*u", ExprSyntaxError, 1, 2),
    ("(u + 1", ExprSyntaxError, 1, 7),
    ("", ExprSyntaxError, 1, 1),
    ("u +\n  * u1", ExprSyntaxError, 2, 3),
    ("u*", ExprSyntaxError, 1, 3),
    ("exp u", ExprSyntaxError, 1, 5),
    ("c*u", UnknownIdentifierError, 1, 1),
    ("u0", UnknownIdentifierError, 1, 1),
    ("u + u100", UnknownIdentifierError, 1, 5),
    ("sin(u)", UnknownIdentifierError, 1, 1),
])
def test_syntax_errors(source, error, line, column):
    with pytest.raises(error) as info:
        parse(source)
    assert info.value.line == line
    assert info.value.column == column


@pytest.mark.parametrize("source, error", [
    ("u^(1/2)", ExponentError),
    ("u^u", ExponentError),
    ("u/u1", NonScalarDivisionError),
    ("u/(c + d)", NonScalarDivisionError),
    ("u/0", NonScalarDivisionError),
    ("u1^-1", NonScalarDivisionError),
    ("u/(exp(u) + 1)", NonScalarDivisionError),
    ("u/(u1*exp(u))", NonScalarDivisionError),
    ("(exp(u) + exp(x))^-1", NonScalarDivisionError),
    ("exp(u^2)", ExpArgumentError),
    ("exp(u + 1)", ExpArgumentError),
])
def test_outside_expression_class(source, error):
    with pytest.raises(error):
        parse(source, ["c", "d"])


def test_no_implicit_multiplication():
    with pytest.raises(ExprSyntaxError):
        parse("2(u + 1)")
