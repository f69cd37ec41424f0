import pytest
import sympy as sp
from hypothesis import given, settings

from calculus import (
    DOperator,
    op_apply,
    op_compose,
    op_commutator,
    total_d,
    total_d_power,
    frechet,
    ev_apply,
    nabla_on_op,
)
from expr import DiffExpr, X, T, U, u_symbol, ZERO, ONE
from strategies import diff_exprs


u1, u2, u3 = u_symbol(1), u_symbol(2), u_symbol(3)
ALGEBRA = settings(max_examples=1000, deadline=None)


def E(raw) -> DiffExpr:
    return DiffExpr(raw)


class TestTotalDerivative:

    @pytest.mark.parametrize("raw, expected", [
        (U, u1),
        (X * U, U + X * u1),
        (sp.exp(2 * U), 2 * u1 * sp.exp(2 * U)),
        (X, 1),
        (T * U ** 2, 2 * T * U * u1),
        (sp.exp(X - U), (1 - u1) * sp.exp(X - U)),
    ])
    def test_examples(self, raw, expected):
        assert total_d(E(raw)) == E(expected)

    def test_power(self):
        assert total_d_power(E(U), 3) == E(u3)
        assert total_d_power(E(U * u1), 0) == E(U * u1)
        assert total_d_power(E(T), 2) == ZERO
        with pytest.raises(ValueError):
            total_d_power(E(U), -1)

    @ALGEBRA
    @given(diff_exprs(with_exp=True), diff_exprs(with_exp=True))
    def test_leibniz(self, a, b):
        assert total_d(a * b) == total_d(a) * b + a * total_d(b)

    @ALGEBRA
    @given(diff_exprs(), diff_exprs())
    def test_linear(self, a, b):
        assert total_d(a + 3 * b) == total_d(a) + 3 * total_d(b)


class TestOperator:

    def test_drops_zero_coefficients(self):
        op = DOperator({0: ZERO, 2: ONE})
        assert op.degree == 2
        assert op.coeff(0) == ZERO
        assert DOperator.zero().is_zero
        assert DOperator.zero().degree is None
        assert repr(DOperator.zero()) == "DOperator(0)"

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            DOperator({-1: ONE})

    def test_apply(self):
        op = DOperator({0: E(U), 2: ONE})
        assert op_apply(op, E(u1)) == E(U * u1 + u3)
        assert op.apply(ZERO) == ZERO

    def test_compose_with_multiplication(self):
        # D∘u = u D + u1
        assert DOperator.d() @ DOperator({0: E(U)}) == DOperator({1: E(U), 0: E(u1)})

    def test_commutator_d_x(self):
        assert op_commutator(DOperator.d(), DOperator({0: E(X)})) == DOperator.identity()

    def test_compose_powers(self):
        assert op_compose(DOperator.d(2), DOperator.d(3)) == DOperator.d(5)

    @settings(max_examples=300, deadline=None)
    @given(diff_exprs(max_terms=2), diff_exprs(max_terms=2), diff_exprs(max_terms=2))
    def test_compose_matches_application(self, a, b, e):
        A = DOperator({0: a, 1: ONE})
        B = DOperator({0: b, 2: ONE})
        assert op_apply(A @ B, e) == op_apply(A, op_apply(B, e))

    @settings(max_examples=300, deadline=None)
    @given(diff_exprs(max_terms=2), diff_exprs(max_terms=2), diff_exprs(max_terms=2), diff_exprs(max_terms=2))
    def test_compose_associative(self, a, b, c, d):
        A = DOperator({0: a, 1: ONE})
        B = DOperator({0: b, 2: c})
        C = DOperator({1: d})
        assert op_compose(op_compose(A, B), C) == op_compose(A, op_compose(B, C))

    def test_arithmetic(self):
        A = DOperator({1: E(U)})
        assert (A - A).is_zero
        assert A + (-A) == DOperator.zero()
        assert hash(A) == hash(DOperator({1: E(U)}))


class TestFrechet:

    def test_examples(self):
        assert frechet(E(U * u1)) == DOperator({0: E(u1), 1: E(U)})
        assert frechet(E(X * T)).is_zero
        assert frechet(E(sp.exp(U))) == DOperator({0: E(sp.exp(U))})

    def test_ev_apply_example(self):
        assert ev_apply(E(u1), E(U * u1)) == E(u1 ** 2 + U * u2)
        assert ev_apply(E(U), E(X)) == ZERO
        assert ev_apply(ZERO, E(U)) == ZERO

    @ALGEBRA
    @given(diff_exprs(with_exp=True), diff_exprs(with_exp=True))
    def test_ev_is_frechet_application(self, h, r):
        assert ev_apply(h, r) == op_apply(frechet(r), h)

    @ALGEBRA
    @given(diff_exprs(), diff_exprs())
    def test_ev_commutes_with_d(self, h, r):
        assert ev_apply(h, total_d(r)) == total_d(ev_apply(h, r))

    def test_nabla_on_op(self):
        op = DOperator({0: E(U ** 2), 1: E(X)})
        assert nabla_on_op(E(u1), op) == DOperator({0: E(2 * U * u1)})
