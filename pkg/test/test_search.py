import random

import pytest
import sympy as sp
from pydantic import ValidationError

from base_cls import PoolTooLargeError, PreconditionError
from expr import DiffExpr, X, T, U, u_symbol, u_order
from search import (
    AnsatzConfig,
    monomial_weight,
    build_pool,
    nullspace_combinations,
    find_symmetries,
    find_linear_t_symmetries,
    span_contains,
)
from symmetry import classify, is_symmetry


u1, u2, u3 = u_symbol(1), u_symbol(2), u_symbol(3)


class TestConfig:

    def test_defaults(self):
        cfg = AnsatzConfig(order=3)
        assert cfg.weight_limit == 5
        assert cfg.t_degree == 0
        assert cfg.monomials is None

    @pytest.mark.parametrize("kwargs", [
        {"order": -1},
        {"order": 1, "t_degree": -1},
        {"order": 1, "exp_lambda": 0.5},
        {"order": 1, "exp_lambda": u1},
        {"order": 1, "base_weight": 0},
        {"order": 1, "max_pool": 0},
        {"order": 1, "monomials": []},
    ])
    def test_rejects(self, kwargs):
        with pytest.raises(ValidationError):
            AnsatzConfig(**kwargs)

    def test_coerces_monomials(self):
        cfg = AnsatzConfig(order=1, monomials=[u1, U * u1])
        assert cfg.monomials == (DiffExpr(u1), DiffExpr(U * u1))

    def test_pool_cap(self):
        assert AnsatzConfig(order=1, max_pool=7).pool_cap == 7


class TestPool:

    def test_weight(self):
        assert monomial_weight(U * u1, 3, 2) == 5
        assert monomial_weight(X * u1, 3, 2) == 2
        assert monomial_weight(T * u1, 3, 2) == 0
        assert monomial_weight(sp.S.One, 3, 2) == 0

    def test_graded_pool(self, kdv):
        pool = build_pool(kdv, AnsatzConfig(order=1, t_degree=1))
        assert set(pool) == {
            DiffExpr(e) for e in (
                1, U, u1, T, T * U, T * U ** 2, T * U ** 3, T * u1, T * U * u1, T * u1 ** 2,
            )
        }

    def test_exp_factor(self, heat):
        pool = build_pool(heat, AnsatzConfig(order=0, exp_lambda=1, monomials=[U]))
        assert pool == [DiffExpr(sp.exp(T) * U)]

    def test_too_large(self, kdv):
        with pytest.raises(PoolTooLargeError):
            build_pool(kdv, AnsatzConfig(order=5, max_pool=3))


class TestNullspace:

    def test_combinations(self):
        a, b = DiffExpr(u1), DiffExpr(2 * u1)
        combos = nullspace_combinations([a, b])
        assert len(combos) == 1
        coeffs = combos[0]
        assert (coeffs[0] * a.expr + coeffs[1] * b.expr) == 0
        assert all(c.is_Integer for c in coeffs)

    def test_all_zero_columns(self):
        assert len(nullspace_combinations([DiffExpr(0), DiffExpr(0)])) == 2

    def test_span_contains(self, kdv):
        assert span_contains([DiffExpr(u1), kdv.F], 2 * DiffExpr(u1) - kdv.F)
        assert not span_contains([DiffExpr(u1)], DiffExpr(u2))
        assert span_contains([], DiffExpr(0))
        assert not span_contains([], DiffExpr(u1))


@pytest.mark.slow
class TestFind:

    def test_kdv_first_order(self, kdv, p):
        basis = find_symmetries(kdv, AnsatzConfig(order=1, t_degree=1))
        assert len(basis) == 2
        assert span_contains(basis, p("u1"))
        assert span_contains(basis, p("1 + 6*t*u1"))
        assert all(is_symmetry(kdv, G).is_symmetry for G in basis)

    def test_kdv_fifth_order(self, kdv, p):
        basis = find_symmetries(kdv, AnsatzConfig(order=5))
        assert len(basis) == 3
        assert [u_order(G) for G in basis].count(5) == 1
        assert span_contains(basis, p("u5 + 10*u*u3 + 20*u1*u2 + 30*u^2*u1"))

    def test_recovers_planted_monomials(self, kdv, p):
        # 在显式池中混入非对称的单项式，结果只保留对称的组合
        monomials = [u1, U * u1, u2, U * u3, 1]
        basis = find_symmetries(kdv, AnsatzConfig(order=3, monomials=monomials))
        assert len(basis) == 1
        assert span_contains(basis, p("u1"))

    def test_pool_order_does_not_matter(self, kdv):
        monomials = [u1, U * u1, u2, u3, U ** 2, 1]
        shuffled = list(monomials)
        random.Random(7).shuffle(shuffled)
        first = find_symmetries(kdv, AnsatzConfig(order=3, monomials=monomials))
        second = find_symmetries(kdv, AnsatzConfig(order=3, monomials=shuffled))
        assert len(first) == len(second) == 2
        assert all(span_contains(first, G) for G in second)

    def test_linear_t(self, kdv, p):
        pairs = find_linear_t_symmetries(kdv, AnsatzConfig(order=1, x_degree=1))
        G1s = [pair.G1 for pair in pairs]
        assert len(pairs) == 2
        assert span_contains(G1s, p("3*u3 + 18*u*u1"))
        assert span_contains(G1s, p("6*u1"))
        for pair in pairs:
            assert is_symmetry(kdv, pair.G0 + DiffExpr(T) * pair.G1).is_symmetry

    def test_linear_t_none(self, kdv):
        assert find_linear_t_symmetries(kdv, AnsatzConfig(order=1, monomials=[u1])) == []

    def test_linear_t_requires_time_independent(self, p):
        eq = classify(p("u3 + t*u*u1"))
        with pytest.raises(PreconditionError):
            find_linear_t_symmetries(eq, AnsatzConfig(order=1))

    def test_exponential_ansatz(self, heat, p):
        cfg = AnsatzConfig(order=0, exp_lambda=1, monomials=[sp.exp(X), sp.exp(-X), U])
        basis = find_symmetries(heat, cfg)
        assert len(basis) == 2
        assert span_contains(basis, p("exp(x + t)"))
        assert span_contains(basis, p("exp(t - x)"))
        assert not span_contains(basis, p("exp(t)*u"))
