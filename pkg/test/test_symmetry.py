from itertools import combinations

import pytest
from hypothesis import given, settings

from base_cls import EquationError, PreconditionError, DegenerateCaseError
from calculus import ev_apply
from cli import parse
from expr import ZERO, partial
from symmetry import (
    SymmetryVerdict,
    classify,
    bracket,
    is_symmetry,
    leading_coefficients,
    cr3_residual_operator,
    level_count,
    determining_system,
    r_bound,
    low_order_bound,
    dim_breakdown,
    dim_bound,
)
from strategies import diff_exprs, evolution_rhs


ALGEBRA = settings(max_examples=1000, deadline=None)
KDV_SYMMETRIES = ["u1", "u3 + 6*u*u1", "1 + 6*t*u1", "x*u1 + 2*u + 3*t*u3 + 18*t*u*u1"]


class TestClassify:

    def test_kdv(self, kdv, p):
        assert kdv.n == 3
        assert kdv.constant_separant
        assert kdv.kdv_like
        assert kdv.time_independent
        assert kdv.f == p("6*u*u1")
        assert kdv.deriv_depth == 1

    @pytest.mark.parametrize("source, constants, separant, kdv_like, depth", [
        ("u3 + u*u1", (), True, True, 1),
        ("u3 + u1^2 + c", ("c",), True, True, 1),
        ("u3 + u^2*u1 + c*u1", ("c",), True, True, 1),
        ("u3 + u1^3 + c*u1 + d", ("c", "d"), True, True, 1),
        ("u3 - u1^3/2 + (a*exp(2*u) + b*exp(-2*u) + d)*u1", ("a", "b", "d"), True, True, 1),
        ("u2 + u1^2 + c", ("c",), True, False, 0),
        ("u*u3", (), False, False, -1),
        ("u2", (), True, True, 2),
        ("u3", (), True, True, 3),
        ("u3 + t*u*u1", (), True, True, 1),
    ])
    def test_flags(self, source, constants, separant, kdv_like, depth):
        eq = classify(parse(source, constants))
        assert eq.constant_separant is separant
        assert eq.kdv_like is kdv_like
        assert eq.deriv_depth == depth

    def test_time_dependent(self, p):
        assert not classify(p("u3 + t*u*u1")).time_independent

    def test_scalar_separant_is_not_constant(self, p):
        eq = classify(p("2*u3"))
        assert not eq.constant_separant
        assert eq.f is None

    @pytest.mark.parametrize("source", ["u1 + u", "u", "0", "u2 + x*u1"])
    def test_rejects(self, source, p):
        with pytest.raises(EquationError):
            classify(p(source))

    def test_rejection_is_precondition(self, p):
        with pytest.raises(PreconditionError):
            classify(p("u1"))


class TestBracket:

    def test_known_values(self, kdv, p):
        F = kdv.F
        assert bracket(F, p("x*u1 + 2*u")) == 3 * F
        assert bracket(F, p("u")) == p("6*u*u1")
        assert bracket(F, p("1")) == p("6*u1")
        assert bracket(F, p("u2")) == p("-12*u1*u2")
        assert bracket(p("u1"), p("u2")) == ZERO

    def test_other_equation(self, p):
        assert bracket(p("u3 + u*u1"), p("x*u1 + 2*u")) == p("3*u3 + 3*u*u1")

    @ALGEBRA
    @given(diff_exprs(with_exp=True), diff_exprs(with_exp=True))
    def test_antisymmetric(self, h, r):
        assert bracket(h, r) == -bracket(r, h)

    @ALGEBRA
    @given(diff_exprs(), diff_exprs())
    def test_matches_evolutionary_form(self, h, r):
        assert bracket(h, r) == ev_apply(r, h) - ev_apply(h, r)

    @ALGEBRA
    @given(
        diff_exprs(max_order=1, max_terms=2),
        diff_exprs(max_order=1, max_terms=2),
        diff_exprs(max_order=1, max_terms=2),
    )
    def test_jacobi(self, a, b, c):
        total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        assert total.is_zero


class TestIsSymmetry:

    @pytest.mark.parametrize("source, expected", [
        ("u1", True),
        ("u3 + 6*u*u1", True),
        ("1 + 6*t*u1", True),
        ("x*u1 + 2*u + 3*t*u3 + 18*t*u*u1", True),
        ("u5 + 10*u*u3 + 20*u1*u2 + 30*u^2*u1", True),
        ("0", True),
        ("u2", False),
        ("u*u2", False),
        ("1", False),
        ("x*u1 + 2*u", False),
    ])
    def test_kdv(self, kdv, p, source, expected):
        report = is_symmetry(kdv, p(source))
        assert report.is_symmetry is expected
        assert report.verdict is (SymmetryVerdict.SYMMETRY if expected else SymmetryVerdict.NOT_SYMMETRY)

    def test_residual(self, kdv, p):
        report = is_symmetry(kdv, p("x*u1 + 2*u"))
        assert report.residual == -3 * kdv.F
        assert report.k == 1

    def test_leading_coefficients(self, kdv, p):
        G = p("x*u1 + 2*u + 3*t*u3 + 18*t*u*u1")
        # i 从 max(k - n + 2, 0) = 2 到 k = 3
        assert leading_coefficients(kdv, G) == {2: ZERO, 3: p("3*t")}
        assert is_symmetry(kdv, G).c_k == p("3*t")

    @pytest.mark.parametrize("source, candidate", [
        ("u2", "2*t*u1 + x*u"),
        ("u3", "x^2*u + 6*t*x*u2 + 6*t*u1 + 9*t^2*u4"),
        ("u3", "x*u1 + 3*t*u3"),
        ("u3", "x*u + 3*t*u2"),
        ("u3 + u1^2 + c", "x + 2*t*u1"),
        ("u3 + u*u1", "1 + t*u1"),
        ("u2", "(x + 2*t)*exp(x + t)"),
    ])
    def test_other_equations(self, source, candidate):
        eq = classify(parse(source, ["c"]))
        assert is_symmetry(eq, parse(candidate, ["c"])).is_symmetry

    def test_cr3_operator_vanishes_on_symmetries(self, kdv, p):
        for source in ("u1", "1 + 6*t*u1", "x*u1 + 2*u + 3*t*u3 + 18*t*u*u1", "0"):
            assert cr3_residual_operator(kdv, p(source)).is_zero

    def test_cr3_operator_nonzero_off_symmetry(self, kdv, p):
        assert not cr3_residual_operator(kdv, p("u*u2")).is_zero

    @pytest.mark.parametrize("first, second", combinations(KDV_SYMMETRIES, 2))
    def test_bracket_of_symmetries_is_symmetry(self, kdv, p, first, second):
        assert is_symmetry(kdv, bracket(p(first), p(second))).is_symmetry

    @pytest.mark.parametrize("source, candidate", [
        ("u3 + 6*u*u1", G) for G in KDV_SYMMETRIES
    ] + [
        ("u2", "2*t*u1 + x*u"),
        ("u2", "(x + 2*t)*exp(x + t)"),
        ("u3", "x^2*u + 6*t*x*u2 + 6*t*u1 + 9*t^2*u4"),
    ])
    def test_x_derivative_of_symmetry_is_symmetry(self, source, candidate):
        eq = classify(parse(source))
        G = parse(candidate)
        assert is_symmetry(eq, G).is_symmetry
        assert is_symmetry(eq, partial(G, "x")).is_symmetry


class TestDeterminingSystem:

    def test_level_count(self):
        assert level_count(3, 2) == 5
        assert level_count(3, 0) == 4

    @pytest.mark.parametrize("source, vanishes, levels", [
        ("1 + 6*t*u1", True, 4),
        ("x*u1 + 2*u + 3*t*u3 + 18*t*u*u1", True, 6),
        ("u2", False, 5),
        ("1", False, 4),
    ])
    def test_kdv(self, kdv, p, source, vanishes, levels):
        system = determining_system(kdv, p(source))
        assert system.vanishes is vanishes
        assert len(system.equations) == levels

    def test_closure_is_residual(self, kdv, p):
        G = p("u*u2")
        assert determining_system(kdv, G).closure == is_symmetry(kdv, G).residual

    @settings(max_examples=200, deadline=None)
    @given(evolution_rhs(), diff_exprs(max_order=4, max_terms=3))
    def test_two_constructions_agree(self, F, G):
        # 两种构造不一致时 determining_system 抛出 InvariantViolation
        eq = classify(F)
        system = determining_system(eq, G)
        if is_symmetry(eq, G).is_symmetry:
            assert system.vanishes


class TestBounds:

    @pytest.mark.parametrize("k, n, q, expected", [
        (3, 3, -1, 1),
        (4, 3, -1, 2),
        (3, 3, 0, 1),
        (4, 3, 0, 1),
        (5, 3, 0, 2),
        (5, 3, 1, 1),
        (2, 3, 1, 0),
        (0, 3, 1, 0),
        (7, 2, -1, 7),
        (6, 4, 0, 1),
        (7, 4, 0, 2),
    ])
    def test_r_bound(self, k, n, q, expected):
        assert r_bound(k, n, q) == expected

    @pytest.mark.parametrize("q", [0, 1])
    def test_r_bound_degenerate(self, q):
        with pytest.raises(DegenerateCaseError):
            r_bound(4, 2, q)

    def test_r_bound_arguments(self):
        with pytest.raises(PreconditionError):
            r_bound(-1, 3, 0)
        with pytest.raises(PreconditionError):
            r_bound(1, 3, 2)

    def test_low_order_bound(self):
        assert low_order_bound(1, 3, 3) == 6
        assert low_order_bound(0, 2, 0) == 2
        with pytest.raises(PreconditionError):
            low_order_bound(2, 3, 0)

    def test_dim_bound(self):
        assert dim_bound(1, 3, 3) == 6
        assert dim_bound(0, 3, 0) == 2
        assert dim_breakdown(3, 3, 0) == [(1, 3), (2, 3), (3, 4)]
        assert dim_bound(3, 3, 0) == 10

    def test_dim_phi_range(self):
        with pytest.raises(PreconditionError):
            dim_bound(2, 3, 4)
        with pytest.raises(PreconditionError):
            dim_bound(2, 3, -1)
