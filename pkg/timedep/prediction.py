"""按低阶对称性预测 t 依赖，以及化简到简单 t 依赖."""
from logging import getLogger
from typing import Iterable, Sequence

import sympy as sp

from base_cls import PreconditionError, InvariantViolation
from expr import DiffExpr
from symmetry import EvolutionEquation, is_symmetry
from .classify import classify_time, apply_time_operator, operator_from_roots
from .time_data import TimeDependenceClass, HypothesisReport, ConjectureReport
from .time_type import TimeKind, PredictionKind, HypothesisMode, ConjectureKind


_log = getLogger(__name__)

_POLYNOMIAL_KINDS = {TimeKind.INDEPENDENT, TimeKind.POLYNOMIAL}
_QUASI_KINDS = _POLYNOMIAL_KINDS | {TimeKind.QUASIPOLYNOMIAL}


def hypothesis_report(
    eq: EvolutionEquation,
    low_order_basis: Sequence[DiffExpr],
    mode: HypothesisMode = HypothesisMode.THEOREM,
) -> HypothesisReport:
    """由 S^(n-1) (推论模式下 S^(n-2)) 的基预测全部对称性的 t 依赖.

    基是否张成整个低阶对称空间由调用方保证，报告中如实标注。

    Raises:
        PreconditionError: 方程不是常数分离项；推论模式下不是 KdV 型；
            基元素不是对称或阶数超限
    """
    if not eq.constant_separant:
        raise PreconditionError("预测要求方程为常数分离项")
    if mode is HypothesisMode.COROLLARY:
        if not eq.kdv_like:
            raise PreconditionError("推论模式要求 KdV 型方程")
        limit = eq.n - 2
    else:
        limit = eq.n - 1

    classes = []
    for G in low_order_basis:
        report = is_symmetry(eq, G)
        if not report.is_symmetry:
            raise PreconditionError(f"基元素 {G} 不是对称，残差为 {report.residual}")
        if report.k > limit:
            raise PreconditionError(f"基元素 {G} 的阶数 {report.k} 超过 {limit}")
        classes.append(classify_time(G))

    kinds = {c.kind for c in classes}
    if not classes:
        prediction = PredictionKind.NONE
    elif kinds <= _POLYNOMIAL_KINDS:
        prediction = PredictionKind.POLYNOMIAL
    elif kinds <= _QUASI_KINDS:
        prediction = PredictionKind.QUASIPOLYNOMIAL
    else:
        prediction = PredictionKind.NONE
    _log.info(f"低阶基 {len(classes)} 个元素，预测: {prediction.label}")
    return HypothesisReport(prediction=prediction, mode=mode, order_limit=limit, classes=tuple(classes))


def reduce_to_simple(G: DiffExpr, eq: EvolutionEquation | None = None) -> DiffExpr:
    """把 exp(λt) Σ_{j≤m} t^j h_j 形态的 G 化为关于 t 线性或指数的表达式.

    λ ≠ 0 时作用 (∂/∂t - λ)^m，λ = 0 时作用 ∂^{m-1}/∂t^{m-1}。
    给出方程时还要求结果仍是对称。

    Raises:
        PreconditionError: 谱中有不止一个 λ
        InvariantViolation: 结果形态不对，或不再是对称
    """
    time_class = classify_time(G)
    if time_class.kind is TimeKind.INDEPENDENT:
        return G
    if time_class.kind is TimeKind.POLYNOMIAL:
        lam, m = sp.S.Zero, time_class.degree
    elif len(time_class.spectrum) == 1:
        lam, m = time_class.spectrum[0]
    else:
        raise PreconditionError(f"谱中有多个 λ，不是单一 exp(λt) 形态: {time_class}")

    if lam == 0:
        if m <= 1:
            return G
        reduced = apply_time_operator(operator_from_roots([(sp.S.Zero, m - 1)]).coeffs, G)
    else:
        if m == 0:
            return G
        reduced = apply_time_operator(operator_from_roots([(lam, m)]).coeffs, G)

    reduced_class = classify_time(reduced)
    simple = (
        reduced_class.kind is TimeKind.INDEPENDENT
        or (reduced_class.kind is TimeKind.POLYNOMIAL and reduced_class.degree == 1)
        or (reduced_class.kind is TimeKind.QUASIPOLYNOMIAL and reduced_class.max_multiplicity == 0)
    )
    if not simple:
        raise InvariantViolation(f"化简结果 {reduced} 的形态 {reduced_class} 不是线性或指数的")
    if eq is not None and eq.time_independent and not is_symmetry(eq, reduced).is_symmetry:
        raise InvariantViolation(f"化简结果 {reduced} 不再是对称")
    _log.debug(f"reduce_to_simple: {G} -> {reduced}")
    return reduced


def conjecture_survey(eq: EvolutionEquation, symmetries: Iterable[DiffExpr]) -> ConjectureReport:
    """汇总一组已验证对称性的 t 依赖，只报告观察结果.

    Raises:
        PreconditionError: 某个元素不是对称
    """
    classes = []
    for G in symmetries:
        report = is_symmetry(eq, G)
        if not report.is_symmetry:
            raise PreconditionError(f"{G} 不是对称，残差为 {report.residual}")
        classes.append(classify_time(G))

    dependent = [c for c in classes if c.kind is not TimeKind.INDEPENDENT]
    if not dependent:
        kind = ConjectureKind.TIME_INDEPENDENT
    elif all(c.kind is TimeKind.POLYNOMIAL for c in dependent):
        kind = ConjectureKind.ALL_POLYNOMIAL
    elif all(c.kind is TimeKind.QUASIPOLYNOMIAL and c.max_multiplicity == 0 for c in dependent):
        kind = ConjectureKind.ALL_EXPONENTIAL
    else:
        kind = ConjectureKind.MIXED
    return ConjectureReport(kind=kind, classes=tuple(classes))
