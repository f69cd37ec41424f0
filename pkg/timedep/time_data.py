from dataclasses import dataclass, field

import sympy as sp

from base_cls import BaseDataMixin
from expr import DiffExpr, print_expr
from symmetry import CheckVerdict
from .time_type import TimeKind, PredictionKind, HypothesisMode, ConjectureKind


@dataclass(frozen=True, repr=False)
class TimeDependenceClass(BaseDataMixin):
    """t 依赖形态: 不含 t | t 的 p 次多项式 | 拟多项式(谱) | 其他"""
    kind: TimeKind
    degree: int = 0  # 多项式次数，仅 POLYNOMIAL 有意义
    spectrum: tuple[tuple[sp.Expr, int], ...] = ()  # (λ, t 的最高次数)，仅 QUASIPOLYNOMIAL 有意义

    def __post_init__(self):
        if self.kind is TimeKind.POLYNOMIAL and self.degree < 1:
            raise ValueError(f"多项式形态的次数必须 ≥ 1，实际为 {self.degree}")
        if self.kind is TimeKind.QUASIPOLYNOMIAL:
            lambdas = [lam for lam, _ in self.spectrum]
            if not lambdas or len(set(lambdas)) != len(lambdas):
                raise ValueError(f"拟多项式的谱必须非空且每个 λ 只出现一次: {self.spectrum}")

    @classmethod
    def independent(cls) -> "TimeDependenceClass":
        return cls(kind=TimeKind.INDEPENDENT)

    @classmethod
    def polynomial(cls, degree: int) -> "TimeDependenceClass":
        return cls(kind=TimeKind.POLYNOMIAL, degree=degree)

    @classmethod
    def quasipolynomial(cls, spectrum) -> "TimeDependenceClass":
        items = sorted(((sp.sympify(lam), int(m)) for lam, m in spectrum), key=lambda p: sp.default_sort_key(p[0]))
        return cls(kind=TimeKind.QUASIPOLYNOMIAL, spectrum=tuple(items))

    @property
    def max_multiplicity(self) -> int:
        """谱中 t 的最高次数."""
        if self.kind is TimeKind.POLYNOMIAL:
            return self.degree
        return max((m for _, m in self.spectrum), default=0)

    def describe(self) -> str:
        if self.kind is TimeKind.INDEPENDENT:
            return "time-independent"
        if self.kind is TimeKind.POLYNOMIAL:
            return f"polynomial degree {self.degree}"
        if self.kind is TimeKind.QUASIPOLYNOMIAL:
            pairs = ", ".join(f"({print_expr(lam)}, {m})" for lam, m in self.spectrum)
            return f"quasipolynomial {{{pairs}}}"
        return "other"

    def __str__(self):
        return self.describe()


@dataclass(frozen=True, repr=False)
class AnnihilatorOp(BaseDataMixin):
    """常系数算子 Σ a_l ∂^l/∂t^l = ∏ (∂/∂t - λ)^{m_λ}"""
    coeffs: tuple[sp.Expr, ...]  # a_0 .. a_m
    roots: tuple[tuple[sp.Expr, int], ...] = ()  # (λ, 重数)，用于展示

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError(f"最高次系数不能为零: {self.coeffs}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def apply(self, G: DiffExpr) -> DiffExpr:
        from .classify import apply_time_operator
        return apply_time_operator(self.coeffs, G)

    def describe(self) -> str:
        if not self.roots:
            return " + ".join(f"({print_expr(a)})∂^{l}/∂t^{l}" for l, a in enumerate(self.coeffs) if a != 0)
        parts = []
        for lam, mult in self.roots:
            if lam == 0:
                parts.append("∂/∂t" if mult == 1 else f"∂^{mult}/∂t^{mult}")
            else:
                factor = f"(∂/∂t - {print_expr(lam)})" if not lam.could_extract_minus_sign() \
                    else f"(∂/∂t + {print_expr(-lam)})"
                parts.append(factor if mult == 1 else f"{factor}^{mult}")
        return "·".join(parts)

    def __str__(self):
        return self.describe()


@dataclass(frozen=True, repr=False)
class ClosureCheck(BaseDataMixin):
    """∂/∂t 封闭性校验结果"""
    verdict: CheckVerdict
    k: int
    dt: DiffExpr  # ∂G/∂t
    dt_order: int | None
    omega: AnnihilatorOp  # 消去 c_k 的算子
    omega_g: DiffExpr  # Ω(G)
    omega_order: int | None
    failures: tuple[str, ...] = ()


@dataclass(frozen=True, repr=False)
class ScalingResult(BaseDataMixin):
    """{F, Q0} = λQ0 的检验结果"""
    Q0: DiffExpr
    image: DiffExpr  # {F, Q0}
    lam: sp.Expr | None  # λ，不成比例时为 None
    certified: DiffExpr | None  # exp(λt)·Q0

    @property
    def found(self) -> bool:
        return self.lam is not None


@dataclass(frozen=True, repr=False)
class MasterResult(BaseDataMixin):
    """{F, G0} = G1, {F, G1} = 0 的检验结果"""
    G0: DiffExpr
    G1: DiffExpr
    commutes: bool  # {F, G1} = 0
    nontrivial: bool  # G1 ≠ 0
    mu: sp.Expr | None  # G1 = μF 时的 μ
    certified: DiffExpr | None  # G0 + t·G1

    @property
    def holds(self) -> bool:
        return self.commutes and self.nontrivial


@dataclass(frozen=True, repr=False)
class HypothesisReport(BaseDataMixin):
    """按用户给出的低阶对称性基做出的 t 依赖预测，基的完备性由用户保证"""
    prediction: PredictionKind
    mode: HypothesisMode
    order_limit: int  # 基元素允许的最高阶数
    classes: tuple[TimeDependenceClass, ...] = field(default_factory=tuple)
    basis_completeness_assumed: bool = True

    @property
    def citation(self) -> str:
        if self.mode is HypothesisMode.COROLLARY:
            return "S^(n-2) of a KdV-like equation determines the t-dependence of all symmetries"
        return "S^(n-1) of a constant-separant equation determines the t-dependence of all symmetries"


@dataclass(frozen=True, repr=False)
class ConjectureReport(BaseDataMixin):
    """对称性集合 t 依赖的汇总观察"""
    kind: ConjectureKind
    classes: tuple[TimeDependenceClass, ...]
