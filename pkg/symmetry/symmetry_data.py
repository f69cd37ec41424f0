from dataclasses import dataclass, field, replace

from base_cls import BaseDataMixin
from expr import DiffExpr, ZERO
from .symmetry_type import CheckVerdict, SymmetryVerdict


@dataclass(frozen=True, repr=False)
class Representation(BaseDataMixin):
    """G = ψ(t,x,u,u1) + Σ_{j=0}^{s} x^j g_j 的分解"""
    s: int  # x 的最高次数
    g: tuple[DiffExpr, ...]  # g_0 .. g_s
    psi: DiffExpr  # ψ
    bound: int | None  # s 的理论上界，退化时为 None
    q: int  # 所用界 r_{k,n,q} 的 q
    refined: bool  # 是否按 ∂F/∂u_{n-i} 只依赖 t 的深度收紧


@dataclass(frozen=True, repr=False)
class SymmetryReport(BaseDataMixin):
    """对称性判定报告"""
    candidate: DiffExpr  # 候选 G
    k: int  # 阶数 (G = 0 时记为 0)
    residual: DiffExpr  # ∂G/∂t - {F, G}
    leading: dict[int, DiffExpr] = field(default_factory=dict)  # i -> ∂G/∂u_i，i 从 max(k-n+2, 0) 到 k
    representation: Representation | None = None

    _repr_exclude = frozenset({"leading"})

    @property
    def is_symmetry(self) -> bool:
        return self.residual.is_zero

    @property
    def verdict(self) -> SymmetryVerdict:
        return SymmetryVerdict.SYMMETRY if self.is_symmetry else SymmetryVerdict.NOT_SYMMETRY

    @property
    def c_k(self) -> DiffExpr:
        """首项系数 ∂G/∂u_k."""
        return self.leading.get(self.k, ZERO)

    def with_representation(self, representation: Representation) -> "SymmetryReport":
        return replace(self, representation=representation)


@dataclass(frozen=True, repr=False)
class DeterminingSystem(BaseDataMixin):
    """按 D^l 系数拆开的定解方程组"""
    equations: tuple[DiffExpr, ...]  # E_l, l = 0 .. n+k-1
    closure: DiffExpr  # D^0 层的相容条件 ∂G/∂t - {F, G}
    n: int
    k: int
    method: str = "cr4-literal/cr3-coefficients"

    @property
    def vanishes(self) -> bool:
        return self.closure.is_zero and all(e.is_zero for e in self.equations)

    def nonzero_levels(self) -> list[int]:
        return [level for level, e in enumerate(self.equations) if not e.is_zero]


@dataclass(frozen=True, repr=False)
class LeadingStructure(BaseDataMixin):
    """首项系数 ∂G/∂u_k = c_k(t)(∂F/∂u_n)^{k/n} 的校验结果"""
    verdict: CheckVerdict
    k: int
    c_k: DiffExpr
    time_factor: DiffExpr | None  # c_k(t)，无法在表达式类内给出时为 None


@dataclass(frozen=True, repr=False)
class DescentStep(BaseDataMixin):
    """x 降阶的一步"""
    expr: DiffExpr  # ∂G/∂x
    order: int | None  # 其阶数，为零时为 None
    bound: int  # max(1, ord G - n + 1)


@dataclass(frozen=True, repr=False)
class Lead1Result(BaseDataMixin):
    """Q = ∂^r G/∂x^r 的首项系数校验"""
    verdict: CheckVerdict
    r: int
    q: int  # 比较位置 k - r(n-1)
    Q: DiffExpr
    lhs: DiffExpr  # ∂Q/∂u_q
    rhs: DiffExpr  # (1/n^r) ∂^r c_k/∂t^r
