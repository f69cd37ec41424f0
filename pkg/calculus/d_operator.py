from logging import getLogger
from math import comb
from typing import Iterator, Mapping

from base_cls import BaseDataMixin
from expr import DiffExpr, ZERO, ONE


_log = getLogger(__name__)


class DOperator(BaseDataMixin):
    """全导数 D 的有限次多项式 Σ a_i D^i，系数为 DiffExpr，作用在表达式左侧.

    不存储零系数；实例不可变。
    """
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, DiffExpr] | None = None):
        cleaned = {}
        for degree, coeff in (coeffs or {}).items():
            if degree < 0:
                raise ValueError(f"算子次数不能为负: {degree}")
            coeff = coeff if isinstance(coeff, DiffExpr) else DiffExpr(coeff)
            if not coeff.is_zero:
                cleaned[degree] = coeff
        object.__setattr__(self, "_coeffs", dict(sorted(cleaned.items())))

    def __setattr__(self, key, value):
        raise AttributeError("DOperator 不可变")

    @classmethod
    def zero(cls) -> "DOperator":
        return cls()

    @classmethod
    def identity(cls) -> "DOperator":
        return cls({0: ONE})

    @classmethod
    def d(cls, power: int = 1) -> "DOperator":
        """D^power."""
        return cls({power: ONE})

    @property
    def degree(self) -> int | None:
        """最高次数，零算子为 None."""
        return max(self._coeffs) if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, degree: int) -> DiffExpr:
        return self._coeffs.get(degree, ZERO)

    def items(self) -> Iterator[tuple[int, DiffExpr]]:
        return iter(self._coeffs.items())

    def apply(self, e: DiffExpr) -> DiffExpr:
        return op_apply(self, e)

    def __add__(self, other: "DOperator") -> "DOperator":
        degrees = set(self._coeffs) | set(other._coeffs)
        return DOperator({d: self.coeff(d) + other.coeff(d) for d in degrees})

    def __neg__(self) -> "DOperator":
        return DOperator({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: "DOperator") -> "DOperator":
        return self + (-other)

    def __matmul__(self, other: "DOperator") -> "DOperator":
        return op_compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DOperator):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        if self.is_zero:
            return "DOperator(0)"
        parts = [f"({c})*D^{d}" if d else f"({c})" for d, c in reversed(self._coeffs.items())]
        return f"DOperator({' + '.join(parts)})"


def op_apply(op: DOperator, e: DiffExpr) -> DiffExpr:
    """A(e) = Σ a_i D^i(e)."""
    from .total_derivative import total_d

    if op.is_zero or e.is_zero:
        return ZERO
    result = ZERO
    derivative = e
    for degree in range(op.degree + 1):
        coeff = op.coeff(degree)
        if not coeff.is_zero:
            result = result + coeff * derivative
        if degree < op.degree:
            derivative = total_d(derivative)
    return result


def op_compose(a: DOperator, b: DOperator) -> DOperator:
    """A∘B，按 D^i∘(g D^j) = Σ_p C(i,p) D^p(g) D^{i-p+j} 展开."""
    from .total_derivative import total_d

    result: dict[int, DiffExpr] = {}
    for j, b_coeff in b.items():
        # D^p(b_j)，p 最多到 A 的次数
        derivatives = [b_coeff]
        for _ in range(a.degree or 0):
            derivatives.append(total_d(derivatives[-1]))
        for i, a_coeff in a.items():
            for p in range(i + 1):
                term = a_coeff * derivatives[p]
                if p and comb(i, p) != 1:
                    term = term * comb(i, p)
                degree = i - p + j
                result[degree] = result.get(degree, ZERO) + term
    return DOperator(result)


def op_commutator(a: DOperator, b: DOperator) -> DOperator:
    """[A, B] = A∘B - B∘A."""
    return op_compose(a, b) - op_compose(b, a)
