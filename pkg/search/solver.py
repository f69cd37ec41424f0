"""把 ∂G/∂t = {F, G} 在有限拟设上化为精确齐次线性方程组求解."""
from dataclasses import dataclass
from logging import getLogger
from typing import Callable, Sequence

import sympy as sp

from base_cls import BaseDataMixin, InvariantViolation, PreconditionError
from context import DEFAULT_CONFIG
from expr import DiffExpr, T, partial
from symmetry import EvolutionEquation, bracket, is_symmetry
from utils import tqdm
from .ansatz import AnsatzConfig, build_pool


_log = getLogger(__name__)


@dataclass(frozen=True, repr=False)
class LinearTPair(BaseDataMixin):
    """G = G0 + t·G1 型对称性的一对 (G0, G1)"""
    G0: DiffExpr
    G1: DiffExpr


def _progress(iterable, desc: str, total: int):
    disable = None if DEFAULT_CONFIG.get_config("progress", True) else True
    return tqdm(iterable, desc=desc, total=total, disable=disable)


def _term_matrix(columns: Sequence[DiffExpr]) -> sp.Matrix:
    """每一列是一个表达式，每一行是一个 生成元单项式(含指数原子) 的系数."""
    expansions = [c.terms() for c in columns]
    keys = sorted({key for e in expansions for key in e}, key=sp.default_sort_key)
    index = {key: row for row, key in enumerate(keys)}
    matrix = sp.zeros(len(keys), len(columns))
    for col, expansion in enumerate(expansions):
        for key, coeff in expansion.items():
            matrix[index[key], col] = coeff
    return matrix


def _assemble(pool: Sequence[DiffExpr], image: Callable[[DiffExpr], DiffExpr], desc: str) -> list[DiffExpr]:
    return [image(element) for element in _progress(pool, desc, len(pool))]


def _clear_denominators(vector: sp.Matrix) -> list[sp.Expr]:
    entries = [sp.cancel(v) for v in vector]
    denominators = [sp.fraction(v)[1] for v in entries if v != 0]
    scale = sp.lcm(denominators) if denominators else sp.S.One
    return [sp.expand(sp.cancel(v * scale)) for v in entries]


def _combine(coeffs: Sequence[sp.Expr], elements: Sequence[DiffExpr]) -> DiffExpr:
    return DiffExpr(sp.Add(*(c * e.expr for c, e in zip(coeffs, elements) if c != 0)))


def nullspace_combinations(columns: Sequence[DiffExpr]) -> list[list[sp.Expr]]:
    """Σ c_m·columns_m = 0 的解空间基，分母已清除."""
    if not columns:
        return []
    matrix = _term_matrix(columns)
    if matrix.rows == 0:
        return [[sp.S.One if i == j else sp.S.Zero for i in range(len(columns))] for j in range(len(columns))]
    return [_clear_denominators(v) for v in matrix.nullspace()]


def find_symmetries(eq: EvolutionEquation, cfg: AnsatzConfig) -> list[DiffExpr]:
    """在拟设池上求解 ∂G/∂t - {F, G} = 0，返回解空间的一组基.

    含具名常量的方程按常量取一般值处理，不做参数退化情形的分支。

    Raises:
        PoolTooLargeError: 池过大
        PreconditionError: 池为空
        InvariantViolation: 返回的元素未通过对称性复核
    """
    pool = build_pool(eq, cfg)
    if not pool:
        raise PreconditionError("拟设池为空")
    residuals = _assemble(pool, lambda b: partial(b, T) - bracket(eq.F, b), "组装残差")
    basis = []
    for coeffs in nullspace_combinations(residuals):
        G = _combine(coeffs, pool)
        report = is_symmetry(eq, G)
        if not report.is_symmetry:
            raise InvariantViolation(f"求解结果未通过对称性复核: {G}，残差 {report.residual}")
        basis.append(G)
    _log.info(f"拟设池 {len(pool)} 个基函数，找到 {len(basis)} 个线性无关的对称")
    return basis


def find_linear_t_symmetries(eq: EvolutionEquation, cfg: AnsatzConfig) -> list[LinearTPair]:
    """在不含 t 的池上求 {F, {F, G0}} = 0 且 {F, G0} ≠ 0 的 G0，G1 两两线性无关.

    Raises:
        PreconditionError: 方程含 t
        InvariantViolation: 返回的一对未通过 G0 + t·G1 的对称性复核
    """
    if not eq.time_independent:
        raise PreconditionError(f"要求方程右端项不含 t: {eq.F}")
    if cfg.t_degree or cfg.exp_lambda is not None:
        _log.info("线性 t 依赖搜索只使用不含 t 的池，忽略 t_degree 与 exp_lambda")
        cfg = cfg.model_copy(update={"t_degree": 0, "exp_lambda": None})
    pool = build_pool(eq, cfg)
    if not pool:
        raise PreconditionError("拟设池为空")

    images = _assemble(pool, lambda b: bracket(eq.F, b), "组装 {F, G0}")
    second = _assemble(images, lambda b: bracket(eq.F, b), "组装 {F, G1}")
    combos = nullspace_combinations(second)
    if not combos:
        return []

    g1_candidates = [_combine(c, images) for c in combos]
    if all(g.is_zero for g in g1_candidates):
        return []
    _, pivots = _term_matrix(g1_candidates).rref()
    pairs = []
    for col in pivots:
        G0 = _combine(combos[col], pool)
        G1 = g1_candidates[col]
        certified = G0 + DiffExpr._wrap(T) * G1
        if G1.is_zero or not is_symmetry(eq, certified).is_symmetry:
            raise InvariantViolation(f"G0 + t·G1 未通过对称性复核: {certified}")
        pairs.append(LinearTPair(G0=G0, G1=G1))
    _log.info(f"找到 {len(pairs)} 对 (G0, G1)")
    return pairs


def span_contains(basis: Sequence[DiffExpr], G: DiffExpr) -> bool:
    """G 是否落在 basis 张成的常系数线性空间中."""
    if G.is_zero:
        return True
    if not basis:
        return False
    base_rank = _term_matrix(list(basis)).rank()
    return _term_matrix([*basis, G]).rank() == base_rank
