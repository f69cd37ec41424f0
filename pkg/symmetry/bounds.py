from logging import getLogger

from base_cls import PreconditionError, DegenerateCaseError


_log = getLogger(__name__)


def r_bound(k: int, n: int, q: int) -> int:
    """x 依赖次数的界 r_{k,n,q}.

    q = -1 时为 [k/(n-1)]；q = 0, 1 时若 k mod (n-1) ∈ {0,…,q}
    取 max(0, [k/(n-1)] - 1)，否则取 [k/(n-1)]。

    Raises:
        DegenerateCaseError: n = 2 且 q ∈ {0, 1}，此时模 1 的条件恒成立
        PreconditionError: 参数越界
    """
    if k < 0:
        raise PreconditionError(f"k 必须非负: {k}")
    if n < 2:
        raise PreconditionError(f"n 必须 ≥ 2: {n}")
    if q not in (-1, 0, 1):
        raise PreconditionError(f"q 只能取 -1, 0, 1: {q}")
    quotient, residue = divmod(k, n - 1)
    if q == -1:
        return quotient
    if n == 2:
        raise DegenerateCaseError(f"r_{{k,n,q}} 在 n = 2, q = {q} 时退化")
    if residue <= q:
        return max(0, quotient - 1)
    return quotient


def _check_dim_args(k: int, n: int, dim_phi: int) -> None:
    if n < 2:
        raise PreconditionError(f"n 必须 ≥ 2: {n}")
    if k < 0:
        raise PreconditionError(f"k 必须非负: {k}")
    if not 0 <= dim_phi <= n:
        raise PreconditionError(f"dim Φ 必须在 0..{n} 之间 (不可线性化方程 dim Φ ≤ n): {dim_phi}")


def low_order_bound(k: int, n: int, dim_phi: int) -> int:
    """N_{k,n} = dim Φ + k + 2，适用于 k ≤ n - 2."""
    _check_dim_args(k, n, dim_phi)
    if k > n - 2:
        raise PreconditionError(f"N_{{k,n}} 只对 k ≤ n-2 定义: k = {k}, n = {n}")
    return dim_phi + k + 2


def dim_breakdown(k: int, n: int, dim_phi: int) -> list[tuple[int, int]]:
    """逐层的维数上界.

    返回 [(j, 增量)]：第一项是 (min(k, n-2), dim S^{(k0)} 的界)，
    之后每项是 dim S^{(j)}/S^{(j-1)} ≤ dim S^{(j mod (n-1))} + [j/(n-1)] 的界。
    """
    _check_dim_args(k, n, dim_phi)
    base = min(k, n - 2)
    levels = [(base, dim_phi + base + 2)]
    for j in range(n - 1, k + 1):
        quotient, residue = divmod(j, n - 1)
        levels.append((j, dim_phi + residue + 2 + quotient))
    return levels


def dim_bound(k: int, n: int, dim_phi: int) -> int:
    """KdV 型不可线性化方程 dim S^{(k)} 的上界.

    k ≤ n-2 时为 N_{k,n}；否则把逐层增量累加到 dim S^{(n-2)} 的界上。
    """
    total = sum(increment for _, increment in dim_breakdown(k, n, dim_phi))
    _log.debug(f"dim_bound(k={k}, n={n}, dim Φ={dim_phi}) = {total}")
    return total
