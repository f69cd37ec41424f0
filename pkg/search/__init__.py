from .ansatz import (
    AnsatzConfig,
    monomial_weight,
    build_pool,
)
from .solver import (
    LinearTPair,
    nullspace_combinations,
    find_symmetries,
    find_linear_t_symmetries,
    span_contains,
)

__all__ = [
    # 拟设
    "AnsatzConfig",
    "monomial_weight",
    "build_pool",
    # 求解
    "LinearTPair",
    "nullspace_combinations",
    "find_symmetries",
    "find_linear_t_symmetries",
    "span_contains",
]
