from .d_operator import (
    DOperator,
    op_apply,
    op_compose,
    op_commutator,
)
from .total_derivative import (
    total_d,
    total_d_power,
    frechet,
    ev_apply,
    nabla_on_op,
)

__all__ = [
    # 算子
    "DOperator",
    "op_apply",
    "op_compose",
    "op_commutator",
    # 导数
    "total_d",
    "total_d_power",
    "frechet",
    "ev_apply",
    "nabla_on_op",
]
