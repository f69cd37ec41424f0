from .symmetry_type import (
    CheckVerdict,
    SymmetryVerdict,
)
from .symmetry_data import (
    Representation,
    SymmetryReport,
    DeterminingSystem,
    LeadingStructure,
    DescentStep,
    Lead1Result,
)
from .equation import (
    EvolutionEquation,
    classify,
)
from .bracket import (
    bracket,
    leading_coefficients,
    is_symmetry,
    cr3_residual_operator,
)
from .determining import (
    level_count,
    literal_equations,
    determining_system,
)
from .bounds import (
    r_bound,
    low_order_bound,
    dim_breakdown,
    dim_bound,
)
from .structure import (
    leading_structure_check,
    x_descent,
    representation_decompose,
    lead1_check,
)

__all__ = [
    # 枚举
    "CheckVerdict",
    "SymmetryVerdict",
    # 数据
    "Representation",
    "SymmetryReport",
    "DeterminingSystem",
    "LeadingStructure",
    "DescentStep",
    "Lead1Result",
    # 方程
    "EvolutionEquation",
    "classify",
    # 括号与对称性
    "bracket",
    "leading_coefficients",
    "is_symmetry",
    "cr3_residual_operator",
    # 定解方程组
    "level_count",
    "literal_equations",
    "determining_system",
    # 上界
    "r_bound",
    "low_order_bound",
    "dim_breakdown",
    "dim_bound",
    # 结构校验
    "leading_structure_check",
    "x_descent",
    "representation_decompose",
    "lead1_check",
]
