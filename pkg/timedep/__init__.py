from .time_type import (
    TimeKind,
    PredictionKind,
    HypothesisMode,
    ConjectureKind,
)
from .time_data import (
    TimeDependenceClass,
    AnnihilatorOp,
    ClosureCheck,
    ScalingResult,
    MasterResult,
    HypothesisReport,
    ConjectureReport,
)
from .classify import (
    time_spectrum,
    classify_time,
    operator_from_roots,
    annihilator_for,
    annihilator,
    apply_time_operator,
)
from .closure import (
    dt_closure_check,
    scaling_test,
    mastersymmetry_test,
)
from .prediction import (
    hypothesis_report,
    reduce_to_simple,
    conjecture_survey,
)

__all__ = [
    # 枚举
    "TimeKind",
    "PredictionKind",
    "HypothesisMode",
    "ConjectureKind",
    # 数据
    "TimeDependenceClass",
    "AnnihilatorOp",
    "ClosureCheck",
    "ScalingResult",
    "MasterResult",
    "HypothesisReport",
    "ConjectureReport",
    # 分类与算子
    "time_spectrum",
    "classify_time",
    "operator_from_roots",
    "annihilator_for",
    "annihilator",
    "apply_time_operator",
    # 存在性检验
    "dt_closure_check",
    "scaling_test",
    "mastersymmetry_test",
    # 预测
    "hypothesis_report",
    "reduce_to_simple",
    "conjecture_survey",
]
