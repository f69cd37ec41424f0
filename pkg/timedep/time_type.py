from base_cls import BaseType


class TimeKind(BaseType):
    """对称性 t 依赖形态枚举."""
    ALL = "time.all"  # 通配符
    INDEPENDENT = "time.independent"  # 不含 t
    POLYNOMIAL = "time.polynomial"  # t 的多项式, 次数 ≥ 1
    QUASIPOLYNOMIAL = "time.quasipolynomial"  # exp(λt)·P(t) 之和
    OTHER = "time.other"  # 不是拟多项式形态


class PredictionKind(BaseType):
    """按低阶对称性基给出的预测."""
    ALL = "prediction.all"  # 通配符
    POLYNOMIAL = "prediction.polynomial"  # 全部对称性是 t 的多项式
    QUASIPOLYNOMIAL = "prediction.quasipolynomial"  # 全部对称性是拟多项式的线性组合
    NONE = "prediction.none"  # 无预测

    @property
    def label(self) -> str:
        return {
            PredictionKind.POLYNOMIAL: "all symmetries polynomial in t",
            PredictionKind.QUASIPOLYNOMIAL: "all symmetries quasipolynomial in t",
        }.get(self, "no prediction")


class HypothesisMode(BaseType):
    """低阶基所覆盖的阶数范围."""
    ALL = "mode.all"  # 通配符
    THEOREM = "mode.theorem"  # S^(n-1)
    COROLLARY = "mode.corollary"  # S^(n-2)，仅限 KdV 型方程


class ConjectureKind(BaseType):
    """对称性集合的 t 依赖汇总，只作观察不作判定."""
    ALL = "conjecture.all"  # 通配符
    TIME_INDEPENDENT = "conjecture.time_independent"  # 全部不含 t
    ALL_POLYNOMIAL = "conjecture.all_polynomial"  # 全部是 t 的多项式
    ALL_EXPONENTIAL = "conjecture.all_exponential"  # 全部是 exp(λt) 的组合
    MIXED = "conjecture.mixed"  # 两者兼有或含其他形态
