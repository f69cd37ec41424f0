from base_cls import BaseType


class CheckVerdict(BaseType):
    """结构校验结论枚举."""
    ALL = "check.all"  # 通配符
    PASS = "check.pass"  # 校验通过
    FAIL = "check.fail"  # 校验失败
    INCONCLUSIVE = "check.inconclusive"  # 表达式类内无法判定
    VACUOUS = "check.vacuous"  # 降阶到零，平凡成立


class SymmetryVerdict(BaseType):
    """对称性判定结论枚举."""
    ALL = "symmetry.all"  # 通配符
    SYMMETRY = "symmetry.yes"  # 残差为零
    NOT_SYMMETRY = "symmetry.no"  # 残差非零

    @property
    def label(self) -> str:
        return "SYMMETRY" if self is SymmetryVerdict.SYMMETRY else "NOT A SYMMETRY"
