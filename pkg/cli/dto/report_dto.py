from typing import Any, ClassVar

from pydantic import Field, SerializeAsAny

from base_cls import BaseDataModel
from expr import print_expr
from timedep import TimeDependenceClass, TimeKind


class TimeClassDto(BaseDataModel):
    """t 依赖形态DTO

    使用 kind 字段分发到具体形态
    """
    discriminator_field: ClassVar[str] = "kind"
    kind: str

    def describe(self) -> str:
        return self.kind

    @classmethod
    def from_class(cls, time_class: TimeDependenceClass) -> "TimeClassDto":
        if time_class.kind is TimeKind.POLYNOMIAL:
            return PolynomialDto(degree=time_class.degree)
        if time_class.kind is TimeKind.QUASIPOLYNOMIAL:
            return QuasipolynomialDto(spectrum=[(print_expr(lam), m) for lam, m in time_class.spectrum])
        if time_class.kind is TimeKind.INDEPENDENT:
            return TimeIndependentDto()
        return OtherTimeDto()


class TimeIndependentDto(TimeClassDto):
    """不含 t"""
    discriminator_value: ClassVar[str] = "time-independent"
    kind: str = "time-independent"


class PolynomialDto(TimeClassDto):
    """t 的多项式"""
    discriminator_value: ClassVar[str] = "polynomial"
    kind: str = "polynomial"
    degree: int = Field(ge=1)  # 次数

    def describe(self) -> str:
        return f"polynomial degree {self.degree}"


class QuasipolynomialDto(TimeClassDto):
    """拟多项式"""
    discriminator_value: ClassVar[str] = "quasipolynomial"
    kind: str = "quasipolynomial"
    spectrum: list[tuple[str, int]]  # (λ, t 的最高次数)

    def describe(self) -> str:
        pairs = ", ".join(f"({lam}, {m})" for lam, m in self.spectrum)
        return f"quasipolynomial {{{pairs}}}"


class OtherTimeDto(TimeClassDto):
    """非拟多项式形态"""
    discriminator_value: ClassVar[str] = "other"
    kind: str = "other"


class ReportDto(BaseDataModel):
    """单条命令(或语料中单项检查)的报告，文本与 JSON 输出共用同一组结论字段"""
    entry: str | None = None  # 语料条目名
    command: str  # 子命令
    verdict: str  # 结论标签
    summary: str  # 文本输出的首行
    ok: bool = True  # 是否符合预期
    order: int | None = None  # 对称性阶数
    flags: dict[str, Any] = Field(default_factory=dict)  # 方程分类标记
    time_class: SerializeAsAny[TimeClassDto] | None = None  # t 依赖形态
    residual: str | None = None  # 非零残差
    details: dict[str, Any] = Field(default_factory=dict)  # 其余结果

    def to_text(self) -> str:
        prefix = f"[{self.entry}] " if self.entry else ""
        lines = [f"{prefix}{self.summary}"]
        if self.residual is not None:
            lines.append(f"  residual: {self.residual}")
        for key, value in self.details.items():
            if isinstance(value, (list, tuple)):
                lines.append(f"  {key}:")
                lines.extend(f"    {item}" for item in value)
            else:
                lines.append(f"  {key}: {value}")
        return "\n".join(lines)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
