from base_cls import BaseDataModel
from pydantic import Field


class CandidateDto(BaseDataModel):
    """候选对称性及其预期"""
    expr: str  # 候选表达式源码
    expect_symmetry: bool  # 预期是否为对称
    time_class: str | None = None  # 预期的 t 依赖形态
    line: int | None = None  # 所在行


class CaseDto(BaseDataModel):
    """scaling / master 检查项"""
    expr: str  # Q0 或 G0
    expected: str | None = None  # λ 或 G1，none 表示预期不存在
    line: int | None = None


class AnsatzCaseDto(BaseDataModel):
    """拟设搜索及应当落在解空间中的表达式"""
    params: dict[str, str]  # order=.. t_degree=.. 等
    expected: list[str] = Field(default_factory=list)
    line: int | None = None


class CorpusEntryDto(BaseDataModel):
    """语料条目DTO"""
    name: str  # 条目名
    equation: str  # 右端项源码
    constants: list[str] = Field(default_factory=list)  # 声明的常量
    constant_separant: bool | None = None  # 预期标记
    kdv_like: bool | None = None
    nonlinearizable: bool = False  # 用户声明方程不可线性化
    candidates: list[CandidateDto] = Field(default_factory=list)
    basis: list[str] = Field(default_factory=list)  # 低阶对称性基
    basis_mode: str = "theorem"  # theorem | corollary
    prediction: str | None = None  # polynomial | quasipolynomial | none
    scaling: list[CaseDto] = Field(default_factory=list)
    master: list[CaseDto] = Field(default_factory=list)
    ansatz: list[AnsatzCaseDto] = Field(default_factory=list)
    line: int | None = None  # [entry] 所在行
