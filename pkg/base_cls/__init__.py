from .base_model import (
    BaseDataModel,
    BaseDataModelT,
)
from .base_type import (
    BaseType,
    BaseTypeT,
)
from .base_data import (
    BaseDataMixin,
    BaseDataT,
)
from .base_error import (
    ExprError,
    ExponentError,
    NonScalarDivisionError,
    ExpArgumentError,
    ExprSyntaxError,
    UnknownIdentifierError,
    PreconditionError,
    DegenerateCaseError,
    EquationError,
    InvariantViolation,
    PoolTooLargeError,
    CorpusFormatError,
)

__all__ = [
    # abc
    "BaseType",
    "BaseDataModel",
    "BaseDataMixin",
    # 异常
    "ExprError",
    "ExponentError",
    "NonScalarDivisionError",
    "ExpArgumentError",
    "ExprSyntaxError",
    "UnknownIdentifierError",
    "PreconditionError",
    "DegenerateCaseError",
    "EquationError",
    "InvariantViolation",
    "PoolTooLargeError",
    "CorpusFormatError",
    # 泛型
    "BaseTypeT",
    "BaseDataT",
    "BaseDataModelT",
]
