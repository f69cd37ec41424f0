from enum import Enum
from typing import TypeVar


class BaseType(str, Enum):
    """结论标签枚举基类，值的格式为 "作用域.状态"，提供通用的匹配方法."""

    @property
    def scope(self) -> str:
        """返回标签的作用域."""
        return self.value.split(".", 1)[0]

    @property
    def state(self) -> str:
        """返回标签的状态."""
        return self.value.split(".", 1)[1]

    @property
    def label(self) -> str:
        """报告中使用的大写标签，例如 ``structure.pass`` -> ``PASS``."""
        return self.state.upper()

    def matches(self, rule: "BaseType") -> bool:
        """判断标签是否匹配.

        Args:
            rule: 要匹配的标签

        Returns:
            bool: 在作用域相同且具体状态相同或rule为通配符时返回True，否则返回False
        """
        if self.scope != rule.scope:
            return False
        return rule.state in (self.state, "all")

    @classmethod
    def from_state(cls, state: str) -> "BaseTypeT":
        """根据状态名(不含作用域)查找枚举成员.

        Raises:
            ValueError: 状态名不存在
        """
        for member in cls:
            if member.state == state:
                return member
        raise ValueError(f"{cls.__name__} 中不存在状态 '{state}'")


BaseTypeT = TypeVar("BaseTypeT", bound=BaseType)
