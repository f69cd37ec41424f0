# -------------------------
# @Description  : 终端颜色
# -------------------------
import os
import sys


def is_ansi_supported(stream=None) -> bool:
    """
    检查输出流是否支持 ANSI 转义序列

    设置了 NO_COLOR 环境变量或输出流不是终端时返回 False
    """
    if os.getenv("NO_COLOR"):
        return False
    stream = stream or sys.stderr
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


class _Palette:
    """
    ANSI 转义序列调色板

    _COLOR 为 False 时所有颜色属性返回空字符串，
    日志与进度条的格式模板因此无需区分是否着色

    Example:
        >>> print(f"{Color.RED}红色文本{Color.RESET}")
    """

    _COLOR = is_ansi_supported()  # 终端是否支持 ANSI 颜色

    _CODES = {
        # 前景颜色
        "BLACK": "\033[30m",
        "RED": "\033[31m",
        "GREEN": "\033[32m",
        "YELLOW": "\033[33m",
        "BLUE": "\033[34m",
        "MAGENTA": "\033[35m",
        "CYAN": "\033[36m",
        "WHITE": "\033[37m",
        "GRAY": "\033[90m",
        # 样式
        "RESET": "\033[0m",
        "BOLD": "\033[1m",
        "UNDERLINE": "\033[4m",
    }

    def __getattr__(self, name: str) -> str:
        try:
            code = self._CODES[name]
        except KeyError:
            raise AttributeError(name) from None
        return code if self._COLOR else ""

    def enable(self, flag: bool = True) -> None:
        """强制开启或关闭颜色输出."""
        type(self)._COLOR = flag

    @property
    def enabled(self) -> bool:
        return self._COLOR

    def paint(self, text: str, color: str) -> str:
        """用指定颜色包裹文本，颜色名不区分大小写."""
        return f"{getattr(self, color.upper())}{text}{self.RESET}"


Color = _Palette()
