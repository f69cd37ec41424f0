# -------------------------
# @Description  : 日志格式化与进度条风格
# -------------------------
import logging
import os
import json
import warnings
from logging.handlers import TimedRotatingFileHandler
from tqdm import tqdm as tqdm_original
from .color import Color

# NOTE: 这里保存的是针对不同目标（console/file）和不同日志级别的消息格式模板
LOG_MESSAGE_FORMATS = {
    "console": {
        "DEBUG": "{CYAN}[%(asctime)s.%(msecs)03d]{RESET} "
            "{BLUE}%(colored_levelname)-8s{RESET} "
            "{MAGENTA}%(name)s{RESET} "
            "{YELLOW}%(filename)s:%(lineno)d %(funcName)s{RESET} "
            "| %(message)s",

        "INFO": "{CYAN}[%(asctime)s]{RESET} "
            "{GREEN}%(colored_levelname)-8s{RESET} "
            "{MAGENTA}%(name)s{RESET} ➜ "
            "%(message)s",

        "WARNING": "{CYAN}[%(asctime)s]{RESET} "
            "{YELLOW}%(colored_levelname)-8s{RESET} "
            "{MAGENTA}%(name)s{RESET} "
            "{YELLOW}➜{RESET} "
            "%(message)s",

        "ERROR": "{CYAN}[%(asctime)s]{RESET} "
            "{RED}%(colored_levelname)-8s{RESET} "
            "{GRAY}[%(filename)s]{RESET}"
            "{MAGENTA}%(name)s:%(lineno)d{RESET} "
            "{RED}➜{RESET} "
            "%(message)s",

        "CRITICAL": "{CYAN}[%(asctime)s]{RESET} "
                "{RED}{BOLD}%(colored_levelname)-8s{RESET} "
                "{GRAY}{{%(module)s}}{RESET}"
                "{MAGENTA}%(name)s:%(lineno)d{RESET} "
                "{RED}➜{RESET} "
                "%(message)s"
    },
    "file": {
        "DEBUG": "[%(asctime)s] %(levelname)-8s %(name)s (%(filename)s:%(funcName)s:%(lineno)d) | %(message)s",
        "INFO": "[%(asctime)s] %(levelname)-8s %(name)s ➜ %(message)s",
        "WARNING": "[%(asctime)s] %(levelname)-8s %(name)s ➜ %(message)s",
        "ERROR": "[%(asctime)s] %(levelname)-8s [%(filename)s]%(name)s:%(lineno)d ➜ %(message)s",
        "CRITICAL": "[%(asctime)s] %(levelname)-8s {%(module)s}[%(filename)s]%(name)s:%(lineno)d ➜ %(message)s",
    }
}

# 日志级别颜色名
LOG_LEVEL_TO_COLOR = {
    "DEBUG": "CYAN",
    "INFO": "GREEN",
    "WARNING": "YELLOW",
    "ERROR": "RED",
    "CRITICAL": "MAGENTA",
}


def _render_template(template: str) -> str:
    """把模板里的 {COLOR} 占位符替换为当前调色板的转义序列."""
    names = ("BLACK", "RED", "GREEN", "YELLOW", "BLUE", "MAGENTA",
             "CYAN", "WHITE", "GRAY", "RESET", "BOLD")
    return template.format(**{name: getattr(Color, name) for name in names})


class tqdm(tqdm_original):
    """
    统一风格的 tqdm 进度条

    默认输出到 stderr，非终端环境下自动关闭(disable=None)

    参数说明:
    :param args: 原生 tqdm 支持的非关键字参数（如可迭代对象等）
    :param kwargs: 原生 tqdm 支持的关键字参数
        - bar_format (str): 进度条的格式化字符串
        - ncols (int): 进度条的宽度（以字符为单位）
        - leave (bool): 进度条完成后是否保留显示
    """

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("bar_format",
            f"{Color.CYAN}{{desc}}{Color.RESET} "
            f"{Color.WHITE}{{percentage:3.0f}}%{Color.RESET} "
            f"{Color.GRAY}[{{n_fmt}}/{{total_fmt}}]{Color.RESET}"
            f"{Color.WHITE}|{{bar:20}}|{Color.RESET}"
            f"{Color.BLUE}[{{elapsed}}]{Color.RESET}"
        )
        kwargs.setdefault("ncols", 80)
        kwargs.setdefault("leave", False)
        kwargs.setdefault("disable", None)
        super().__init__(*args, **kwargs)


class DynamicFormatter(logging.Formatter):
    """根据日志记录级别动态选择格式的格式化器"""

    def __init__(self, fmt_dict: dict, datefmt: str = None, use_color: bool = True):
        """
        初始化动态格式化器

        Args:
            fmt_dict: 包含不同日志级别格式字符串的字典，键为级别名称（如"DEBUG"）
            datefmt: 日期时间格式字符串
            use_color: 是否使用颜色
        """
        super().__init__(datefmt=datefmt)
        self.use_color = use_color and Color.enabled

        # 为每个级别预创建Formatter实例
        self._formatters = {}
        for level_name, fmt in fmt_dict.items():
            if "{" in fmt and "%(colored_levelname)" in fmt:
                fmt = _render_template(fmt)
            self._formatters[level_name] = logging.Formatter(fmt, datefmt=datefmt)
        self._default_formatter = next(iter(self._formatters.values()))

    def format(self, record: logging.LogRecord) -> str:
        """格式化日志记录，根据记录级别选择对应的格式"""
        if self.use_color:
            color = getattr(Color, LOG_LEVEL_TO_COLOR.get(record.levelname, "RESET"))
            record.colored_levelname = f"{color}{record.levelname:8}{Color.RESET}"
        else:
            record.colored_levelname = record.levelname

        formatter = self._formatters.get(record.levelname, self._default_formatter)
        try:
            return formatter.format(record)
        except Exception as e:
            warnings.warn(f"日志格式化错误: {str(e)}")
            return self._default_formatter.format(record)


def _get_valid_log_level(level_name: str, default: str) -> int:
    """验证并获取有效的日志级别"""
    level = getattr(logging, level_name.upper(), None)
    if not isinstance(level, int):
        warnings.warn(f"无效的日志级别: {level_name}, 使用 {default}")
        return getattr(logging, default)
    return level


def _file_handler(path: str, backup_count: int, level: int) -> TimedRotatingFileHandler:
    handler = TimedRotatingFileHandler(
        filename=path,
        when="midnight",
        interval=1,
        backupCount=backup_count,
        encoding="utf-8",
        utc=True,
    )
    handler.setLevel(level)
    handler.setFormatter(DynamicFormatter(
        fmt_dict=LOG_MESSAGE_FORMATS["file"],
        datefmt='%Y-%m-%d %H:%M:%S',
        use_color=False,
    ))
    return handler


def setup_logging(console_level: str | None = None) -> None:
    """设置日志系统.

    控制台处理器始终启用；只有设置了 LOG_FILE_PATH 才会写日志文件，
    并按 LOG_REDIRECT_RULES 把指定记录器重定向到单独的文件。

    Args:
        console_level: 控制台日志级别，缺省读取环境变量 LOG_LEVEL (默认 WARNING)
    """
    console_level = console_level or os.getenv("LOG_LEVEL", "WARNING")
    file_level = os.getenv("FILE_LOG_LEVEL", "DEBUG")
    console_log_level = _get_valid_log_level(console_level, "WARNING")
    file_log_level = _get_valid_log_level(file_level, "DEBUG")

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(console_log_level)
    console_handler.setFormatter(DynamicFormatter(
        fmt_dict=LOG_MESSAGE_FORMATS["console"],
        datefmt='%H:%M:%S',
        use_color=True,
    ))
    handlers: list[logging.Handler] = [console_handler]

    log_dir = os.getenv("LOG_FILE_PATH")
    if log_dir:
        file_name = os.getenv("LOG_FILE_NAME", "evosym.log")
        try:
            backup_count = int(os.getenv("BACKUP_COUNT", "7"))
        except ValueError:
            backup_count = 7
            warnings.warn("BACKUP_COUNT 为无效值,使用默认值 7")
        os.makedirs(log_dir, exist_ok=True)
        handlers.append(_file_handler(os.path.join(log_dir, file_name), backup_count, file_log_level))

        try:
            redirect_rules = json.loads(os.getenv("LOG_REDIRECT_RULES", "{}"))
        except json.JSONDecodeError:
            redirect_rules = {}
            warnings.warn("LOG_REDIRECT_RULES 格式无效，忽略重定向规则")
        for logger_name, filename in redirect_rules.items():
            logger = logging.getLogger(logger_name)
            logger.setLevel(file_log_level)
            logger.handlers = [_file_handler(os.path.join(log_dir, filename), backup_count, file_log_level)]
            # 禁止传播到根记录器，避免重复记录
            logger.propagate = False

    root_logger.handlers = handlers
