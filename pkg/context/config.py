import os
from logging import getLogger
from typing import Any


_log = getLogger(__name__)


class RuntimeConfig:
    """运行时配置类，存储和管理计算引擎的配置项.
        以键值对形式存储配置，支持通过方法访问配置项.
    """

    # 环境变量名 -> (配置键, 类型, 默认值)
    ENV_KEYS: dict[str, tuple[str, type, Any]] = {
        "EVOSYM_MAX_POOL": ("max_pool", int, 400),
        "EVOSYM_CORPUS_WORKERS": ("corpus_workers", int, 4),
        "EVOSYM_PROGRESS": ("progress", bool, True),
    }

    def __init__(self, **configs):
        """初始化RuntimeConfig实例.
        Args:
            **configs: 可变关键字参数，表示配置项的键值对.
        """
        self._configs = configs

    def get_config(self, key: str, default=None) -> Any:
        """获取指定键的配置值.
        Args:
            key: 配置项的键.
            default: 如果键不存在时返回的默认值，默认为None.
        Returns:
            配置项的值，如果键不存在则返回默认值.
        """
        return self._configs.get(key, default)

    def with_overrides(self, **overrides) -> "RuntimeConfig":
        """返回合并了覆盖项的新配置，值为 None 的覆盖项被忽略."""
        merged = dict(self._configs)
        merged.update({k: v for k, v in overrides.items() if v is not None})
        return RuntimeConfig(**merged)

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "RuntimeConfig":
        """从环境变量构造配置，非法值回退到默认值并记录警告."""
        environ = os.environ if environ is None else environ
        configs = {}
        for env_name, (key, kind, default) in cls.ENV_KEYS.items():
            raw = environ.get(env_name)
            if raw is None:
                configs[key] = default
                continue
            if kind is bool:
                configs[key] = raw.strip().lower() not in ("0", "false", "no", "off", "")
                continue
            try:
                configs[key] = kind(raw)
            except ValueError:
                _log.warning(f"环境变量 {env_name}={raw!r} 无效，使用默认值 {default}")
                configs[key] = default
        return cls(**configs)


DEFAULT_CONFIG = RuntimeConfig.from_env()
