from .config import (
    RuntimeConfig,
    DEFAULT_CONFIG,
)

__all__ = [
    "RuntimeConfig",
    "DEFAULT_CONFIG",
]
