from .logger import (
    setup_logging,
    tqdm,
    DynamicFormatter,
)
from .color import (
    Color,
    is_ansi_supported,
)

__all__ = [
    "setup_logging",
    "tqdm",
    "DynamicFormatter",
    "Color",
    "is_ansi_supported",
]
