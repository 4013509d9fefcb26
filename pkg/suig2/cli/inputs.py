"""Reading command inputs; the path "-" means stdin."""

import sys
from pathlib import Path
from typing import Optional

from suig2.config import Settings


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def with_epsilon(settings: Settings, epsilon: Optional[str]) -> Settings:
    """Settings with epsilon overridden; validation errors surface as usual."""
    if epsilon is None:
        return settings
    return Settings(**{**settings.model_dump(), "epsilon": epsilon})
