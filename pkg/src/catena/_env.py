"""Size caps that can be overridden from the environment."""
from __future__ import annotations

import os


def env_int(name: str, default: int) -> int:
    """Positive integer from the environment; malformed values fall back to the default."""
    try:
        value = int(os.environ.get(name, default))
    except ValueError:
        return default
    return value if value > 0 else default
