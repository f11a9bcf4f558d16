"""Degree caps, overridable through ``CYCLO_MAX_DEGREE``."""

from __future__ import annotations

import os

from .errors import InvalidArgument

ENV_MAX_DEGREE = "CYCLO_MAX_DEGREE"
ENGINE_MAX_DEGREE = 10_000_000
ORACLE_MAX_DEGREE = 2_000_000


def max_degree(default: int) -> int:
    raw = os.environ.get(ENV_MAX_DEGREE)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidArgument(f"{ENV_MAX_DEGREE}={raw!r} is not an integer") from None
    if value < 1:
        raise InvalidArgument(f"{ENV_MAX_DEGREE} must be positive")
    return value
