"""Size caps for brute-force enumerations and operator assembly."""

from __future__ import annotations

import os

DEFAULT_CAP = 10_000
ENV_VAR = "STRINGNET_CAP"


class SizeCapError(RuntimeError):
    """A requested brute-force computation exceeds the configured cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(
            f"{what} needs {size} > cap {cap}; raise the cap explicitly "
            f"(argument or {ENV_VAR}) to proceed"
        )
        self.what = what
        self.size = size
        self.cap = cap


def resolve_cap(cap: int | None = None) -> int:
    """Explicit argument wins, then the environment, then the default."""
    if cap is not None:
        if cap < 1:
            raise ValueError(f"cap must be positive, got {cap}")
        return cap
    env = os.environ.get(ENV_VAR)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{ENV_VAR}={env!r} is not an integer") from None
        if value < 1:
            raise ValueError(f"{ENV_VAR} must be positive, got {value}")
        return value
    return DEFAULT_CAP


def check_cap(what: str, size: int, cap: int | None = None) -> int:
    limit = resolve_cap(cap)
    if size > limit:
        raise SizeCapError(what, size, limit)
    return limit
