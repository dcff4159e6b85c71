import os

from .exceptions import GuardExceeded

GUARD_ENV = "SKEWPATH_GUARD"


def guard_limit(default):
    """Size limit for an exact search; SKEWPATH_GUARD can only raise it."""
    raw = os.environ.get(GUARD_ENV)
    if not raw:
        return default
    try:
        override = int(raw)
    except ValueError:
        return default
    return max(default, override)


def check_guard(size, default, what):
    limit = guard_limit(default)
    if size > limit:
        raise GuardExceeded(
            f"{what}: size {size} exceeds guard {limit} (set {GUARD_ENV} to raise it)"
        )
