"""Runtime configuration read from the environment."""

import os

DEFAULT_MAX_POINTS = 10**7


def max_points() -> int:
    """Enumeration cap, overridable through SKEINLAB_MAX_POINTS."""
    raw = os.environ.get("SKEINLAB_MAX_POINTS")
    return int(raw) if raw else DEFAULT_MAX_POINTS
