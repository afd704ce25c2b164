"""Size guards for the exhaustive searches.

Every exact search in this package is guarded by an explicit size bound.
Setting the environment variable SIGNFORGE_GUARD_OVERRIDE=1 unlocks all
guards (a warning is emitted once per process).
"""

import os
import sys

from .errors import GuardExceeded

# Defaults, tuned to the catalog scale.
SWITCH_SEARCH_MAX_VERTICES = 24
ISO_SEARCH_MAX_VERTICES = 12
CYCLE_CAP = 100_000
QUADRUPLE_SEARCH_MAX_VERTICES = 13
QUADRUPLE_SEARCH_MAX_EDGES = 24
PARTITION_SEARCH_MAX_EDGES = 20
ENUM_MAX_VERTICES = 5
ENUM_MAX_EDGES = 10

_warned = False


def override_active() -> bool:
    return os.environ.get("SIGNFORGE_GUARD_OVERRIDE", "") == "1"


def check(value: int, limit: int, what: str) -> None:
    """Raise GuardExceeded when value exceeds limit, unless overridden."""
    global _warned
    if value <= limit:
        return
    if override_active():
        if not _warned:
            print(
                "signforge: size guards overridden via SIGNFORGE_GUARD_OVERRIDE=1; "
                "expect long runtimes",
                file=sys.stderr,
            )
            _warned = True
        return
    raise GuardExceeded(
        f"{what}: {value} exceeds guard {limit} "
        "(set SIGNFORGE_GUARD_OVERRIDE=1 to force)"
    )
