"""Resource caps for the exhaustive engines.

All exponential searches in orient9 are guarded by explicit caps so that a
mis-sized input fails fast with :class:`~orient9.errors.CapExceeded` instead
of hanging.  Defaults follow the documented contract; every value can be
overridden at call sites or globally through the ``ORIENT9_CAPS`` environment
variable, e.g.::

    ORIENT9_CAPS="boundary_states=1000000,slow_mode=1" orient9 sc --k 16 g.txt
"""

from __future__ import annotations

import dataclasses
import os

from .errors import InvalidInput


@dataclasses.dataclass(frozen=True)
class Caps:
    """Search limits.  Immutable; use :func:`dataclasses.replace` to adjust."""

    #: maximum v(G) for exact set-partition enumeration
    partition_vertices: int = 13
    #: maximum v(G) for exhaustive edge-cut enumeration (2^(v-1) subsets)
    cut_vertices: int = 24
    #: maximum number of DP states k**(v-1) for boundary dynamic programs
    boundary_states: int = 10**8
    #: maximum cost of the strong-connectivity pattern search
    sc_combinations: int = 10**9
    #: lifts sc_combinations; large four-vertex instances need it
    slow_mode: bool = False
    #: node budget for the homomorphism backtracker
    hom_budget: int = 5_000_000

    def require(self, cost: int, cap_name: str) -> None:
        """Raise :class:`CapExceeded` when ``cost`` exceeds the named cap."""
        from .errors import CapExceeded

        limit = getattr(self, cap_name)
        if cap_name == "sc_combinations" and self.slow_mode:
            return
        if cost > limit:
            raise CapExceeded(
                f"instance too large: {cap_name} cap is {limit}, instance needs {cost}"
            )


DEFAULT_CAPS = Caps()

_BOOL_FIELDS = {"slow_mode"}


def caps_from_env(environ=os.environ) -> Caps:
    """Build a :class:`Caps` from ``ORIENT9_CAPS`` (comma-separated k=v pairs)."""
    raw = environ.get("ORIENT9_CAPS", "").strip()
    if not raw:
        return DEFAULT_CAPS
    overrides = {}
    valid = {f.name for f in dataclasses.fields(Caps)}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise InvalidInput(f"ORIENT9_CAPS entry {item!r} is not of the form name=value")
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in valid:
            raise InvalidInput(f"ORIENT9_CAPS names unknown cap {name!r}")
        if name in _BOOL_FIELDS:
            overrides[name] = value.strip() not in ("0", "false", "False", "")
        else:
            try:
                overrides[name] = int(value)
            except ValueError as exc:
                raise InvalidInput(f"ORIENT9_CAPS value for {name!r} is not an integer") from exc
    return dataclasses.replace(DEFAULT_CAPS, **overrides)
