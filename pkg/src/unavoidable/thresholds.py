"""Registry of the named threshold evaluators for the CLI.

All values are exact arbitrary-precision integers.  f_main composes
through the configurable external spanning-path bound and reports
"unbounded" while that hook is unset.
"""

from __future__ import annotations

from .ladder_build import f_bridges, ramsey_upper, ramsey_upper2
from .ladder_clean import f_crossrungs, f_dist, f_manycross, f_messyfinite, f_spans
from .pipeline import f_clean_from_path, f_main
from .short_path import f_shortp

__all__ = ["REGISTRY", "evaluate"]

REGISTRY = {
    "f_shortp": (f_shortp, 2),
    "f_bridges": (f_bridges, 1),
    "f_dist": (f_dist, 2),
    "f_crossrungs": (f_crossrungs, 2),
    "f_spans": (f_spans, 2),
    "f_manycross": (f_manycross, 2),
    "f_messyfinite": (f_messyfinite, 1),
    "ramsey_upper": (ramsey_upper, 1),
    "ramsey_upper2": (ramsey_upper2, 2),
    "f_clean_from_path": (f_clean_from_path, 1),
    "f_main": (f_main, 1),
}


def evaluate(name: str, args: list[int]):
    """Evaluate a registered threshold; returns an int or None (unbounded)."""
    if name not in REGISTRY:
        raise KeyError(f"unknown threshold {name!r}; known: {', '.join(sorted(REGISTRY))}")
    fn, arity = REGISTRY[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} argument(s), got {len(args)}")
    return fn(*args)
