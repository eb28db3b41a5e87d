"""Exact capacities, cores, lower envelopes and the capacity monad.

Values cross the boundary as ``fractions.Fraction``; subsets as
``frozenset`` of point indices.
"""

from capax._capax import (
    Capacity,
    CapacityError,
    ClassifyError,
    ClassReport,
    CredalError,
    MonadError,
    ParseError,
    SearchConfigError,
    bondareva_value,
    check_naturality,
    check_retraction,
    classify,
    core_envelope,
    dirac,
    is_balanced,
    is_convex,
    is_exact,
    is_totally_balanced,
    lift_unit,
    lower_envelope,
    min_core_value,
    mix,
    monad_mul,
    pushforward,
    random_monotone,
    search,
    unanimity,
    upper_envelope,
)

__version__ = "0.1.0"

__all__ = [
    "Capacity",
    "CapacityError",
    "ClassifyError",
    "ClassReport",
    "CredalError",
    "MonadError",
    "ParseError",
    "SearchConfigError",
    "bondareva_value",
    "check_naturality",
    "check_retraction",
    "classify",
    "core_envelope",
    "dirac",
    "is_balanced",
    "is_convex",
    "is_exact",
    "is_totally_balanced",
    "lift_unit",
    "lower_envelope",
    "min_core_value",
    "mix",
    "monad_mul",
    "pushforward",
    "random_monotone",
    "search",
    "unanimity",
    "upper_envelope",
]
