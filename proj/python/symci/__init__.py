"""Exact pipelines over prime fields: point counts of symmetric systems,
factorization censuses of linear families, and average value sets of
coefficient windows.

Every exact rational crosses the boundary as a string like "17/5"; bound
checks arrive as plain dicts with a boolean "pass" and a "vacuous" flag.
"""

from symci._core import (
    CoreError,
    Field,
    average_value_set_direct,
    average_value_set_via_chi,
    chi,
    count_points,
    factorization_pattern,
    field,
    hypothesis_check,
    mu,
    pattern_census,
    value_set_cardinality,
    verify_count_bounds,
    verify_pattern_bounds,
    verify_value_set_bounds,
)

__all__ = [
    "CoreError",
    "Field",
    "average_value_set_direct",
    "average_value_set_via_chi",
    "chi",
    "count_points",
    "factorization_pattern",
    "field",
    "hypothesis_check",
    "mu",
    "pattern_census",
    "value_set_cardinality",
    "verify_count_bounds",
    "verify_pattern_bounds",
    "verify_value_set_bounds",
]
