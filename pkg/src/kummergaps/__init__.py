"""Weierstrass gaps, c-gaps and pure gaps at totally ramified places of Kummer covers."""

from .core import (
    CGapQuery,
    CurveError,
    KummerCurve,
    QueryError,
    RamificationClass,
    enumerate_pure_gaps,
    floor_div,
    gaps_at_place,
    genus,
    is_c_gap_by_def,
    is_c_gap_criterion,
    is_pure_gap,
    is_semigroup_member,
    iter_pure_gaps,
    restricted_floor_sum,
    rr_dim,
    validate_curve,
)

__version__ = "0.1.0"
