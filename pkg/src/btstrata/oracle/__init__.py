"""Finite-geometry point counting used to cross-check the Lefschetz predictions."""

from .field import GF, get_field, prime_power
from .lagrangian import (
    SubspaceBasis,
    echelon,
    enumerate_lagrangians,
    intersect,
    intersection_profile,
    is_lagrangian,
    oracle_counts,
    stratum_index,
    tau,
)

__all__ = [
    "GF", "get_field", "prime_power", "SubspaceBasis", "echelon", "enumerate_lagrangians",
    "intersect", "intersection_profile", "is_lagrangian", "oracle_counts", "stratum_index", "tau",
]
