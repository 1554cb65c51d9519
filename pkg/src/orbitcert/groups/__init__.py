"""Concrete matrix groups over prime fields and their orbit-bound checks."""

from .engine import (
    BoundVerdict,
    MatrixGroupInstance,
    OrbitReport,
    PrimeField,
    admissibility,
    backend_name,
    close_group,
    derived_subgroup,
    det_mod,
    generate_corpus,
    mat_inv,
    orbits,
    random_instances,
    verify_orbit_bound,
)

__all__ = [
    "BoundVerdict",
    "MatrixGroupInstance",
    "OrbitReport",
    "PrimeField",
    "admissibility",
    "backend_name",
    "close_group",
    "derived_subgroup",
    "det_mod",
    "generate_corpus",
    "mat_inv",
    "orbits",
    "random_instances",
    "verify_orbit_bound",
]
