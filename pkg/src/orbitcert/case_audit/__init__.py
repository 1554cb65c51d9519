"""Certification of the simple-group case analysis: coprime abelian-witness
pairs for every group in a parameter window, plus recomputation of every
printed subcase figure."""

from .grid import audit_grid, audit_published_subcases
from .published import (
    REGISTRY,
    FactorizationMismatch,
    OutDiscrepancy,
    PrintedValue,
    PublishedSubcase,
    lookup_subcases,
    out_order_discrepancies,
    subcase,
    verify_printed_factorizations,
)
from .witnesses import (
    CaseCertificate,
    DesignatedValue,
    Witness,
    check_product_bound,
    designated_values,
    find_witnesses,
    product_bound_sides,
)

__all__ = [
    "REGISTRY",
    "CaseCertificate",
    "DesignatedValue",
    "FactorizationMismatch",
    "OutDiscrepancy",
    "PrintedValue",
    "PublishedSubcase",
    "Witness",
    "audit_grid",
    "audit_published_subcases",
    "check_product_bound",
    "designated_values",
    "find_witnesses",
    "lookup_subcases",
    "out_order_discrepancies",
    "product_bound_sides",
    "subcase",
    "verify_printed_factorizations",
]
