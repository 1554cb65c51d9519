"""Simple-group catalog: orders, outer-automorphism orders, enumeration."""

from .catalog import (
    CUBED_Q_FAMILIES,
    FAMILIES,
    LIE_FAMILIES,
    MIN_RANK,
    NON_SIMPLE_POINTS,
    RANKED_FAMILIES,
    SQUARED_Q_FAMILIES,
    GroupFacts,
    GroupSpec,
    enumerate_specs,
    group_facts,
    group_order,
    group_order_int,
    out_data,
    out_order,
    prime_powers_up_to,
)
from .static_tables import SPORADIC, TITS

__all__ = [
    "CUBED_Q_FAMILIES",
    "FAMILIES",
    "LIE_FAMILIES",
    "MIN_RANK",
    "NON_SIMPLE_POINTS",
    "RANKED_FAMILIES",
    "SPORADIC",
    "SQUARED_Q_FAMILIES",
    "TITS",
    "GroupFacts",
    "GroupSpec",
    "enumerate_specs",
    "group_facts",
    "group_order",
    "group_order_int",
    "out_data",
    "out_order",
    "prime_powers_up_to",
]
