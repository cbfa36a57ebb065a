"""Abelian Dijkgraaf-Witten invariants and the GNS construction, exact arithmetic.

Rationals come back as fractions.Fraction. Links and surfaces are given as
JSON text or as the equivalent Python dicts/lists.
"""

from ._core import (
    ContractError,
    DimensionError,
    Error,
    GuardError,
    InconsistentError,
    ParseError,
    count_solutions,
    eta,
    group_order,
    invariant_closed,
    invariant_s3,
    pairing_matrix,
    parse_group,
    reduce,
    smith_normal_form,
    space_dimension,
)

__all__ = [
    "ContractError",
    "DimensionError",
    "Error",
    "GuardError",
    "InconsistentError",
    "ParseError",
    "count_solutions",
    "eta",
    "group_order",
    "invariant_closed",
    "invariant_s3",
    "pairing_matrix",
    "parse_group",
    "reduce",
    "smith_normal_form",
    "space_dimension",
]
