"""so(r,s), the spin lift and the holonomy algebra constructors."""

from .families import (
    SimParams,
    form_stabilizer,
    neutral_algebra,
    neutral_element,
    quaternionic_pair,
    sim_algebra,
    sim_element,
    standard_complex_structure,
    unitary_family,
    witt_blocks,
)
from .so import LieAlgebraRep, SoElement, derived_algebra, lambda_star, lie_closure_check, pairs, so_basis

__all__ = [
    "SoElement",
    "LieAlgebraRep",
    "SimParams",
    "so_basis",
    "lambda_star",
    "derived_algebra",
    "lie_closure_check",
    "unitary_family",
    "form_stabilizer",
    "sim_algebra",
    "sim_element",
    "neutral_algebra",
    "neutral_element",
    "witt_blocks",
    "standard_complex_structure",
    "quaternionic_pair",
    "pairs",
]
