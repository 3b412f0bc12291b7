"""Exact Schur function arithmetic and log-concavity checks."""

from ._schurlc import (
    SchurlcError,
    check_diagonal,
    check_family,
    check_theorem1,
    decompose_irr,
    dominance_leq,
    family_term,
    is_character,
    laurent_to_string,
    lr_coefficient,
    lr_tableaux,
    quantum_binomial,
    quantum_int,
    schur_product,
    transpose,
    verify_injection,
)

__all__ = [
    "SchurlcError",
    "check_diagonal",
    "check_family",
    "check_theorem1",
    "decompose_irr",
    "dominance_leq",
    "family_term",
    "is_character",
    "laurent_to_string",
    "lr_coefficient",
    "lr_tableaux",
    "quantum_binomial",
    "quantum_int",
    "schur_product",
    "transpose",
    "verify_injection",
]
