"""Iterative filtering decomposition (bindings to the fif C++ library)."""

from ._fif import (
    FifError,
    apply,
    decompose,
    eigenvalues,
    filter_weights,
    mask_length,
    n0_from_rhs,
)

__all__ = [
    "FifError",
    "apply",
    "decompose",
    "eigenvalues",
    "filter_weights",
    "mask_length",
    "n0_from_rhs",
]
