"""Exact multiplet, induction, and Clifford matrix computations.

Weights are tuples/lists of integers in fundamental-weight coordinates of
the ambient root system. Arguments and keys suffixed _x2 carry doubled
coordinates so that half-integral spinor shifts stay integral.
"""

from ._core import (
    Embedding,
    character,
    classify_clifford,
    clifford_commutant_dims,
    root_system,
    tensor_decompose,
    thom_report,
    twisted_report,
    weyl_dimension,
)

__all__ = [
    "Embedding",
    "character",
    "classify_clifford",
    "clifford_commutant_dims",
    "root_system",
    "tensor_decompose",
    "thom_report",
    "twisted_report",
    "weyl_dimension",
]
