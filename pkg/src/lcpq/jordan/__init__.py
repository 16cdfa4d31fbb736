"""Euclidean Jordan algebra layer: algebras, transforms, symmetric-cone LCPs.

Works in floating point with explicit tolerances, unlike the exact rational
matrix core.  Two algebras are provided: R^n with the componentwise product
and the nonnegative orthant, and real symmetric m x m matrices with the
symmetrised product and the positive semidefinite cone.
"""

from .algebra import (
    Algebra,
    JordanElement,
    JordanFrame,
    element_from_coords,
    element_from_eigenvalues,
    identity_element,
    in_cone,
    in_interior,
    inverse_element,
    jordan_product,
    random_cone_element,
    random_element,
    random_frame,
    rn_algebra,
    spectral_decomposition,
    sqrt_element,
    standard_frame,
    sym_algebra,
    trace_inner_product,
)
from .transforms import (
    LinearTransform,
    bracket,
    conjugate_transform,
    hat_transform,
    hat_vector,
    peirce_decompose,
    quadratic_representation,
    r_ab_transform,
    rank_one,
)
from .sclcp import (
    EmbedOutcome,
    ScLcpSolutionCheck,
    classify_rank_one_q,
    embed_solve,
    sample_positivity_violation,
    strict_copositivity_sample,
    verify_sc_solution,
)

__all__ = [name for name in dir() if not name.startswith("_")]
