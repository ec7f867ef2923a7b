"""Exact-arithmetic combinatorics of affine Kac-Moody highest weight theory:
root data, the affine order, linkage classes at and away from the critical
level, Kostant partition numbers and truncated characters.
"""

from .cartan import (
    AffineRoot,
    CartanType,
    RootSystem,
    build_root_system,
    imaginary_root,
    positive_affine_roots,
    real_root,
    root_system,
    simple_affine_roots,
)
from .characters import (
    CharacterTable,
    DecompositionMatrix,
    decomposition_matrix,
    partition,
    projective_multiplicities,
    q_multiplicities,
    verma_character,
    weyl_kac_character,
)
from .errors import DomainError
from .linkage import (
    FiberSpec,
    IntegralityData,
    alpha_down,
    integrality,
    kk_predecessors,
    linkage_class,
    weyl_group_generators,
)
from .orders import Box, enumerate_box, hasse, height, leq
from .weights import (
    Weight,
    bilinear,
    delta,
    dot,
    is_critical,
    level_of,
    pairing,
    reflect,
    rho,
    root_weight,
    shift_delta,
    zero_weight,
)

__all__ = [
    "AffineRoot", "Box", "CartanType", "CharacterTable", "DecompositionMatrix",
    "DomainError", "FiberSpec", "IntegralityData", "RootSystem", "Weight",
    "alpha_down", "bilinear", "build_root_system", "decomposition_matrix",
    "delta", "dot", "enumerate_box", "hasse", "height", "imaginary_root",
    "integrality", "is_critical", "kk_predecessors", "leq", "level_of",
    "linkage_class", "pairing", "partition", "positive_affine_roots",
    "projective_multiplicities", "q_multiplicities", "real_root", "reflect",
    "rho", "root_system", "root_weight", "shift_delta", "simple_affine_roots",
    "verma_character", "weyl_group_generators", "weyl_kac_character",
    "zero_weight",
]
