"""Grothendieck and Chow groups of affine simplicial toric varieties."""

__version__ = "0.1.0"

from .linalg import (
    AbelianGroup,
    IntMatrix,
    SmithDecomposition,
    cokernel,
    complete_to_unimodular,
    determinant,
    extended_gcd,
    kernel_basis,
    primitive,
    smith_normal_form,
)
from .cones import (
    Face,
    SimplicialCone,
    UnimodularTransform,
    contains,
    delta,
    dual_cone,
    dual_transform,
    faces,
    make_cone,
    normalize_2d,
    normalize_3d,
)
from .chow import ChowReport, chow_group, chow_relation_matrix, class_group, divisor_map
from .g0 import (
    ConjectureReport,
    G0Report,
    conjecture_check,
    extension_candidates,
    g0_dim2,
    g0_dim3,
    random_simplicial_cone,
)
