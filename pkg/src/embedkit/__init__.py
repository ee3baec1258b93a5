"""Exact tools for affine embeddings of homogeneous spaces.

Everything is integer or rational arithmetic; no floats enter any
computation or any output. The heavy lifting lives in the submodules,
this package root just re-exports the stable surface.
"""

from .errors import (
    EmbedkitError,
    InvalidInputError,
    NotAHeightAlgebraError,
    OrbitTooLargeError,
    RepresentationTooLargeError,
    UnsupportedRankError,
)
from .lattice_cone import (
    AffineSemigroup,
    PolyCone,
    cone_from_constraints,
    cone_from_generators,
    cone_lattice_monoid_generators,
    generated_group,
    hilbert_basis_pointed,
    is_saturated,
    semigroup_member,
)
from .monoid import (
    PerfectClosureResult,
    NormalMonoidVerdict,
    induced_dominant_semigroup,
    normal_monoid_check,
    perfect_closure,
)
from .parabolic import (
    ParabolicData,
    ce_finite_g_orbits,
    ce_orbit_subdiagrams,
    ce_smooth,
    sigma_cone,
)
from .rep_theory import (
    TensorDecomposition,
    WeightMultiplicityTable,
    tensor_decompose,
    weight_multiplicities,
    weyl_dim,
    xi_support,
)
from .root_system import GroupInfo, GroupType, group_info
from .sl2 import (
    Height,
    MonomialExponent,
    height_algebra_basis,
    height_from_monomials,
    orbit_structure,
)
from .svariety import (
    HVReport,
    SVarietyData,
    SVarietyReport,
    analyze_svariety,
    hv_report,
    is_type_hv,
)
from .toric import ToricReport, analyze_toric

__version__ = "0.1.0"

__all__ = [
    "AffineSemigroup",
    "EmbedkitError",
    "GroupInfo",
    "GroupType",
    "HVReport",
    "Height",
    "InvalidInputError",
    "MonomialExponent",
    "NormalMonoidVerdict",
    "NotAHeightAlgebraError",
    "OrbitTooLargeError",
    "ParabolicData",
    "PerfectClosureResult",
    "PolyCone",
    "RepresentationTooLargeError",
    "SVarietyData",
    "SVarietyReport",
    "TensorDecomposition",
    "ToricReport",
    "UnsupportedRankError",
    "WeightMultiplicityTable",
    "analyze_svariety",
    "analyze_toric",
    "ce_finite_g_orbits",
    "ce_orbit_subdiagrams",
    "ce_smooth",
    "cone_from_constraints",
    "cone_from_generators",
    "cone_lattice_monoid_generators",
    "generated_group",
    "group_info",
    "height_algebra_basis",
    "height_from_monomials",
    "hilbert_basis_pointed",
    "hv_report",
    "induced_dominant_semigroup",
    "is_saturated",
    "is_type_hv",
    "normal_monoid_check",
    "orbit_structure",
    "perfect_closure",
    "semigroup_member",
    "sigma_cone",
    "tensor_decompose",
    "weight_multiplicities",
    "weyl_dim",
    "xi_support",
    "__version__",
]
