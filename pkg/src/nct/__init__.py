"""Normal covering numbers of symmetric and alternating groups.

Two-sided bounds for gamma(S_n) and gamma(A_n) from explicit covering
families and exact set-cover lower bounds, plus exact solvers for
symmetric coprime-sum-free and coprime-cube-free sets.
"""

from ._jit import HAVE_NUMBA
from .addcomb import (
    ExtremalProblem,
    ExtremalResult,
    count_additive_triples,
    cube_set,
    is_free,
    known_construction,
    max_extremal,
    popular_sums,
    sumset,
)
from .arith import ArithProfile, arith_profile, repunit_forms
from .bounds import (
    CoverModel,
    GammaBracket,
    VerificationFailure,
    build_model,
    closed_form_gamma,
    gamma_bracket,
    limits_row,
    min_cover,
)
from .catalog import CatalogEntry, primitive_catalog
from .coverage import (
    SubgroupClass,
    class_covers,
    covered_by_some_imprimitive,
    covers_affine,
    covers_imprimitive_exact,
    covers_intransitive,
    imprimitive_shortcut_small_k,
)
from .cycletypes import (
    CycleType,
    count_cycle_types,
    enumerate_cycle_types,
    invariant_set_sizes,
)
from .exceptional import classify_degenerate_cubes, classify_restricted_triples
from .families import (
    CoverageReport,
    CoveringFamily,
    FamilyNotApplicable,
    build_family,
    family_size_formula,
    verify_family,
)
from .setcover import InfeasibleCover, min_set_cover
from .symmetric import SymmetricSubset

__version__ = "0.1.0"

__all__ = [
    "HAVE_NUMBA",
    "ArithProfile",
    "CatalogEntry",
    "CoverModel",
    "CoverageReport",
    "CoveringFamily",
    "CycleType",
    "ExtremalProblem",
    "ExtremalResult",
    "FamilyNotApplicable",
    "GammaBracket",
    "InfeasibleCover",
    "SubgroupClass",
    "SymmetricSubset",
    "VerificationFailure",
    "arith_profile",
    "build_family",
    "build_model",
    "class_covers",
    "classify_degenerate_cubes",
    "classify_restricted_triples",
    "closed_form_gamma",
    "count_additive_triples",
    "count_cycle_types",
    "covered_by_some_imprimitive",
    "covers_affine",
    "covers_imprimitive_exact",
    "covers_intransitive",
    "cube_set",
    "enumerate_cycle_types",
    "family_size_formula",
    "gamma_bracket",
    "imprimitive_shortcut_small_k",
    "invariant_set_sizes",
    "is_free",
    "known_construction",
    "limits_row",
    "max_extremal",
    "min_cover",
    "min_set_cover",
    "popular_sums",
    "primitive_catalog",
    "repunit_forms",
    "sumset",
    "verify_family",
]
