"""hodgelef: exact-arithmetic Hodge-Lefschetz algebras and morphic filtrations.

The package models finite-dimensional bigraded algebras carrying a Lefschetz
operator, its inner-product adjoint, a real structure, and a filtration by
"algebraic" subspaces.  Everything is computed over Q(i) with exact
rationals, so signatures, ranks, and all operator identities are bit-exact.
"""

from .exactnum import (
    GMatrix,
    GaussRational,
    Rational,
    SignatureTriple,
    format_scalar,
    hermitian_signature,
    mat_kernel_rank,
    parse_scalar,
)
from .graded import BigradedVector, HodgeFrame, build_frame
from .lefschetz import LefschetzAlgebra, PrimitiveDecomposition, ValidationReport
from .hodgelefschetz import (
    HodgeRiemannReport,
    IndexReport,
    hodge_riemann_form,
    middle_signature,
    verify_hodge_riemann,
    verify_index_theorem,
)
from .morphic import (
    ConjectureReport,
    MorphicFiltration,
    MorphicIndexReport,
    SubspaceFamily,
    assemble_subfamily,
    conjecture_report,
    morphic_hodge_index,
    morphic_hodge_numbers,
    morphic_signature,
    validate_filtration,
)
from .instances import PrimitiveDiamond, builtin, free_algebra, random_instance

__all__ = [
    "BigradedVector",
    "ConjectureReport",
    "GMatrix",
    "GaussRational",
    "HodgeFrame",
    "HodgeRiemannReport",
    "IndexReport",
    "LefschetzAlgebra",
    "MorphicFiltration",
    "MorphicIndexReport",
    "PrimitiveDecomposition",
    "PrimitiveDiamond",
    "Rational",
    "SignatureTriple",
    "SubspaceFamily",
    "ValidationReport",
    "assemble_subfamily",
    "build_frame",
    "builtin",
    "conjecture_report",
    "format_scalar",
    "free_algebra",
    "hermitian_signature",
    "hodge_riemann_form",
    "mat_kernel_rank",
    "middle_signature",
    "morphic_hodge_index",
    "morphic_hodge_numbers",
    "morphic_signature",
    "parse_scalar",
    "random_instance",
    "validate_filtration",
    "verify_hodge_riemann",
    "verify_index_theorem",
]

__version__ = "0.1.0"
