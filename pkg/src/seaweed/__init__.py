"""Exact arithmetic for type-A seaweed Lie algebras.

Construct seaweed subalgebras of sl(n) from pairs of compositions, read their
index off the meander's path/cycle count, and, whenever the index is one,
synthesize a contact one-form together with a certificate that anyone can
re-verify by a single determinant. All arithmetic is exact rational.
"""
from ._kernels import BACKEND
from .contact import (
    ContactCertificate,
    NotIndexOneError,
    OneForm,
    SynthesisError,
    TheoremViolationError,
    WrongCaseError,
    case1_contact,
    case2_contact,
    frobenius_plus_contact_combine,
    regular_form_from_meander,
    synthesize_contact,
    verify_certificate,
)
from .exact import RatMatrix, det, kernel_basis, rank
from .liealg import (
    CoeffForm,
    ContactWitness,
    LieAlgebra,
    ParityError,
    ProbablyNotContact,
    bhat_det,
    bracket,
    contact_search_randomized,
    index_randomized,
    jacobi_check,
    kirillov_matrix,
    wedge_volume_coefficient,
)
from .meander import (
    Component,
    ComponentReport,
    DirectedMeander,
    Meander,
    all_parts_even,
    build_meander,
    components,
    index,
    index_gcd_2part,
    index_gcd_3part,
    meander_from_json,
    orient,
    render,
)
from .standard_form import (
    BasisLabel,
    Composition,
    CustomDiagonal,
    DiagDiff,
    MatrixUnit,
    SeaweedSpec,
    SpanError,
    admissible,
    compositions,
    dual_matrix_to_coeffs,
    materialize,
    seaweed_dim,
    spec_pairs,
    standard_basis,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # compositions and specs
    "Composition",
    "SeaweedSpec",
    "SpanError",
    "BasisLabel",
    "MatrixUnit",
    "DiagDiff",
    "CustomDiagonal",
    "admissible",
    "standard_basis",
    "seaweed_dim",
    "materialize",
    "dual_matrix_to_coeffs",
    "compositions",
    "spec_pairs",
    # exact linear algebra
    "RatMatrix",
    "det",
    "rank",
    "kernel_basis",
    # Lie algebras
    "LieAlgebra",
    "CoeffForm",
    "ParityError",
    "ContactWitness",
    "ProbablyNotContact",
    "bracket",
    "jacobi_check",
    "kirillov_matrix",
    "index_randomized",
    "bhat_det",
    "wedge_volume_coefficient",
    "contact_search_randomized",
    # meanders
    "Meander",
    "DirectedMeander",
    "Component",
    "ComponentReport",
    "build_meander",
    "orient",
    "components",
    "index",
    "index_gcd_3part",
    "index_gcd_2part",
    "all_parts_even",
    "render",
    "meander_from_json",
    # contact synthesis
    "OneForm",
    "ContactCertificate",
    "NotIndexOneError",
    "WrongCaseError",
    "SynthesisError",
    "TheoremViolationError",
    "regular_form_from_meander",
    "case1_contact",
    "case2_contact",
    "synthesize_contact",
    "verify_certificate",
    "frobenius_plus_contact_combine",
]
