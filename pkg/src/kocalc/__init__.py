"""Exact computations with real Clifford algebras and finite real spectral triples.

Everything is computed over the Gaussian rationals — numerators and
denominators are exact integers, equality checks are exact, and no
floating point appears anywhere in the library.
"""

from .clifford import (
    AlgebraClass,
    CliffordRep,
    build_gammas,
    chirality,
    classify_algebra,
    find_real_structure,
    signature,
    theta_square_sign,
    volume_element,
)
from .errors import (
    AdditivityViolation,
    DimensionMismatch,
    IncompleteSigns,
    IndefiniteSign,
    InvalidComponent,
    InvalidTriple,
    KocalcError,
    NoChirality,
    NoHermitianGenerator,
    NoTableMatch,
    NotInvolutive,
    NotSignInvolutive,
    OddDimensionUnsupported,
    ParseError,
    RealStructureNotFound,
    RestrictionUndefined,
    UnsupportedVersion,
)
from .linalg import (
    Antiunitary,
    ExactMatrix,
    GaussianRational,
    kernel_dim,
    rank,
    real_fixed_dim,
    real_fixed_dim_constrained,
)
from .products import (
    Incompatible,
    ProductMode,
    ProductVerification,
    predicted_signs,
    product_triple,
    verify_product,
)
from .signcalc import (
    MATRIX_REPRESENTATIVES,
    AgreementRow,
    CompatibilityEntry,
    ScenarioCase,
    ScenarioReport,
    additivity_scan,
    case_annotations,
    enumerate_compatible,
    matrix_calculus_agreement,
    scenario_check,
)
from .triple_io import (
    SCHEMA_VERSION,
    TripleDocument,
    parse_document,
    parse_triple,
    serialize_triple,
)
from .triples import (
    EPSILON_TABLE,
    AxiomCheck,
    FiniteSpectralTriple,
    SignTriple,
    ValidationReport,
    canonical_triple,
    extract_signs,
    ko_from_signs,
    restrict_majorana_weyl,
    twist_real_structure,
    validate_triple,
)

__version__ = "0.1.0"

__all__ = [
    "AdditivityViolation",
    "AgreementRow",
    "AlgebraClass",
    "Antiunitary",
    "AxiomCheck",
    "CliffordRep",
    "CompatibilityEntry",
    "DimensionMismatch",
    "EPSILON_TABLE",
    "ExactMatrix",
    "FiniteSpectralTriple",
    "GaussianRational",
    "Incompatible",
    "IncompleteSigns",
    "IndefiniteSign",
    "InvalidComponent",
    "InvalidTriple",
    "KocalcError",
    "MATRIX_REPRESENTATIVES",
    "NoChirality",
    "NoHermitianGenerator",
    "NoTableMatch",
    "NotInvolutive",
    "NotSignInvolutive",
    "OddDimensionUnsupported",
    "ParseError",
    "ProductMode",
    "ProductVerification",
    "RealStructureNotFound",
    "RestrictionUndefined",
    "SCHEMA_VERSION",
    "ScenarioCase",
    "ScenarioReport",
    "SignTriple",
    "TripleDocument",
    "UnsupportedVersion",
    "ValidationReport",
    "additivity_scan",
    "build_gammas",
    "canonical_triple",
    "case_annotations",
    "chirality",
    "classify_algebra",
    "enumerate_compatible",
    "extract_signs",
    "find_real_structure",
    "kernel_dim",
    "ko_from_signs",
    "matrix_calculus_agreement",
    "parse_document",
    "parse_triple",
    "predicted_signs",
    "product_triple",
    "rank",
    "real_fixed_dim",
    "real_fixed_dim_constrained",
    "restrict_majorana_weyl",
    "scenario_check",
    "serialize_triple",
    "signature",
    "theta_square_sign",
    "twist_real_structure",
    "validate_triple",
    "verify_product",
    "volume_element",
    "__version__",
]
