"""Finite lattices, lattice complements, signed lattice measures and their Hahn decomposition."""

from .complement import (
    AxiomReport,
    ComplementMap,
    check_axioms,
    require_paper_profile,
    set_complement,
)
from .errors import (
    CycleDetected,
    DomainMismatch,
    GroundSetTooLarge,
    InvalidMeasure,
    LatticeHahnError,
    MissingBounds,
    NotALattice,
    NotAMember,
    ParseError,
    PreconditionViolated,
    ReferentialError,
    SizeTooLargeForExhaustive,
)
from .hahn import (
    HahnDecomposition,
    NoDecomposition,
    PolarityCertificate,
    TheoremViolation,
    classify_polarity,
    extract_positive,
    hahn_decompose,
    oracle_decompose,
    union_positive,
)
from .lattice import (
    AxiomVerdict,
    FiniteLattice,
    LatticeMap,
    build_from_covers,
    build_powerset,
    check_distributive,
    check_lattice_laws,
    is_frame,
    is_homomorphism,
)
from .measures import (
    SignedMeasure,
    additive_measure,
    difference_measure,
    validate_measure,
    validate_signed_measure,
)
from .modelio import Model, load_model
from .search import Finding, SearchSpec, enumerate_lattices, search_models, stress_theorem
from .sigma import SigmaAlgebra, generate, is_closed

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "AxiomVerdict",
    "ComplementMap",
    "CycleDetected",
    "DomainMismatch",
    "Finding",
    "FiniteLattice",
    "GroundSetTooLarge",
    "HahnDecomposition",
    "InvalidMeasure",
    "LatticeHahnError",
    "LatticeMap",
    "MissingBounds",
    "Model",
    "NoDecomposition",
    "NotALattice",
    "NotAMember",
    "ParseError",
    "PolarityCertificate",
    "PreconditionViolated",
    "ReferentialError",
    "SearchSpec",
    "SigmaAlgebra",
    "SignedMeasure",
    "SizeTooLargeForExhaustive",
    "TheoremViolation",
    "additive_measure",
    "build_from_covers",
    "build_powerset",
    "check_axioms",
    "check_distributive",
    "check_lattice_laws",
    "classify_polarity",
    "difference_measure",
    "enumerate_lattices",
    "extract_positive",
    "generate",
    "hahn_decompose",
    "is_closed",
    "is_frame",
    "is_homomorphism",
    "load_model",
    "oracle_decompose",
    "require_paper_profile",
    "search_models",
    "set_complement",
    "stress_theorem",
    "union_positive",
    "validate_measure",
    "validate_signed_measure",
]
