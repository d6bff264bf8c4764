"""Computational algebra for finite semirings: classification, closures,
complements, nilidempotent lifting, Peirce decomposition, isomorphism,
theorem checking and a small-order census, plus two symbolic models."""

__version__ = "0.1.0"

from .census import (
    ScanEntry,
    ScanReport,
    canonical_form,
    canonical_relabel,
    enumerate_semirings,
    scan,
)
from .constructors import (
    boolean_semiring,
    direct_product,
    from_preset,
    matrix_semiring,
    poly_quotient,
    triangular_semiring,
    zmod,
)
from .core import (
    AxiomReport,
    AxiomViolation,
    ClassReport,
    DomainError,
    ElementSet,
    FiniteSemiring,
    InternalCheckError,
    InvalidSemiringError,
    MalformedTableError,
    SemiringError,
    additive_inverse,
    element_classes,
    is_boolean,
    is_commutative,
    is_nilpotent,
    make_semiring,
    nilpotency_index,
    power,
    reindex,
    scalar_repeat,
    validate,
)
from .fileformat import ParseError, parse_semiring_file, serialize_semiring
from .ops import (
    ComplementWitness,
    GenerationCertificate,
    LiftTrace,
    PeirceResult,
    TheoremReport,
    add_closure,
    check_theorem,
    generation_certificate,
    invert_unipotent,
    isomorphic,
    lift_nilidempotent,
    mult_closure,
    nilorthogonal_complement,
    nilorthogonal_complements,
    orthogonal_complement,
    orthogonal_decompositions,
    peirce_decompose,
)
from .presentation import PresentationResult, presentation
from .symbolic import (
    NatModel,
    SymbolicNat,
    SymbolicTriple,
    TripleModel,
    nat_model,
    nn_triple_model,
)

__all__ = [name for name in dir() if not name.startswith("_")]
