"""Structural and homological analysis of monomial bound quiver algebras."""
from .algebra import (
    Admissibility,
    MonomialAlgebra,
    enumerate_nonzero_paths,
    is_zero,
    normalize_relations,
    validate_admissibility,
)
from .errors import (
    AuditError,
    CompositionError,
    DisconnectedQuiverError,
    GenerationBudgetExhausted,
    HypothesisError,
    InvalidPathError,
    InvalidRelationError,
    NotAdmissibleError,
    ParseError,
    QuiverError,
)
from .quiver import (
    Arrow,
    Path,
    Quiver,
    arrow_stars,
    compose,
    cyclic_quiver_cycle,
    divides,
    occurrences,
    reverse,
    trivial_path,
)

__version__ = "0.1.0"
