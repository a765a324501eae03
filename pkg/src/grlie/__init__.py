"""Graded components of finitely presented Lie algebras over the integers."""

from .analysis import (
    Comparison,
    ExactnessReport,
    HilbertTable,
    NonIntegralRank,
    compare_presentations,
    exactness_check,
    hilbert_table,
    is_central,
    witt_ranks,
)
from .expr import ExpressionSyntaxError, UnknownGenerator, parse_lie_expr
from .families import (
    bezrukavnikov,
    drinfeld_kohno,
    free_lie,
    ihara_sphere,
    kv_sphere,
    surface_group,
)
from .intlinalg import (
    AbelianInvariants,
    IntegerLattice,
    IntegerMatrix,
    cokernel_invariants,
    hnf,
    lattice_contains,
    lattice_insert,
    snf_invariants,
)
from .lyndon import (
    AlphabetMismatch,
    InhomogeneousExpression,
    LieElement,
    NotLieElement,
    TensorPoly,
    WeightedAlphabet,
    bracket,
    is_lyndon,
    lyndon_words,
    rho_expand,
    standard_factorization,
    to_lyndon_coords,
)
from .presentation import (
    CacheDepthError,
    FamilyParams,
    GradedPresentation,
    IdealCache,
    InhomogeneousRelation,
    element_in_ideal,
    ideal_component,
    quotient_component,
    validate,
)

__version__ = "0.1.0"
