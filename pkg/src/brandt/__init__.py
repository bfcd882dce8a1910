"""Finite semigroup kernel, Brandt extensions, and their homomorphisms."""

from .core import (
    AlgebraError,
    BadIdentity,
    BadZero,
    BudgetExceeded,
    ConformanceError,
    FiniteSemigroup,
    FunctionSemigroup,
    HypothesisUnmet,
    IdempotentOrder,
    IllFormedTriple,
    MaximalSubgroup,
    Mismatch,
    NoIdentity,
    NonAssociative,
    NotHomomorphism,
    NotIdempotent,
    NoZero,
    ParseError,
    ShapeError,
    TooLarge,
    TrivialInput,
    build_semigroup,
    idempotent_order,
    maximal_subgroup,
    subsemigroup,
    with_adjoined_identity,
    with_adjoined_zero,
)
from .search import (
    congruence_closure,
    congruence_lattice,
    excludes_b2,
    find_matrix_unit_copy,
    is_congruence,
    is_congruence_free,
    iso_search,
    matrix_unit_exclusion,
    principal_congruence,
)
from .classify import (
    PropertyReport,
    classify,
    idempotents_central,
    is_inverse,
    is_primitive_inverse,
    is_regular,
)
from .construct import (
    BrandtExtension,
    bicyclic_with_zero,
    brandt_extension,
    double_extension_witness,
    function_brandt_extension,
    matrix_units,
    matrix_units_extension,
    orthogonal_sum,
    primitive_inverse_check_extension,
)
from .homs import (
    HomInvariants,
    Homomorphism,
    check_homomorphism,
    compose_homs,
    enumerate_homs,
    hom_invariants,
)
from .category import (
    BlockReport,
    MorphismTriple,
    NotClassifiable,
    check_block_separation,
    compose_and_check,
    compose_triples,
    enumerate_triples,
    identity_triple,
    image_decomposition,
    induced_hom,
    make_triple,
    recover_triple,
)
from .sgpfile import parse_sgp, read_extension, write_extension, write_sgp

__version__ = "0.1.0"
