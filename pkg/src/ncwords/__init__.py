"""Non-crossing words, their cooperadic decomposition, and cumulants.

The package models words over finite alphabets with a two-rule reduction
to normal form, decomposes reduced pangrammatic words along canonical
surjections of their alphabet, restricts the decomposition to the
non-crossing quotient, and solves the resulting triangular systems to
compute word cumulants.  Specializing the word recovers free cumulants
(ascending word) and Boolean cumulants (peak word); direct partition-sum
implementations and a classical-cumulant solver are included for
cross-checking.  All arithmetic is exact rational.
"""

from .words import (
    Alphabet,
    EmptyRestrictionError,
    Letter,
    Word,
    apply_map,
    ascending_word,
    enumerate_nc_basis,
    enumerate_word_basis,
    is_noncrossing,
    is_noncrossing_seq,
    is_pangrammatic,
    is_reduced,
    parse_word,
    peak_word,
    random_basis_word,
    reduce_word,
    render_word,
    restrict,
)
from .surjections import (
    CanonicalSurjection,
    NonCrossingPartition,
    Order,
    canonicalize,
    compose,
    enumerate_canonical_surjections,
    enumerate_nc_partitions,
    graft_orders,
    is_noncrossing_partition,
    restrict_map,
)
from .cooperad import (
    CounitUndefinedError,
    CrossingWordError,
    DecompositionTerm,
    Lin,
    apply_surjection,
    check_coassociativity,
    counit,
    crossing_ideal_witness,
    decompose,
    decompose_along,
    decompose_noncrossing,
    format_term,
)
from .probability import (
    MissingMomentError,
    MomentFunctional,
    MomentTableError,
    Monomial,
    expect_word,
    first_occurrence_order,
    format_rational,
    load_moments,
    parse_rational,
    semicircular_family,
)
from .cumulants import (
    CumulantTable,
    boolean_cumulant,
    classical_cumulant,
    free_cumulant,
    free_cumulant_direct,
    moments_from_free_cumulants,
    word_cumulant,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CanonicalSurjection",
    "CounitUndefinedError",
    "CrossingWordError",
    "CumulantTable",
    "DecompositionTerm",
    "EmptyRestrictionError",
    "Letter",
    "Lin",
    "MissingMomentError",
    "MomentFunctional",
    "MomentTableError",
    "Monomial",
    "NonCrossingPartition",
    "Order",
    "Word",
    "apply_map",
    "apply_surjection",
    "ascending_word",
    "boolean_cumulant",
    "canonicalize",
    "check_coassociativity",
    "classical_cumulant",
    "compose",
    "counit",
    "crossing_ideal_witness",
    "decompose",
    "decompose_along",
    "decompose_noncrossing",
    "enumerate_canonical_surjections",
    "enumerate_nc_basis",
    "enumerate_nc_partitions",
    "enumerate_word_basis",
    "expect_word",
    "first_occurrence_order",
    "format_rational",
    "format_term",
    "free_cumulant",
    "free_cumulant_direct",
    "graft_orders",
    "is_noncrossing",
    "is_noncrossing_partition",
    "is_noncrossing_seq",
    "is_pangrammatic",
    "is_reduced",
    "load_moments",
    "moments_from_free_cumulants",
    "parse_rational",
    "parse_word",
    "peak_word",
    "random_basis_word",
    "reduce_word",
    "render_word",
    "restrict",
    "restrict_map",
    "semicircular_family",
    "word_cumulant",
]
