"""Priority-queue transduction of permutation pattern classes.

What a priority queue can do to a permutation is captured by the allowable-pair
relation: (sigma, tau) is allowable when some insert/remove schedule fed sigma
emits tau.  This package decides allowability three independent ways, builds
the constraint poset of an output and enumerates its linear extensions (the
possible inputs), decides membership in the transduced classes C*A and A*C,
searches for their minimal bases, and ships verification suites that check all
of it exhaustively at small lengths.
"""
from .classes import (
    BasisReport,
    FamilyReport,
    PatternClass,
    VerificationError,
    avoidance_class,
    basis_of_ca,
    ca_members_by_length,
    chain_test_member,
    class_member,
    family_2431,
    in_ac,
    in_ca,
    in_ca_oracle,
    is_weak_closed,
    verify_family_member,
    witness_patterns,
)
from .machine import (
    FORBIDDEN_PAIRS,
    PQState,
    all_outputs,
    initial_state,
    is_allowable_forbidden,
    is_allowable_sim,
    pair_contains,
    step_insert,
    step_remove_min,
)
from .permutations import (
    InflationSkeleton,
    Permutation,
    all_permutations,
    avoids_all,
    contains,
    delete_point,
    direct_sum,
    inflation_members,
    inversions,
    is_permutation,
    pattern_of,
    restrict_to_values,
    skew_sum,
    weak_covers_up,
)
from .poset import (
    TauPoset,
    build_poset,
    build_poset_recursive,
    exists_extension_avoiding,
    has_alpha_chain,
    is_linear_extension,
    linear_extensions,
)
from .textform import (
    ParseError,
    format_class,
    format_permutation,
    parse_class,
    parse_permutation,
)

__version__ = "0.1.0"
