"""Counting and enumerating numerical semigroups of small multiplicity via Kunz coordinates."""

from .core import (
    NATURALS,
    NotNumericalSemigroupError,
    NumericalSemigroup,
    SemigroupInvariants,
    contains,
    invariants,
    ordinary,
    semigroup_from_gaps,
    semigroup_from_generators,
)
from .counting import (
    CountReport,
    WindowMonotonicityResult,
    count,
    count_enumerated,
    count_mult2,
    count_mult3_closed,
    count_mult4_closed,
    count_mult4_residue,
    count_mult5_enumerated,
    partition_count_closed,
    partition_count_enumerated,
    verify_nondecreasing,
)
from .kunz import (
    KunzCoordinates,
    KunzPolytope,
    NotKunzVectorError,
    enumerate_kunz,
    enumerate_kunz_case,
    kunz_coordinates,
    kunz_polytope,
    reduced_system,
    semigroup_from_kunz,
)
from .tree import (
    Mult3Class,
    TreeNode,
    UnclassifiedError,
    build_tree,
    children,
    children_in_mult_tree,
    classify_mult3,
    export_tree,
    level,
)

__version__ = "0.1.0"
