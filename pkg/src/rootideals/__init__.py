"""Exact enumeration of ad-nilpotent and abelian ideals of parabolic
subalgebras of the simple Lie algebras, through the combinatorics of the
positive-root poset: ideals correspond to upward-closed root sets, which
are walked as antichains and binned by the parabolics they serve."""

from .ideals import (
    Classifier,
    IdealRecord,
    ParabolicMask,
    compatibility_mask,
    ideal_record,
    is_abelian,
    is_filter_for,
    list_ideals,
    parabolic_compatible,
    root_pair_sums,
)
from .oracle import (
    SUBSET_SCAN_LIMIT,
    TooLarge,
    iter_subset_scan_filters,
    reflection_closure,
    subset_scan_filters,
)
from .poset import (
    Poset,
    RootSet,
    build_poset,
    enumerate_antichains,
    enumerate_filters,
    from_indices,
    is_antichain,
    iter_bits,
    minimal_elements,
    upward_closure,
)
from .rootsys import (
    ZERO,
    Root,
    RootSystem,
    SimpleType,
    UnsupportedType,
    add_roots,
    build_root_system,
    cartan_matrix,
    positive_root_count,
    subtract_simple,
)
from .tabulate import (
    GoldenTable,
    MissingGolden,
    RowMismatch,
    TableRow,
    TypeMismatch,
    brute_force_tabulate,
    golden_table,
    tabulate,
    verify_against_golden,
)

__version__ = "0.1.0"

GOLDEN_TYPES = ("G2", "F4", "E6", "E7", "E8")
