"""Exact character tables of symmetric groups, with table-wide statistics.

The core engine evaluates irreducible characters by the border-strip
recursion over integer partitions, exactly, at any size the caller can
afford.  On top of it sit streaming parity / sign / divisibility tallies,
trend series for plotting, and structured verification of the identities
relating the tallies to partition counts.
"""

from .partitions import (
    Partition,
    centralizer_order,
    class_size,
    conjugate,
    count_self_conjugate,
    cycle_type_multiplicities,
    enumerate_partitions,
    is_partition,
    is_self_conjugate,
    odd_distinct_to_self_conjugate,
    partition_count,
    partition_from_multiplicities,
    self_conjugate_to_odd_distinct,
)
from .characters import (
    BorderStrip,
    border_strips,
    character_degree,
    mn_character,
    mn_character_mod,
    table_column,
    table_column_mod,
)
from .stats import (
    PARITY_BUDGET,
    SIGN_BUDGET,
    BudgetError,
    ResidueTally,
    SignTally,
    TableStats,
    collect_stats,
    count_residue_zero,
    format6,
    merge_tallies,
    parity_stats,
    proportion_even,
    residue_tally,
    round6,
    sign_probabilities,
    sign_stats,
)
from .verify import (
    CheckResult,
    TrendPoint,
    VerificationReport,
    arctan_model,
    count_self_conjugate_by_durfee,
    even_proportion_trend,
    general_divisibility_trend,
    sign_trend,
    verify_column_orthogonality,
    verify_identity_chain,
    verify_theorem1,
)

__version__ = "0.1.0"

__all__ = [
    "BorderStrip",
    "BudgetError",
    "CheckResult",
    "PARITY_BUDGET",
    "Partition",
    "ResidueTally",
    "SIGN_BUDGET",
    "SignTally",
    "TableStats",
    "TrendPoint",
    "VerificationReport",
    "arctan_model",
    "border_strips",
    "centralizer_order",
    "character_degree",
    "class_size",
    "collect_stats",
    "conjugate",
    "count_residue_zero",
    "count_self_conjugate",
    "count_self_conjugate_by_durfee",
    "cycle_type_multiplicities",
    "enumerate_partitions",
    "even_proportion_trend",
    "format6",
    "general_divisibility_trend",
    "is_partition",
    "is_self_conjugate",
    "merge_tallies",
    "mn_character",
    "mn_character_mod",
    "odd_distinct_to_self_conjugate",
    "parity_stats",
    "partition_count",
    "partition_from_multiplicities",
    "proportion_even",
    "residue_tally",
    "round6",
    "self_conjugate_to_odd_distinct",
    "sign_probabilities",
    "sign_stats",
    "sign_trend",
    "table_column",
    "table_column_mod",
    "verify_column_orthogonality",
    "verify_identity_chain",
    "verify_theorem1",
]
