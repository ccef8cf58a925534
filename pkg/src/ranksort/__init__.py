"""Non-dominated sorting via stable-sort ordinal ranks and bit-parallel
set intersection, with reference baselines and benchmark tooling."""

from .baselines import ens_bs, ens_ss, naive_fast_nds
from .bench import (
    ALGORITHMS,
    CSV_HEADER,
    rank_checksum,
    run_bench,
    sort_instance,
    verify_equivalence,
)
from .bitset import BlockBitset
from .core import (
    ConsistencyError,
    Counters,
    Dominance,
    DuplicateMap,
    DuplicateRowsError,
    MemoryCapError,
    ObjectiveMatrix,
    build_ordinal_ranks,
    build_permutations,
    compare_dominance,
    deduplicate,
    fronts_from_ranks,
    load_matrix,
    parse_matrix_text,
    reinsert_duplicates,
)
from .generators import GeneratorSpec, generate
from .rank_intersect import DEFAULT_MEM_CAP_BYTES, rank_intersect_sort
from .rank_ordinal import rank_ordinal_sort

__all__ = [
    "ALGORITHMS",
    "BlockBitset",
    "CSV_HEADER",
    "ConsistencyError",
    "Counters",
    "DEFAULT_MEM_CAP_BYTES",
    "Dominance",
    "DuplicateMap",
    "DuplicateRowsError",
    "GeneratorSpec",
    "MemoryCapError",
    "ObjectiveMatrix",
    "build_ordinal_ranks",
    "build_permutations",
    "compare_dominance",
    "deduplicate",
    "ens_bs",
    "ens_ss",
    "fronts_from_ranks",
    "generate",
    "load_matrix",
    "naive_fast_nds",
    "parse_matrix_text",
    "rank_checksum",
    "rank_intersect_sort",
    "rank_ordinal_sort",
    "reinsert_duplicates",
    "run_bench",
    "sort_instance",
    "verify_equivalence",
]
