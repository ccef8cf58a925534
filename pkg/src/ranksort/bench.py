"""Benchmark and verification machinery behind the CLI.

A benchmark run times only the sort call on the already-deduplicated
matrix; generation, duplicate handling and I/O stay outside the clock.
Each timed run appends one CSV row; rows are deterministic for fixed
arguments except for the elapsed_ns column.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .baselines import ens_bs, ens_ss, naive_fast_nds
from .core import (
    Counters,
    MemoryCapError,
    ObjectiveMatrix,
    deduplicate,
    reinsert_duplicates,
)
from .generators import GeneratorSpec, generate
from .rank_intersect import DEFAULT_MEM_CAP_BYTES, rank_intersect_sort
from .rank_ordinal import rank_ordinal_sort

CSV_HEADER = (
    "algo,gen,n,m,seed,rep,elapsed_ns,inner_iterations,"
    "full_comparisons,rank_updates,block_ops,max_rank,checksum"
)

ALGORITHMS = {
    "ro": lambda obj, counters, cap: rank_ordinal_sort(obj, counters),
    "rs": lambda obj, counters, cap: rank_intersect_sort(obj, counters, mem_cap_bytes=cap),
    "ens-ss": lambda obj, counters, cap: ens_ss(obj),
    "ens-bs": lambda obj, counters, cap: ens_bs(obj),
    "naive": lambda obj, counters, cap: naive_fast_nds(obj),
}

__all__ = [
    "ALGORITHMS",
    "CSV_HEADER",
    "RunRecord",
    "rank_checksum",
    "run_bench",
    "sort_instance",
    "verify_equivalence",
]


@dataclass
class RunRecord:
    algo: str
    gen: str
    n: int
    m: int
    seed: int
    rep: int
    elapsed_ns: int
    counters: Counters
    max_rank: int
    checksum: str

    def csv_row(self) -> list:
        c = self.counters
        return [
            self.algo, self.gen, self.n, self.m, self.seed, self.rep,
            self.elapsed_ns, c.inner_iterations, c.full_comparisons,
            c.rank_updates, c.block_ops, self.max_rank, self.checksum,
        ]


def rank_checksum(ranks: np.ndarray) -> str:
    """Order-independent 64-bit digest of a rank assignment.

    XOR of a splitmix64-style mix of each (index, rank) pair, so the
    value does not depend on any front iteration order.
    """
    ranks = np.asarray(ranks, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = (np.arange(ranks.size, dtype=np.uint64) << np.uint64(32)) ^ ranks
        z = (z + np.uint64(0x9E3779B97F4A7C15))
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
        acc = np.bitwise_xor.reduce(z)
    return f"{int(acc):016x}"


def sort_instance(
    algo: str,
    obj: ObjectiveMatrix,
    counters: Counters | None = None,
    mem_cap_bytes: int = DEFAULT_MEM_CAP_BYTES,
) -> tuple[np.ndarray, int]:
    """Full pipeline: dedup -> sort -> reinsert.

    Returns (1-based ranks for all original rows, elapsed_ns of the
    sort call only).
    """
    if counters is None:
        counters = Counters()
    fn = ALGORITHMS[algo]
    unique, dmap = deduplicate(obj)
    start = time.perf_counter_ns()
    unique_ranks = fn(unique, counters, mem_cap_bytes)
    elapsed = time.perf_counter_ns() - start
    return reinsert_duplicates(unique_ranks, dmap), max(elapsed, 1)


def _specs_for(kind: str, n: int, m: int, seed: int, dup_fraction: float) -> GeneratorSpec:
    if kind == "duplicates":
        return GeneratorSpec(kind, n=n, m=m, seed=seed, dup_fraction=dup_fraction)
    return GeneratorSpec(kind, n=n, m=m, seed=seed)


def verify_equivalence(
    kinds,
    ns,
    ms,
    seeds,
    algos=None,
    dup_fraction: float = 0.3,
    mem_cap_bytes: int = DEFAULT_MEM_CAP_BYTES,
    algorithms=None,
) -> list[dict]:
    """Cross-check every algorithm against the naive oracle.

    Returns a list of mismatch descriptions (empty means all
    equivalent).  *algorithms* overrides the registry, which the test
    suite uses to prove that an injected bug is actually detected.
    """
    registry = ALGORITHMS if algorithms is None else algorithms
    if algos is None:
        algos = [a for a in registry if a != "naive"]
    mismatches = []
    for kind in kinds:
        for n in ns:
            for m in ms:
                if kind == "single_front" and m < 2:
                    continue
                for seed in seeds:
                    obj = generate(_specs_for(kind, n, m, seed, dup_fraction))
                    unique, dmap = deduplicate(obj)
                    expected = reinsert_duplicates(naive_fast_nds(unique), dmap)
                    for algo in algos:
                        got = reinsert_duplicates(
                            registry[algo](unique, Counters(), mem_cap_bytes), dmap
                        )
                        if not np.array_equal(got, expected):
                            mismatches.append(
                                {"algo": algo, "gen": kind, "n": n, "m": m, "seed": seed}
                            )
    return mismatches


def run_bench(
    algos,
    kinds,
    ns,
    ms,
    seeds,
    reps: int = 5,
    warmup: int = 2,
    csv_path=None,
    dup_fraction: float = 0.0,
    input_path: str | None = None,
    mem_cap_bytes: int = DEFAULT_MEM_CAP_BYTES,
) -> list[str]:
    """Run the sweep strictly sequentially and return CSV lines.

    A memory-cap refusal produces a ``# skipped`` marker line instead of
    aborting the sweep.
    """
    lines = [CSV_HEADER]
    for kind in kinds:
        for n in ns:
            for m in ms:
                for seed in seeds:
                    if kind == "file":
                        obj = generate(GeneratorSpec("file", path=input_path))
                        n_eff, m_eff = obj.n, obj.m
                    else:
                        obj = generate(_specs_for(kind, n, m, seed, dup_fraction))
                        n_eff, m_eff = n, m
                    unique, dmap = deduplicate(obj)
                    for algo in algos:
                        fn = ALGORITHMS[algo]
                        try:
                            for _ in range(warmup):
                                fn(unique, Counters(), mem_cap_bytes)
                        except MemoryCapError:
                            for rep in range(reps):
                                lines.append(
                                    f"# skipped,{algo},{kind},{n_eff},{m_eff},{seed},{rep},memory-cap"
                                )
                            continue
                        for rep in range(reps):
                            counters = Counters()
                            start = time.perf_counter_ns()
                            unique_ranks = fn(unique, counters, mem_cap_bytes)
                            elapsed = max(time.perf_counter_ns() - start, 1)
                            ranks = reinsert_duplicates(unique_ranks, dmap)
                            record = RunRecord(
                                algo=algo, gen=kind, n=n_eff, m=m_eff, seed=seed,
                                rep=rep, elapsed_ns=elapsed, counters=counters,
                                max_rank=int(ranks.max()),
                                checksum=rank_checksum(ranks),
                            )
                            lines.append(",".join(str(v) for v in record.csv_row()))
    if csv_path is not None:
        with open(csv_path, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    return lines
