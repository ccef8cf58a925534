"""Command-line harness: sort a single instance, cross-verify the
algorithms against the oracle, or run instrumented benchmark sweeps.

Exit codes: 0 success, 1 verification mismatch, 2 usage or I/O error.
Everything runs on a single thread.
"""

from __future__ import annotations

import sys

import click

from .bench import ALGORITHMS, run_bench, sort_instance, verify_equivalence
from .core import Counters, fronts_from_ranks, load_matrix
from .generators import GeneratorSpec, generate
from .rank_intersect import DEFAULT_MEM_CAP_BYTES

_GEN_CHOICES = ["uniform", "single-front", "chain", "duplicates", "file"]


def _kind(gen: str) -> str:
    return gen.replace("-", "_")


@click.group()
def main():
    """Non-dominated sorting toolkit."""


def _make_instance(gen, input_path, n, m, seed, dup_fraction):
    kind = _kind(gen)
    if kind == "file":
        if input_path is None:
            raise click.UsageError("--gen file requires --input")
        return load_matrix(input_path)
    return generate(GeneratorSpec(kind, n=n, m=m, seed=seed, dup_fraction=dup_fraction))


@main.command("sort")
@click.option("--algo", type=click.Choice(sorted(ALGORITHMS)), default="rs", show_default=True)
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--gen", type=click.Choice(_GEN_CHOICES), default="file", show_default=True)
@click.option("--n", type=int, default=100, show_default=True)
@click.option("--m", type=int, default=2, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--dup-fraction", type=float, default=0.0, show_default=True)
@click.option("--mem-cap-bytes", type=int, default=DEFAULT_MEM_CAP_BYTES, show_default=True)
def cmd_sort(algo, input_path, gen, n, m, seed, dup_fraction, mem_cap_bytes):
    """Sort one instance and print its fronts (1-based solution numbers)."""
    try:
        obj = _make_instance(gen, input_path, n, m, seed, dup_fraction)
        ranks, _ = sort_instance(algo, obj, Counters(), mem_cap_bytes)
    except (OSError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    for r, front in enumerate(fronts_from_ranks(ranks), start=1):
        click.echo(f"F{r}: " + " ".join(str(i + 1) for i in front))


@main.command("verify")
@click.option("--algo", "algos", type=click.Choice(sorted(a for a in ALGORITHMS if a != "naive")),
              multiple=True, help="Algorithms to check (default: all but the oracle).")
@click.option("--gen", "gens", type=click.Choice(_GEN_CHOICES[:-1]), multiple=True,
              help="Generators to sweep (default: all synthetic generators).")
@click.option("--n", "ns", type=int, multiple=True, help="Population sizes (default: 10 50 200).")
@click.option("--m", "ms", type=int, multiple=True, help="Objective counts (default: 2 3 5).")
@click.option("--seed", type=int, default=0, show_default=True, help="Base seed.")
@click.option("--seeds", type=int, default=20, show_default=True, help="Number of seeds.")
@click.option("--dup-fraction", type=float, default=0.3, show_default=True)
@click.option("--mem-cap-bytes", type=int, default=DEFAULT_MEM_CAP_BYTES, show_default=True)
def cmd_verify(algos, gens, ns, ms, seed, seeds, dup_fraction, mem_cap_bytes):
    """Compare every algorithm's ranks against the naive oracle."""
    kinds = [_kind(g) for g in gens] or ["uniform", "single_front", "chain", "duplicates"]
    ns = list(ns) or [10, 50, 200]
    ms = list(ms) or [2, 3, 5]
    seed_list = [seed + i for i in range(seeds)]
    mismatches = verify_equivalence(
        kinds, ns, ms, seed_list,
        algos=list(algos) or None,
        dup_fraction=dup_fraction,
        mem_cap_bytes=mem_cap_bytes,
    )
    if mismatches:
        for mm in mismatches:
            click.echo(
                f"MISMATCH algo={mm['algo']} gen={mm['gen']} n={mm['n']} m={mm['m']} seed={mm['seed']}"
            )
        sys.exit(1)
    click.echo("all equivalent")


@main.command("bench")
@click.option("--algo", "algos", type=click.Choice(sorted(ALGORITHMS)), multiple=True, required=True)
@click.option("--gen", "gens", type=click.Choice(_GEN_CHOICES), multiple=True, default=["uniform"],
              show_default=True)
@click.option("--n", "ns", type=int, multiple=True, default=[1000], show_default=True)
@click.option("--m", "ms", type=int, multiple=True, default=[2], show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Base seed.")
@click.option("--seeds", type=int, default=1, show_default=True, help="Number of seeds.")
@click.option("--reps", type=int, default=5, show_default=True)
@click.option("--warmup", type=int, default=2, show_default=True)
@click.option("--dup-fraction", type=float, default=0.0, show_default=True)
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None,
              help="Write rows to this file (otherwise stdout).")
@click.option("--mem-cap-bytes", type=int, default=DEFAULT_MEM_CAP_BYTES, show_default=True)
def cmd_bench(algos, gens, ns, ms, seed, seeds, reps, warmup, dup_fraction,
              input_path, csv_path, mem_cap_bytes):
    """Timed, instrumented runs over a generator sweep; emits CSV."""
    kinds = [_kind(g) for g in gens]
    if "file" in kinds and input_path is None:
        raise click.UsageError("--gen file requires --input")
    try:
        lines = run_bench(
            list(algos), kinds, list(ns), list(ms),
            [seed + i for i in range(seeds)],
            reps=reps, warmup=warmup, csv_path=csv_path,
            dup_fraction=dup_fraction, input_path=input_path,
            mem_cap_bytes=mem_cap_bytes,
        )
    except OSError as exc:
        raise click.ClickException(str(exc)) from exc
    if csv_path is None:
        for line in lines:
            click.echo(line)


if __name__ == "__main__":
    main()
