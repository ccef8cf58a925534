"""Deterministic synthetic instance generators.

Covers the uniform-hypercube benchmark plus the two degenerate inputs
that drive the worst-case iteration counts: a single mutually
non-dominated front (anti-chain) and a chain of singleton fronts.
Randomness comes from numpy's PCG64 generator, seeded per instance, so
a fixed (kind, n, m, seed) always reproduces the same matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ObjectiveMatrix, load_matrix

KINDS = ("uniform", "single_front", "chain", "duplicates", "file")

__all__ = ["KINDS", "GeneratorSpec", "generate"]


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int = 1
    m: int = 1
    seed: int = 0
    dup_fraction: float = 0.0
    path: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind != "file":
            if self.n < 1 or self.m < 1:
                raise ValueError("n and m must be >= 1")
        if not 0.0 <= self.dup_fraction < 1.0:
            raise ValueError("dup_fraction must be in [0, 1)")
        if self.kind == "file" and not self.path:
            raise ValueError("file generator requires a path")


def _uniform(n: int, m: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.random((n, m))


def _single_front(n: int, m: int) -> np.ndarray:
    if m < 2 and n > 1:
        raise ValueError("single_front needs m >= 2")
    values = np.full((n, m), 0.5)
    i = np.arange(1, n + 1, dtype=np.float64)
    values[:, 0] = i / n
    if m >= 2:
        values[:, 1] = (n + 1 - i) / n
    return values


def _chain(n: int, m: int) -> np.ndarray:
    i = np.arange(1, n + 1, dtype=np.float64) / n
    return np.repeat(i[:, None], m, axis=1)


def _duplicates(n: int, m: int, seed: int, dup_fraction: float) -> np.ndarray:
    rng = np.random.default_rng(seed)
    values = rng.random((n, m))
    n_dups = int(dup_fraction * n)
    if n_dups and n > 1:
        targets = np.sort(rng.choice(np.arange(1, n), size=min(n_dups, n - 1), replace=False))
        for t in targets:
            values[t] = values[rng.integers(0, t)]
    return values


def generate(spec: GeneratorSpec) -> ObjectiveMatrix:
    """Materialize the instance described by *spec*."""
    if spec.kind == "uniform":
        return ObjectiveMatrix(_uniform(spec.n, spec.m, spec.seed))
    if spec.kind == "single_front":
        return ObjectiveMatrix(_single_front(spec.n, spec.m))
    if spec.kind == "chain":
        return ObjectiveMatrix(_chain(spec.n, spec.m))
    if spec.kind == "duplicates":
        return ObjectiveMatrix(_duplicates(spec.n, spec.m, spec.seed, spec.dup_fraction))
    return load_matrix(spec.path)
