import numpy as np
import pytest

from ranksort import Dominance, ObjectiveMatrix, compare_dominance

# ten-point reference instance used across the suite
REFERENCE_POINTS = [
    [0.79, 0.35],
    [0.40, 0.71],
    [0.15, 0.014],
    [0.46, 0.82],
    [0.28, 0.98],
    [0.31, 0.74],
    [0.82, 0.52],
    [0.84, 0.19],
    [0.85, 0.78],
    [0.96, 0.83],
]

# expected fronts as 1-based solution numbers
REFERENCE_FRONTS = [[3], [1, 2, 5, 6, 8], [4, 7], [9], [10]]


@pytest.fixture
def reference_matrix():
    return ObjectiveMatrix.from_rows(REFERENCE_POINTS)


def fronts_1based(fronts):
    return [sorted(int(i) + 1 for i in front) for front in fronts]


def brute_force_fronts(values):
    """Independent front peeling using only pairwise dominance outcomes."""
    values = np.asarray(values, dtype=np.float64)
    remaining = list(range(len(values)))
    fronts = []
    while remaining:
        front = []
        for i in remaining:
            dominated = any(
                compare_dominance(values[j], values[i]) == Dominance.A_DOMINATES_B
                for j in remaining
                if j != i
            )
            if not dominated:
                front.append(i)
        fronts.append(front)
        remaining = [i for i in remaining if i not in front]
    return fronts


def ranks_from_fronts(fronts, n):
    ranks = np.zeros(n, dtype=np.int64)
    for r, front in enumerate(fronts, start=1):
        for i in front:
            ranks[i] = r
    return ranks
