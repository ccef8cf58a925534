import numpy as np
import pytest

from ranksort import (
    Counters,
    DuplicateRowsError,
    GeneratorSpec,
    ObjectiveMatrix,
    fronts_from_ranks,
    generate,
    naive_fast_nds,
    rank_ordinal_sort,
)

from conftest import REFERENCE_FRONTS, brute_force_fronts, fronts_1based, ranks_from_fronts


class TestWorkedExample:
    def test_reference_fronts(self, reference_matrix):
        ranks = rank_ordinal_sort(reference_matrix)
        assert fronts_1based(fronts_from_ranks(ranks)) == REFERENCE_FRONTS

    def test_reference_counters(self, reference_matrix):
        counters = Counters()
        ranks = rank_ordinal_sort(reference_matrix, counters)
        # every unit rank increment moves a solution from rank r to r+1,
        # so total updates equal sum(final_rank - 1)
        assert counters.rank_updates == int((ranks - 1).sum())
        assert counters.full_comparisons <= counters.inner_iterations
        assert counters.block_ops == 0


class TestEdgeCases:
    def test_single_solution(self):
        obj = ObjectiveMatrix.from_rows([[0.3, 0.7]])
        counters = Counters()
        assert rank_ordinal_sort(obj, counters).tolist() == [1]
        assert counters.inner_iterations == 0
        assert counters.full_comparisons == 0

    def test_single_objective(self):
        obj = ObjectiveMatrix.from_rows([[0.5], [0.1], [0.9]])
        assert rank_ordinal_sort(obj).tolist() == [2, 1, 3]

    def test_two_points_dominating(self):
        obj = ObjectiveMatrix.from_rows([[0.9, 0.9], [0.1, 0.1]])
        assert rank_ordinal_sort(obj).tolist() == [2, 1]

    def test_duplicates_rejected(self):
        obj = ObjectiveMatrix.from_rows([[0.1, 0.2], [0.1, 0.2]])
        with pytest.raises(DuplicateRowsError):
            rank_ordinal_sort(obj)


class TestOracleEquivalence:
    @pytest.mark.parametrize("kind", ["uniform", "single_front", "chain"])
    @pytest.mark.parametrize("n,m", [(1, 2), (7, 2), (64, 3), (65, 5), (200, 2), (150, 10)])
    def test_matches_naive(self, kind, n, m):
        obj = generate(GeneratorSpec(kind, n=n, m=m, seed=5))
        assert np.array_equal(rank_ordinal_sort(obj), naive_fast_nds(obj))

    def test_matches_brute_force_small(self):
        rng = np.random.default_rng(31)
        for _ in range(30):
            n = int(rng.integers(1, 25))
            m = int(rng.integers(1, 5))
            obj = ObjectiveMatrix(rng.random((n, m)))
            expected = ranks_from_fronts(brute_force_fronts(obj.values), n)
            assert np.array_equal(rank_ordinal_sort(obj), expected)


class TestVisitOrder:
    def test_rank_final_when_visited(self):
        # lexicographic visit order guarantees a solution's rank can no
        # longer change once the outer loop reaches it
        obj = generate(GeneratorSpec("uniform", n=300, m=3, seed=9))
        log = []
        ranks = rank_ordinal_sort(obj, visit_log=log)
        assert [i for i, _ in log] == sorted(
            range(300), key=lambda i: (tuple(obj.values[i]), i)
        )
        for i, rank_at_visit in log:
            assert rank_at_visit == ranks[i]


class TestCounterLaws:
    def test_chain_inner_iterations_exact(self):
        counters = Counters()
        ranks = rank_ordinal_sort(generate(GeneratorSpec("chain", n=1000, m=3)), counters)
        assert counters.inner_iterations == 1000 * 999 // 2
        assert counters.rank_updates == 1000 * 999 // 2
        assert ranks.tolist() == list(range(1, 1001))

    def test_single_front_inner_ratio(self):
        counters = Counters()
        rank_ordinal_sort(generate(GeneratorSpec("single_front", n=1000, m=2)), counters)
        ratio = counters.inner_iterations / 1000**2
        assert 0.23 <= ratio <= 0.27
        assert counters.rank_updates == 0

    def test_rank_updates_identity(self):
        for seed in range(5):
            obj = generate(GeneratorSpec("uniform", n=400, m=3, seed=seed))
            counters = Counters()
            ranks = rank_ordinal_sort(obj, counters)
            assert counters.rank_updates == int((ranks - 1).sum())

    def test_full_comparisons_never_exceed_inner(self):
        for seed in range(5):
            obj = generate(GeneratorSpec("uniform", n=300, m=4, seed=seed))
            counters = Counters()
            rank_ordinal_sort(obj, counters)
            assert 0 < counters.full_comparisons <= counters.inner_iterations
