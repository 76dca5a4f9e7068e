import itertools

import pytest

from tropdet import (
    BudgetExceededError,
    DomainError,
    IntMatrix,
    brute_L,
    brute_U,
    count_D,
    enumerate_D,
    random_ds,
    tdet,
    tropdet,
    validate_ds,
)


def collect(m, n, budget=10**6):
    seen = []
    count = enumerate_D(m, n, seen.append, budget=budget)
    assert count == len(seen)
    return seen


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def toy_members(m, n):
    """Independent reference enumerator: product of row compositions,
    filtered by column sums.  Yields nested lists in row-major lex order."""
    for rows in itertools.product(compositions(m, n), repeat=n):
        if all(sum(col) == m for col in zip(*rows)):
            yield [list(r) for r in rows]


class TestOrdering:
    def test_two_by_two_exact(self):
        got = [a.to_nested() for a in collect(2, 2)]
        assert got == [
            [[0, 2], [2, 0]],
            [[1, 1], [1, 1]],
            [[2, 0], [0, 2]],
        ]

    def test_permutation_matrices(self):
        got = [a.to_nested() for a in collect(1, 3)]
        assert len(got) == 6
        for grid in got:
            assert sorted(sum(row) for row in grid) == [1, 1, 1]
        assert got[0] == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
        assert got[-1] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_single_column(self):
        got = [a.to_nested() for a in collect(5, 1)]
        assert got == [[[5]]]

    @pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (4, 2)])
    def test_strictly_ascending_no_duplicates(self, m, n):
        flats = [a.entries for a in collect(m, n)]
        assert all(x < y for x, y in zip(flats, flats[1:]))

    @pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (1, 4)])
    def test_matches_reference_enumerator(self, m, n):
        got = [a.to_nested() for a in collect(m, n)]
        assert got == list(toy_members(m, n))

    def test_every_member_is_valid(self):
        for a in collect(3, 3):
            ds = validate_ds(a)
            assert ds.m == 3


class TestCounting:
    @pytest.mark.parametrize(
        "m,n,expected",
        [
            (2, 2, 3),
            (1, 4, 24),
            (7, 2, 8),
            (2, 3, 21),
            (3, 3, 55),
            (1, 1, 1),
        ],
    )
    def test_known_counts(self, m, n, expected):
        assert count_D(m, n) == expected

    def test_counts_match_reference(self):
        for m in range(1, 4):
            for n in range(1, 4):
                assert count_D(m, n) == len(list(toy_members(m, n)))

    def test_domain(self):
        with pytest.raises(DomainError):
            count_D(0, 3)


class TestBudget:
    def test_upfront_refusal(self):
        # the first-row pool alone exceeds the budget, so no work starts
        with pytest.raises(BudgetExceededError) as err:
            count_D(10, 5, budget=100)
        assert err.value.visited == 0
        assert err.value.budget == 100

    def test_midstream_stop(self):
        # pool of 6 first rows passes the pre-check, then the walk trips
        with pytest.raises(BudgetExceededError) as err:
            count_D(2, 3, budget=10)
        assert err.value.visited == 10
        assert err.value.budget == 10

    def test_budget_exactly_sufficient(self):
        assert count_D(2, 3, budget=21) == 21

    def test_nonpositive_budget(self):
        with pytest.raises(BudgetExceededError):
            count_D(1, 2, budget=0)


class TestBruteExtremes:
    def test_min_max_transversal_small(self):
        stats = brute_L(2, 3)
        assert stats.extremum == 3
        assert stats.count == 21
        assert tdet(stats.witness.matrix).value == 3

    def test_min_witness_is_first_attaining(self):
        stats = brute_L(2, 3)
        for grid in toy_members(2, 3):
            value = max(
                sum(grid[i][p[i]] for i in range(3))
                for p in itertools.permutations(range(3))
            )
            if value == 3:
                assert stats.witness.matrix.to_nested() == grid
                break

    def test_hard_case_value(self):
        assert brute_L(5, 4).extremum == 7

    def test_max_min_transversal_small(self):
        stats = brute_U(5, 3)
        assert stats.extremum == 4
        assert tropdet(stats.witness.matrix).value == 4

    def test_small_m_below_n(self):
        # q = 0 yet 2r >= n, so the max sits at q*n + 2r - n = 1, not 0
        stats = brute_U(2, 3)
        assert stats.extremum == 1
        assert stats.count == 21

    def test_witnesses_are_members(self):
        for stats in (brute_L(3, 3), brute_U(3, 3)):
            assert stats.witness.m == 3
            assert stats.witness.matrix.rows == 3

    def test_budget_propagates(self):
        with pytest.raises(BudgetExceededError):
            brute_L(2, 3, budget=5)


class TestRandom:
    def test_deterministic_for_seed(self):
        a = random_ds(6, 5, seed=123)
        b = random_ds(6, 5, seed=123)
        assert a.matrix.entries == b.matrix.entries

    def test_seeds_differ(self):
        draws = {random_ds(6, 5, seed=s).matrix.entries for s in range(20)}
        assert len(draws) > 1

    def test_membership(self):
        for seed in range(10):
            ds = random_ds(7, 4, seed=seed)
            assert ds.m == 7
            assert set(ds.matrix.row_sums()) == {7}
            assert set(ds.matrix.col_sums()) == {7}

    def test_m_one_gives_permutation(self):
        ds = random_ds(1, 6, seed=9)
        assert sorted(ds.matrix.entries) == [0] * 30 + [1] * 6

    def test_single_cell(self):
        assert random_ds(4, 1, seed=0).matrix.to_nested() == [[4]]
