import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from teamcraft import assembly as asm
from teamcraft.errors import (
    BoundExceeded,
    Infeasible,
    InvalidCode,
    InvalidConfig,
    Unsupported,
)
from teamcraft.model import CapacityVector, ScoreMatrix, TeamAssembly, team_capacity


def matrix_with_capacities(caps):
    # Single-column matrix: capacity equals the one score.
    return ScoreMatrix.from_rows([(c,) for c in caps], ("IN",))


def random_matrix(rng, p, r, low=1, high=500):
    roles = ("IN", "DE", "AN", "IM", "CO", "TE")[:r]
    return ScoreMatrix.from_rows(
        [tuple(rng.randint(low, high) for _ in range(r)) for _ in range(p)], roles
    )


class TestSnakeDraft:
    def test_four_participants_two_teams(self):
        s = matrix_with_capacities([10, 8, 6, 4])
        a = asm.snake_draft(s, 2)
        # pick order 1,2,2,1 on capacities 10,8,6,4
        assert a.assignment == (1, 2, 2, 1)
        assert team_capacity(s, a, 1) == team_capacity(s, a, 2) == 14

    def test_single_team(self, beta_r1):
        a = asm.snake_draft(beta_r1, 1)
        assert a.assignment == (1, 1, 1, 1)

    def test_tie_break_by_id(self):
        s = matrix_with_capacities([9, 9, 9, 9])
        a = asm.snake_draft(s, 2)
        assert a.members(1) == (1, 4)
        assert a.members(2) == (2, 3)

    def test_more_teams_than_participants(self):
        s = matrix_with_capacities([5])
        with pytest.raises(Infeasible):
            asm.snake_draft(s, 2)

    def test_three_team_snake_order(self):
        s = matrix_with_capacities([9, 8, 7, 6, 5, 4, 3])
        a = asm.snake_draft(s, 3)
        # rounds: 1,2,3 then 3,2,1 then 1
        assert a.members(1) == (1, 6, 7)
        assert a.members(2) == (2, 5)
        assert a.members(3) == (3, 4)

    @given(
        st.integers(2, 4).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.lists(st.integers(0, 100), min_size=n, max_size=12),
            )
        )
    )
    def test_team_sizes_balanced(self, data):
        n, caps = data
        s = matrix_with_capacities(caps)
        a = asm.snake_draft(s, n)
        p = len(caps)
        sizes = [len(a.members(t)) for t in range(1, n + 1)]
        assert sum(sizes) == p
        assert set(sizes) <= {p // n, -(-p // n)}

    def test_capacity_multiset_stable_under_permutation(self):
        rng = random.Random(41)
        caps = [rng.randint(0, 300) for _ in range(9)]
        s1 = matrix_with_capacities(caps)
        shuffled = caps[::-1]
        s2 = matrix_with_capacities(shuffled)
        a1, a2 = asm.snake_draft(s1, 3), asm.snake_draft(s2, 3)
        teams1 = sorted(
            sorted(caps[i - 1] for i in a1.members(t)) for t in range(1, 4)
        )
        teams2 = sorted(
            sorted(shuffled[i - 1] for i in a2.members(t)) for t in range(1, 4)
        )
        assert teams1 == teams2


class TestMaxCapacity:
    def test_sort_and_split(self):
        s = matrix_with_capacities([10, 8, 6, 4])
        a = asm.max_capacity_team1(s)
        assert a.members(1) == (1, 2)
        assert team_capacity(s, a, 1) == 18
        assert team_capacity(s, a, 2) == 10

    def test_equal_capacities_split_by_id(self):
        s = matrix_with_capacities([7, 7, 7, 7])
        a = asm.max_capacity_team1(s)
        assert a.members(1) == (1, 2)

    def test_odd_count_team1_larger(self):
        s = matrix_with_capacities([5, 4, 3, 2, 1])
        a = asm.max_capacity_team1(s)
        assert len(a.members(1)) == 3

    def test_requires_two_teams(self, beta_r1):
        with pytest.raises(Unsupported):
            asm.max_capacity_team1(beta_r1, 3)

    def test_snake_never_more_imbalanced(self):
        rng = random.Random(19)
        for _ in range(200):
            s = random_matrix(rng, 10, 5)
            caps = CapacityVector.from_matrix(s).capacities
            draft = asm.snake_draft(s, 2)
            maxcap = asm.max_capacity_team1(s)

            def imbalance(a):
                return abs(team_capacity(s, a, 1) - team_capacity(s, a, 2))

            assert imbalance(draft) <= imbalance(maxcap)
            assert sum(caps) == team_capacity(s, draft, 1) + team_capacity(s, draft, 2)


class TestEncoding:
    def test_worked_example_992(self):
        a = asm.decode_assembly(asm.AssemblyEncoding(992, 10))
        assert a.assignment == (2, 2, 2, 2, 2, 1, 1, 1, 1, 1)
        assert asm.encode_assembly(a).code == 992
        assert asm.AssemblyEncoding(992, 10).bits() == "1111100000"

    def test_code_zero_all_team_one(self):
        a = asm.decode_assembly(asm.AssemblyEncoding(0, 4))
        assert a.assignment == (1, 1, 1, 1)

    def test_out_of_range(self):
        with pytest.raises(InvalidCode):
            asm.AssemblyEncoding(16, 4)
        with pytest.raises(InvalidCode):
            asm.AssemblyEncoding(-1, 4)

    def test_encode_requires_two_teams(self):
        with pytest.raises(Unsupported):
            asm.encode_assembly(TeamAssembly((1, 1), 1))

    @given(st.lists(st.sampled_from([1, 2]), min_size=2, max_size=16))
    def test_roundtrip(self, teams):
        a = TeamAssembly(tuple(teams), 2, allow_empty_teams=True)
        assert asm.decode_assembly(asm.encode_assembly(a)).assignment == a.assignment


class TestEnumerateBalanced:
    def test_count_p4(self):
        assert sum(1 for _ in asm.enumerate_balanced(4)) == 6 == math.comb(4, 2)

    def test_count_p10(self):
        assert sum(1 for _ in asm.enumerate_balanced(10)) == 252 == math.comb(10, 5)

    def test_count_p1_degenerate(self):
        assemblies = list(asm.enumerate_balanced(1))
        assert len(assemblies) == 2
        assert {a.assignment for a in assemblies} == {(1,), (2,)}

    def test_odd_count_formula(self):
        for p in (3, 5, 7):
            expected = math.comb(p, p // 2) + math.comb(p, p // 2 + 1)
            assert sum(1 for _ in asm.enumerate_balanced(p)) == expected
            assert asm.balanced_assembly_count(p) == expected

    def test_ascending_unique_and_balanced(self):
        codes = [asm.encode_assembly(a).code for a in asm.enumerate_balanced(7)]
        assert codes == sorted(codes)
        assert len(codes) == len(set(codes))
        for code in codes:
            ones = bin(code).count("1")
            assert abs(ones - (7 - ones)) <= 1

    def test_matches_filter_oracle(self):
        # Independent oracle: filter every p-bit integer by popcount.
        for p in (2, 5, 6):
            expected = [
                c
                for c in range(1 << p)
                if abs(2 * bin(c).count("1") - p) <= 1
            ]
            got = [asm.encode_assembly(a).code for a in asm.enumerate_balanced(p)]
            assert got == expected

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            list(asm.enumerate_balanced(21))
        assert sum(1 for _ in asm.enumerate_balanced(21, bound=21)) > 0


class TestAveragedBalancedStats:
    def test_mean_capacity_is_half_total(self):
        rng = random.Random(7)
        s = random_matrix(rng, 8, 4)
        stats = asm.averaged_balanced_stats(s)
        assert stats.assemblies == math.comb(8, 4)
        assert stats.mean_capacities[0] == pytest.approx(s.total() / 2, abs=1e-9)
        assert stats.mean_capacities[1] == pytest.approx(s.total() / 2, abs=1e-9)

    def test_per_team_score_means_equal_by_symmetry(self):
        rng = random.Random(9)
        s = random_matrix(rng, 6, 3)
        stats = asm.averaged_balanced_stats(s)
        assert stats.mean_team_scores[0] == pytest.approx(stats.mean_team_scores[1])

    def test_matches_direct_enumeration_oracle(self):
        # Oracle: recompute the mean with itertools.combinations directly.
        import itertools

        from teamcraft.assignment import brute_force_assign

        rng = random.Random(11)
        s = random_matrix(rng, 6, 3)
        total = 0
        count = 0
        for team2 in itertools.combinations(range(1, 7), 3):
            assignment = tuple(2 if i in team2 else 1 for i in range(1, 7))
            a = TeamAssembly(assignment, 2)
            total += brute_force_assign(s, a, 1).score
            count += 1
        stats = asm.averaged_balanced_stats(s)
        assert stats.mean_team_scores[0] == pytest.approx(total / count)

    def test_bound_exceeded(self):
        s = matrix_with_capacities(list(range(1, 23)))
        with pytest.raises(BoundExceeded):
            asm.averaged_balanced_stats(s)


class TestMonteCarlo:
    def test_balanced_mean_near_exhaustive(self):
        rng = random.Random(13)
        s = random_matrix(rng, 8, 4)
        exact = asm.averaged_balanced_stats(s)
        mc = asm.random_assembly_mc(s, epsilon=1.0, max_samples=20000, seed=42)
        exact_mean = sum(exact.mean_team_scores) / 2
        mc_mean = sum(mc.mean_team_scores) / 2
        assert abs(mc_mean - exact_mean) / exact_mean < 0.01

    def test_seed_reproducibility(self):
        rng = random.Random(15)
        s = random_matrix(rng, 6, 3)
        a = asm.random_assembly_mc(s, epsilon=5.0, max_samples=3000, seed=7)
        b = asm.random_assembly_mc(s, epsilon=5.0, max_samples=3000, seed=7)
        assert a == b

    def test_constant_matrix_converges_after_first_window(self):
        s = ScoreMatrix.from_rows([(5, 5)] * 6, ("IN", "DE"))
        mc = asm.random_assembly_mc(s, epsilon=0.01, max_samples=50000, seed=1, window=500)
        assert mc.converged
        assert mc.samples == 501
        assert mc.standard_error == 0.0

    def test_unconstrained_mode_never_empty(self):
        rng = random.Random(17)
        s = random_matrix(rng, 4, 2)
        mc = asm.random_assembly_mc(
            s, mode="unconstrained", epsilon=10.0, max_samples=2000, seed=3
        )
        assert mc.samples >= 1  # every accepted sample built a valid 2-team assembly

    def test_invalid_config(self):
        s = matrix_with_capacities([1, 2])
        with pytest.raises(InvalidConfig):
            asm.random_assembly_mc(s, max_samples=0)
        with pytest.raises(InvalidConfig):
            asm.random_assembly_mc(s, mode="bogus")


class TestBestBalanced:
    def test_beats_or_ties_every_assembly(self):
        rng = random.Random(21)
        s = random_matrix(rng, 6, 3)
        best, scores = asm.best_balanced_assembly(s)
        from teamcraft.assignment import optimal_team_score

        for a in asm.enumerate_balanced(6):
            total = optimal_team_score(s, a, 1) + optimal_team_score(s, a, 2)
            assert total <= sum(scores)
