import random
from fractions import Fraction

import pytest

from mixmean.constructions import (
    cyclic_profile_explicit,
    cyclic_weights,
    kedlaya_transition,
    kedlaya_weights,
    lift_cyclic_profile,
)
from mixmean.distributions import ProbDist, TransitionMatrix
from mixmean.errors import DimensionMismatch, NotATransition, OverfullWeights
from mixmean.gridexpand import (
    ExpansionMatrix,
    expand_transition,
    proportional_partition,
    verify_expansion,
)
from mixmean.means import MeanSpec, evaluate_mean, evaluate_weighted

F = Fraction


def band_oracle(q, p):
    """Independent cell-by-cell evaluation of the wrap-around band union."""
    grid = [[0] * q for _ in range(q)]
    prefix = [0]
    for v in p:
        prefix.append(prefix[-1] + v)
    for label in range(1, len(p) + 1):
        for i in range(1, q + 1):
            for j in range(i + prefix[label - 1], i + prefix[label] - 1 + 1):
                grid[i - 1][(j % q) + 1 - 1] = label
    return grid


class TestProportionalPartition:
    def test_single_cell(self):
        assert proportional_partition(1, (1,)).labels == ((1,),)

    def test_two_by_two(self):
        expected = [[2, 1], [1, 2]]
        assert band_oracle(2, (1, 1)) == expected
        assert [list(r) for r in proportional_partition(2, (1, 1)).labels] == expected

    def test_three_by_three(self):
        expected = [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
        assert band_oracle(3, (2, 1)) == expected
        assert [list(r) for r in proportional_partition(3, (2, 1)).labels] == expected

    def test_overfull(self):
        with pytest.raises(OverfullWeights):
            proportional_partition(2, (2, 1))

    def test_doubly_balanced(self):
        rng = random.Random(41)
        for _ in range(25):
            q = rng.randint(1, 9)
            parts = []
            left = q
            while left > 0 and len(parts) < 4:
                take = rng.randint(0, left)
                parts.append(take)
                left -= take
            grid = proportional_partition(q, parts)
            for label, width in enumerate(parts, start=1):
                for i in range(q):
                    assert grid.row_count(i, label) == width
                    assert grid.column_count(i, label) == width
            # unassigned cells are also balanced
            for i in range(q):
                assert grid.row_count(i, 0) == q - sum(parts)

    def test_partial_assignment_allowed(self):
        grid = proportional_partition(3, (1,))
        assert grid.row_count(0, 0) == 2


class TestExpandTransition:
    def test_single_block_half_half(self):
        R = TransitionMatrix([[ProbDist([F(1, 2), F(1, 2)])]])
        E = expand_transition([(1, 1)], [(1, 1)], R)
        assert E.ell == 2
        assert [list(r) for r in E.entries] == [[2, 1], [1, 2]]

    def test_point_mass_blocks(self):
        # block/stripe pair: every cell is a 1x1 block holding its point
        R = TransitionMatrix(
            [[ProbDist.point_mass(4, 2 * i + j) for j in range(2)] for i in range(2)]
        )
        F_w = [(1, 1, 0, 0), (0, 0, 1, 1)]
        G_w = [(1, 0, 1, 0), (0, 1, 0, 1)]
        E = expand_transition(F_w, G_w, R)
        assert E.ell == 1
        assert [list(r) for r in E.entries] == [[1, 2], [3, 4]]

    def test_prefix_n2(self):
        E = expand_transition(kedlaya_weights(2), kedlaya_weights(2), kedlaya_transition(2))
        assert E.ell == 1
        assert [list(r) for r in E.entries] == [[1, 1], [1, 2]]

    def test_rejects_non_transition(self):
        R = TransitionMatrix([[ProbDist([F(1), F(0)])]])
        with pytest.raises(NotATransition):
            expand_transition([(1, 1)], [(1, 1)], R)

    def test_block_recount_recovers_scaled_entries(self):
        profile = cyclic_profile_explicit(5, 2)
        k, l = profile.k, profile.l
        R = lift_cyclic_profile(5, k, l, profile)
        E = expand_transition(cyclic_weights(5, k), cyclic_weights(5, l), R)
        ell = E.ell
        for i in range(R.k):
            for j in range(R.m):
                for s in range(1, 6):
                    count = sum(
                        E.entries[i * ell + r][j * ell + c] == s
                        for r in range(ell)
                        for c in range(ell)
                    )
                    assert count == ell * ell * R.entry(i, j)[s - 1]


class TestVerifyExpansion:
    def test_constructed_expansions_verify(self):
        E = expand_transition(kedlaya_weights(3), kedlaya_weights(3), kedlaya_transition(3))
        assert verify_expansion(E, kedlaya_weights(3), kedlaya_weights(3)).valid

    def test_hand_grid(self):
        E = ExpansionMatrix(2, 2, 1, 1, [[2, 1], [1, 2]])
        assert verify_expansion(E, [(1, 1)], [(1, 1)]).valid

    def test_swapped_entries_break_column_counts(self):
        profile = cyclic_profile_explicit(3, 2)
        R = lift_cyclic_profile(3, 2, 2, profile)
        W = cyclic_weights(3, 2)
        E = expand_transition(W, W, R)
        grid = [list(r) for r in E.entries]
        row = grid[0]
        # swap within one row across different column blocks
        ell = E.ell
        a, b = 0, ell
        while row[a] == row[b]:
            b += 1
        row[a], row[b] = row[b], row[a]
        tampered = ExpansionMatrix(E.n, E.ell, E.k, E.m, grid)
        cert = verify_expansion(tampered, W, W)
        assert not cert.valid
        assert any(loc[0] == "col" for loc in cert.locations())

    def test_mean_chain_matches_weighted_composition(self):
        profile = cyclic_profile_explicit(5, 3)
        k, l = profile.k, profile.l
        R = lift_cyclic_profile(5, k, l, profile)
        Fw, Gw = cyclic_weights(5, k), cyclic_weights(5, l)
        E = expand_transition(Fw, Gw, R)
        x = (1.0, 4.0, 0.25, 9.0, 2.0)
        cert = verify_expansion(
            E, Fw, Gw, pair=(MeanSpec.power(0), MeanSpec.power(1)), x=x
        )
        assert cert.valid

    def test_dimension_mismatch(self):
        E = ExpansionMatrix(2, 2, 1, 1, [[2, 1], [1, 2]])
        with pytest.raises(DimensionMismatch):
            verify_expansion(E, [(1, 1)], [(1, 1), (1, 1)])


class TestEndToEndInequality:
    def test_expansion_reproduces_chained_inequality(self):
        rng = random.Random(59)
        profile = cyclic_profile_explicit(4, 2)
        k, l = profile.k, profile.l
        R = lift_cyclic_profile(4, k, l, profile)
        Fw, Gw = cyclic_weights(4, k), cyclic_weights(4, l)
        E = expand_transition(Fw, Gw, R)
        M, N = MeanSpec.power(0), MeanSpec.power(1)
        for _ in range(20):
            x = [rng.uniform(0.01, 100.0) for _ in range(4)]
            row_side = evaluate_mean(N, [
                evaluate_mean(M, [x[v - 1] for v in row]) for row in E.entries
            ])
            col_side = evaluate_mean(M, [
                evaluate_mean(N, [x[row[c] - 1] for row in E.entries])
                for c in range(E.num_cols)
            ])
            lhs = evaluate_mean(N, [evaluate_weighted(M, w, x) for w in Fw])
            rhs = evaluate_mean(M, [evaluate_weighted(N, w, x) for w in Gw])
            scale = max(abs(float(lhs)), abs(float(rhs)), 1.0)
            assert abs(float(row_side) - float(lhs)) <= 1e-12 * scale
            assert abs(float(col_side) - float(rhs)) <= 1e-12 * scale
            assert float(lhs) <= float(rhs) + 1e-12 * scale
