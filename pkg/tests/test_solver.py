import random
from fractions import Fraction

import pytest

from mixmean.constructions import (
    combinations_family,
    cyclic_family,
    kedlaya_family,
    kedlaya_transition,
    verify_cyclic_profile,
)
from mixmean.distributions import DistSequence, ProbDist, verify_transition
from mixmean.errors import DimensionMismatch, OutOfRange
from mixmean.solver import (
    LinearSystem,
    solve_cyclic_profile,
    solve_feasibility,
    solve_transition,
    transition_system,
)

F = Fraction


class TestSolveFeasibility:
    def test_single_variable(self):
        outcome = solve_feasibility(LinearSystem(1, [([F(1)], F(1, 3))]))
        assert outcome.feasible
        assert outcome.assignment == (F(1, 3),)

    def test_contradiction(self):
        system = LinearSystem(2, [([F(1), F(1)], F(1)), ([F(1), F(-1)], F(3))])
        outcome = solve_feasibility(system)
        assert not outcome.feasible
        assert outcome.witness > 0

    def test_negative_rhs_normalized(self):
        outcome = solve_feasibility(LinearSystem(1, [([F(-2)], F(-1))]))
        assert outcome.feasible
        assert outcome.assignment == (F(1, 2),)

    def test_window_pair_7_3_5_system(self):
        system = transition_system(cyclic_family(7, 3), cyclic_family(7, 5))
        outcome = solve_feasibility(system)
        assert outcome.feasible

    def test_row_length_checked(self):
        with pytest.raises(DimensionMismatch):
            LinearSystem(2, [([F(1)], F(1))])

    def test_all_values_rational(self):
        system = transition_system(cyclic_family(4, 2), cyclic_family(4, 3))
        outcome = solve_feasibility(system)
        assert outcome.feasible
        assert all(isinstance(v, Fraction) for v in outcome.assignment)


class TestSolveTransition:
    def test_selfconjugacy_single_dist(self):
        d = ProbDist([F(1, 4), F(3, 4)])
        solved = solve_transition(DistSequence([d]), DistSequence([d]))
        assert solved.feasible
        assert solved.matrix.entry(0, 0).mass == d.mass

    def test_distinct_point_masses_infeasible(self):
        solved = solve_transition(
            DistSequence([ProbDist([1, 0])]), DistSequence([ProbDist([0, 1])])
        )
        assert not solved.feasible
        assert solved.witness > 0

    def test_prefix_family_feasible_and_verified(self):
        family = kedlaya_family(4)
        solved = solve_transition(family, family)
        assert solved.feasible
        assert verify_transition(family, family, solved.matrix).valid
        # the solver's basic solution need not match the closed-form certificate
        assert solved.matrix.k == kedlaya_transition(4).k

    def test_determinism(self):
        P = cyclic_family(5, 2)
        Q = cyclic_family(5, 4)
        first = solve_transition(P, Q)
        second = solve_transition(P, Q)
        assert first.matrix.rows == second.matrix.rows

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_transition(
                DistSequence([ProbDist([1, 0])]), DistSequence([ProbDist([1, 0, 0])])
            )


class TestSolveCyclicProfile:
    def test_window_pair_7_4_5_feasible(self):
        solved = solve_cyclic_profile(7, 4, 5)
        assert solved.feasible
        assert verify_cyclic_profile(7, 4, 5, solved.profile).valid

    def test_too_wide_infeasible(self):
        solved = solve_cyclic_profile(4, 2, 2)
        assert not solved.feasible
        assert solved.witness > 0

    def test_full_windows_uniform(self):
        # the uniform matrix witnesses feasibility; the solver returns some
        # vertex of the same polytope, which must also verify
        n = 5
        from mixmean.constructions import ProfileMatrix

        uniform = ProfileMatrix(n, n, n, [[F(1, n)] * n for _ in range(n)])
        assert verify_cyclic_profile(n, n, n, uniform).valid
        solved = solve_cyclic_profile(n, n, n)
        assert solved.feasible
        assert verify_cyclic_profile(n, n, n, solved.profile).valid

    def test_two_by_two_full_windows_unique_point(self):
        solved = solve_cyclic_profile(2, 2, 2)
        assert solved.feasible
        assert all(v == F(1, 2) for row in solved.profile.entries for v in row)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            solve_cyclic_profile(3, 2, 1)


class TestSmallScaleCompleteness:
    def test_prefix_families(self):
        for n in range(1, 5):
            family = kedlaya_family(n)
            assert solve_transition(family, family).feasible

    def test_window_families(self):
        for n in range(1, 6):
            for k in range(1, n + 1):
                for l in range(k, n + 1):
                    solved = solve_cyclic_profile(n, k, l)
                    assert solved.feasible == (n <= k + l - 1), (n, k, l)

    def test_subset_families(self):
        for n in range(1, 5):
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    if max(k, l) <= n <= k + l - 1:
                        P = combinations_family(n, k)
                        Q = combinations_family(n, l)
                        solved = solve_transition(P, Q)
                        assert solved.feasible
                        assert verify_transition(P, Q, solved.matrix).valid

    def test_window_transitions_direct(self):
        rng = random.Random(31)
        triples = [
            (n, k, l)
            for n in range(2, 6)
            for k in range(1, n + 1)
            for l in range(k, n + 1)
            if n <= k + l - 1
        ]
        for n, k, l in rng.sample(triples, 6):
            P = cyclic_family(n, k)
            Q = cyclic_family(n, l)
            solved = solve_transition(P, Q)
            assert solved.feasible
            assert verify_transition(P, Q, solved.matrix).valid
