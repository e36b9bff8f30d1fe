"""
Cyclic window families: profiles, lifting, and the feasibility boundary
=======================================================================

O_n^k is the family of n normalized cyclic windows of length k in {1..n}.
Conjugacy of O_n^k and O_n^l (for k <= l <= n <= k+l-1) is equivalent to the
existence of a small k x n "profile" matrix with three balance conditions:
unit column sums, row sums n/k, and wrapped-diagonal sums n/l on the first l
diagonals and zero beyond.  For l = n-k+1 a falling-factorial formula writes
the profile down directly; for other pairs an exact rational LP decides it.
"""

from mixmean import (
    MeanSpec,
    cyclic_family,
    cyclic_profile_explicit,
    cyclic_weights,
    extract_cyclic_profile,
    lift_cyclic_profile,
    random_suite,
    SamplerConfig,
    solve_cyclic_profile,
    verify_cyclic_profile,
    verify_transition,
)
from mixmean.serialize import profile_to_text

# the closed-form profile for (n, k) = (7, 3), certifying O_7^3 ~ O_7^5
profile = cyclic_profile_explicit(7, 3)
print(f"explicit profile for windows of length {profile.k} and {profile.l} in n={profile.n}:")
print(profile_to_text(profile))

# lift it to a full 7x7 transition matrix and check both marginal families
R = lift_cyclic_profile(7, 3, 5, profile)
cert = verify_transition(cyclic_family(7, 3), cyclic_family(7, 5), R)
print(f"lifted transition verifies: {cert.verdict}")

# extraction inverts the lift: average over rotations, read off row one
recovered = extract_cyclic_profile(7, 3, 5, R)
print(f"extract(lift(profile)) == profile: {recovered.entries == profile.entries}")

# pairs off the l = n-k+1 line need the solver, e.g. windows 4 and 5 in n=7
solved = solve_cyclic_profile(7, 4, 5)
print(f"\nsolver finds a (7,4,5) profile: feasible={solved.feasible}")
print(profile_to_text(solved.profile))

# map the feasibility boundary: within k <= l <= n <= k+l-1 every pair is
# feasible; from n >= k+l onwards the same system is provably infeasible.
# beyond the n = k+l-1 line the balance conditions force a contradiction,
# and the solver's positive phase-1 optimum is an exact witness.
print("feasibility of window profiles, k <= l (rows: n, entries: 'l values feasible'):")
for n in range(2, 11):
    feasible_pairs = []
    for k in range(1, n + 1):
        for l in range(k, n + 1):
            if solve_cyclic_profile(n, k, l).feasible:
                feasible_pairs.append((k, l))
    boundary_ok = all(n <= k + l - 1 for k, l in feasible_pairs)
    missing = [
        (k, l)
        for k in range(1, n + 1)
        for l in range(k, n + 1)
        if n <= k + l - 1 and (k, l) not in feasible_pairs
    ]
    print(f"  n={n:2d}: {len(feasible_pairs):2d} feasible pairs;"
          f" all satisfy n <= k+l-1: {boundary_ok}; regime gaps: {missing or 'none'}")

# the certified conjugacy turns into a mixed-mean inequality over the windows
suite = random_suite(
    MeanSpec.power(0),
    MeanSpec.power(1),
    cyclic_weights(7, 3),
    cyclic_weights(7, 5),
    SamplerConfig(count=5_000, seed=42),
    transition=R,
)
print(f"\nwindow inequality (length 3 vs 5), {suite.count} samples:"
      f" {suite.failures} violations, worst slack {suite.min_slack:.3e}")
