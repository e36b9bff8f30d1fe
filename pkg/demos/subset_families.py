"""
Subset families and the Leng--Si--Zhu inequality
================================================

The normalized indicators of all k-element subsets of {1..n} form a family
C_n^k.  Whenever max(k,l) <= n <= k+l-1, every k-subset meets every l-subset,
and putting the uniform distribution on each intersection gives an exact
transition matrix between C_n^k and C_n^l.  With k = l = n-1 this certifies
the Leng--Si--Zhu inequality (geometric means of the leave-one-out blocks vs
arithmetic means of the same blocks).
"""

from mixmean import (
    MeanSpec,
    SamplerConfig,
    combinations_family,
    combinations_transition,
    combinations_weights,
    check_mixed_inequality,
    random_suite,
    verify_transition,
)
from mixmean.errors import HypothesisViolated

n, k = 5, 4
family = combinations_family(n, k)
print(f"C_{n}^{k} has {len(family)} members (lexicographic):")
for dist in family:
    print("  ", tuple(str(v) for v in dist))

matrix = combinations_transition(n, k, k)
print(f"\nintersection transition verifies: {verify_transition(family, family, matrix).verdict}")

# outside the window the construction is impossible: 2-subsets of {1..4}
# can be disjoint, so the uniform-intersection recipe has nothing to average
try:
    combinations_transition(4, 2, 2)
except HypothesisViolated as exc:
    print(f"\n(4,2,2) rejected as expected: {exc}")

# the leave-one-out inequality on a concrete vector
geometric, arithmetic = MeanSpec.power(0), MeanSpec.power(1)
weights = combinations_weights(n, k)
x = (2.0, 5.0, 1.0, 7.0, 3.0)
report = check_mixed_inequality(geometric, arithmetic, weights, weights, x)
print(f"\nx = {x}")
print(f"  arithmetic mean of blockwise geometric means = {report.lhs:.12f}")
print(f"  geometric mean of blockwise arithmetic means = {report.rhs:.12f}")
print(f"  holds = {report.holds}")

# power-mean generalization: any exponent pair p <= q works the same way
suite = random_suite(
    MeanSpec.power(-1),
    MeanSpec.power(2),
    weights,
    weights,
    SamplerConfig(count=5_000, seed=11),
    transition=matrix,
)
print(f"\nharmonic-vs-quadratic variant, {suite.count} samples: {suite.failures} violations")
print(f"worst slack {suite.min_slack:.3e}")
