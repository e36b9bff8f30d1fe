"""
From rational certificates to integer repetition grids
======================================================

Why does a transition matrix force the mixed-mean inequality?  Scale the
matrix by the common denominator of its entries and tile each entry into a
doubly balanced block of labels: the result is an integer grid in which every
row repeats the values according to one left weight function and every column
according to one right weight function.  Applying an order-compatible pair of
means along rows and then across (or vice versa) literally becomes the two
sides of the inequality, by repetition invariance alone.
"""

from fractions import Fraction

from mixmean import (
    MeanSpec,
    ProbDist,
    TransitionMatrix,
    cyclic_profile_explicit,
    cyclic_weights,
    evaluate_mean,
    evaluate_weighted,
    expand_transition,
    lift_cyclic_profile,
    proportional_partition,
    verify_expansion,
)
from mixmean.serialize import expansion_to_text

# the core tiling primitive: bands wrapping around the diagonal.
# with side 5 and band widths (2, 2, 1), every row and every column
# holds label 1 twice, label 2 twice, and label 3 once.
block = proportional_partition(5, (2, 2, 1))
for row in block.labels:
    print(" ".join(str(v) for v in row))

# a one-cell transition matrix with entry (1/2, 1/2) expands at scale 2
tiny = TransitionMatrix([[ProbDist([Fraction(1, 2), Fraction(1, 2)])]])
expansion = expand_transition([(1, 1)], [(1, 1)], tiny)
print(f"\nscale ell = {expansion.ell}:")
print(expansion_to_text(expansion))

# a real instance: cyclic windows of lengths 2 and 3 in n = 4
profile = cyclic_profile_explicit(4, 2)
k, l = profile.k, profile.l
R = lift_cyclic_profile(4, k, l, profile)
F, G = cyclic_weights(4, k), cyclic_weights(4, l)
expansion = expand_transition(F, G, R)
print(f"window instance n=4: grid {expansion.num_rows}x{expansion.num_cols}, "
      f"ell={expansion.ell}")
print(expansion_to_text(expansion))

# the exact recount: row r repeats value s proportionally to the r-th left
# weight function, columns to the right ones, and the chained means match
certificate = verify_expansion(expansion, F, G)
print(f"count identities + mean chains verify: {certificate.verdict}")

# read the inequality straight off the grid
geometric, arithmetic = MeanSpec.power(0), MeanSpec.power(1)
x = (1.0, 4.0, 2.0, 9.0)
rows = [[x[v - 1] for v in row] for row in expansion.entries]
cols = [[x[row[c] - 1] for row in expansion.entries] for c in range(expansion.num_cols)]
lhs = evaluate_mean(arithmetic, [evaluate_mean(geometric, row) for row in rows])
rhs = evaluate_mean(geometric, [evaluate_mean(arithmetic, col) for col in cols])
print(f"rows then across: {float(lhs):.12f}")
print(f"columns then across: {float(rhs):.12f}")

composed_lhs = evaluate_mean(arithmetic, [evaluate_weighted(geometric, w, x) for w in F])
composed_rhs = evaluate_mean(geometric, [evaluate_weighted(arithmetic, w, x) for w in G])
print(f"weighted composition:  {float(composed_lhs):.12f} <= {float(composed_rhs):.12f}")
