"""Integer repetition matrices realizing a rational transition certificate.

A rational transition matrix R between the normalized families of
(F_1..F_k) and (G_1..G_m) expands into an (ell*k) x (ell*m) grid of labels
from {1..n}: the (i, j) block is an ell x ell doubly balanced partition whose
label s occupies ell*R[i,j](s) cells in every block row and block column.
Whole grid rows then repeat label s proportionally to F_i(s), and grid
columns proportionally to G_j(s), so evaluating a mean along rows and another
across the row values reduces, by repetition invariance, to the weighted
mixed-mean composition.  The double balance inside each block follows the
wrap-around diagonal band construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .distributions import (
    Certificate,
    DistSequence,
    Failure,
    TransitionMatrix,
    dist_from_weights,
    verify_transition,
)
from .errors import DimensionMismatch, NotATransition, OverfullWeights
from .means import MeanSpec, WeightFunction, evaluate_mean, evaluate_weighted

UNASSIGNED = 0


@dataclass(frozen=True)
class GridPartition:
    """A q x q grid of labels; 0 marks cells not claimed by any band."""

    q: int
    labels: Tuple[Tuple[int, ...], ...]

    def __init__(self, q: int, labels: Iterable[Iterable[int]]):
        grid = tuple(tuple(int(v) for v in row) for row in labels)
        if len(grid) != q or any(len(row) != q for row in grid):
            raise DimensionMismatch(f"label grid must be {q}x{q}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "labels", grid)

    def row_count(self, i: int, label: int) -> int:
        return self.labels[i].count(label)

    def column_count(self, j: int, label: int) -> int:
        return sum(1 for row in self.labels if row[j] == label)


def proportional_partition(q: int, band_weights: Sequence[int]) -> GridPartition:
    """Doubly balanced band assignment: label s fills band_weights[s] diagonals.

    Cell (i, (j mod q)+1) receives label s for j in [i+P_{s-1}, i+P_s-1],
    where P is the prefix-sum sequence of the band weights; every row and
    every column then holds label s exactly band_weights[s] times.  Cells
    beyond the last band stay unassigned; a full partition needs sum(p) = q.
    """
    if q < 1:
        raise DimensionMismatch("grid side must be a positive integer")
    p = [int(v) for v in band_weights]
    if any(v < 0 for v in p):
        raise ValueError("band weights must be nonnegative")
    if sum(p) > q:
        raise OverfullWeights(f"band weights sum to {sum(p)} > q = {q}")
    grid = [[UNASSIGNED] * q for _ in range(q)]
    prefix = 0
    for label0, width in enumerate(p):
        for i in range(1, q + 1):
            for j in range(i + prefix, i + prefix + width):
                grid[i - 1][j % q] = label0 + 1
        prefix += width
    return GridPartition(q, grid)


@dataclass(frozen=True)
class ExpansionMatrix:
    """(ell*k) x (ell*m) grid of labels in {1..n}; every cell is assigned."""

    n: int
    ell: int
    k: int
    m: int
    entries: Tuple[Tuple[int, ...], ...]

    def __init__(self, n: int, ell: int, k: int, m: int, entries: Iterable[Iterable[int]]):
        grid = tuple(tuple(int(v) for v in row) for row in entries)
        if len(grid) != ell * k or any(len(row) != ell * m for row in grid):
            raise DimensionMismatch(f"expansion must be {ell * k}x{ell * m}")
        for row in grid:
            for v in row:
                if not 1 <= v <= n:
                    raise ValueError(f"labels must lie in 1..{n}, got {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "entries", grid)

    @property
    def num_rows(self) -> int:
        return self.ell * self.k

    @property
    def num_cols(self) -> int:
        return self.ell * self.m


def _as_weight_list(ws) -> List[WeightFunction]:
    return [w if isinstance(w, WeightFunction) else WeightFunction(w) for w in ws]


def expand_transition(F, G, R: TransitionMatrix) -> ExpansionMatrix:
    """Expand a verified transition matrix into an integer repetition grid.

    ell is the least common multiple of all entry denominators of R, the
    smallest scale at which every block count ell*R[i,j](s) is integral.
    """
    F = _as_weight_list(F)
    G = _as_weight_list(G)
    P = DistSequence(dist_from_weights(w) for w in F)
    Q = DistSequence(dist_from_weights(w) for w in G)
    cert = verify_transition(P, Q, R)
    if not cert.valid:
        raise NotATransition(f"matrix fails {len(cert.failures)} marginal identities")
    k, m, n = R.k, R.m, R.n
    ell = 1
    for i in range(k):
        for j in range(m):
            for t in range(n):
                ell = math.lcm(ell, R.entry(i, j)[t].denominator)
    grid = [[UNASSIGNED] * (ell * m) for _ in range(ell * k)]
    for i in range(k):
        for j in range(m):
            counts = [int(ell * R.entry(i, j)[t]) for t in range(n)]
            block = proportional_partition(ell, counts)
            for r in range(ell):
                target = grid[i * ell + r]
                source = block.labels[r]
                for c in range(ell):
                    target[j * ell + c] = source[c]
    return ExpansionMatrix(n, ell, k, m, grid)


def _default_probe(n: int) -> Tuple[int, ...]:
    return tuple(range(1, n + 1))


def verify_expansion(
    E: ExpansionMatrix,
    F,
    G,
    pair: Optional[Tuple[MeanSpec, MeanSpec]] = None,
    x: Optional[Sequence] = None,
    rel_tol: float = 1e-12,
) -> Certificate:
    """Recount every row and column of an expansion against the weight profiles.

    Row r (in block row i) must contain label s exactly ell*m*F_i(s)/sum(F_i)
    times, and column c (in block column j) exactly ell*k*G_j(s)/sum(G_j)
    times; these counts are checked exactly.  Additionally the two mean
    chains over the grid must reproduce the weighted compositions: evaluating
    `pair = (M, N)` (geometric/arithmetic by default) on the probe vector x
    along rows resp. columns is compared to the evaluate_weighted composition
    within rel_tol; numeric mismatches are recorded at double precision.
    """
    F = _as_weight_list(F)
    G = _as_weight_list(G)
    if len(F) != E.k or len(G) != E.m:
        raise DimensionMismatch(f"expansion is {E.k}x{E.m} blocks, got {len(F)}x{len(G)} weights")
    if any(len(w) != E.n for w in F) or any(len(w) != E.n for w in G):
        raise DimensionMismatch(f"weight functions must have length {E.n}")
    n, ell, k, m = E.n, E.ell, E.k, E.m
    failures = []

    for r in range(E.num_rows):
        i = r // ell
        wsum = F[i].total
        counts = [0] * (n + 1)
        for v in E.entries[r]:
            counts[v] += 1
        for s in range(n):
            expected = Fraction(ell * m * F[i][s], wsum)
            if counts[s + 1] != expected:
                failures.append(Failure(("row", r + 1, s + 1), expected, Fraction(counts[s + 1])))
    for c in range(E.num_cols):
        j = c // ell
        wsum = G[j].total
        counts = [0] * (n + 1)
        for row in E.entries:
            counts[row[c]] += 1
        for s in range(n):
            expected = Fraction(ell * k * G[j][s], wsum)
            if counts[s + 1] != expected:
                failures.append(Failure(("col", c + 1, s + 1), expected, Fraction(counts[s + 1])))

    if failures:
        return Certificate(tuple(failures))

    M, N = pair if pair is not None else (MeanSpec.power(0), MeanSpec.power(1))
    probe = tuple(x) if x is not None else _default_probe(n)
    if len(probe) != n:
        raise DimensionMismatch(f"probe vector must have length {n}")

    row_means = [evaluate_mean(M, [probe[v - 1] for v in row]) for row in E.entries]
    chained_rows = evaluate_mean(N, row_means)
    composed_rows = evaluate_mean(N, [evaluate_weighted(M, w, probe) for w in F])
    col_means = [
        evaluate_mean(N, [probe[row[c] - 1] for row in E.entries]) for c in range(E.num_cols)
    ]
    chained_cols = evaluate_mean(M, col_means)
    composed_cols = evaluate_mean(M, [evaluate_weighted(N, w, probe) for w in G])
    for tag, got, want in (
        ("rows-mean", chained_rows, composed_rows),
        ("cols-mean", chained_cols, composed_cols),
    ):
        scale = max(abs(float(got)), abs(float(want)), 1.0)
        if abs(float(got) - float(want)) > rel_tol * scale:
            failures.append(Failure((tag,), Fraction(float(want)), Fraction(float(got))))
    return Certificate(tuple(failures))
