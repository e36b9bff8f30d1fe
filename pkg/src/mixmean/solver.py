"""Exact rational LP feasibility via phase-1 simplex with Bland's rule.

Feasibility of the conjugacy equations over the reals implies feasibility over
the rationals, because the solution polytope has a rational extreme point; the
simplex method terminates at exactly such a point, so every certificate it
returns is a tuple of exact rationals.  No floating point is used anywhere.

Arithmetic runs on gmpy2 rationals when available (roughly 10x faster) and
falls back to fractions.Fraction; results are always plain Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .constructions import ProfileMatrix, project, verify_cyclic_profile
from .distributions import DistSequence, ProbDist, TransitionMatrix
from .errors import DimensionMismatch, OutOfRange

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _rat = Fraction


@dataclass(frozen=True)
class LinearSystem:
    """Equality constraints over nonnegative variables, all coefficients rational.

    equalities is a sequence of (coefficient row, right-hand side); every row
    must have exactly num_vars entries.
    """

    num_vars: int
    equalities: Tuple[Tuple[Tuple[Fraction, ...], Fraction], ...]

    def __init__(self, num_vars: int, equalities: Sequence):
        if num_vars < 1:
            raise OutOfRange("a system needs at least one variable")
        rows = []
        for coeffs, rhs in equalities:
            row = tuple(Fraction(c) for c in coeffs)
            if len(row) != num_vars:
                raise DimensionMismatch(
                    f"coefficient row has {len(row)} entries, expected {num_vars}"
                )
            rows.append((row, Fraction(rhs)))
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "equalities", tuple(rows))


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a feasibility solve.

    feasible: assignment holds one exact rational per variable.
    infeasible: witness is the strictly positive phase-1 optimum, i.e. the
    smallest achievable total artificial mass.
    """

    feasible: bool
    assignment: Optional[Tuple[Fraction, ...]] = None
    witness: Optional[Fraction] = None


def _phase1(num_vars: int, rows: List[list], rhs: List) -> Tuple[object, List]:
    """Minimize the total artificial slack; returns (optimum, variable values).

    Bland's smallest-index rule on both the entering and the leaving choice
    excludes cycling, so termination is unconditional.  Artificial columns are
    kept implicit: they start basic and are barred from re-entering.
    """
    zero = _rat(0)
    m = len(rows)
    tab = [list(r) + [b] for r, b in zip(rows, rhs)]
    for row in tab:
        if row[-1] < zero:
            for c in range(len(row)):
                row[c] = -row[c]
    basis = [num_vars + i for i in range(m)]
    obj = [sum(tab[i][j] for i in range(m)) for j in range(num_vars + 1)]
    while True:
        enter = -1
        for j in range(num_vars):
            if obj[j] > zero:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > zero:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:  # cannot happen: the phase-1 objective is bounded below
            raise AssertionError("unbounded phase-1 column")
        prow = tab[leave]
        piv = prow[enter]
        if piv != 1:
            prow = [v / piv for v in prow]
            tab[leave] = prow
        for i in range(m):
            if i != leave:
                f = tab[i][enter]
                if f != zero:
                    tab[i] = [a - f * b for a, b in zip(tab[i], prow)]
        f = obj[enter]
        if f != zero:
            obj = [a - f * b for a, b in zip(obj, prow)]
        basis[leave] = enter
    values = [zero] * num_vars
    for i, b in enumerate(basis):
        if b < num_vars:
            values[b] = tab[i][-1]
    return obj[-1], values


def solve_feasibility(system: LinearSystem) -> SolveOutcome:
    """Decide exact feasibility of {Ax = b, x >= 0}."""
    rows = [[_rat(c.numerator, c.denominator) for c in coeffs] for coeffs, _ in system.equalities]
    rhs = [_rat(b.numerator, b.denominator) for _, b in system.equalities]
    if not rows:
        return SolveOutcome(True, tuple(Fraction(0) for _ in range(system.num_vars)))
    optimum, values = _phase1(system.num_vars, rows, rhs)
    if optimum != 0:
        return SolveOutcome(False, witness=Fraction(optimum.numerator, optimum.denominator))
    return SolveOutcome(True, tuple(Fraction(v.numerator, v.denominator) for v in values))


# ---------------------------------------------------------------------------
# Conjugacy systems
# ---------------------------------------------------------------------------

def transition_system(P: DistSequence, Q: DistSequence) -> LinearSystem:
    """The conjugacy equations for (P, Q) as an explicit linear system.

    Variables are x[i,j,t] in row-major (i, j, t) order; constraints are the
    per-entry total-mass rows, then the P marginals, then the Q marginals.
    Marginal rows are scaled by m (resp. k) to keep coefficients integral.
    """
    if P.n != Q.n:
        raise DimensionMismatch(f"ground sets differ: {P.n} vs {Q.n}")
    k, m, n = len(P), len(Q), P.n
    nv = k * m * n

    def idx(i, j, t):
        return (i * m + j) * n + t

    zero_row = [Fraction(0)] * nv
    eqs = []
    for i in range(k):
        for j in range(m):
            row = zero_row.copy()
            for t in range(n):
                row[idx(i, j, t)] = Fraction(1)
            eqs.append((row, Fraction(1)))
    for i in range(k):
        for t in range(n):
            row = zero_row.copy()
            for j in range(m):
                row[idx(i, j, t)] = Fraction(1)
            eqs.append((row, m * P[i][t]))
    for j in range(m):
        for t in range(n):
            row = zero_row.copy()
            for i in range(k):
                row[idx(i, j, t)] = Fraction(1)
            eqs.append((row, k * Q[j][t]))
    return LinearSystem(nv, eqs)


@dataclass(frozen=True)
class TransitionSolve:
    feasible: bool
    matrix: Optional[TransitionMatrix] = None
    witness: Optional[Fraction] = None


def solve_transition(P: DistSequence, Q: DistSequence) -> TransitionSolve:
    """Find an exact transition matrix between P and Q, or prove none exists.

    A feasible outcome always passes verify_transition; an infeasible one
    means no real-valued transition matrix exists either.
    """
    outcome = solve_feasibility(transition_system(P, Q))
    if not outcome.feasible:
        return TransitionSolve(False, witness=outcome.witness)
    k, m, n = len(P), len(Q), P.n
    x = outcome.assignment
    rows = []
    for i in range(k):
        row = []
        for j in range(m):
            base = (i * m + j) * n
            row.append(ProbDist(x[base:base + n]))
        rows.append(row)
    return TransitionSolve(True, matrix=TransitionMatrix(rows))


@dataclass(frozen=True)
class ProfileSolve:
    feasible: bool
    profile: Optional[ProfileMatrix] = None
    witness: Optional[Fraction] = None


def cyclic_profile_system(n: int, k: int, l: int) -> LinearSystem:
    """Balance conditions for a k x n cyclic profile as a linear system.

    Variables are A[i,j] row-major; constraints are the column sums, the row
    sums, then the wrapped diagonal sums, scaled to integral right sides.
    """
    if not (1 <= k <= l <= n):
        raise OutOfRange(f"need 1 <= k <= l <= n, got k={k}, l={l}, n={n}")
    nv = k * n

    def idx(i, j):
        return i * n + j

    zero_row = [Fraction(0)] * nv
    eqs = []
    for j in range(n):
        row = zero_row.copy()
        for i in range(k):
            row[idx(i, j)] = Fraction(1)
        eqs.append((row, Fraction(1)))
    for i in range(k):
        row = zero_row.copy()
        for j in range(n):
            row[idx(i, j)] = Fraction(1)
        eqs.append((row, Fraction(n, k)))
    for j in range(1, n + 1):
        row = zero_row.copy()
        for i in range(1, k + 1):
            row[idx(i - 1, project(n, i + j - 1) - 1)] = Fraction(1)
        eqs.append((row, Fraction(n, l) if j <= l else Fraction(0)))
    return LinearSystem(nv, eqs)


def solve_cyclic_profile(n: int, k: int, l: int) -> ProfileSolve:
    """Decide existence of a cyclic profile for (n, k, l) and return one if any.

    Feasible outcomes always pass verify_cyclic_profile; within the regime
    k <= l <= n <= k+l-1 feasibility is equivalent to conjugacy of the two
    window families, and for n >= k+l the system is provably infeasible.
    """
    outcome = solve_feasibility(cyclic_profile_system(n, k, l))
    if not outcome.feasible:
        return ProfileSolve(False, witness=outcome.witness)
    x = outcome.assignment
    entries = [x[i * n:(i + 1) * n] for i in range(k)]
    profile = ProfileMatrix(n, k, l, entries)
    cert = verify_cyclic_profile(n, k, l, profile)
    if not cert.valid:  # cannot happen: the system encodes exactly these identities
        raise AssertionError("solver produced an invalid profile")
    return ProfileSolve(True, profile=profile)
