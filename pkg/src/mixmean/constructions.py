"""Explicit conjugacy constructions: prefix families, subset families, cyclic blocks.

Three families of rational distributions come with closed-form certificates:

* the prefix-uniform family ((1/i) * indicator of {1..i})_{i<=n}, self-conjugated
  through a factorial-formula transition matrix;
* the subset family C_n^k of normalized indicators of all k-element subsets in
  lexicographic order, conjugated to C_n^l whenever max(k,l) <= n <= k+l-1;
* the cyclic window family O_n^k of normalized length-k windows, conjugated to
  O_n^l (k <= l <= n <= k+l-1) exactly when a k x n "profile" matrix with
  three balance conditions exists; for l = n-k+1 an explicit falling-factorial
  profile is available.

Profile matrices lift to full n x n transition matrices and can be extracted
back by averaging over the cyclic rotation action.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable, List, Tuple

from .distributions import (
    Certificate,
    DistSequence,
    Failure,
    ProbDist,
    TransitionMatrix,
    dist_from_weights,
    uniform_on_support,
    verify_transition,
)
from .errors import DimensionMismatch, HypothesisViolated, InvalidProfile, NotATransition, OutOfRange
from .means import WeightFunction

FALLING = "falling"
RISING = "rising"


# ---------------------------------------------------------------------------
# Pochhammer symbols
# ---------------------------------------------------------------------------

def pochhammer(base, steps: int, direction: str = FALLING) -> Fraction:
    """Falling product base*(base-1)*...*(base-steps+1), or rising analogue.

    steps = 0 gives the empty product 1.  Exact for rational bases.
    """
    if steps < 0:
        raise OutOfRange("steps must be a nonnegative integer")
    if direction not in (FALLING, RISING):
        raise ValueError(f"direction must be {FALLING!r} or {RISING!r}")
    b = Fraction(base)
    out = Fraction(1)
    for j in range(steps):
        out *= b - j if direction == FALLING else b + j
    return out


@dataclass(frozen=True)
class PochhammerValue:
    """A Pochhammer evaluation bundled with the data that produced it."""

    base: Fraction
    steps: int
    direction: str
    value: Fraction

    @classmethod
    def of(cls, base, steps: int, direction: str = FALLING) -> "PochhammerValue":
        b = Fraction(base)
        return cls(b, steps, direction, pochhammer(b, steps, direction))


def _falling(base: int, steps: int) -> int:
    out = 1
    for j in range(steps):
        out *= base - j
    return out


# ---------------------------------------------------------------------------
# Prefix-uniform (Kedlaya) family
# ---------------------------------------------------------------------------

def kedlaya_weights(n: int) -> List[WeightFunction]:
    """Indicator weight functions of the prefixes {1}, {1,2}, ..., {1..n}."""
    if n < 1:
        raise OutOfRange("n must be a positive integer")
    return [WeightFunction([1] * i + [0] * (n - i)) for i in range(1, n + 1)]


def kedlaya_family(n: int) -> DistSequence:
    """The prefix-uniform distributions ((1/i) on {1..i}) for i = 1..n."""
    return DistSequence(dist_from_weights(w) for w in kedlaya_weights(n))


def kedlaya_transition(n: int) -> TransitionMatrix:
    """Self-conjugacy certificate of the prefix-uniform family.

    Entry (i, j) puts mass
        (n-i)! (n-j)! (i-1)! (j-1)! / [ (n-1)! (t-1)! (n-i-j+t)! (i-t)! (j-t)! ]
    on coordinate t, a term being zero whenever any factorial argument in the
    denominator would be negative.
    """
    if n < 1:
        raise OutOfRange("n must be a positive integer")
    fact = [math.factorial(v) for v in range(n + 1)]
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            mass = []
            for t in range(1, n + 1):
                if t > i or t > j or n - i - j + t < 0:
                    mass.append(Fraction(0))
                    continue
                num = fact[n - i] * fact[n - j] * fact[i - 1] * fact[j - 1]
                den = fact[n - 1] * fact[t - 1] * fact[n - i - j + t] * fact[i - t] * fact[j - t]
                mass.append(Fraction(num, den))
            row.append(ProbDist(mass))
        rows.append(row)
    return TransitionMatrix(rows)


# ---------------------------------------------------------------------------
# Subset (combinations) family
# ---------------------------------------------------------------------------

def combinations_weights(n: int, k: int) -> List[WeightFunction]:
    """Indicators of all k-element subsets of {1..n}, lexicographic order."""
    if not 1 <= k <= n:
        raise OutOfRange(f"need 1 <= k <= n, got k={k}, n={n}")
    out = []
    for subset in combinations(range(n), k):
        w = [0] * n
        for s in subset:
            w[s] = 1
        out.append(WeightFunction(w))
    return out


def combinations_family(n: int, k: int) -> DistSequence:
    """Normalized indicators of all k-element subsets, lexicographic order."""
    return DistSequence(uniform_on_support(w) for w in combinations_weights(n, k))


def combinations_transition(n: int, k: int, l: int) -> TransitionMatrix:
    """Conjugacy certificate between the subset families C_n^k and C_n^l.

    Requires max(k, l) <= n <= k+l-1, which makes every pairwise support
    intersection nonempty; entry (i, j) is uniform on that intersection.
    """
    if not (1 <= k <= n and 1 <= l <= n):
        raise OutOfRange(f"need 1 <= k, l <= n, got k={k}, l={l}, n={n}")
    if n > k + l - 1:
        raise HypothesisViolated(f"need n <= k+l-1, got n={n} > {k + l - 1}")
    F = combinations_weights(n, k)
    G = combinations_weights(n, l)
    rows = []
    for f in F:
        fs = set(f.support)
        row = []
        for g in G:
            inter = fs.intersection(g.support)
            share = Fraction(1, len(inter))
            row.append(ProbDist(tuple(share if s in inter else Fraction(0) for s in range(n))))
        rows.append(row)
    return TransitionMatrix(rows)


# ---------------------------------------------------------------------------
# Cyclic window family and profile matrices
# ---------------------------------------------------------------------------

def project(n: int, v: int) -> int:
    """Canonical projection of an integer onto {1..n} modulo n."""
    return (v - 1) % n + 1


def cyclic_weights(n: int, k: int) -> List[WeightFunction]:
    """Indicators of the n cyclic windows of length k in {1..n}."""
    if not 1 <= k <= n:
        raise OutOfRange(f"need 1 <= k <= n, got k={k}, n={n}")
    out = []
    for i in range(1, n + 1):
        w = [0] * n
        for d in range(k):
            w[project(n, i + d) - 1] = 1
        out.append(WeightFunction(w))
    return out


def cyclic_family(n: int, k: int) -> DistSequence:
    """Normalized cyclic window indicators O_n^k."""
    return DistSequence(dist_from_weights(w) for w in cyclic_weights(n, k))


@dataclass(frozen=True)
class ProfileMatrix:
    """A k x n rational matrix tagged with the window lengths (k, l) it certifies.

    Construction only checks the shape and 1 <= k <= l <= n; the balance
    conditions are the business of verify_cyclic_profile, so that candidate
    matrices (from files or solvers) can be represented before being judged.
    """

    n: int
    k: int
    l: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, n: int, k: int, l: int, entries: Iterable[Iterable]):
        if not (1 <= k <= l <= n):
            raise OutOfRange(f"need 1 <= k <= l <= n, got k={k}, l={l}, n={n}")
        raw = tuple(tuple(row) for row in entries)
        for row in raw:
            for v in row:
                if not isinstance(v, Rational):
                    raise TypeError(f"profile entries must be rational, got {v!r}")
        grid = tuple(tuple(Fraction(v) for v in row) for row in raw)
        if len(grid) != k or any(len(row) != n for row in grid):
            raise DimensionMismatch(f"profile must be {k}x{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "entries", grid)


def cyclic_profile_explicit(n: int, k: int) -> ProfileMatrix:
    """Closed-form profile certifying conjugacy of O_n^k and O_n^{n-k+1}.

    With kk = min(k, n-k+1) and ll = max(k, n-k+1) (the two window lengths
    play symmetric roles), the entry in row i, column j is

        binom(kk-1, i-1) * (j-1)_falling(i-1) * (n-j)_falling(kk-i)
            / (n-1)_falling(kk-1).
    """
    if not 1 <= k <= n:
        raise OutOfRange(f"need 1 <= k <= n, got k={k}, n={n}")
    kk = min(k, n - k + 1)
    ll = n - kk + 1
    den = _falling(n - 1, kk - 1)
    rows = []
    for i in range(1, kk + 1):
        row = []
        for j in range(1, n + 1):
            num = math.comb(kk - 1, i - 1) * _falling(j - 1, i - 1) * _falling(n - j, kk - i)
            row.append(Fraction(num, den))
        rows.append(row)
    return ProfileMatrix(n, kk, ll, rows)


def verify_cyclic_profile(n: int, k: int, l: int, profile: ProfileMatrix) -> Certificate:
    """Exact check of nonnegativity and the three balance conditions.

    (i) every column sums to 1; (ii) every row sums to n/k; (iii) the wrapped
    diagonal sums sum_i A[i, (i+j-1 mod n)] equal n/l for j <= l and 0 beyond.
    """
    if (profile.n, profile.k, profile.l) != (n, k, l):
        raise DimensionMismatch(
            f"profile is ({profile.k},{profile.l},{profile.n}), asked to verify ({k},{l},{n})"
        )
    A = profile.entries
    failures = []
    for i in range(k):
        for j in range(n):
            if A[i][j] < 0:
                failures.append(Failure(("nonneg", i + 1, j + 1), Fraction(0), A[i][j]))
    for j in range(n):
        total = sum(A[i][j] for i in range(k))
        if total != 1:
            failures.append(Failure(("colsum", j + 1), Fraction(1), total))
    target = Fraction(n, k)
    for i in range(k):
        total = sum(A[i][j] for j in range(n))
        if total != target:
            failures.append(Failure(("rowsum", i + 1), target, total))
    for j in range(1, n + 1):
        total = sum(A[i - 1][project(n, i + j - 1) - 1] for i in range(1, k + 1))
        expected = Fraction(n, l) if j <= l else Fraction(0)
        if total != expected:
            failures.append(Failure(("window", j), expected, total))
    return Certificate(tuple(failures))


def lift_cyclic_profile(n: int, k: int, l: int, profile: ProfileMatrix) -> TransitionMatrix:
    """Expand a valid profile into the full n x n transition for (O_n^k, O_n^l).

    Entry (i, j) puts mass A[(s-i+1 mod n), (j+l-i mod n)] on coordinate s,
    reading rows beyond k of the profile as zero.  The column index carries an
    extra shift of l-1 relative to the row index so that column j averages to
    the forward window starting at j, which is what the exact verifier checks.
    """
    cert = verify_cyclic_profile(n, k, l, profile)
    if not cert.valid:
        raise InvalidProfile(f"profile fails {len(cert.failures)} balance identities")
    A = profile.entries

    def a_ext(r: int, c: int) -> Fraction:
        # 1-based lookup with zero rows k+1..n
        return A[r - 1][c - 1] if r <= k else Fraction(0)

    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            mass = [a_ext(project(n, s - i + 1), project(n, j + l - i)) for s in range(1, n + 1)]
            row.append(ProbDist(mass))
        rows.append(row)
    return TransitionMatrix(rows)


def rotate_transition(R: TransitionMatrix) -> TransitionMatrix:
    """One step of the cyclic rotation action on square transition matrices.

    Shifts row and column indices and the coordinate labels simultaneously;
    it maps transitions for (O_n^k, O_n^l) to transitions for the same pair.
    """
    if R.k != R.m or R.k != R.n:
        raise DimensionMismatch("rotation needs an n x n matrix over n coordinates")
    n = R.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            src = R.entry(project(n, i + 1) - 1, project(n, j + 1) - 1)
            row.append(ProbDist(tuple(src[project(n, s + 1) - 1] for s in range(1, n + 1))))
        rows.append(row)
    return TransitionMatrix(rows)


def extract_cyclic_profile(n: int, k: int, l: int, R: TransitionMatrix) -> ProfileMatrix:
    """Recover a valid profile from any transition between O_n^k and O_n^l.

    Averages R over all n rotations (a fixed point of the rotation action)
    and reads the profile off the first row: A[i, j] = Q[1, (j-l+1 mod n)](i).
    Inverse of lift_cyclic_profile on explicit profiles.
    """
    cert = verify_transition(cyclic_family(n, k), cyclic_family(n, l), R)
    if not cert.valid:
        raise NotATransition(f"matrix fails {len(cert.failures)} marginal identities")
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, n + 1):
            c = project(n, j - l + 1)
            total = Fraction(0)
            for alpha in range(n):
                total += R.entry(project(n, 1 + alpha) - 1, project(n, c + alpha) - 1)[
                    project(n, i + alpha) - 1
                ]
            row.append(total / n)
        rows.append(row)
    return ProfileMatrix(n, k, l, rows)
