"""Rational probability distributions over {1,...,n} and conjugacy certificates.

Two sequences (P_1..P_k) and (Q_1..Q_m) of distributions over a common ground
set are conjugated when some k x m grid R of distributions reproduces both as
exact averages: P_i = (1/m) sum_j R[i,j] and Q_j = (1/k) sum_i R[i,j].  All
checks here are exact rational identities; there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Tuple

from .errors import DimensionMismatch
from .means import WeightFunction

VALID = "valid"
INVALID = "invalid"


def _fraction_tuple(values) -> Tuple[Fraction, ...]:
    out = []
    for v in values:
        if not isinstance(v, Rational):
            raise TypeError(f"expected rational entries, got {v!r}")
        out.append(Fraction(v))
    return tuple(out)


@dataclass(frozen=True)
class ProbDist:
    """A probability vector with exact rational masses."""

    mass: Tuple[Fraction, ...]

    def __init__(self, mass: Iterable):
        object.__setattr__(self, "mass", _fraction_tuple(mass))
        if self.n < 1:
            raise ValueError("a distribution needs at least one coordinate")
        if any(m < 0 for m in self.mass):
            raise ValueError("masses must be nonnegative")
        if sum(self.mass) != 1:
            raise ValueError(f"masses must sum to 1, got {sum(self.mass)}")

    @property
    def n(self) -> int:
        return len(self.mass)

    def __getitem__(self, t: int) -> Fraction:
        return self.mass[t]

    def __iter__(self):
        return iter(self.mass)

    @classmethod
    def point_mass(cls, n: int, at: int) -> "ProbDist":
        """Unit mass on 0-based coordinate `at`."""
        return cls(tuple(Fraction(int(t == at)) for t in range(n)))


@dataclass(frozen=True)
class DistSequence:
    """Nonempty sequence of distributions over a common ground set."""

    items: Tuple[ProbDist, ...]

    def __init__(self, items: Iterable[ProbDist]):
        object.__setattr__(self, "items", tuple(items))
        if not self.items:
            raise ValueError("a sequence needs at least one distribution")
        n = self.items[0].n
        if any(d.n != n for d in self.items):
            raise DimensionMismatch("all distributions must share the same n")

    @property
    def n(self) -> int:
        return self.items[0].n

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i: int) -> ProbDist:
        return self.items[i]

    def __iter__(self):
        return iter(self.items)

    def average(self) -> Tuple[Fraction, ...]:
        """Coordinatewise average (1/len) * sum of the items."""
        k = len(self.items)
        return tuple(sum(d[t] for d in self.items) / k for t in range(self.n))


@dataclass(frozen=True)
class TransitionMatrix:
    """k x m grid of distributions over a common ground set."""

    rows: Tuple[Tuple[ProbDist, ...], ...]

    def __init__(self, rows: Iterable[Iterable[ProbDist]]):
        grid = tuple(tuple(row) for row in rows)
        object.__setattr__(self, "rows", grid)
        if not grid or not grid[0]:
            raise ValueError("a transition matrix needs at least one entry")
        m = len(grid[0])
        if any(len(row) != m for row in grid):
            raise DimensionMismatch("ragged transition matrix")
        n = grid[0][0].n
        for row in grid:
            for dist in row:
                if dist.n != n:
                    raise DimensionMismatch("all entries must share the same n")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @property
    def n(self) -> int:
        return self.rows[0][0].n

    def entry(self, i: int, j: int) -> ProbDist:
        return self.rows[i][j]


class Failure(NamedTuple):
    """One violated exact identity; locations carry 1-based indices."""

    location: tuple
    expected: Fraction
    actual: Fraction


@dataclass(frozen=True)
class Certificate:
    """Outcome of an exact verification; valid iff no failures were recorded."""

    failures: Tuple[Failure, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return VALID if self.valid else INVALID

    def locations(self) -> Tuple[tuple, ...]:
        return tuple(f.location for f in self.failures)


def dist_from_weights(weights) -> ProbDist:
    """Normalize a weight function into its associated rational distribution."""
    if not isinstance(weights, WeightFunction):
        weights = WeightFunction(weights)
    total = weights.total
    return ProbDist(tuple(Fraction(w, total) for w in weights))


def uniform_on_support(weights) -> ProbDist:
    """Uniform distribution on the support of a weight function."""
    if not isinstance(weights, WeightFunction):
        weights = WeightFunction(weights)
    support = weights.support
    share = Fraction(1, len(support))
    return ProbDist(tuple(share if w > 0 else Fraction(0) for w in weights))


def _check_common_n(P: DistSequence, Q: DistSequence) -> None:
    if P.n != Q.n:
        raise DimensionMismatch(f"ground sets differ: {P.n} vs {Q.n}")


def necessary_condition(P: DistSequence, Q: DistSequence) -> bool:
    """Exact equality of the two sequence averages; necessary for conjugacy."""
    _check_common_n(P, Q)
    return P.average() == Q.average()


def verify_transition(P: DistSequence, Q: DistSequence, R: TransitionMatrix) -> Certificate:
    """Check the exact marginal identities of a conjugacy certificate.

    Valid iff P_i = (1/m) sum_j R[i,j] and Q_j = (1/k) sum_i R[i,j] hold as
    exact rational identities; every violated coordinate is reported.
    """
    _check_common_n(P, Q)
    if R.k != len(P) or R.m != len(Q) or R.n != P.n:
        raise DimensionMismatch(
            f"matrix is {R.k}x{R.m} over n={R.n}, families need {len(P)}x{len(Q)} over n={P.n}"
        )
    k, m, n = R.k, R.m, R.n
    failures = []
    for i in range(k):
        for t in range(n):
            actual = sum(R.entry(i, j)[t] for j in range(m)) / m
            if actual != P[i][t]:
                failures.append(Failure(("P", i + 1, t + 1), P[i][t], actual))
    for j in range(m):
        for t in range(n):
            actual = sum(R.entry(i, j)[t] for i in range(k)) / k
            if actual != Q[j][t]:
                failures.append(Failure(("Q", j + 1, t + 1), Q[j][t], actual))
    return Certificate(tuple(failures))
