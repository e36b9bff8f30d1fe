"""Mixed-mean inequality engine.

For an order-compatible pair of means (M, N) and weight families whose
normalized distributions are conjugated, the chained inequality

    N(M_{F_1}(x), ..., M_{F_k}(x)) <= M(N_{G_1}(x), ..., N_{G_m}(x))

holds for every positive input vector.  This module decides the known pair
criteria, evaluates single instances, and runs seeded randomized suites
against certified families.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .distributions import DistSequence, TransitionMatrix, dist_from_weights, verify_transition
from .errors import LengthMismatch, NotATransition, UncertifiedFamilies, UncertifiedPair
from .means import (
    GINI,
    MAX,
    MIN,
    POWER,
    MeanSpec,
    WeightFunction,
    evaluate_mean,
    evaluate_weighted,
    format_mean_spec,
    is_monotone,
)
from .solver import solve_transition

IS_PAIR = "is_pair"
NOT_PAIR = "not_pair"
UNKNOWN = "unknown"

REL_TOL = 1e-12


@dataclass(frozen=True)
class IJPairVerdict:
    status: str
    criterion: str

    @property
    def is_pair(self) -> bool:
        return self.status == IS_PAIR


def is_ij_pair(M: MeanSpec, N: MeanSpec) -> IJPairVerdict:
    """Decide order compatibility of (M, N) by the known exact criteria.

    Power pairs are compared by exponent; Gini pairs by the product-zero and
    interval-chain rule; min on the left or max on the right is decided by
    componentwise domination, which needs the partner mean to be monotone
    (all built-ins except Gini with both parameters on one side of zero).
    Everything else is reported as unknown rather than guessed.
    """
    if M.kind == POWER and N.kind == POWER:
        ok = M.p <= N.p
        return IJPairVerdict(IS_PAIR if ok else NOT_PAIR, "power means: pair iff p <= q")
    if M.kind == GINI and N.kind == GINI:
        p, q, r, s = M.p, M.q, N.p, N.q
        ok = p * q * r * s == 0 and min(p, q) <= min(r, s) <= max(p, q) <= max(r, s)
        return IJPairVerdict(
            IS_PAIR if ok else NOT_PAIR,
            "Gini means: pair iff pqrs = 0 and min(p,q) <= min(r,s) <= max(p,q) <= max(r,s)",
        )
    if M.kind == MIN and is_monotone(N):
        return IJPairVerdict(IS_PAIR, "min composed with a monotone mean dominates columnwise")
    if N.kind == MAX and is_monotone(M):
        return IJPairVerdict(IS_PAIR, "max composed with a monotone mean dominates rowwise")
    return IJPairVerdict(UNKNOWN, "no decision rule applies to this combination")


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated instance of the chained inequality."""

    lhs: float
    rhs: float
    slack: float
    holds: bool
    x: Tuple[float, ...]
    families: Optional[Tuple[str, str]] = None


def _as_weight_list(ws) -> List[WeightFunction]:
    return [w if isinstance(w, WeightFunction) else WeightFunction(w) for w in ws]


def check_mixed_inequality(
    M: MeanSpec,
    N: MeanSpec,
    F,
    G,
    x: Sequence,
    families: Optional[Tuple[str, str]] = None,
) -> InequalityReport:
    """Evaluate both sides of the chained inequality on one input vector.

    holds is slack >= -1e-12 * max(|lhs|, |rhs|, 1); the tolerance only
    absorbs floating rounding in root and logarithm evaluation.
    """
    F = _as_weight_list(F)
    G = _as_weight_list(G)
    xs = tuple(x)
    if any(len(w) != len(xs) for w in F) or any(len(w) != len(xs) for w in G):
        raise LengthMismatch(f"weight functions must have length {len(xs)}")
    lhs = float(evaluate_mean(N, [evaluate_weighted(M, w, xs) for w in F]))
    rhs = float(evaluate_mean(M, [evaluate_weighted(N, w, xs) for w in G]))
    slack = rhs - lhs
    holds = slack >= -REL_TOL * max(abs(lhs), abs(rhs), 1.0)
    return InequalityReport(lhs, rhs, slack, holds, tuple(float(v) for v in xs), families)


@dataclass(frozen=True)
class SamplerConfig:
    """Log-uniform componentwise sampler driven by a counter-based generator."""

    count: int = 1000
    seed: int = 0
    low: float = 1e-3
    high: float = 1e3


def sample_inputs(config: SamplerConfig, n: int) -> np.ndarray:
    """count x n array of log-uniform positive samples; reproducible by seed."""
    rng = np.random.Generator(np.random.Philox(config.seed))
    logs = rng.uniform(math.log(config.low), math.log(config.high), size=(config.count, n))
    return np.exp(logs)


@dataclass(frozen=True)
class AggregateReport:
    """Summary of a randomized suite: failure count, worst slack, extremal input."""

    count: int
    failures: int
    min_slack: float
    argmin_x: Tuple[float, ...]
    seed: int
    families: Optional[Tuple[str, str]] = None


def _thread_cap(explicit: Optional[int]) -> int:
    if explicit is not None:
        return max(1, explicit)
    return max(1, int(os.environ.get("MIXMEAN_THREADS", "1")))


def random_suite(
    M: MeanSpec,
    N: MeanSpec,
    F,
    G,
    sampler: SamplerConfig,
    transition: Optional[TransitionMatrix] = None,
    force: bool = False,
    families: Optional[Tuple[str, str]] = None,
    threads: Optional[int] = None,
) -> AggregateReport:
    """Run the chained inequality on seeded random inputs against certified families.

    The pair must be certified by is_ij_pair (or force=True to explore an
    undecided or reversed pair); the families must come with a transition
    certificate, either supplied and re-verified or found by the exact solver.
    Samples are generated up front so the result is independent of threading;
    the worst slack and its input are reported along with the failure count.
    """
    F = _as_weight_list(F)
    G = _as_weight_list(G)
    verdict = is_ij_pair(M, N)
    if not verdict.is_pair and not force:
        raise UncertifiedPair(
            f"({format_mean_spec(M)}, {format_mean_spec(N)}) is {verdict.status}; "
            "pass force=True to explore anyway"
        )
    P = DistSequence(dist_from_weights(w) for w in F)
    Q = DistSequence(dist_from_weights(w) for w in G)
    if transition is not None:
        cert = verify_transition(P, Q, transition)
        if not cert.valid:
            raise NotATransition(f"supplied matrix fails {len(cert.failures)} identities")
    else:
        solved = solve_transition(P, Q)
        if not solved.feasible:
            raise UncertifiedFamilies(
                "families are not conjugated: the exact feasibility solver returned "
                f"a positive infeasibility witness {solved.witness}"
            )

    xs = sample_inputs(sampler, P.n)

    def evaluate(row) -> InequalityReport:
        return check_mixed_inequality(M, N, F, G, tuple(row), families)

    cap = _thread_cap(threads)
    if cap > 1:
        with ThreadPoolExecutor(max_workers=cap) as pool:
            reports = list(pool.map(evaluate, xs, chunksize=64))
    else:
        reports = [evaluate(row) for row in xs]

    failures = sum(1 for r in reports if not r.holds)
    worst = min(range(len(reports)), key=lambda idx: (reports[idx].slack, idx))
    return AggregateReport(
        count=sampler.count,
        failures=failures,
        min_slack=reports[worst].slack,
        argmin_x=reports[worst].x,
        seed=sampler.seed,
        families=families,
    )
