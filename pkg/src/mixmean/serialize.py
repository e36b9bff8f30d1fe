"""Lossless JSON and CSV forms for every certificate type.

Rationals travel as lowest-terms strings "p/q" with positive denominator
(bare integers are accepted as shorthand), so serialize-then-parse is the
identity digit for digit.  Matrices of distributions also export to CSV with
one distribution per cell, coordinates joined by '|'.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List

from .constructions import ProfileMatrix
from .distributions import Certificate, DistSequence, Failure, ProbDist, TransitionMatrix
from .gridexpand import ExpansionMatrix
from .means import WeightFunction
from .verify import AggregateReport, InequalityReport


def format_rational(value) -> str:
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    return Fraction(str(text).strip())


# ---------------------------------------------------------------------------
# to plain JSON-ready objects
# ---------------------------------------------------------------------------

def dist_to_obj(dist: ProbDist) -> list:
    return [format_rational(v) for v in dist]


def sequence_to_obj(seq: DistSequence) -> dict:
    return {
        "kind": "dist-sequence",
        "n": seq.n,
        "items": [dist_to_obj(d) for d in seq],
    }


def weight_family_to_obj(weights: List[WeightFunction]) -> dict:
    return {
        "kind": "weight-family",
        "n": len(weights[0]),
        "weights": [list(w) for w in weights],
    }


def transition_to_obj(matrix: TransitionMatrix, left=None, right=None) -> dict:
    obj = {
        "kind": "transition",
        "n": matrix.n,
        "k": matrix.k,
        "m": matrix.m,
        "entries": [[dist_to_obj(d) for d in row] for row in matrix.rows],
    }
    if left is not None:
        obj["left_weights"] = [list(w) for w in left]
    if right is not None:
        obj["right_weights"] = [list(w) for w in right]
    return obj


def profile_to_obj(profile: ProfileMatrix) -> dict:
    return {
        "kind": "cyclic-profile",
        "n": profile.n,
        "k": profile.k,
        "l": profile.l,
        "entries": [[format_rational(v) for v in row] for row in profile.entries],
    }


def expansion_to_obj(matrix: ExpansionMatrix) -> dict:
    return {
        "kind": "expansion",
        "n": matrix.n,
        "ell": matrix.ell,
        "k": matrix.k,
        "m": matrix.m,
        "entries": [list(row) for row in matrix.entries],
    }


def certificate_to_obj(cert: Certificate) -> dict:
    return {
        "kind": "certificate",
        "verdict": cert.verdict,
        "failures": [
            {
                "location": list(f.location),
                "expected": format_rational(f.expected),
                "actual": format_rational(f.actual),
            }
            for f in cert.failures
        ],
    }


def report_to_obj(report: InequalityReport, seed=None) -> dict:
    obj = {
        "kind": "inequality-report",
        "lhs": report.lhs,
        "rhs": report.rhs,
        "slack": report.slack,
        "holds": report.holds,
        "x": list(report.x),
        "seed": seed,
    }
    if report.families:
        obj["families"] = list(report.families)
    return obj


def aggregate_to_obj(report: AggregateReport) -> dict:
    obj = {
        "kind": "inequality-suite",
        "count": report.count,
        "failures": report.failures,
        "min_slack": report.min_slack,
        "argmin_x": list(report.argmin_x),
        "seed": report.seed,
    }
    if report.families:
        obj["families"] = list(report.families)
    return obj


# ---------------------------------------------------------------------------
# from plain objects
# ---------------------------------------------------------------------------

def dist_from_obj(obj) -> ProbDist:
    return ProbDist(tuple(parse_rational(v) for v in obj))


def sequence_from_obj(obj: dict) -> DistSequence:
    return DistSequence(dist_from_obj(item) for item in obj["items"])


def weight_family_from_obj(obj: dict) -> List[WeightFunction]:
    return [WeightFunction(w) for w in obj["weights"]]


def transition_from_obj(obj: dict) -> TransitionMatrix:
    return TransitionMatrix(
        [[dist_from_obj(cell) for cell in row] for row in obj["entries"]]
    )


def profile_from_obj(obj: dict) -> ProfileMatrix:
    return ProfileMatrix(
        int(obj["n"]),
        int(obj["k"]),
        int(obj["l"]),
        [[parse_rational(v) for v in row] for row in obj["entries"]],
    )


def expansion_from_obj(obj: dict) -> ExpansionMatrix:
    return ExpansionMatrix(
        int(obj["n"]), int(obj["ell"]), int(obj["k"]), int(obj["m"]), obj["entries"]
    )


def certificate_from_obj(obj: dict) -> Certificate:
    failures = tuple(
        Failure(
            tuple(f["location"]),
            parse_rational(f["expected"]),
            parse_rational(f["actual"]),
        )
        for f in obj["failures"]
    )
    return Certificate(failures)


# ---------------------------------------------------------------------------
# text renderings
# ---------------------------------------------------------------------------

def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2)


def loads(text: str) -> dict:
    return json.loads(text)


def transition_to_csv(matrix: TransitionMatrix) -> str:
    lines = []
    for row in matrix.rows:
        lines.append(",".join("|".join(format_rational(v) for v in d) for d in row))
    return "\n".join(lines) + "\n"


def profile_to_csv(profile: ProfileMatrix) -> str:
    lines = [f"# n={profile.n} k={profile.k} l={profile.l}"]
    for row in profile.entries:
        lines.append(",".join(format_rational(v) for v in row))
    return "\n".join(lines) + "\n"


def profile_to_text(profile: ProfileMatrix) -> str:
    lines = []
    for row in profile.entries:
        lines.append("  ".join(format_rational(v) for v in row))
    return "\n".join(lines) + "\n"


def expansion_to_text(matrix: ExpansionMatrix) -> str:
    width = len(str(matrix.n))
    lines = [" ".join(f"{v:>{width}}" for v in row) for row in matrix.entries]
    return "\n".join(lines) + "\n"


def sequence_to_csv(seq: DistSequence) -> str:
    lines = ["|".join(format_rational(v) for v in d) for d in seq]
    return "\n".join(lines) + "\n"
