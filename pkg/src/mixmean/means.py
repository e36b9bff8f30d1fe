"""Symmetric, repetition-invariant means and their integer-weighted forms.

Mean values are computed with high-precision binary floats (120-bit mantissa,
well past the 1e-12 comparison tolerances used downstream).  Two variants have
an exact rational path: the arithmetic and harmonic means return a Fraction
whenever every participating input is rational, as do min and max.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence

import mpmath

from .errors import AllZeroWeights, EmptyInput, LengthMismatch, NonPositiveInput

_MP = mpmath.mp
_MP.prec = 120

POWER = "power"
GINI = "gini"
QUASIARITHMETIC = "qa"
MIN = "min"
MAX = "max"

_GENERATORS = ("power", "log", "exp")


def _to_fraction(value) -> Fraction:
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected a rational value, got {value!r}")


@dataclass(frozen=True)
class MeanSpec:
    """Tagged description of a built-in mean.

    Variants: power mean with rational exponent p, Gini mean with rational
    parameters (p, q), quasiarithmetic mean with a built-in generator
    ("power" with exponent p, "log", or "exp"), and min / max.
    """

    kind: str
    p: Optional[Fraction] = None
    q: Optional[Fraction] = None
    generator: Optional[str] = None

    def __post_init__(self):
        if self.kind not in (POWER, GINI, QUASIARITHMETIC, MIN, MAX):
            raise ValueError(f"unknown mean kind {self.kind!r}")
        if self.kind == POWER and self.p is None:
            raise ValueError("power mean needs an exponent")
        if self.kind == GINI and (self.p is None or self.q is None):
            raise ValueError("Gini mean needs two parameters")
        if self.kind == QUASIARITHMETIC:
            if self.generator not in _GENERATORS:
                raise ValueError(f"unknown generator {self.generator!r}")
            if self.generator == "power" and self.p is None:
                raise ValueError("power generator needs an exponent")

    @classmethod
    def power(cls, p) -> "MeanSpec":
        return cls(POWER, p=_to_fraction(p))

    @classmethod
    def gini(cls, p, q) -> "MeanSpec":
        return cls(GINI, p=_to_fraction(p), q=_to_fraction(q))

    @classmethod
    def quasiarithmetic(cls, generator: str, p=None) -> "MeanSpec":
        arg = _to_fraction(p) if p is not None else None
        return cls(QUASIARITHMETIC, p=arg, generator=generator)

    @classmethod
    def minimum(cls) -> "MeanSpec":
        return cls(MIN)

    @classmethod
    def maximum(cls) -> "MeanSpec":
        return cls(MAX)

    def describe(self) -> str:
        return format_mean_spec(self)


def format_mean_spec(spec: MeanSpec) -> str:
    """Inverse of :func:`parse_mean_spec`."""
    if spec.kind == POWER:
        return f"power:{spec.p}"
    if spec.kind == GINI:
        return f"gini:{spec.p},{spec.q}"
    if spec.kind == QUASIARITHMETIC:
        if spec.generator == "power":
            return f"qa:power,{spec.p}"
        return f"qa:{spec.generator}"
    return spec.kind


def parse_mean_spec(text: str) -> MeanSpec:
    """Parse the CLI textual form: power:1, gini:2,0, qa:log, qa:power,2, min, max."""
    text = text.strip()
    if text == MIN:
        return MeanSpec.minimum()
    if text == MAX:
        return MeanSpec.maximum()
    head, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"cannot parse mean spec {text!r}")
    if head == POWER:
        return MeanSpec.power(Fraction(rest))
    if head == GINI:
        p, _, q = rest.partition(",")
        if not _:
            raise ValueError(f"gini spec needs two parameters: {text!r}")
        return MeanSpec.gini(Fraction(p), Fraction(q))
    if head == QUASIARITHMETIC:
        if rest in ("log", "exp"):
            return MeanSpec.quasiarithmetic(rest)
        gen, _, p = rest.partition(",")
        if gen == "power" and p:
            return MeanSpec.quasiarithmetic("power", Fraction(p))
        raise ValueError(f"unknown quasiarithmetic generator in {text!r}")
    raise ValueError(f"cannot parse mean spec {text!r}")


class WeightFunction:
    """A nonzero vector of nonnegative integer repetition counts."""

    __slots__ = ("weights",)

    def __init__(self, weights: Iterable[int]):
        ws = tuple(int(w) for w in weights)
        if len(ws) < 1:
            raise AllZeroWeights("weight function needs at least one entry")
        if any(w < 0 for w in ws):
            raise ValueError("weights must be nonnegative integers")
        if not any(ws):
            raise AllZeroWeights("weight function must not be identically zero")
        self.weights = ws

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, s):
        return self.weights[s]

    def __iter__(self):
        return iter(self.weights)

    def __eq__(self, other):
        return isinstance(other, WeightFunction) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"WeightFunction({list(self.weights)})"

    @property
    def total(self) -> int:
        return sum(self.weights)

    @property
    def support(self) -> tuple:
        """0-based indices with strictly positive weight."""
        return tuple(s for s, w in enumerate(self.weights) if w > 0)


def _needs_positive(spec: MeanSpec) -> bool:
    if spec.kind == POWER:
        return spec.p <= 0
    if spec.kind == GINI:
        return True
    if spec.kind == QUASIARITHMETIC:
        return spec.generator in ("power", "log")
    return False


def _check_domain(spec: MeanSpec, values) -> None:
    if _needs_positive(spec):
        if any(v <= 0 for v in values):
            raise NonPositiveInput(f"{format_mean_spec(spec)} requires strictly positive inputs")
    elif spec.kind in (POWER, GINI):
        # p > 0: zero is fine, negative bases are not
        if any(v < 0 for v in values):
            raise NonPositiveInput(f"{format_mean_spec(spec)} requires nonnegative inputs")


def _mpf(v):
    if isinstance(v, Rational):
        return _MP.mpf(v.numerator) / v.denominator
    return _MP.mpf(v)


def _weighted_value(spec: MeanSpec, values, weights):
    """Mean of the multiset {values[s] repeated weights[s] times}; weights sum > 0."""
    support = [(v, w) for v, w in zip(values, weights) if w > 0]
    vals = [v for v, _ in support]
    _check_domain(spec, vals)
    if spec.kind == MIN:
        return min(vals)
    if spec.kind == MAX:
        return max(vals)
    total = sum(w for _, w in support)

    if spec.kind == POWER or (spec.kind == QUASIARITHMETIC and spec.generator == "power"):
        p = spec.p
        if p == 1 and all(isinstance(v, Rational) for v in vals):
            return Fraction(sum(Fraction(v) * w for v, w in support), total)
        if p == -1 and all(isinstance(v, Rational) for v in vals):
            return Fraction(total) / sum(w / Fraction(v) for v, w in support)
        if p == 0:
            acc = _MP.fsum(w * _MP.log(_mpf(v)) for v, w in support)
            return _MP.exp(acc / total)
        pe = _mpf(p)
        acc = _MP.fsum(w * _MP.power(_mpf(v), pe) for v, w in support)
        return _MP.power(acc / total, 1 / pe)

    if spec.kind == GINI:
        p, q = spec.p, spec.q
        if p == q:
            # limiting form: exp(sum w x^p ln x / sum w x^p)
            pe = _mpf(p)
            num = _MP.fsum(w * _MP.power(_mpf(v), pe) * _MP.log(_mpf(v)) for v, w in support)
            den = _MP.fsum(w * _MP.power(_mpf(v), pe) for v, w in support)
            return _MP.exp(num / den)
        pe, qe = _mpf(p), _mpf(q)
        num = _MP.fsum(w * _MP.power(_mpf(v), pe) for v, w in support)
        den = _MP.fsum(w * _MP.power(_mpf(v), qe) for v, w in support)
        return _MP.power(num / den, 1 / (pe - qe))

    # quasiarithmetic with log or exp generator
    if spec.generator == "log":
        acc = _MP.fsum(w * _MP.log(_mpf(v)) for v, w in support)
        return _MP.exp(acc / total)
    acc = _MP.fsum(w * _MP.exp(_mpf(v)) for v, w in support)
    return _MP.log(acc / total)


def evaluate_mean(spec: MeanSpec, x: Sequence):
    """Evaluate the mean on a nonempty tuple.

    The result always lies between min(x) and max(x).  Returns a Fraction on
    exact paths (arithmetic/harmonic on rational inputs, min, max) and an
    mpmath float otherwise.
    """
    xs = tuple(x)
    if not xs:
        raise EmptyInput("cannot take a mean of zero values")
    return _weighted_value(spec, xs, (1,) * len(xs))


def evaluate_weighted(spec: MeanSpec, weights, x: Sequence):
    """Evaluate the weighted form: x[s] enters the mean weights[s] times.

    Invariant under multiplying all weights by a positive integer.  Entries
    with zero weight do not participate (and are exempt from domain checks).
    """
    if not isinstance(weights, WeightFunction):
        weights = WeightFunction(weights)
    xs = tuple(x)
    if len(xs) != len(weights):
        raise LengthMismatch(f"{len(weights)} weights vs {len(xs)} values")
    return _weighted_value(spec, xs, weights.weights)


def is_monotone(spec: MeanSpec) -> bool:
    """True when the mean is nondecreasing in every argument.

    Power and built-in quasiarithmetic means always are; Gini means are
    monotone exactly when min(p, q) <= 0 <= max(p, q).
    """
    if spec.kind == GINI:
        return min(spec.p, spec.q) <= 0 <= max(spec.p, spec.q)
    return True
