import random
from fractions import Fraction

import pytest

from mixmean.errors import AllZeroWeights, EmptyInput, LengthMismatch, NonPositiveInput
from mixmean.means import (
    MeanSpec,
    WeightFunction,
    evaluate_mean,
    evaluate_weighted,
    format_mean_spec,
    is_monotone,
    parse_mean_spec,
)

P0 = MeanSpec.power(0)
P1 = MeanSpec.power(1)


def repeated_eval(spec, weights, x):
    """Oracle: literally repeat x[s] weights[s] times and take the plain mean."""
    expanded = [v for v, w in zip(x, weights) for _ in range(w)]
    return evaluate_mean(spec, expanded)


def close(a, b, rel=1e-12):
    a, b = float(a), float(b)
    return abs(a - b) <= rel * max(abs(a), abs(b), 1.0)


class TestEvaluateMean:
    def test_arithmetic(self):
        assert evaluate_mean(P1, (1, 4)) == Fraction(5, 2)

    def test_geometric(self):
        assert close(evaluate_mean(P0, (1, 4)), 2)

    def test_min_max(self):
        assert evaluate_mean(MeanSpec.minimum(), (3, 1, 2)) == 1
        assert evaluate_mean(MeanSpec.maximum(), (3, 1, 2)) == 3

    def test_harmonic_exact(self):
        assert evaluate_mean(MeanSpec.power(-1), (1, 2)) == Fraction(4, 3)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            evaluate_mean(P1, ())

    def test_positivity_required(self):
        with pytest.raises(NonPositiveInput):
            evaluate_mean(P0, (1, 0))
        with pytest.raises(NonPositiveInput):
            evaluate_mean(MeanSpec.gini(2, 1), (1, -1))

    def test_zero_allowed_for_positive_exponent(self):
        assert close(evaluate_mean(MeanSpec.power(2), (0, 2)), (4 / 2) ** 0.5)

    def test_negative_allowed_for_exp_generator_and_minmax(self):
        assert close(evaluate_mean(MeanSpec.quasiarithmetic("exp"), (-1, -1)), -1)
        assert evaluate_mean(MeanSpec.minimum(), (-3, 5)) == -3


class TestEvaluateWeighted:
    def test_weighted_arithmetic(self):
        assert evaluate_weighted(P1, (2, 1), (1, 4)) == 2

    def test_zero_weight_drops_entry(self):
        assert close(evaluate_weighted(P0, (0, 3), (1, 4)), 4)

    def test_matches_repetition_oracle(self):
        # frozen from the oracle: (1+1+1+1+4+4)/6 = 2 for weights (4, 2)
        assert repeated_eval(P1, (4, 2), (1, 4)) == 2
        assert evaluate_weighted(P1, (4, 2), (1, 4)) == 2
        assert evaluate_weighted(P1, (4, 2), (1, 4)) == evaluate_weighted(P1, (2, 1), (1, 4))

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            evaluate_weighted(P1, (1, 2, 3), (1, 4))

    def test_all_zero_weights(self):
        with pytest.raises(AllZeroWeights):
            evaluate_weighted(P1, (0, 0), (1, 4))

    def test_zero_weight_excused_from_domain_check(self):
        # the non-positive entry never enters the mean
        assert close(evaluate_weighted(P0, (0, 2), (0, 4)), 4)

    @pytest.mark.parametrize(
        "spec",
        [
            P0,
            P1,
            MeanSpec.power(Fraction(-3, 2)),
            MeanSpec.gini(2, 1),
            MeanSpec.gini(1, 1),
            MeanSpec.quasiarithmetic("log"),
            MeanSpec.quasiarithmetic("exp"),
            MeanSpec.quasiarithmetic("power", Fraction(1, 2)),
            MeanSpec.minimum(),
            MeanSpec.maximum(),
        ],
    )
    def test_weighted_equals_repetition_oracle(self, spec):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(1, 5)
            x = [Fraction(rng.randint(1, 40), rng.randint(1, 9)) for _ in range(n)]
            w = [rng.randint(0, 4) for _ in range(n)]
            if not any(w):
                w[rng.randrange(n)] = 1
            assert close(evaluate_weighted(spec, w, x), repeated_eval(spec, w, x))


class TestInvariants:
    SPECS = [
        P0,
        P1,
        MeanSpec.power(3),
        MeanSpec.power(Fraction(-1, 2)),
        MeanSpec.gini(2, 1),
        MeanSpec.quasiarithmetic("exp"),
        MeanSpec.minimum(),
        MeanSpec.maximum(),
    ]

    def test_symmetry(self):
        rng = random.Random(11)
        for spec in self.SPECS:
            for _ in range(10):
                x = [Fraction(rng.randint(1, 30), rng.randint(1, 7)) for _ in range(4)]
                perm = x[:]
                rng.shuffle(perm)
                assert close(evaluate_mean(spec, x), evaluate_mean(spec, perm))

    def test_symmetry_exact_paths(self):
        x = (Fraction(1, 3), Fraction(5), Fraction(2, 7))
        for spec in (P1, MeanSpec.power(-1), MeanSpec.minimum(), MeanSpec.maximum()):
            assert evaluate_mean(spec, x) == evaluate_mean(spec, x[::-1])

    def test_repetition_invariance(self):
        rng = random.Random(13)
        for spec in self.SPECS:
            for c in (2, 3, 5):
                x = [Fraction(rng.randint(1, 20)) for _ in range(3)]
                w = [rng.randint(0, 3) for _ in range(3)]
                if not any(w):
                    w[0] = 1
                scaled = [c * v for v in w]
                assert close(
                    evaluate_weighted(spec, w, x), evaluate_weighted(spec, scaled, x)
                )

    def test_internality(self):
        rng = random.Random(17)
        for spec in self.SPECS:
            for _ in range(10):
                x = [Fraction(rng.randint(1, 50), rng.randint(1, 5)) for _ in range(5)]
                value = float(evaluate_mean(spec, x))
                assert float(min(x)) - 1e-12 <= value <= float(max(x)) + 1e-12

    def test_power_monotone_in_exponent(self):
        rng = random.Random(19)
        exponents = [Fraction(-3), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]
        for _ in range(10):
            x = [Fraction(rng.randint(1, 60), rng.randint(1, 6)) for _ in range(4)]
            values = [float(evaluate_mean(MeanSpec.power(p), x)) for p in exponents]
            for a, b in zip(values, values[1:]):
                assert a <= b + 1e-12 * max(abs(a), abs(b), 1.0)

    def test_power_zero_is_geometric_and_one_is_arithmetic(self):
        x = (Fraction(2), Fraction(3), Fraction(12))
        geo = (2 * 3 * 12) ** (1 / 3)
        assert close(evaluate_mean(P0, x), geo)
        assert evaluate_mean(P1, x) == Fraction(17, 3)

    def test_gini_with_zero_second_parameter_is_power(self):
        rng = random.Random(23)
        for p in (Fraction(0), Fraction(2), Fraction(-1), Fraction(1, 2)):
            for _ in range(5):
                x = [Fraction(rng.randint(1, 30), rng.randint(1, 4)) for _ in range(4)]
                assert close(
                    evaluate_mean(MeanSpec.gini(p, 0), x),
                    evaluate_mean(MeanSpec.power(p), x),
                )

    def test_gini_equal_parameters_limiting_form(self):
        # independent oracle: exp(sum x^p ln x / sum x^p)
        import math

        x = (2.0, 3.0, 5.0)
        p = 2
        num = sum(v**p * math.log(v) for v in x)
        den = sum(v**p for v in x)
        assert close(evaluate_mean(MeanSpec.gini(p, p), x), math.exp(num / den))

    def test_qa_power_matches_power_mean(self):
        x = (Fraction(1), Fraction(4), Fraction(9))
        assert close(
            evaluate_mean(MeanSpec.quasiarithmetic("power", 2), x),
            evaluate_mean(MeanSpec.power(2), x),
        )
        assert close(evaluate_mean(MeanSpec.quasiarithmetic("log"), x), evaluate_mean(P0, x))


class TestWeightFunction:
    def test_validation(self):
        with pytest.raises(AllZeroWeights):
            WeightFunction([0, 0, 0])
        with pytest.raises(AllZeroWeights):
            WeightFunction([])
        with pytest.raises(ValueError):
            WeightFunction([1, -1])

    def test_support_and_total(self):
        w = WeightFunction([2, 0, 1])
        assert w.support == (0, 2)
        assert w.total == 3
        assert len(w) == 3 and w[0] == 2


class TestSpecParsing:
    @pytest.mark.parametrize(
        "text",
        ["power:1", "power:0", "power:-1/2", "gini:2,0", "gini:-1,1/3", "qa:log", "qa:exp", "qa:power,2", "min", "max"],
    )
    def test_round_trip(self, text):
        assert format_mean_spec(parse_mean_spec(text)) == text

    def test_rejects_garbage(self):
        for bad in ("power", "gini:1", "qa:sinh", "median", "power:x"):
            with pytest.raises(ValueError):
                parse_mean_spec(bad)

    def test_monotonicity_classification(self):
        assert is_monotone(MeanSpec.power(-3))
        assert is_monotone(MeanSpec.gini(2, 0))
        assert is_monotone(MeanSpec.gini(-1, 2))
        assert not is_monotone(MeanSpec.gini(2, 1))
        assert not is_monotone(MeanSpec.gini(-1, -2))
