import random
from fractions import Fraction

from mixmean import serialize
from mixmean.constructions import (
    cyclic_profile_explicit,
    kedlaya_family,
    kedlaya_transition,
    kedlaya_weights,
)
from mixmean.distributions import Certificate, Failure, ProbDist
from mixmean.gridexpand import ExpansionMatrix

F = Fraction


def random_fraction(rng):
    return F(rng.randint(-10**12, 10**12), rng.randint(1, 10**9))


class TestRationals:
    def test_lowest_terms_positive_denominator(self):
        assert serialize.format_rational(F(2, 4)) == "1/2"
        assert serialize.format_rational(F(-1, -3)) == "1/3"
        assert serialize.format_rational(F(5)) == "5"

    def test_integer_shorthand_accepted(self):
        assert serialize.parse_rational("7") == F(7)
        assert serialize.parse_rational("-3/9") == F(-1, 3)

    def test_round_trip_digit_for_digit(self):
        rng = random.Random(71)
        for _ in range(200):
            q = random_fraction(rng)
            text = serialize.format_rational(q)
            assert serialize.parse_rational(text) == q
            assert serialize.format_rational(serialize.parse_rational(text)) == text


class TestObjects:
    def test_dist_round_trip(self):
        d = ProbDist([F(1, 3), F(1, 6), F(1, 2)])
        assert serialize.dist_from_obj(serialize.dist_to_obj(d)) == d

    def test_sequence_round_trip(self):
        seq = kedlaya_family(4)
        obj = serialize.sequence_to_obj(seq)
        assert serialize.sequence_from_obj(serialize.loads(serialize.dumps(obj))) == seq

    def test_transition_round_trip(self):
        matrix = kedlaya_transition(4)
        obj = serialize.transition_to_obj(matrix, kedlaya_weights(4), kedlaya_weights(4))
        parsed = serialize.loads(serialize.dumps(obj))
        assert serialize.transition_from_obj(parsed) == matrix
        assert serialize.weight_family_from_obj(
            {"weights": parsed["left_weights"]}
        ) == kedlaya_weights(4)

    def test_profile_round_trip(self):
        profile = cyclic_profile_explicit(7, 3)
        obj = serialize.loads(serialize.dumps(serialize.profile_to_obj(profile)))
        parsed = serialize.profile_from_obj(obj)
        assert parsed.entries == profile.entries
        assert (parsed.n, parsed.k, parsed.l) == (profile.n, profile.k, profile.l)

    def test_expansion_round_trip(self):
        matrix = ExpansionMatrix(2, 2, 1, 1, [[2, 1], [1, 2]])
        obj = serialize.loads(serialize.dumps(serialize.expansion_to_obj(matrix)))
        assert serialize.expansion_from_obj(obj) == matrix

    def test_certificate_round_trip(self):
        cert = Certificate((Failure(("P", 1, 2), F(1, 2), F(1, 3)),))
        obj = serialize.loads(serialize.dumps(serialize.certificate_to_obj(cert)))
        parsed = serialize.certificate_from_obj(obj)
        assert parsed.failures == cert.failures
        assert parsed.verdict == "invalid"

    def test_valid_certificate(self):
        obj = serialize.certificate_to_obj(Certificate())
        assert obj["verdict"] == "valid" and obj["failures"] == []


class TestTextFormats:
    def test_transition_csv_cells(self):
        csv = serialize.transition_to_csv(kedlaya_transition(2))
        lines = csv.strip().split("\n")
        assert lines[0] == "1|0,1|0"
        assert lines[1] == "1|0,0|1"

    def test_profile_csv_header(self):
        csv = serialize.profile_to_csv(cyclic_profile_explicit(3, 2))
        assert csv.startswith("# n=3 k=2 l=2\n")
        assert "1,1/2,0" in csv

    def test_expansion_text(self):
        text = serialize.expansion_to_text(ExpansionMatrix(2, 2, 1, 1, [[2, 1], [1, 2]]))
        assert text == "2 1\n1 2\n"

    def test_profile_text(self):
        text = serialize.profile_to_text(cyclic_profile_explicit(3, 2))
        assert text == "1  1/2  0\n0  1/2  1\n"
