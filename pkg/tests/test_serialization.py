import json
from fractions import Fraction

import pytest

from graphvariety import (
    CountRequest,
    Graph,
    PrimeField,
    RATIONALS,
    VarietyContext,
    VertexAssignment,
    VertexWeighting,
    color_classes,
    count_points,
    cycle_graph,
    cycle_singular_point,
    equations,
    path_graph,
    split_into_matchings,
    standard_space,
)
from graphvariety.serialization import (
    assignment_from_obj,
    assignment_to_obj,
    canonical_dumps,
    certificate_from_obj,
    certificate_to_obj,
    count_report_to_obj,
    equations_to_obj,
    gram_rows_from_obj,
    gram_to_obj,
    scalar_to_str,
    splitting_report_to_obj,
    weighting_from_obj,
    weighting_to_obj,
)


class TestScalars:
    def test_rationals(self):
        assert scalar_to_str(Fraction(3, 4)) == "3/4"
        assert scalar_to_str(Fraction(-3, 4)) == "-3/4"
        assert scalar_to_str(Fraction(5)) == "5"
        assert scalar_to_str(7) == "7"

    def test_prime_field(self):
        f = PrimeField(7)
        assert scalar_to_str(f(10)) == "3"


class TestCanonicalDumps:
    def test_sorted_keys_and_trailing_newline(self):
        text = canonical_dumps({"b": "1", "a": "2"})
        assert text == '{\n  "a": "2",\n  "b": "1"\n}\n'

    def test_identical_objects_give_identical_bytes(self):
        obj = {"x": ["1", "2"], "y": {"k": "3"}}
        assert canonical_dumps(obj) == canonical_dumps(json.loads(canonical_dumps(obj)))


class TestAssignmentRoundTrip:
    def test_rational(self):
        pt = VertexAssignment(RATIONALS, [[Fraction(1, 2), 3], [0, Fraction(-7, 5)]])
        obj = assignment_to_obj(pt)
        assert obj["field"] == "Q"
        assert obj["vectors"]["0"] == ["1/2", "3"]
        back = assignment_from_obj(obj)
        assert back == pt

    def test_prime_field(self):
        f = PrimeField(11)
        pt = VertexAssignment(f, [[f(3), f(10)]])
        obj = assignment_to_obj(pt)
        assert obj["field"] == "Fp:11"
        assert assignment_from_obj(obj) == pt

    def test_vertex_keys_must_be_dense(self):
        obj = {"field": "Q", "vectors": {"0": ["1"], "2": ["1"]}}
        with pytest.raises(ValueError):
            assignment_from_obj(obj)

    def test_all_numbers_serialised_as_strings(self):
        pt = VertexAssignment(RATIONALS, [[1, 2]])
        text = canonical_dumps(assignment_to_obj(pt))
        payload = json.loads(text)
        assert all(isinstance(x, str) for x in payload["vectors"]["0"])


class TestCertificateRoundTrip:
    def test_cycle_certificate(self):
        sp = standard_space("symplectic", 4, RATIONALS)
        pt, cert = cycle_singular_point(4, sp)
        obj = certificate_to_obj(cert, RATIONALS)
        assert obj["field"] == "Q"
        assert obj["weights"][0] == ["0", "1", "1"]
        field, back = certificate_from_obj(obj)
        assert field == RATIONALS
        assert back == cert


class TestWeightingRoundTrip:
    def test_round_trip(self):
        w = VertexWeighting(("c1", "c2"), {0: (1, 0), 1: (0, 2), 2: (3, 0)})
        obj = weighting_to_obj(w)
        assert obj["colors"] == ["c1", "c2"]
        assert obj["weights"]["1"] == ["0", "2"]
        back = weighting_from_obj(obj)
        assert back == w

    def test_split_output_survives_the_trip(self):
        g = cycle_graph(5)
        w = split_into_matchings(g)
        back = weighting_from_obj(weighting_to_obj(w))
        assert color_classes(g, back).valid


class TestReportObjects:
    def test_splitting_report_shape(self):
        g = path_graph(3)
        rep = color_classes(g, split_into_matchings(g))
        obj = splitting_report_to_obj(rep)
        assert obj["valid"] is True
        assert obj["color_count"] == str(rep.color_count)
        assert all(set(e) == {"edge", "argmax", "strict"} for e in obj["per_edge"])
        for name, edges in obj["classes"].items():
            assert edges, name
            assert obj["matching_flags"][name] is True
        text = canonical_dumps(obj)
        assert json.loads(text) == obj

    def test_count_report_strings(self):
        g = Graph(2, [(0, 1)])
        sp = standard_space("symmetric", 2, PrimeField(3))
        obj = count_report_to_obj(count_points(CountRequest(g, sp)))
        assert obj == {
            "count": "33",
            "q": "3",
            "expected_dimension": "3",
            "ratio": "11/9",
        }

    def test_equations_shape(self):
        g = Graph(2, [(0, 1)])
        ctx = VarietyContext(g, standard_space("symplectic", 2, RATIONALS))
        obj = equations_to_obj(equations(ctx))
        assert obj["equations"][0]["edge"] == ["0", "1"]
        terms = obj["equations"][0]["terms"]
        assert ["0", "1", "1"] in terms and ["1", "0", "-1"] in terms


class TestGram:
    def test_round_trip(self):
        sp = standard_space("symplectic", 2, RATIONALS)
        obj = gram_to_obj(sp)
        assert obj == [["0", "1"], ["-1", "0"]]
        rows = gram_rows_from_obj(obj, RATIONALS)
        assert rows == [[0, 1], [-1, 0]]
