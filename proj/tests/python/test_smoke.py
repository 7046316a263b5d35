import os
import pathlib

import pytest

import leavitt

FIXTURES = pathlib.Path(
    os.environ.get("LPA_FIXTURES", pathlib.Path(__file__).resolve().parents[2] / "fixtures")
)


def load(name):
    return leavitt.Graph.load(str(FIXTURES / name))


def test_graph_queries():
    r1 = load("r1.g")
    assert r1.vertices == ["v"]
    assert r1.condition_k() == (False, ["v"])
    assert r1.classify_vertex("v") == ("K1", ["e"])
    y3 = load("y3.g")
    assert y3.closure(["v"]) == ["u", "v", "w"]
    assert load("l2.g").hereditary_saturated_sets() == [[], ["u", "v"]]


def test_element_arithmetic():
    r2 = load("r2.g")
    x = leavitt.Element(r2, "v + e")
    f = leavitt.Element(r2, "f")
    assert str(x * f) == "f + e.f"
    assert (leavitt.Element(r2, "e.e*' + f.f*'") - leavitt.Element(r2, "v")).is_zero
    parts = leavitt.Element(load("r1.g"), "v + e").graded_components()
    assert sorted(parts) == [0, 1]
    assert str(parts[1]) == "e"


def test_extraction_and_witness():
    r2 = load("r2.g")
    w = leavitt.extract_vertex(leavitt.Element(r2, "v + e"))
    assert w["vertex"] == "v"
    assert str(w["result"]) == "v"
    with pytest.raises(leavitt.LpaError):
        leavitt.extract_vertex(leavitt.Element(load("r1.g"), "v + e"))
    vertex, cycle, gen = leavitt.nongraded_witness(load("g5.g"))
    assert (vertex, cycle, str(gen)) == ("u", ["e"], "u + e")
    assert leavitt.nongraded_witness(load("g04.g")) is None


def test_ideals():
    g6 = load("g6.g")
    red = leavitt.lambda_reduce(g6, {"polys": [{"cycle": ["e"], "coeffs": ["1", "1"]}]})
    assert red["vertices"] == ["v"]
    assert red["graded"] is False
    r1 = load("r1.g")
    a = {"polys": [{"cycle": ["e"], "coeffs": ["-1", "0", "1"]}]}
    b = {"polys": [{"cycle": ["e"], "coeffs": ["1", "1"]}]}
    assert leavitt.contains(r1, a, b)
    assert not leavitt.contains(r1, b, a)


def test_two_vertex():
    assert [leavitt.count_closed_form(k) for k in range(4)] == [1, 2, 6, 10]
    assert len(leavitt.enumerate_up_to_iso(3)) == 10
    assert leavitt.classify(load("g10.g"))["class"] == "IV"
    assert leavitt.classify(leavitt.Graph.from_shape(1, 0, 0, 1))["notes"]


def test_cli_passthrough():
    code, out, _ = leavitt.run(["count2", "--edges", "3", "--verify"])
    assert code == 0
    assert out == "10 (formula) == 10 (enumeration)\n"
