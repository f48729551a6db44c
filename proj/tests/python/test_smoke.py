import json

import pytest

import _helly as h


def test_scalar_parsing_and_order():
    phi = h.Scalar("(1+1*sqrt(5))/2")
    assert 1.61 < float(phi) < 1.62
    assert phi.cmp(h.Scalar("8/5")) == 1
    assert phi.cmp(h.Scalar("2")) == -1
    assert h.Scalar("sqrt(2)").floor() == "1"


def test_bounds():
    rep = h.diagonal_bounds(h.Scalar("2"))
    assert rep["lower"] == 5 and rep["upper"] == 5
    rep = h.diagonal_bounds(h.Scalar("3/2"))
    assert rep["lower"] == 5 and rep["upper"] == 12
    rep = h.rect_bounds(h.Scalar("2"), h.Scalar("3"))
    assert rep["upper"] is None
    assert h.edge_type_budget(h.Scalar("2")) == [1, 2, 2, 2]


def test_continued_fractions():
    quotients, exact = h.cf_expand(h.Scalar("log(3)/log(2)"), 10)
    assert quotients == ["1", "1", "1", "2", "2", "3", "1", "5", "2", "23"]
    assert not exact
    convs = h.convergents(h.Scalar("(1+1*sqrt(5))/2"), 8)
    assert convs[-1] == ("34", "21")
    lower = h.best_one_sided(h.Scalar("sqrt(2)"), "lower", 5)
    assert lower[:2] == [("1", "1"), ("4", "3")]


def test_constructions_certify():
    rep = h.five_point(h.Scalar("2"))
    assert len(rep.polygon) == 5
    assert rep.certificate.empty
    doc = json.loads(rep.to_json())
    assert doc["format"] == "helly-polygon/1"
    assert doc["construction"]["name"] == "five_point"
    with pytest.raises(Exception):
        h.seven_point(h.Scalar("2"))


def test_search_and_cross_validation():
    res = h.max_empty_polygon("exp:2", 4, 4)
    assert res.cardinality == 5
    assert res.optimal
    counts = h.edge_type_counts(res.best)
    assert sum(counts) == 5
    assert h.cross_validate("exp:2", 3, 3)


def test_polygon_roundtrip():
    spec = h.LatticeSpec.parse("exp:2")
    poly = h.Polygon.from_points(spec, [(0, 0), (1, 0), (1, 1), (0, 1)])
    cert = h.is_empty_polygon(poly)
    assert cert.empty
