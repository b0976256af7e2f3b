import json

import pytest

import gelmod


def test_factors():
    gs = gelmod.factors("A2xB2")
    assert [g.name for g in gs] == ["A2", "B2"]
    assert [g.order for g in gs] == [6, 8]
    assert gs[0].degrees == [2, 3]
    assert gs[1].degrees == [2, 4]
    assert gs[0].rank == 2
    assert gs[0].reflection_count == 3
    assert gs[1].reflection_count == 4
    assert repr(gs[1]) == "<Group B2>"


def test_fake_degrees_icosahedral():
    reports = gelmod.fake_degrees("H3")
    assert len(reports) == 10
    by_label = {r["label"]: r for r in reports}
    assert by_label["V4'"]["fakeDegree"] == [0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1]
    for r in reports:
        # nonnegative coefficients summing to the dimension
        assert all(c >= 0 for c in r["fakeDegree"])
        assert sum(r["fakeDegree"]) == r["dim"]
        assert r["fakeDegree"][r["p"]] == r["firstMultiplicity"]


def test_verdicts():
    assert gelmod.is_gelfand("B4xD5xH3")
    assert gelmod.is_gelfand("H4")
    assert not gelmod.is_gelfand("A2xE7")

    v = gelmod.verdict("D4")
    assert v["isGelfand"] is False
    assert v["method"] == "computed"
    assert v["witnesses"][0]["factor"] == "D4"
    assert v["witnesses"][0]["firstMultiplicity"] >= 2


def test_model_dimensions():
    assert gelmod.model_dimensions("A2") == {0: 1, 1: 2, 3: 1}
    assert gelmod.model_dimensions("A1xA2") == {0: 1, 1: 3, 2: 2, 3: 1, 4: 1}
    assert gelmod.gelfand_dimension("A3") == 10
    assert gelmod.gelfand_dimension("A1xA2") == 8
    assert sum(gelmod.model_dimensions("H3").values()) == gelmod.gelfand_dimension("H3")


def test_run_json():
    code, out = gelmod.run("fake-degrees", "B2", format="json")
    assert code == 0
    doc = json.loads(out)
    assert doc["group"] == "B2"
    assert len(doc["labels"]) == 5
    assert doc["isGelfand"] is True

    code, out = gelmod.run("verdict", "A2xE7")
    assert code == 0
    assert "classification" in out

    code, out = gelmod.run("frobenicate", "A2", format="json")
    assert code == 2
    assert json.loads(out)["error"]["type"] == "ParseError"


def test_errors():
    with pytest.raises(gelmod.GelmodError):
        gelmod.factors("A2xE7")  # classification-only factor
    with pytest.raises(gelmod.GelmodError):
        gelmod.model_dimensions("A2xE7")
    with pytest.raises(gelmod.GelmodError):
        gelmod.fake_degrees("D3")  # parameter out of range
    with pytest.raises(gelmod.GelmodError):
        gelmod.gelfand_dimension("A2y")  # malformed expression
