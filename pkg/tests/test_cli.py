import json

import pytest

from ksbraid.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *args):
    code, out, _ = run(capsys, *args, "--format", "json")
    data = json.loads(out)
    assert data["schema_version"] == 1
    return code, data


def test_hom_examples(capsys):
    code, out, _ = run(capsys, "hom", "--m", "2", "--braid", "", "--i", "1", "--j", "1")
    assert code == 0 and "= 1 + q2" in out and "total rank: 2" in out
    code, out, _ = run(capsys, "hom", "--m", "2", "--braid", "1", "--i", "1", "--j", "1")
    assert "q1^-1 q2 + q1^-1 q2^2" in out
    code, data = js(capsys, "hom", "--m", "2", "--braid", "1", "--i", "0", "--j", "2")
    assert code == 0 and data["curve_side_agrees"] and data["torsion"] == []


def test_gin_examples(capsys):
    code, data = js(capsys, "gin", "--m", "2", "--i", "1", "--j", "2")
    assert data["gin"] == "1/2"
    code, data = js(capsys, "gin", "--m", "2", "--i", "1", "--j", "1")
    assert data["gin"] == "1"
    code, data = js(capsys, "gin", "--m", "2", "--braid", "1", "--i", "1", "--j", "1", "--n", "2")
    assert data["specialization"]["terms"] == [{"e": 1, "c": 1}, {"e": 3, "c": 1}]
    code, out, _ = run(capsys, "gin", "--m", "2", "--braid", "1", "--i", "1", "--j", "1", "--n", "1")
    assert out.strip().endswith("q1=q, q2=q^1: 1 + q")


def test_is_identity(capsys):
    assert run(capsys, "is-identity", "--m", "2", "--braid", "1,2,1,-2,-1,-2")[0] == 0
    assert run(capsys, "is-identity", "--m", "2", "--braid", "")[0] == 0
    code, data = js(capsys, "is-identity", "--m", "2", "--braid", "1")
    assert code == 1 and data["identity"] is False and "witness" in data


def test_burau(capsys):
    code, data = js(capsys, "burau", "--m", "1", "--braid", "1")
    assert data["burau"][1][0] == {"terms": [{"e": 1, "c": -1}]}
    assert data["reduced"] == [[{"terms": [{"e": 1, "c": -1}]}]]
    _, d1 = js(capsys, "burau", "--m", "2", "--braid", "1,2,1")
    _, d2 = js(capsys, "burau", "--m", "2", "--braid", "2,1,2")
    assert d1["burau"] == d2["burau"]
    _, d3 = js(capsys, "burau", "--m", "2", "--braid", "1,-1")
    _, d4 = js(capsys, "burau", "--m", "2", "--braid", "")
    assert d3["burau"] == d4["burau"]


@pytest.mark.parametrize(
    "args",
    [
        ("inverses", "--m", "3"),
        ("dimequals", "--m", "3", "--max-len", "6", "--seed", "7", "--cases", "20"),
        ("burau-euler", "--m", "4", "--max-len", "8", "--cases", "20"),
        ("tl", "--m", "3"),
        ("braid-relations", "--m", "3"),
        ("main-theorem", "--m", "3", "--cases", "20"),
    ],
)
def test_check_suites(capsys, args):
    code, data = js(capsys, "check", "--suite", *args)
    assert code == 0 and data["failed"] == 0 and data["passed"] > 0


def test_check_deterministic(capsys):
    a = js(capsys, "check", "--suite", "dimequals", "--m", "2", "--seed", "3", "--cases", "5")
    b = js(capsys, "check", "--suite", "dimequals", "--m", "2", "--seed", "3", "--cases", "5")
    assert a == b


def test_usage_errors(capsys):
    assert run(capsys, "check", "--suite", "nope")[0] == 2
    assert run(capsys, "hom", "--m", "2", "--braid", "x", "--i", "0", "--j", "0")[0] == 2
    assert run(capsys, "hom", "--m", "2", "--braid", "3", "--i", "0", "--j", "0")[0] == 2
    assert run(capsys, "hom", "--m", "2", "--i", "5", "--j", "0")[0] == 2
    assert run(capsys, "hom", "--m", "0", "--i", "0", "--j", "0")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_negative_leading_letter(capsys):
    code, out, _ = run(capsys, "hom", "--m", "2", "--braid", "-1,2", "--i", "1", "--j", "1")
    assert code == 0


def test_mod2(capsys):
    code, data = js(capsys, "hom", "--m", "2", "--braid", "1,-2", "--i", "1", "--j", "2", "--coefficients", "mod2")
    _, ref = js(capsys, "hom", "--m", "2", "--braid", "1,-2", "--i", "1", "--j", "2")
    assert code == 0 and data["poincare"] == ref["poincare"]
