from fractions import Fraction

import pytest

import clifan


def test_product_and_format():
    assert clifan.product("e[1]", "e[1]", 3) == "-1*e[]"
    assert clifan.product("e[1,2]", "e[2,3]", 3) == "-1*e[1,3]"
    assert clifan.format_field("x1*x3*e[1] + x2*e[2]", 3) == "1*x2*e[2] + 1*x1*x3*e[1]"


def test_classify_examples():
    assert clifan.classify("2*x2*x3*e[1] - (x1^2 + x2^2)*e[2]")["region"] == "Hpp&I"
    assert clifan.classify("x1*x3*e[1] + x2*e[2]")["region"] == "H&I"
    r = clifan.classify("(x2^2 - x1^2)*e[2] - 2*x1*x2*e[3] - x1*e[1,2] + x3*e[2,3]")
    assert r["hypLeft"] and r["hypRight"] and r["region"] == "H&Hpp&I"


def test_parse_error():
    with pytest.raises(ValueError):
        clifan.classify("x1 + * x2")


def test_psi_operators():
    assert clifan.apply_psi("level", "1", 3, k=1) == "-3*e[]"
    assert clifan.apply_psi("plus", "1", 3) == "4*e[]"
    assert clifan.psi_rank("level", 3, phi="standard", psi="reversed") == 8
    assert clifan.psi_rank("level", 2) < 4
    assert clifan.closed_form(3, 1, 1) == Fraction(1)
    assert clifan.closed_form(2, 1, 1) == 0
    for m in range(1, 7):
        for j in range(m + 1):
            for k in range(m + 1):
                assert clifan.hypergeometric_form(m, j, k) == clifan.closed_form(m, j, k)


def test_solver():
    dims = clifan.class_dimensions(3, 2)
    assert dims["total"] == 48
    assert dims["triple"] >= 1
    assert clifan.class_dimensions(3, 2, phi="standard", psi="standard")["H"] == 40
    w = clifan.find_witness("Hpp&I", 3, 2)
    assert w is not None and clifan.classify(w)["region"] == "Hpp&I"
    f = clifan.converse_counterexample(3)
    assert clifan.classify(f, phi="standard", psi="standard")["region"] == "none"


def test_verify_and_demo():
    report = clifan.verify([2, 3], trials=2, seed=7)
    assert report["allPassed"]
    assert all(case["ok"] for case in clifan.demo())
