import pytest

import rectadd
from rectadd import QNum, Rect


def test_qnum_field_and_sign():
    r2 = QNum.sqrt2()
    assert str(r2) == "0+1*sqrt2"
    assert (r2 - 1) * (r2 + 1) == 1
    assert QNum.parse("3-2*sqrt2").sign() == 1
    assert (16 * r2).floor() == 22
    assert QNum("5/8").is_dyadic()
    assert not r2.is_rational()
    assert r2.approximate(5) == "1.41421"
    with pytest.raises(ValueError):
        QNum.parse("1.5")
    with pytest.raises(ValueError):
        r2 / 0


def test_rect_and_evaluate():
    r = Rect.parse("[0,1]x[1,0+1*sqrt2]")
    assert r.area() == QNum.sqrt2() - 1
    assert r.diameter_sq() == 4 - 2 * QNum.sqrt2()
    assert rectadd.evaluate("counterexample", r) == -1
    assert rectadd.evaluate("product", "[0,1]x[0,1]") == 1
    with pytest.raises(ValueError):
        Rect(1, 1, 0, 1)


def test_decompose():
    d = rectadd.decompose("[0,8]x[0,5]")
    assert d["terminated"]
    assert d["counts"] == [1, 1, 1, 2]
    assert d["square_count"] == 5
    silver = rectadd.decompose("[0,1+1*sqrt2]x[0,1]", max_steps=6)
    assert not silver["terminated"]
    assert silver["counts"] == [2] * 6
    assert silver["remainder"] is not None


def test_reports():
    ce = rectadd.counterexample(samples=50)
    assert ce["schema"] == 1
    assert ce["exit_status"] == 0
    assert rectadd.counterexample(samples=50, function="product")["exit_status"] != 0

    dec = rectadd.decompose_report("[0,8]x[0,5]")
    assert dec["command"] == "decompose"
    assert all(f["status"] == "verified" for f in dec["findings"])

    dy = rectadd.dyadic_approx(max_order=4, function="counterexample")
    assert dy["data"]["orders"][3]["covered_area"]["exact"] == "3/8"

    pr = rectadd.probe(depth=3)
    assert all(f["status"] == "evidence-only" for f in pr["findings"])

    pt = rectadd.proptest(suite="halving", cases=20, seed=3)
    assert pt["exit_status"] == 0
    with pytest.raises(ValueError):
        rectadd.proptest(suite="nonsense")
