from fractions import Fraction

import pytest

import mcorr


def test_reproduce_example2():
    report = mcorr.reproduce("example2")
    assert report["ok"]
    limit = next(i for i in report["items"] if i["key"] == "example2.limit")
    assert Fraction(limit["actual"]) == Fraction(-13775, 3056130)


def test_derive_landau():
    out = mcorr.derive("landau", 1)
    step = out["steps"][0]
    assert step["C"] == Fraction(11, 192)
    assert step["phi"] == [Fraction(5501, 7040), Fraction(3, 2), Fraction(1)]
    assert step["next_rate"] == 6


def test_exact_values():
    assert mcorr.harmonic(4) == Fraction(25, 12)
    assert mcorr.landau_G(1) == Fraction(5, 4)


def test_digits():
    assert mcorr.digits("gamma", 10) == "0.5772156649"
    assert mcorr.digits("c0", 20) == "1.0662758532089143543"


def test_enclosures_bracket_known_values():
    lo, hi = mcorr.gamma_approx("nu3", 10)
    assert lo <= hi
    assert abs(lo - 0.5772156649015329) < 1e-15
    lo, hi = mcorr.landau_approx(0, 0)
    assert 0.97 < lo <= hi < 0.98


def test_table_and_verify():
    rows = mcorr.table("landau", ["level0"], [0, 5])
    assert rows[0]["exact"] == "1"
    assert rows[1]["error"][0] > 0
    report = mcorr.verify("sandwich", 0, 10)
    assert report["overall"] == "PASS"


def test_errors():
    with pytest.raises(ValueError):
        mcorr.reproduce("nope")
    with pytest.raises(ValueError):
        mcorr.table("gamma", ["nope"], [10])
    with pytest.raises(RuntimeError):
        mcorr.digits("gamma", 500)
