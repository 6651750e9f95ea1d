from fractions import Fraction

import pytest

import qmap

FIGURE = {
    "n": 4, "affine": False, "v": [1, 3, 2, 1], "w": [0, 1, 1, 0],
    "partitions": [{"vertex": 1, "parts": [2, 2]}, {"vertex": 2, "parts": [2, 1]}],
}


def test_single_box_is_q_binomial():
    z = qmap.zfun([1], 4, hbar="2/3", q="1/5")
    h, q = Fraction(2, 3), Fraction(1, 5)
    coeff = Fraction(1)
    for d in range(5):
        key = () if d == 0 else ((0, d),)
        assert z[key] == coeff
        coeff *= (1 - h * q**d) / (1 - q ** (d + 1))


def test_routes_agree():
    ref = qmap.zfun([2, 1], 3)
    for route in ("sum", "raw", "macdonald"):
        assert qmap.zfun([2, 1], 3, route=route) == ref


def test_symbolic():
    z = qmap.zfun([1], 1, symbolic=True)
    assert z[()] == "1"
    assert "h" in z[((0, 1),)]


def test_verify_and_vacuous_hook():
    assert qmap.verify("hook", max_size=0) == []
    reports = qmap.verify("lemma", max_size=3, max_entry=2)
    assert reports and all(r["pass"] for r in reports)


def test_figure_point():
    for order in ([0, 1], [1, 0]):
        out = qmap.anvertex(FIGURE, order, oracle=True)
        assert out["factorized"] == out["oracle"]
    assert len(qmap.mirror(FIGURE)) == 14


def test_errors():
    with pytest.raises(qmap.QmapError):
        qmap.zfun([1], 2, hbar="1/5", q="1/5")
    with pytest.raises(qmap.QmapError):
        qmap.mirror(dict(FIGURE, v=[1, 2, 2, 1]))
