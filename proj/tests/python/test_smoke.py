import pytest

import bruhat_atlas as ba


def test_words():
    assert ba.distinguished_word(1, 2) == [0, 1, 0]
    assert ba.distinguished_word(4, 2) == [2, 0, 1]
    for l in range(1, 7):
        w = ba.distinguished_word(l, 3)
        assert ba.is_reduced(w, 3)
        assert ba.word_length(w, 3) == 5


def test_polynomial():
    p = ba.Polynomial.parse("z3*z5 - z4 + 1")
    assert str(p) == "z3*z5 - z4 + 1"
    assert p - p == ba.Polynomial(0)
    q = ba.Polynomial.parse("z1 + 1")
    assert (p * q).divide_exact(q) == p
    assert p.substitute({"z3": ba.Polynomial(0), "z4": ba.Polynomial.parse("u1"), "z5": ba.Polynomial(2)}) == ba.Polynomial.parse("-u1 + 1")
    with pytest.raises(ValueError):
        p.substitute({"z3": ba.Polynomial(0)})
    with pytest.raises(ZeroDivisionError):
        p.divide_exact(ba.Polynomial(0))


def test_matrix_and_minors():
    rows = ba.bott_samelson_matrix([0, 1, 2], 2)
    assert rows[0] == ["-z2", "-z3", "1", "0", "0", "0"]
    assert str(ba.minor([0, 1, 0], 2, [1], [1], method="lgv")) == "-z2"
    for method in ("lgv", "laplace"):
        assert ba.minor([0, 1, 0], 2, [1, 2], [1, 2], method=method) == ba.Polynomial.parse("-z1*z3 - z2")
    with pytest.raises(ValueError):
        ba.minor([0], 2, [1], [1], method="other")


def test_essential_and_charts():
    assert ba.essential_set(1, 2) == [(1, 1, 0), (5, 5, 4)]
    assert [str(p) for p in ba.chart_map(1, 2)] == ["u3", "u3*u4 + u2", "-u4"]


def test_render():
    svg = ba.render_diagram([0, 1, 2], 2)
    assert "<svg" in svg
    tikz = ba.render_diagram([0, 1, 2], 2, format="tikz", inverse=True)
    assert tikz.startswith("\\begin{tikzpicture}")


def test_verify():
    report = ba.verify_atlas(3, threads=2)
    assert report["pass"] is True
    assert list(report)[:3] == ["n", "charts", "pass"]
    assert len(report["charts"]) == 6
    chart = ba.verify_chart(1, 2)
    assert chart["rows"][1]["generator"] == "z2"
    assert chart["rows"][1]["divisors"] == ["2"]
