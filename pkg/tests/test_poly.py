"""Groebner bases, standard monomials, and the polynomial parser."""

import pytest

from homalg import poly
from homalg.field import GF, QQ
from homalg.poly import PolySyntaxError


def _p(F, text, names):
    return poly.parse_poly(F, text, names)


def test_parse_and_print_roundtrip():
    F = QQ
    names = ["x", "y"]
    p = _p(F, "x^2 - 3*x*y + 2", names)
    assert poly.poly_str(F, p, names) == "x^2 - 3*x*y + 2"
    q = _p(F, "(x + y)^2", names)
    assert poly.poly_str(F, q, names) == "x^2 + 2*x*y + y^2"


def test_parse_rejects_garbage():
    with pytest.raises(PolySyntaxError):
        _p(QQ, "x +", ["x"])
    with pytest.raises(PolySyntaxError):
        _p(QQ, "z", ["x"])
    with pytest.raises(PolySyntaxError):
        _p(QQ, "x ^ y", ["x", "y"])


def test_degrevlex_ordering():
    # degree first, then reversed-exponent tie break
    x2 = (2, 0)
    xy = (1, 1)
    y2 = (0, 2)
    ks = sorted([y2, xy, x2], key=poly.degrevlex_key)
    assert ks == [y2, xy, x2]


def test_groebner_monomial_ideal():
    F = QQ
    gens = [_p(F, t, ["x", "y"]) for t in ["x^2", "x*y", "y^2"]]
    gb = poly.groebner(F, gens, 2)
    leads = sorted(poly.leading(F, g)[0] for g in gb)
    assert leads == [(0, 2), (1, 1), (2, 0)]
    assert poly.is_zero_dimensional(F, gb, 2)
    std = poly.standard_monomials(F, gb, 2)
    assert std == [(0, 0), (0, 1), (1, 0)]


def test_groebner_computes_s_polynomials():
    F = QQ
    # x = y^2 on the curve, so the quotient by (x - y^2, y^3) has dim 3
    gens = [_p(F, t, ["x", "y"]) for t in ["x - y^2", "y^3"]]
    gb = poly.groebner(F, gens, 2)
    assert poly.is_zero_dimensional(F, gb, 2)
    std = poly.standard_monomials(F, gb, 2)
    assert len(std) == 3


def test_normal_form_reduces_fully():
    F = QQ
    gens = [_p(F, "x^2 - 1", ["x"])]
    gb = poly.groebner(F, gens, 1)
    basis = [(poly.leading(F, g)[0], g) for g in gb]
    r = poly.normal_form(F, _p(F, "x^3 + x^2", ["x"]), basis)
    assert poly.poly_str(F, r, ["x"]) == "x + 1"


def test_zero_dimensionality_detection():
    F = QQ
    gb = poly.groebner(F, [_p(F, "x*y", ["x", "y"])], 2)
    assert not poly.is_zero_dimensional(F, gb, 2)


def test_groebner_over_prime_field():
    F = GF(5)
    gens = [_p(F, "x^2 + 3", ["x"])]
    gb = poly.groebner(F, gens, 1)
    std = poly.standard_monomials(F, gb, 1)
    assert len(std) == 2


def test_unit_ideal_reduces_to_one():
    F = QQ
    gb = poly.groebner(F, [_p(F, "x", ["x"]), _p(F, "x - 1", ["x"])], 1)
    assert any(poly.mono_deg(poly.leading(F, g)[0]) == 0 for g in gb)
