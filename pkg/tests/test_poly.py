from fractions import Fraction

import pytest
from hypothesis import given, settings

from divlab.errors import DivisorConstant, DivisorZero, ZeroPolynomial
from divlab.expr import parse_poly
from divlab.poly import (
    NEG_INF,
    Poly,
    PolyTower,
    conj_poly,
    content,
    divides_exact,
    divides_in_fraction_field,
    eval_bivariate,
    norm_poly,
    poly_eval,
    poly_gcd,
    primitive_part,
    pseudo_divide,
)
from divlab.rings import QQ, ZZ, DenominatorSet, Localized, Quad, Quadratic, quad_norm

from .conftest import int_polys, quad_polys, random_int_poly, random_quad_poly, random_tower_poly

Zi, Z2 = Quadratic(-1), Quadratic(2)
ZXY = PolyTower(ZZ, "x")


def Z(text):
    return parse_poly(text, ZZ)


def test_zero_polynomial_degree_marker():
    assert Poly.zero().degree == NEG_INF
    assert Poly.zero().degree < 0
    assert Z("7").degree == 0
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)


@pytest.mark.parametrize("f, k, expected", [("x^2 + 1", 4, 17), ("0", 123, 0), ("x^5 - x", 2, 30)])
def test_poly_eval(f, k, expected):
    assert poly_eval(Z(f), k) == expected


def test_pseudo_divide_monic_is_ordinary_division():
    r = pseudo_divide(Z("x^2 + 1"), Z("x"))
    assert (r.quotient, r.remainder, r.scale) == (Z("x"), Z("1"), 1)


def test_pseudo_divide_known_quotient():
    f, g = Z("16*x^4 - 12*x^2 - 4"), Z("x - 1")
    r = pseudo_divide(f, g)
    assert r.quotient == Z("16*x^3 + 16*x^2 + 4*x + 4")
    assert not r.remainder
    # independent expansion of (x - 1) q
    assert g * Z("16*x^3 + 16*x^2 + 4*x + 4") == f


def test_pseudo_divide_nonmonic():
    f, g = Z("x^5 - x"), Z("2*x^2 - 1")
    r = pseudo_divide(f, g)
    assert r.s == 4 and r.scale == 16
    assert f * 16 == g * r.quotient + r.remainder
    assert r.remainder.degree <= 1


def test_pseudo_divide_errors():
    with pytest.raises(DivisorZero):
        pseudo_divide(Z("x"), Poly.zero())
    with pytest.raises(DivisorConstant):
        pseudo_divide(Z("x"), Z("3"))


def test_pseudo_divide_zero_dividend():
    r = pseudo_divide(Poly.zero(), Z("3*x + 1"))
    assert r.s == 0 and not r.quotient and not r.remainder


def test_pseudo_division_identity_1000(rng):
    for _ in range(1000):
        f = random_int_poly(rng, 9, 30)
        g = random_int_poly(rng, 5, 30, min_deg=1)
        r = pseudo_divide(f, g)
        assert r.s == max(int(f.degree) - int(g.degree) + 1, 0)
        assert f * r.scale == g * r.quotient + r.remainder
        assert r.remainder.degree < g.degree


def test_bivariate_pseudo_division_identity(rng):
    for _ in range(200):
        f = random_tower_poly(rng, rng.randint(0, 4), 3, 9)
        g = random_tower_poly(rng, rng.randint(1, 3), 3, 9)
        r = pseudo_divide(f, g)
        assert r.scale == g.lc ** r.s
        assert r.check(f, g)


@pytest.mark.parametrize(
    "f, c, prim",
    [("6*x^2 + 9*x + 3", 3, "2*x^2 + 3*x + 1"), ("x^2 + 1", 1, "x^2 + 1"), ("4*x + 2", 2, "2*x + 1"), ("-4*x - 2", 2, "-2*x - 1")],
)
def test_content_examples(f, c, prim):
    assert content(Z(f)) == c
    assert primitive_part(Z(f)) == Z(prim)


def test_content_of_zero_raises():
    with pytest.raises(ZeroPolynomial):
        content(Poly.zero())


def test_gauss_content_multiplicative(rng):
    for _ in range(500):
        f, g = random_int_poly(rng, 6, 40), random_int_poly(rng, 6, 40)
        assert content(f * g) == content(f) * content(g)


def test_content_over_localization():
    z6 = Localized(DenominatorSet.dividing(6))
    f = parse_poly("12*x + 30", z6)
    assert content(f) == 1  # 6 is a unit
    f = parse_poly("10*x + 35/3", z6)
    assert content(f) == 5


def test_content_over_tower():
    f = parse_poly("(2*x^2 - 2)*y + (4*x + 4)", ZXY)
    assert content(f) == parse_poly("2*x + 2", ZZ)
    assert primitive_part(f) == parse_poly("(x - 1)*y + 2", ZXY)


@pytest.mark.parametrize(
    "g, f, q",
    [
        ("x - 1", "16*x^4 - 12*x^2 - 4", "16*x^3 + 16*x^2 + 4*x + 4"),
        ("5", "x^5 - x", None),
        ("2*x^2 - 1", "8*x^3 - 4*x", "4*x"),
        ("x", "x*(x + 1)", "x + 1"),
        ("2*x + 2", "x^2 - 1", None),
        ("3", "6*x + 3", "2*x + 1"),
        ("x^2 + 1", "x", None),
    ],
)
def test_divides_exact_examples(g, f, q):
    got = divides_exact(Z(g), Z(f))
    assert got == (None if q is None else Z(q))


def test_divides_exact_roundtrip(rng):
    for _ in range(300):
        g = random_int_poly(rng, 5, 20, min_deg=1)
        q = random_int_poly(rng, 5, 20)
        assert divides_exact(g, g * q) == q
        g0 = poly_eval(g, 0)
        if abs(g0) > 1:
            c = rng.randint(1, abs(g0) - 1) * rng.choice([1, -1])
            assert divides_exact(g, g * q + c) is None


def test_divides_exact_over_quadratic(rng):
    for _ in range(100):
        g = random_quad_poly(rng, 2, 3, 6)
        q = random_quad_poly(rng, 2, 3, 6)
        if g:
            assert divides_exact(g, g * q) == q
    g = parse_poly("(1 + i)*x + 1", Zi)
    f = g * parse_poly("x - i", Zi)
    assert divides_exact(g, f) == parse_poly("x - i", Zi)
    assert divides_exact(parse_poly("(1 + i)", Zi), parse_poly("2*x + 2", Zi)) == parse_poly("(1 - i)*x + (1 - i)", Zi)
    assert divides_exact(parse_poly("2*x + 1", Zi), parse_poly("x^2 + 1", Zi)) is None


def test_divides_exact_over_tower(rng):
    for _ in range(40):
        g = random_tower_poly(rng, rng.randint(1, 2), 2, 5)
        q = random_tower_poly(rng, rng.randint(0, 2), 2, 5)
        assert divides_exact(g, g * q) == q
    g = parse_poly("x*y + 1", ZXY)
    assert divides_exact(g, parse_poly("x*y^2 + y + 1", ZXY)) is None


def test_fraction_field_examples():
    assert divides_in_fraction_field(Z("5"), Z("x^5 - x")) == parse_poly("1/5*x^5 - 1/5*x", QQ)
    assert divides_in_fraction_field(Z("x"), Z("x")) == 1
    assert divides_in_fraction_field(Z("x + 1"), Z("x^2 - 1")) == Z("x - 1")
    assert divides_in_fraction_field(Z("x"), Z("x^2 + 1")) is None
    assert divides_in_fraction_field(Z("2*x + 2"), Z("x^2 - 1")) == parse_poly("1/2*x - 1/2", QQ)


def test_exact_implies_fraction_field(rng):
    for _ in range(200):
        g = random_int_poly(rng, 4, 10, min_deg=0)
        f = random_int_poly(rng, 7, 10)
        q = divides_exact(g, f)
        if q is not None:
            assert divides_in_fraction_field(g, f) == q
        q = divides_exact(g, g * f)
        assert divides_in_fraction_field(g, g * f) == q


def test_fraction_field_over_quadratic():
    g, f = parse_poly("2", Zi), parse_poly("(1 + i)*x", Zi)
    q = divides_in_fraction_field(g, f)
    assert q.coeffs[1] == Quad(Fraction(1, 2), Fraction(1, 2), -1)
    assert divides_exact(g, f) is None


def test_conj_poly_examples():
    f = parse_poly("(1 - i)*x^2 + 3*i*x + 1", Zi)
    assert conj_poly(f) == parse_poly("(1 + i)*x^2 - 3*i*x + 1", Zi)
    g = parse_poly("(1 - sqrt(2))*x^2 - 5*x + (4 - 3*sqrt(2))", Z2)
    assert conj_poly(g) == parse_poly("(1 + sqrt(2))*x^2 - 5*x + (4 + 3*sqrt(2))", Z2)
    h = parse_poly("3*x^2 - 7", Z2)
    assert conj_poly(h) == h


def test_norm_poly_examples():
    f = parse_poly("(1 - i)*x^2 + 3*i*x + 1", Zi)
    assert norm_poly(f) == Z("2*x^4 - 6*x^3 + 11*x^2 + 1")
    g = parse_poly("(1 - sqrt(2))*x^2 - 5*x + (4 - 3*sqrt(2))", Z2)
    assert norm_poly(g) == Z("-x^4 - 10*x^3 + 21*x^2 - 40*x - 2")
    assert norm_poly(parse_poly("1", Z2)) == 1
    assert norm_poly(Poly.zero(Z2)) == 0


def test_conj_norm_laws_500(rng):
    for _ in range(500):
        d = rng.choice([-1, 2, 3, -2, 5])
        f = random_quad_poly(rng, d, 4, 9)
        g = random_quad_poly(rng, d, 4, 9)
        assert conj_poly(f + g) == conj_poly(f) + conj_poly(g)
        assert conj_poly(f * g) == conj_poly(f) * conj_poly(g)
        assert conj_poly(conj_poly(f)) == f
        assert all(c.y == 0 for c in (f * conj_poly(g) + g * conj_poly(f)).coeffs)
        assert norm_poly(f * g) == norm_poly(f) * norm_poly(g)
        assert (not norm_poly(f)) == (not f)
        if f:
            assert norm_poly(f).degree == 2 * f.degree
        b = rng.randint(-20, 20)
        assert poly_eval(conj_poly(f), b) == poly_eval(f, b).conj()
        assert poly_eval(norm_poly(f), b) == quad_norm(poly_eval(f, b))


@settings(max_examples=100)
@given(quad_polys(-1), quad_polys(-1))
def test_norm_multiplicative_hypothesis(f, g):
    assert norm_poly(f * g) == norm_poly(f) * norm_poly(g)


@given(int_polys(), int_polys(nonzero=True))
def test_poly_ring_laws(f, g):
    h = Z("x^2 - 3")
    assert f * (g + h) == f * g + f * h
    assert (f * g).degree == f.degree + g.degree
    assert f - f == 0


def test_poly_gcd():
    a, b = Z("x^2 - 1"), Z("x^2 + 2*x + 1")
    assert poly_gcd(a, b) == Z("x + 1")
    assert poly_gcd(Z("6*x + 6"), Z("4*x^2 - 4")) == Z("2*x + 2")
    assert poly_gcd(Z("x"), Z("x + 1")) == 1
    assert poly_gcd(Poly.zero(), Z("-3*x")) == Z("3*x")


def test_eval_bivariate():
    f = parse_poly("(x^2 + 1)*y - x", ZXY)
    assert eval_bivariate(f, 2, 3) == 13
    # substituting y keeps a polynomial in x
    assert poly_eval(f, Z("x")) == Z("x^3")
