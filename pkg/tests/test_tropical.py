import random
from fractions import Fraction

import pytest

from tropic.errors import ParseError
from tropic.parsing import parse
from tropic.tropical import (
    NEG_INF,
    TropicalNumber,
    TropicalPolynomial,
    eval_poly,
    format_polynomial,
    func_equal,
    poly_from_json,
    poly_to_json,
    relevant_support,
    trop_mul,
    trop_pow,
)


def D(pairs):
    return TropicalPolynomial.from_dict(
        {e: Fraction(c) for e, c in pairs.items()}
    )


# -- parsing ---------------------------------------------------------------

def test_parse_tropical_line():
    g = parse("3*x + 2*y + 0")
    assert g.as_dict() == {(1, 0): 3, (0, 1): 2, (0, 0): 0}


def test_parse_constant():
    assert parse("0").as_dict() == {(0, 0): 0}
    assert parse("-7/2").as_dict() == {(0, 0): Fraction(-7, 2)}


def test_parse_squares():
    g = parse("x^2 + y^2 + 0")
    assert g.as_dict() == {(2, 0): 0, (0, 2): 0, (0, 0): 0}


def test_parse_mixed_monomials():
    g = parse("5*x^2*y^3 + -1/3*x*y + y")
    assert g.as_dict() == {
        (2, 3): 5,
        (1, 1): Fraction(-1, 3),
        (0, 1): 0,
    }


def test_parse_duplicate_monomials_merge_by_max():
    g = parse("1*x + 4*x + 2")
    assert g.as_dict() == {(1, 0): 4, (0, 0): 2}


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse("")
    with pytest.raises(ParseError) as err:
        parse("3*x + ")
    assert err.value.position == 6
    with pytest.raises(ParseError):
        parse("x^-2")
    with pytest.raises(ParseError):
        parse("3 * * x")
    with pytest.raises(ParseError):
        parse("z + 1")


# -- evaluation ------------------------------------------------------------

def test_eval_line_at_its_vertex_ties_at_zero():
    g = parse("3*x + 2*y + 0")
    assert eval_poly(g, (-3, -2)) == 0


def test_eval_constant():
    g = parse("0")
    assert eval_poly(g, (Fraction(5, 2), 7)) == 0


def test_eval_line_at_origin():
    g = parse("3*x + 2*y + 0")
    assert eval_poly(g, (0, 0)) == 3


# -- multiplication ---------------------------------------------------------

def test_square_of_line_support():
    g = parse("x + y + 0")
    sq = trop_mul(g, g)
    assert sq.as_dict() == {
        (2, 0): 0, (0, 2): 0, (0, 0): 0, (1, 1): 0, (1, 0): 0, (0, 1): 0,
    }


def test_mul_by_tropical_unit():
    g = parse("3*x + 2*y + 0")
    assert trop_mul(g, parse("0")) == g


def test_mul_hand_convolution():
    g = trop_mul(parse("3*x + 0"), parse("2*y + 0"))
    assert g.as_dict() == {(1, 1): 5, (1, 0): 3, (0, 1): 2, (0, 0): 0}


def test_eval_of_product_is_sum_of_evals_fuzz():
    rng = random.Random(3)
    for _ in range(60):
        g1 = _random_poly(rng)
        g2 = _random_poly(rng)
        p = (Fraction(rng.randint(-20, 20), 3), Fraction(rng.randint(-20, 20), 5))
        assert eval_poly(trop_mul(g1, g2), p) == eval_poly(g1, p) + eval_poly(g2, p)


# -- functional equality -----------------------------------------------------

def test_square_of_line_equals_squares_poly():
    assert func_equal(trop_pow(parse("x + y + 0"), 2), parse("x^2 + y^2 + 0"))


def test_dropping_below_hull_term_preserves_function():
    g = parse("x^2 + y^2 + 0 + -5*x*y")
    assert func_equal(g, parse("x^2 + y^2 + 0"))
    assert relevant_support(g).as_dict() == {(2, 0): 0, (0, 2): 0, (0, 0): 0}


def test_different_newton_polygons_not_equal():
    assert not func_equal(parse("x + 0"), parse("y + 0"))


def test_func_equal_is_equivalence_and_respects_relevant_support():
    rng = random.Random(17)
    polys = [_random_poly(rng) for _ in range(15)]
    for g in polys:
        assert func_equal(g, g)
        assert func_equal(g, relevant_support(g))
    for g1 in polys[:5]:
        for g2 in polys[:5]:
            assert func_equal(g1, g2) == func_equal(g2, g1)


def test_relevant_support_keeps_full_hull_polynomials():
    g = parse("x + y + 0")
    assert relevant_support(g) == g


def test_relevant_support_fig4_shape():
    # one coplanar quadrilateral of exponents plus one interior term below
    g = D({(1, 0): 0, (3, 0): 0, (2, 2): 0, (0, 1): 0, (1, 1): -1})
    r = relevant_support(g)
    assert (1, 1) not in r.as_dict()
    assert func_equal(g, r)


# -- semiring laws -----------------------------------------------------------

def test_semiring_laws_fuzz():
    rng = random.Random(29)
    vals = [TropicalNumber(Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
            for _ in range(40)] + [NEG_INF]
    for _ in range(200):
        a, b, c = rng.choice(vals), rng.choice(vals), rng.choice(vals)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * TropicalNumber(0) == a
        assert a + NEG_INF == a


def test_no_additive_inverses():
    rng = random.Random(31)
    for _ in range(50):
        a = TropicalNumber(Fraction(rng.randint(-9, 9)))
        for _ in range(20):
            b = TropicalNumber(Fraction(rng.randint(-9, 9)))
            # max(a, b) >= a > -oo, so a + b can never be the neutral element
            assert (a + b) != NEG_INF


# -- round trips --------------------------------------------------------------

def test_format_parse_round_trip_fuzz():
    rng = random.Random(41)
    for _ in range(80):
        g = _random_poly(rng)
        assert parse(format_polynomial(g)) == g


def test_json_round_trip():
    g = parse("3*x + 2*y + 0 + 1/2*x*y")
    assert poly_from_json(poly_to_json(g)) == g


def _random_poly(rng) -> TropicalPolynomial:
    terms = {}
    for _ in range(rng.randint(1, 8)):
        e = (rng.randint(0, 4), rng.randint(0, 4))
        terms[e] = Fraction(rng.randint(-40, 40), rng.randint(1, 6))
    return TropicalPolynomial.from_dict(terms)
