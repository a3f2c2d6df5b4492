import random
from fractions import Fraction

import pytest

from tropic.curves import (
    canonicalize,
    check_balancing,
    corner_locus,
    decompose_transverse_union,
    degree,
    make_curve,
)
from tropic.errors import NonTransverseError
from tropic.intersection import (
    bezout_sum,
    stable_intersection,
    transverse_intersections,
    union,
)
from tropic.parsing import parse
from tropic.tropical import TropicalPolynomial, trop_mul


def line_at(v):
    c, _ = corner_locus(parse("x + y + 0"))
    return c.translate(v)


def test_two_lines_meet_once():
    pts = transverse_intersections(line_at((0, 0)), line_at((1, -1)))
    assert [(p.location, p.multiplicity) for p in pts] == [
        ((Fraction(0), Fraction(-1)), 1)
    ]


def test_parallel_translate_still_meets_once():
    # a generic translate of a line meets it transversally in one point
    pts = transverse_intersections(line_at((0, 0)), line_at((-1, 2)))
    assert len(pts) == 1 and pts[0].multiplicity == 1


def test_horizontal_translate_shares_a_segment():
    # translating along a ray direction overlaps the horizontal rays; this
    # is the genuinely non-transverse case, settled stably
    with pytest.raises(NonTransverseError):
        transverse_intersections(line_at((0, 0)), line_at((1, 0)))
    pts = stable_intersection(line_at((0, 0)), line_at((1, 0)))
    assert sum(p.multiplicity for p in pts) == 1


def test_conic_pair_multiset(conic_pair):
    a, b = conic_pair
    pts = transverse_intersections(a, b)
    assert sorted(p.multiplicity for p in pts) == [1, 1, 2]
    mult2 = next(p for p in pts if p.multiplicity == 2)
    assert mult2.location == (Fraction(-3), Fraction(-3))


def test_bezout_examples(conic_pair, smooth_conic):
    assert bezout_sum(line_at((0, 0)), line_at((2, 1))) == 1
    assert bezout_sum(*conic_pair) == 4
    conic = smooth_conic[0]
    assert degree(conic) == 2
    assert bezout_sum(line_at((17, 12)), conic) == 2


def test_bezout_fuzz_transverse_pairs():
    rng = random.Random(321)
    done = 0
    while done < 100:
        d1, d2 = rng.randint(1, 3), rng.randint(1, 3)
        c1, _ = corner_locus(_random_full_poly(rng, d1))
        c2, _ = corner_locus(_random_full_poly(rng, d2))
        shift = (
            Fraction(rng.randint(-400, 400), 89),
            Fraction(rng.randint(-400, 400), 97),
        )
        try:
            pts = transverse_intersections(c1, c2.translate(shift))
        except NonTransverseError:
            continue
        total = sum(p.multiplicity for p in pts)
        assert total == d1 * d2, (d1, d2, total)
        done += 1


def test_stable_self_intersection_of_smooth_conic(smooth_conic):
    conic = smooth_conic[0]
    expected = sorted((v, 1) for v in conic.vertices)
    for d in ((1, 2), (1, 3), (1, 5)):
        pts = stable_intersection(conic, conic, direction=d)
        assert sorted((p.location, p.multiplicity) for p in pts) == expected


def test_stable_self_intersection_of_line():
    c = line_at((5, -7))
    pts = stable_intersection(c, c)
    assert [(p.location, p.multiplicity) for p in pts] == [
        ((Fraction(5), Fraction(-7)), 1)
    ]


def test_stable_agrees_with_transverse_on_transverse_pairs():
    c1, c2 = line_at((0, 0)), line_at((1, -1))
    tr = [(p.location, p.multiplicity) for p in transverse_intersections(c1, c2)]
    st = [(p.location, p.multiplicity) for p in stable_intersection(c1, c2)]
    assert tr == st


def test_stable_direction_independence(conic_pair):
    a, b = conic_pair
    results = []
    for d in ((1, 2), (1, 3), (1, 5)):
        pts = stable_intersection(a, b, direction=d)
        results.append(sorted((p.location, p.multiplicity) for p in pts))
    assert results[0] == results[1] == results[2]


def test_local_multiplicity_model():
    # {x2 = 0} against {x2 = n x1}: multiplicity n
    g1, _ = corner_locus(parse("y + 0"))
    for n in range(1, 6):
        g2, _ = corner_locus(parse(f"x^{n} + y"))
        pts = transverse_intersections(g1, g2)
        assert [(p.location, p.multiplicity) for p in pts] == [
            ((Fraction(0), Fraction(0)), n)
        ]


# -- unions --------------------------------------------------------------------

def test_union_of_two_lines_has_crossing():
    u = union(line_at((0, 0)), line_at((1, -1)))
    assert degree(u) == 2
    assert check_balancing(u)[0]
    # crossing point (0,-1) is a 4-valent vertex
    from tropic.curves import vertex_germs
    cross = u.vertices.index((Fraction(0), Fraction(-1)))
    assert len(vertex_germs(u, cross)) == 4


def test_union_of_line_with_itself_is_weight_two_line():
    c = line_at((3, 4))
    u = union(c, c)
    sq, _ = corner_locus(trop_mul(parse("x + y + 0"), parse("x + y + 0")))
    assert canonicalize(u) == canonicalize(sq.translate((3, 4)))
    assert all(r.weight == 2 for r in u.rays)


def test_union_matches_product_of_polynomials_fuzz():
    rng = random.Random(99)
    for _ in range(25):
        g1 = _random_full_poly(rng, rng.randint(1, 2))
        g2 = _random_full_poly(rng, rng.randint(1, 2))
        c1, _ = corner_locus(g1)
        c2, _ = corner_locus(g2)
        prod_curve, _ = corner_locus(trop_mul(g1, g2))
        assert canonicalize(prod_curve) == canonicalize(union(c1, c2))


# -- decomposition ---------------------------------------------------------------

def test_decompose_union_of_two_lines():
    a, b = line_at((0, 0)), line_at((1, -1))
    got = decompose_transverse_union(union(a, b))
    assert got is not None
    c1, c2 = got
    assert sorted([c1, c2], key=str) == sorted(
        [canonicalize(a), canonicalize(b)], key=str
    )


def test_decompose_conic_union(conic_pair):
    a, b = conic_pair
    got = decompose_transverse_union(union(a, b))
    assert got is not None
    c1, c2 = got
    assert {c1, c2} == {canonicalize(a), canonicalize(b)}


def test_decompose_single_line_returns_none():
    assert decompose_transverse_union(line_at((2, 2))) is None


def test_decompose_three_lines_splits_off_component():
    a, b, c = line_at((0, 0)), line_at((3, -1)), line_at((-2, 5))
    u = union(union(a, b), c)
    got = decompose_transverse_union(u)
    assert got is not None
    c1, c2 = got
    assert canonicalize(union(c1, c2)) == canonicalize(u)
    assert degree(c1) + degree(c2) == 3


def _random_full_poly(rng, d):
    terms = {(0, 0): Fraction(0), (d, 0): Fraction(0), (0, d): Fraction(0)}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            if rng.random() < 0.7:
                terms[(i, j)] = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
    return TropicalPolynomial.from_dict(terms)
