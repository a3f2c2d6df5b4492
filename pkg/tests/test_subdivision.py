from fractions import Fraction

import pytest

from tropic.errors import TropicError
from tropic.exact import polygon_double_area
from tropic.parsing import parse
from tropic.subdivision import (
    NewtonSubdivision,
    enumerate_smooth_types,
    is_regular,
    newton_subdivision,
    subdivision_from_json,
    subdivision_to_json,
)
from tropic.tropical import TropicalPolynomial


def test_newton_subdivision_of_line_is_trivial():
    sub = newton_subdivision(parse("x + y + 0"))
    assert sub.polygon == ((0, 0), (1, 0), (0, 1))
    assert sub.cells == (((0, 0), (1, 0), (0, 1)),)


def test_newton_subdivision_of_squares_poly_is_trivial_degree_two():
    sub = newton_subdivision(parse("x^2 + y^2 + 0"))
    assert sub.cells == (((0, 0), (2, 0), (0, 2)),)
    assert len(sub.cells[0]) == 3


def test_generic_conic_has_four_unimodular_triangles():
    g = TropicalPolynomial.from_dict(
        {(0, 0): 0, (1, 0): 1, (0, 1): 1, (1, 1): 1, (2, 0): 0, (0, 2): 0}
    )
    sub = newton_subdivision(g)
    assert len(sub.cells) == 4
    assert all(
        len(c) == 3 and polygon_double_area(list(c)) == 1 for c in sub.cells
    )


def test_trivial_subdivision_is_regular():
    sub = newton_subdivision(parse("x + y + 0"))
    ok, witness = is_regular(sub)
    assert ok
    assert set(witness) == {(0, 0), (1, 0), (0, 1)}


def test_all_four_conic_triangulations_regular_with_valid_witness():
    for sub in enumerate_smooth_types(2):
        ok, witness = is_regular(sub)
        assert ok
        # the witness really induces this subdivision
        g = TropicalPolynomial.from_dict(witness)
        assert sorted(newton_subdivision(g).cells) == sorted(sub.cells)


def test_pinwheel_subdivision_is_not_regular():
    v1, v2, v3 = (0, 0), (4, 0), (0, 4)
    w1, w2, w3 = (1, 1), (2, 1), (1, 2)
    cells = [
        [v1, v2, w2], [v1, w2, w1],
        [v2, v3, w3], [v2, w3, w2],
        [v3, v1, w1], [v3, w1, w3],
        [w1, w2, w3],
    ]
    sub = NewtonSubdivision.from_cells(cells)
    ok, witness = is_regular(sub)
    assert not ok and witness is None


def test_enumerate_smooth_types_degree_one():
    types = enumerate_smooth_types(1)
    assert len(types) == 1
    assert types[0].cells == (((0, 0), (1, 0), (0, 1)),)


def test_enumerate_smooth_types_degree_two():
    types = enumerate_smooth_types(2)
    assert len(types) == 4
    for sub in types:
        assert len(sub.cells) == 4
        assert all(polygon_double_area(list(c)) == 1 for c in sub.cells)


def test_enumerate_smooth_types_rejects_large_degree():
    with pytest.raises(TropicError):
        enumerate_smooth_types(3)
    with pytest.raises(TropicError):
        enumerate_smooth_types(4, experimental=True)


def test_enumerate_smooth_types_degree_three_experimental():
    types = enumerate_smooth_types(3, experimental=True)
    # every unimodular triangulation of the degree-3 triangle is regular
    assert len(types) == 79
    assert all(len(sub.cells) == 9 for sub in types)


def test_from_cells_rejects_overlap_and_gap():
    with pytest.raises(TropicError):
        NewtonSubdivision.from_cells(
            [[(0, 0), (1, 0), (0, 1)], [(0, 0), (1, 0), (1, 1), (0, 1)]]
        )
    with pytest.raises(TropicError):
        NewtonSubdivision.from_cells(
            [[(0, 0), (2, 0), (1, 1)], [(0, 0), (1, 1), (0, 2)],
             [(2, 0), (2, 2), (1, 1)]]  # leaves a gap in the hull
        )


def test_subdivision_json_round_trip():
    sub = newton_subdivision(parse("3*x + 2*y + 0"))
    back = subdivision_from_json(subdivision_to_json(sub))
    assert back.polygon == sub.polygon
    assert back.cells == sub.cells
    assert back.heights == sub.heights
