from fractions import Fraction

import pytest

from tropic.curves import corner_locus
from tropic.tropical import TropicalPolynomial

# Degree-3 lift whose subdivision is the star triangulation of the degree-3
# triangle around its interior point: a smooth genus-1 cubic whose loop has
# nine edges.  Heights found once with the regularity oracle and frozen.
STAR_CUBIC_HEIGHTS = {
    (0, 0): Fraction(-3), (1, 0): Fraction(-1), (2, 0): Fraction(0),
    (3, 0): Fraction(0), (2, 1): Fraction(0), (1, 2): Fraction(-1),
    (0, 3): Fraction(-3), (0, 2): Fraction(0), (0, 1): Fraction(2),
    (1, 1): Fraction(5),
}

# Genus-1 but not smooth: the subdivision keeps the unit parallelogram
# {(0,0),(1,0),(1,1),(0,1)} as a cell.  Witness heights, frozen.
PARALLELOGRAM_CUBIC_HEIGHTS = {
    (0, 0): Fraction(-1), (0, 1): Fraction(0), (0, 2): Fraction(0),
    (0, 3): Fraction(-2), (1, 0): Fraction(0), (1, 1): Fraction(1),
    (1, 2): Fraction(0), (2, 0): Fraction(0), (2, 1): Fraction(0),
    (3, 0): Fraction(-2),
}

# Genus-0 cubic: generic concave lift on the degree-3 triangle without its
# interior lattice point, so no cell cycle survives.
GENUS0_CUBIC_HEIGHTS = {
    (i, j): Fraction(-(i * i + i * j + j * j))
    for i in range(4) for j in range(4 - i) if (i, j) != (1, 1)
}

# A central-type and a fan-type smooth conic positioned so that their
# intersection multiset is {2, 1, 1} (one crossing of a (1,1)-edge with a
# (1,-1)-edge), total 4.
CONIC_A_HEIGHTS = {
    (0, 0): Fraction(0), (1, 0): Fraction(5), (0, 1): Fraction(5),
    (1, 1): Fraction(6), (2, 0): Fraction(0), (0, 2): Fraction(0),
}
CONIC_B_HEIGHTS = {
    (0, 0): Fraction(0), (1, 0): Fraction(-2), (0, 1): Fraction(-2),
    (1, 1): Fraction(0), (2, 0): Fraction(-6), (0, 2): Fraction(-6),
}
CONIC_B_SHIFT = (-2, -4)


def _locus(heights):
    return corner_locus(TropicalPolynomial.from_dict(heights))


@pytest.fixture(scope="session")
def star_cubic():
    return _locus(STAR_CUBIC_HEIGHTS)


@pytest.fixture(scope="session")
def parallelogram_cubic():
    return _locus(PARALLELOGRAM_CUBIC_HEIGHTS)


@pytest.fixture(scope="session")
def genus0_cubic():
    return _locus(GENUS0_CUBIC_HEIGHTS)


@pytest.fixture(scope="session")
def conic_pair():
    a, _ = _locus(CONIC_A_HEIGHTS)
    b, _ = _locus(CONIC_B_HEIGHTS)
    return a, b.translate(CONIC_B_SHIFT)


@pytest.fixture(scope="session")
def smooth_conic():
    return _locus(CONIC_A_HEIGHTS)
