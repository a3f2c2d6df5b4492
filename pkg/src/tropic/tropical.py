"""The max-plus semiring and tropical polynomials in two variables.

A tropical polynomial is stored as a finite map from lattice exponents
(i, j) to rational coefficients and evaluates as

    g(x, y) = max over terms of (i*x + j*y + coefficient).

Addition of tropical numbers is max, multiplication is ordinary addition;
polynomial multiplication is therefore max-plus convolution.  Because the
semiring has no additive cancellation, distinct polynomials can define the
same function on the plane; ``func_equal`` decides that functional
equality exactly through lifted upper hulls.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    IntVec,
    Point,
    UpperFace,
    convex_hull,
    hull_height,
    polygon_lattice_points,
    upper_hull_lift,
)


class TropicalNumber:
    """A rational number under (max, +), with -oo as the additive unit.

    ``a + b`` is tropical addition max(a, b) and ``a * b`` is tropical
    multiplication a + b.
    """

    __slots__ = ("value",)

    def __init__(self, value: Fraction | int | None):
        self.value = None if value is None else Fraction(value)

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __add__(self, other: "TropicalNumber") -> "TropicalNumber":
        if self.is_neg_inf:
            return other
        if other.is_neg_inf:
            return self
        return TropicalNumber(max(self.value, other.value))

    def __mul__(self, other: "TropicalNumber") -> "TropicalNumber":
        if self.is_neg_inf or other.is_neg_inf:
            return NEG_INF
        return TropicalNumber(self.value + other.value)

    def __pow__(self, n: int) -> "TropicalNumber":
        if self.is_neg_inf:
            return NEG_INF if n > 0 else TropicalNumber(0)
        return TropicalNumber(self.value * n)

    def __eq__(self, other) -> bool:
        return isinstance(other, TropicalNumber) and self.value == other.value

    def __hash__(self):
        return hash(("trop", self.value))

    def __repr__(self):
        return "-oo" if self.is_neg_inf else f"TropicalNumber({self.value})"


NEG_INF = TropicalNumber(None)
TROP_ONE = TropicalNumber(0)  # multiplicative unit: 0 under (max, +)


@dataclass(frozen=True)
class TropicalPolynomial:
    """Finite nonempty map from exponents (i, j) in N^2 to coefficients."""

    terms: tuple[tuple[IntVec, Fraction], ...]

    @staticmethod
    def from_dict(d: dict[IntVec, Fraction]) -> "TropicalPolynomial":
        if not d:
            raise ValueError("tropical polynomial needs at least one term")
        items = []
        for (i, j), c in sorted(d.items()):
            if i < 0 or j < 0 or i != int(i) or j != int(j):
                raise ValueError(f"exponent {(i, j)} not in N^2")
            items.append(((int(i), int(j)), Fraction(c)))
        return TropicalPolynomial(tuple(items))

    def as_dict(self) -> dict[IntVec, Fraction]:
        return dict(self.terms)

    @property
    def support(self) -> list[IntVec]:
        return [a for a, _ in self.terms]

    def newton_polygon(self) -> list[IntVec]:
        return convex_hull(self.support)

    def degree(self) -> int:
        return max(i + j for (i, j), _ in self.terms)

    def lifted_hull(self) -> list[UpperFace]:
        return upper_hull_lift(list(self.terms))

    def __str__(self) -> str:
        return format_polynomial(self)


def eval_poly(g: TropicalPolynomial, p: Point) -> Fraction:
    """max over terms of i*x + j*y + c at the point p."""
    x, y = Fraction(p[0]), Fraction(p[1])
    return max(i * x + j * y + c for (i, j), c in g.terms)


def argmax_terms(g: TropicalPolynomial, p: Point) -> list[IntVec]:
    """The exponents whose terms attain the maximum at p."""
    x, y = Fraction(p[0]), Fraction(p[1])
    vals = [((i, j), i * x + j * y + c) for (i, j), c in g.terms]
    top = max(v for _, v in vals)
    return [a for a, v in vals if v == top]


def trop_mul(g1: TropicalPolynomial, g2: TropicalPolynomial) -> TropicalPolynomial:
    """Max-plus convolution; as functions, the result is g1 + g2."""
    out: dict[IntVec, Fraction] = {}
    for (i1, j1), c1 in g1.terms:
        for (i2, j2), c2 in g2.terms:
            e = (i1 + i2, j1 + j2)
            c = c1 + c2
            if e not in out or c > out[e]:
                out[e] = c
    return TropicalPolynomial.from_dict(out)


def trop_pow(g: TropicalPolynomial, n: int) -> TropicalPolynomial:
    if n < 0:
        raise ValueError("tropical power wants a nonnegative exponent")
    if n == 0:
        return TropicalPolynomial.from_dict({(0, 0): Fraction(0)})
    out = g
    for _ in range(n - 1):
        out = trop_mul(out, g)
    return out


def relevant_support(g: TropicalPolynomial) -> TropicalPolynomial:
    """Drop terms lifted strictly below the upper hull.

    The result defines the same function on the plane; the dropped terms
    never attain the maximum.
    """
    faces = g.lifted_hull()
    on_hull = set()
    for f in faces:
        on_hull.update(f.points)
    return TropicalPolynomial.from_dict(
        {a: c for a, c in g.terms if a in on_hull}
    )


def func_equal(g1: TropicalPolynomial, g2: TropicalPolynomial) -> bool:
    """Do g1 and g2 define the same function on the whole plane?

    Decided exactly: the Newton polygons must coincide and the lifted hull
    heights must agree at every lattice point of the polygon.  Comparing at
    support points only would not be enough, since hull-relevant lattice
    points may be missing from either support.
    """
    p1 = g1.newton_polygon()
    p2 = g2.newton_polygon()
    if p1 != p2:
        return False
    f1, f2 = g1.lifted_hull(), g2.lifted_hull()
    return all(
        hull_height(f1, a) == hull_height(f2, a)
        for a in polygon_lattice_points(p1)
    )


# ---------------------------------------------------------------------------
# formatting and JSON
# ---------------------------------------------------------------------------

def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_polynomial(g: TropicalPolynomial) -> str:
    """Grammar-compatible text; parse(format(g)) recovers g exactly."""
    chunks = []
    for (i, j), c in sorted(
        g.terms, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0], -t[0][1])
    ):
        mono = _monomial_text(i, j)
        if not mono:
            chunks.append(str(c))
        elif c == 0:
            chunks.append(mono)
        else:
            chunks.append(f"{c}*{mono}")
    return " + ".join(chunks)


def poly_to_json(g: TropicalPolynomial) -> dict:
    return {"terms": [{"i": i, "j": j, "c": str(c)} for (i, j), c in g.terms]}


def poly_from_json(obj: dict) -> TropicalPolynomial:
    terms: dict[IntVec, Fraction] = {}
    for t in obj["terms"]:
        e = (int(t["i"]), int(t["j"]))
        c = Fraction(t["c"])
        # duplicate exponents merge by max, the meaning of tropical addition
        if e not in terms or c > terms[e]:
            terms[e] = c
    return TropicalPolynomial.from_dict(terms)
