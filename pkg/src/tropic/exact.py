"""Exact geometric kernels: lattice vectors, hulls and lifted upper hulls.

Everything here works over plain integers and `fractions.Fraction`; there
are no floats and no tolerances anywhere.  Points of the plane are pairs
of Fractions, lattice vectors are pairs of ints.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple

IntVec = tuple[int, int]
Point = tuple[Fraction, Fraction]


def primitive_decompose(v: IntVec) -> tuple[IntVec, int]:
    """Write a nonzero integer vector as weight * primitive vector.

    Returns ``(u, w)`` with ``v == w*u``, ``w = gcd(|vx|, |vy|) > 0`` and
    ``u`` primitive.
    """
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero direction")
    w = math.gcd(abs(x), abs(y))
    return (x // w, y // w), w


def det2(u: IntVec | Point, v: IntVec | Point):
    """2x2 determinant u.x*v.y - u.y*v.x (works for int and Fraction pairs)."""
    return u[0] * v[1] - u[1] * v[0]


def lattice_length(a: IntVec, b: IntVec) -> int:
    """Number of primitive steps between two lattice points."""
    return math.gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


def primitive_of_rational(dx: Fraction, dy: Fraction) -> tuple[IntVec, Fraction]:
    """Primitive integer direction of a rational vector, plus the rational
    stretch t with (dx, dy) == t * u.  Requires (dx, dy) != 0."""
    if dx == 0 and dy == 0:
        raise ValueError("zero direction")
    scale = (Fraction(dx).denominator * Fraction(dy).denominator
             // math.gcd(Fraction(dx).denominator, Fraction(dy).denominator))
    ix, iy = int(dx * scale), int(dy * scale)
    u, w = primitive_decompose((ix, iy))
    return u, Fraction(w, scale)


def sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# convex hulls of lattice point sets
# ---------------------------------------------------------------------------

def convex_hull(points: Iterable[IntVec]) -> list[IntVec]:
    """Hull vertices in counterclockwise order (no interior-of-edge points).

    Degenerate inputs are allowed: a single point gives ``[p]``, a collinear
    set gives its two extreme points.
    """
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts
    if len(pts) == 2:
        return pts

    def half(ps):
        out = []
        for p in ps:
            while len(out) >= 2 and det2(
                (out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                (p[0] - out[-2][0], p[1] - out[-2][1]),
            ) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # all points collinear
        return [pts[0], pts[-1]]
    return hull


def polygon_double_area(verts: list[IntVec]) -> int:
    """Twice the area of a polygon given by its CCW vertex cycle."""
    s = 0
    n = len(verts)
    for i in range(n):
        s += det2(verts[i], verts[(i + 1) % n])
    return abs(s)


def point_in_polygon(p, verts: list[IntVec], *, boundary: bool = True) -> bool:
    """Exact containment test for a convex CCW polygon.

    ``p`` may have Fraction coordinates.  Degenerate polygons (segment,
    point) are handled.
    """
    n = len(verts)
    if n == 1:
        return p[0] == verts[0][0] and p[1] == verts[0][1]
    if n == 2:
        return point_on_segment(p, verts[0], verts[1]) and boundary
    on_edge = False
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        c = det2((b[0] - a[0], b[1] - a[1]), (p[0] - a[0], p[1] - a[1]))
        if c < 0:
            return False
        if c == 0:
            on_edge = True
    return boundary or not on_edge


def point_on_segment(p, a, b) -> bool:
    """Is p on the closed segment [a, b]?  Exact; mixed int/Fraction ok."""
    if det2((b[0] - a[0], b[1] - a[1]), (p[0] - a[0], p[1] - a[1])) != 0:
        return False
    lo, hi = min(a[0], b[0]), max(a[0], b[0])
    if lo == hi:
        lo, hi = min(a[1], b[1]), max(a[1], b[1])
        return lo <= p[1] <= hi
    return lo <= p[0] <= hi


def polygon_lattice_points(verts: list[IntVec]) -> list[IntVec]:
    """All lattice points inside or on a convex CCW polygon."""
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if point_in_polygon((x, y), verts):
                out.append((x, y))
    return out


def segment_key(a: IntVec, b: IntVec) -> tuple[IntVec, IntVec]:
    return (a, b) if a <= b else (b, a)


# ---------------------------------------------------------------------------
# lifted upper hulls
# ---------------------------------------------------------------------------

class UpperFace(NamedTuple):
    """A maximal face of the upper hull of lifted exponents.

    ``points`` are the input exponents lying on the face, ``affine`` is a
    supporting plane z = sx*a1 + sy*a2 + c evaluating to the lift height on
    every face point and dominating all other lifted points.
    """

    points: tuple[IntVec, ...]
    affine: tuple[Fraction, Fraction, Fraction]

    @property
    def cell(self) -> list[IntVec]:
        """Vertices of the projected cell (CCW)."""
        return convex_hull(self.points)


def _affine_dim(pts: list[IntVec]) -> int:
    if len(pts) <= 1:
        return 0
    p0 = pts[0]
    base = None
    for p in pts[1:]:
        d = (p[0] - p0[0], p[1] - p0[1])
        if d != (0, 0):
            if base is None:
                base = d
            elif det2(base, d) != 0:
                return 2
    return 0 if base is None else 1


def upper_hull_lift(points: list[tuple[IntVec, Fraction]]) -> list[UpperFace]:
    """Maximal faces of the upper convex hull of lifted lattice points.

    The projections of the returned faces partition the convex hull of the
    exponents; a point lifted strictly below the hull appears in no face.
    Every returned plane dominates every input point (equality exactly on
    the face).
    """
    if not points:
        raise ValueError("need at least one lifted point")
    seen = {}
    for a, c in points:
        if a in seen:
            raise ValueError(f"duplicate exponent {a}")
        seen[a] = Fraction(c)
    pts = sorted(seen.items())
    exps = [a for a, _ in pts]
    dim = _affine_dim(exps)

    if dim == 0:
        a, c = pts[0]
        return [UpperFace((a,), (Fraction(0), Fraction(0), c))]

    if dim == 1:
        return _upper_hull_1d(pts)

    return _upper_hull_2d(pts)


def _upper_hull_1d(pts) -> list[UpperFace]:
    # exponents on a line p0 + t*u; do a 1d upper envelope in (t, height)
    p0 = pts[0][0]
    u = None
    for a, _ in pts[1:]:
        d = (a[0] - p0[0], a[1] - p0[1])
        if d != (0, 0):
            u, _ = primitive_decompose(d)
            break
    ts = []
    for a, c in pts:
        d = (a[0] - p0[0], a[1] - p0[1])
        t = d[0] // u[0] if u[0] != 0 else d[1] // u[1]
        ts.append((t, a, c))
    ts.sort()
    # upper concave chain over (t, c)
    chain: list[tuple[int, IntVec, Fraction]] = []
    for item in ts:
        while len(chain) >= 2:
            (t1, _, c1), (t2, _, c2) = chain[-2], chain[-1]
            t3, _, c3 = item
            # keep chain concave: slope must strictly decrease
            if (c2 - c1) * (t3 - t2) <= (c3 - c2) * (t2 - t1):
                chain.pop()
            else:
                break
        chain.append(item)
    faces = []
    uu = Fraction(u[0] * u[0] + u[1] * u[1])
    for (t1, a1, c1), (t2, a2, c2) in zip(chain, chain[1:]):
        slope = Fraction(c2 - c1, t2 - t1)
        sx, sy = slope * u[0] / uu, slope * u[1] / uu
        const = c1 - sx * a1[0] - sy * a1[1]
        members = tuple(
            a for t, a, c in ts
            if t1 <= t <= t2 and c == sx * a[0] + sy * a[1] + const
        )
        faces.append(UpperFace(members, (sx, sy, const)))
    return faces


def _upper_hull_2d(pts) -> list[UpperFace]:
    n = len(pts)
    faces: dict[tuple, tuple] = {}
    for i in range(n):
        ai, ci = pts[i]
        for j in range(i + 1, n):
            aj, cj = pts[j]
            dij = (aj[0] - ai[0], aj[1] - ai[1])
            for k in range(j + 1, n):
                ak, ck = pts[k]
                dik = (ak[0] - ai[0], ak[1] - ai[1])
                d = det2(dij, dik)
                if d == 0:
                    continue
                # plane z = sx*x + sy*y + c through the three lifted points
                rij, rik = cj - ci, ck - ci
                sx = Fraction(rij * dik[1] - rik * dij[1], d)
                sy = Fraction(rik * dij[0] - rij * dik[0], d)
                const = ci - sx * ai[0] - sy * ai[1]
                key = (sx, sy, const)
                if key in faces:
                    continue
                members = []
                below = True
                for a, c in pts:
                    h = sx * a[0] + sy * a[1] + const
                    if c > h:
                        below = False
                        break
                    if c == h:
                        members.append(a)
                if below:
                    faces[key] = tuple(members)
    return sorted(
        UpperFace(members, key) for key, members in faces.items()
    )


def hull_height(faces: list[UpperFace], a) -> Fraction:
    """Height of the upper hull over a point of the Newton polygon."""
    for f in faces:
        if point_in_polygon(a, f.cell):
            sx, sy, c = f.affine
            return sx * a[0] + sy * a[1] + c
    raise ValueError(f"{a} outside the Newton polygon")
