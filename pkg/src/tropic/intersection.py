"""Transverse and stable intersections of plane tropical curves, and unions.

The transverse intersection multiplicity at a point where edges of weights
w1, w2 and primitive directions u1, u2 cross is w1*w2*|det(u1, u2)|; the
sum over a transverse pair of degrees d1, d2 is d1*d2.  Stable intersection
translates one curve by an infinitesimal amount along a generic direction,
intersects transversally over the perturbation field, and takes limits;
this is well defined even for a curve against itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import (
    Edge,
    Line,
    Piece,
    PlaneTropicalCurve,
    Ray,
    canonical_line,
    canonicalize,
    check_balancing,
    degree,
    pieces,
)
from .epsilon import EPS, EpsScalar
from .errors import NonTransverseError, TropicError
from .exact import IntVec, det2

_DIRECTION_SCHEDULE = tuple(
    (1, n) for n in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
)


@dataclass(frozen=True)
class IntersectionPoint:
    location: tuple
    multiplicity: int
    provenance: tuple


def _cross_vec(u: IntVec, w) -> object:
    return u[0] * w[1] - u[1] * w[0]


def _piece_pair_intersection(p: Piece, q: Piece):
    """Intersection of two pieces; returns (point, mult) or None.

    Raises NonTransverseError on shared segments and on hits of piece
    endpoints (which are curve vertices).  Works for Fraction and
    EpsScalar coordinates alike.
    """
    u, v = p.direction, q.direction
    d = det2(u, v)
    diff = (q.base[0] - p.base[0], q.base[1] - p.base[1])
    if d == 0:
        if _cross_vec(u, diff) != 0:
            return None  # parallel, different supporting lines
        # same line: compare parameter intervals on p's axis
        t0 = diff[0] / u[0] if u[0] else diff[1] / u[1]
        sign = 1 if v == u else -1
        qlo, qhi = q.lo, q.hi
        if sign == -1:
            qlo, qhi = (None if qhi is None else -qhi,
                        None if qlo is None else -qlo)
        lo2 = None if qlo is None else t0 + qlo
        hi2 = None if qhi is None else t0 + qhi
        lo = _max_opt(p.lo, lo2)
        hi = _min_opt(p.hi, hi2)
        if lo is None or hi is None or lo < hi:
            raise NonTransverseError("curves share a segment")
        if lo == hi:
            raise NonTransverseError("collinear pieces meet in a vertex")
        return None
    s = (diff[0] * v[1] - diff[1] * v[0]) / d
    t = (diff[0] * u[1] - diff[1] * u[0]) / d
    for val, lo, hi in ((s, p.lo, p.hi), (t, q.lo, q.hi)):
        if lo is not None:
            if val < lo:
                return None
            if val == lo:
                raise NonTransverseError("intersection hits a curve vertex")
        if hi is not None:
            if val > hi:
                return None
            if val == hi:
                raise NonTransverseError("intersection hits a curve vertex")
    point = p.at(s)
    mult = p.weight * q.weight * abs(d)
    return point, mult


def _max_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if a > b else b


def _min_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if a < b else b


def transverse_intersections(
    c1: PlaneTropicalCurve, c2: PlaneTropicalCurve
) -> list[IntersectionPoint]:
    """All intersection points of a transverse pair, with multiplicities.

    Raises NonTransverseError when the curves share a segment or meet in a
    vertex of either curve; stable_intersection handles those cases.
    """
    p1 = pieces(canonicalize(c1))
    p2 = pieces(canonicalize(c2))
    found = []  # (point, mult, provenance)
    for p in p1:
        for q in p2:
            hit = _piece_pair_intersection(p, q)
            if hit is None:
                continue
            point, mult = hit
            found.append((point, mult, ((p.kind, p.index), (q.kind, q.index))))
    return _merge_points(found)


def _merge_points(found) -> list[IntersectionPoint]:
    merged = []  # list of [point, mult, provenance list]
    for point, mult, prov in found:
        for rec in merged:
            if rec[0][0] == point[0] and rec[0][1] == point[1]:
                rec[1] += mult
                rec[2].append(prov)
                break
        else:
            merged.append([point, mult, [prov]])
    out = [
        IntersectionPoint(tuple(pt), m, tuple(provs))
        for pt, m, provs in merged
    ]
    try:
        out.sort(key=lambda r: r.location)
    except TypeError:
        pass  # EpsScalar coordinates are not orderable as sort keys
    return out


def bezout_sum(c1: PlaneTropicalCurve, c2: PlaneTropicalCurve) -> int:
    """Sum of intersection multiplicities; equals degree(c1)*degree(c2).

    Falls back to the stable intersection when the pair is not transverse.
    """
    try:
        points = transverse_intersections(c1, c2)
    except NonTransverseError:
        points = stable_intersection(c1, c2)
    return sum(p.multiplicity for p in points)


def stable_intersection(
    c1: PlaneTropicalCurve,
    c2: PlaneTropicalCurve,
    direction: IntVec | None = None,
) -> list[IntersectionPoint]:
    """Limits of transverse intersections under infinitesimal translation.

    The second curve is translated by eps*v with v from a fixed schedule
    (1, 2), (1, 3), (1, 5), ...; a non-generic v (vertex hit or shared
    segment over the perturbation field) falls through to the next one.
    Points whose limits coincide merge by adding multiplicities; the total
    is degree(c1)*degree(c2) for curves of defined degree.
    """
    schedule = (direction,) if direction is not None else _DIRECTION_SCHEDULE
    p1 = pieces(canonicalize(c1))
    base2 = pieces(canonicalize(c2))
    for v in schedule:
        shift = (EPS * v[0], EPS * v[1])
        p2 = [
            Piece(
                (q.base[0] + shift[0], q.base[1] + shift[1]),
                q.direction, q.lo, q.hi, q.weight, q.kind, q.index,
            )
            for q in base2
        ]
        try:
            found = []
            for p in p1:
                for q in p2:
                    hit = _piece_pair_intersection(p, q)
                    if hit is not None:
                        found.append((hit[0], hit[1], ("stable-limit",)))
        except NonTransverseError:
            continue
        limits = [
            ((_limit(pt[0]), _limit(pt[1])), mult, prov)
            for pt, mult, prov in found
        ]
        return _merge_points(limits)
    raise TropicError(
        "exhausted the perturbation direction schedule; "
        "this input defeats every generic translation"
    )


def _limit(x) -> Fraction:
    return x.limit0() if isinstance(x, EpsScalar) else Fraction(x)


# ---------------------------------------------------------------------------
# unions
# ---------------------------------------------------------------------------

def union(
    c1: PlaneTropicalCurve, c2: PlaneTropicalCurve
) -> PlaneTropicalCurve:
    """Overlay of two curves: one balanced curve of additive degree.

    Pieces are split at all mutual crossing points and at endpoints of
    collinear overlaps; coincident sub-pieces merge by adding weights, and
    transversal crossings become 4-valent vertices.
    """
    all_pieces = pieces(canonicalize(c1)) + pieces(canonicalize(c2))
    events = [set() for _ in all_pieces]

    # split every piece at crossings with, and collinear-overlap endpoints
    # of, every other piece; pairs within one curve matter too, since an
    # input may carry crossings that are not among its vertices
    for i, p in enumerate(all_pieces):
        for j in range(i + 1, len(all_pieces)):
            q = all_pieces[j]
            u, v = p.direction, q.direction
            diff = (q.base[0] - p.base[0], q.base[1] - p.base[1])
            d = det2(u, v)
            if d == 0:
                if _cross_vec(u, diff) != 0:
                    continue
                t0 = diff[0] / u[0] if u[0] else diff[1] / u[1]
                sign = 1 if v == u else -1
                for end in (q.lo, q.hi):
                    if end is not None:
                        _add_event(events[i], p, t0 + sign * end)
                for end in (p.lo, p.hi):
                    if end is not None:
                        _add_event(events[j], q, sign * (end - t0))
                continue
            s = (diff[0] * v[1] - diff[1] * v[0]) / d
            t = (diff[0] * u[1] - diff[1] * u[0]) / d
            if _within(p, s) and _within(q, t):
                _add_event(events[i], p, s)
                _add_event(events[j], q, t)

    seg_w: dict[tuple, int] = {}
    ray_w: dict[tuple, int] = {}
    line_w: dict[tuple, int] = {}

    for p, evs in zip(all_pieces, events):
        _split_piece(p, sorted(evs), seg_w, ray_w, line_w)

    points = sorted(
        {a for a, b in seg_w} | {b for a, b in seg_w} | {pt for pt, _ in ray_w}
    )
    index = {pt: i for i, pt in enumerate(points)}
    edges = tuple(
        sorted(Edge(index[a], index[b], w) for (a, b), w in seg_w.items())
    )
    rays = tuple(
        sorted(Ray(index[pt], u, w) for (pt, u), w in ray_w.items())
    )
    lines = tuple(
        sorted(Line(base, u, w) for (base, u), w in line_w.items())
    )
    out = canonicalize(
        PlaneTropicalCurve(tuple(points), edges, rays, lines)
    )
    ok, residuals = check_balancing(out)
    if not ok:
        raise AssertionError(f"union is unbalanced: {residuals}")
    return out


def _within(p: Piece, t) -> bool:
    if p.lo is not None and t < p.lo:
        return False
    if p.hi is not None and t > p.hi:
        return False
    return True


def _add_event(events: set, p: Piece, t):
    if _within(p, t):
        events.add(t)


def _split_piece(p: Piece, cuts, seg_w, ray_w, line_w):
    cuts = [t for t in cuts if _interior(p, t)]
    if p.kind == "edge":
        stops = [p.lo] + cuts + [p.hi]
        for a, b in zip(stops, stops[1:]):
            _add_seg(seg_w, p.at(a), p.at(b), p.weight)
    elif p.kind == "ray":
        stops = [p.lo] + cuts
        for a, b in zip(stops, stops[1:]):
            _add_seg(seg_w, p.at(a), p.at(b), p.weight)
        _add_ray(ray_w, p.at(stops[-1]), p.direction, p.weight)
    else:  # full line
        if not cuts:
            cl = canonical_line(p.base, p.direction, p.weight)
            key = (cl.base, cl.direction)
            line_w[key] = line_w.get(key, 0) + cl.weight
            return
        neg = (-p.direction[0], -p.direction[1])
        _add_ray(ray_w, p.at(cuts[0]), neg, p.weight)
        for a, b in zip(cuts, cuts[1:]):
            _add_seg(seg_w, p.at(a), p.at(b), p.weight)
        _add_ray(ray_w, p.at(cuts[-1]), p.direction, p.weight)


def _interior(p: Piece, t) -> bool:
    if p.lo is not None and t <= p.lo:
        return False
    if p.hi is not None and t >= p.hi:
        return False
    return True


def _add_seg(seg_w, a, b, w):
    key = (a, b) if a <= b else (b, a)
    seg_w[key] = seg_w.get(key, 0) + w


def _add_ray(ray_w, base, u, w):
    key = (base, u)
    ray_w[key] = ray_w.get(key, 0) + w
