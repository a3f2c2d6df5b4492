"""The group law on the loop of a smooth plane tropical cubic.

A genus-1 cubic has a unique cycle; every point of the curve retracts to
it (points on trees hanging off the loop are equivalent to their
attachment vertex), and chords through a base point O turn the loop into
a group: add(P, Q) is retract(third(O, retract(third(P, Q)))), where
third(A, B) completes the stable intersection of the cubic with the line
through A and B.  Loop points are addressed by (edge index, fraction of
the edge) or by their lattice-length coordinate along the loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import PlaneTropicalCurve, Piece, genus, piece_param, pieces
from .errors import NonGenericError, TropicError
from .exact import Point, lattice_length, primitive_of_rational


@dataclass(frozen=True)
class LoopPoint:
    """Position on the loop: edge index in loop order, parameter in [0, 1).

    Edge boundaries are canonical at the successor's 0.
    """

    edge: int
    t: Fraction

    def __post_init__(self):
        if not 0 <= self.t < 1:
            raise TropicError("loop parameter must lie in [0, 1)")


@dataclass(frozen=True)
class CubicContext:
    """A genus-1 cubic with its loop and a base point for the group law."""

    curve: PlaneTropicalCurve
    loop_vertices: tuple[int, ...]
    base: LoopPoint

    @staticmethod
    def build(curve: PlaneTropicalCurve,
              base: LoopPoint | None = None) -> "CubicContext":
        loop = extract_loop(curve)
        ctx = CubicContext(curve, loop, base or LoopPoint(0, Fraction(0)))
        return ctx

    # -- loop geometry ---------------------------------------------------

    def loop_edge_points(self, k: int) -> tuple[Point, Point]:
        a = self.curve.vertices[self.loop_vertices[k]]
        b = self.curve.vertices[
            self.loop_vertices[(k + 1) % len(self.loop_vertices)]
        ]
        return a, b

    def edge_lattice_length(self, k: int) -> Fraction:
        a, b = self.loop_edge_points(k)
        _, step = primitive_of_rational(b[0] - a[0], b[1] - a[1])
        return step

    @property
    def total_length(self) -> Fraction:
        return sum(
            self.edge_lattice_length(k)
            for k in range(len(self.loop_vertices))
        )

    def point_of(self, lp: LoopPoint) -> Point:
        a, b = self.loop_edge_points(lp.edge)
        return (
            a[0] + lp.t * (b[0] - a[0]),
            a[1] + lp.t * (b[1] - a[1]),
        )

    def loop_point_at(self, p) -> LoopPoint | None:
        p = (Fraction(p[0]), Fraction(p[1]))
        for k in range(len(self.loop_vertices)):
            a, b = self.loop_edge_points(k)
            piece = _segment_piece(a, b)
            t = piece_param(piece, p)
            if t is not None:
                frac = t / piece.hi
                if frac == 1:
                    return LoopPoint((k + 1) % len(self.loop_vertices),
                                     Fraction(0))
                return LoopPoint(k, frac)
        return None

    def coordinate(self, lp: LoopPoint) -> Fraction:
        """Lattice length from the loop start to the point, in [0, L)."""
        lam = Fraction(0)
        for k in range(lp.edge):
            lam += self.edge_lattice_length(k)
        return lam + lp.t * self.edge_lattice_length(lp.edge)

    def at_coordinate(self, lam) -> LoopPoint:
        lam = Fraction(lam) % self.total_length
        for k in range(len(self.loop_vertices)):
            step = self.edge_lattice_length(k)
            if lam < step:
                return LoopPoint(k, lam / step)
            lam -= step
        return LoopPoint(0, Fraction(0))


def _segment_piece(a: Point, b: Point) -> Piece:
    u, step = primitive_of_rational(b[0] - a[0], b[1] - a[1])
    return Piece(a, u, Fraction(0), step, 1, "loop", 0)


def extract_loop(c: PlaneTropicalCurve) -> tuple[int, ...]:
    """The unique cycle of a genus-1 curve, as an ordered vertex tuple.

    The walk starts at the lexicographically smallest cycle vertex and
    proceeds toward its smaller neighbor, so the result is canonical.
    """
    if genus(c) != 1:
        raise TropicError(f"curve has genus {genus(c)}, not 1")
    degree_ = {}
    adj: dict[int, set[int]] = {}
    for e in c.edges:
        adj.setdefault(e.tail, set()).add(e.head)
        adj.setdefault(e.head, set()).add(e.tail)
    for v, nbrs in adj.items():
        degree_[v] = len(nbrs)
    # strip leaves until only the cycle is left
    queue = [v for v, k in degree_.items() if k == 1]
    alive = {v for v in adj}
    while queue:
        v = queue.pop()
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                degree_[w] -= 1
                if degree_[w] == 1:
                    queue.append(w)
    cycle = sorted(v for v in alive if degree_[v] >= 2)
    start = min(cycle, key=lambda v: c.vertices[v])
    nbrs = sorted(
        (w for w in adj[start] if w in alive),
        key=lambda v: c.vertices[v],
    )
    walk = [start, nbrs[0]]
    while True:
        prev, cur = walk[-2], walk[-1]
        nxt = next(
            w for w in adj[cur] if w in alive and w != prev
        )
        if nxt == start:
            break
        walk.append(nxt)
    return tuple(walk)


def retract(ctx: CubicContext, p) -> LoopPoint:
    """The loop point equivalent to a point of the curve.

    Points already on the loop map to themselves; a point on a tree
    hanging off the loop maps to the vertex where its tree attaches.
    """
    p = (Fraction(p[0]), Fraction(p[1]))
    lp = ctx.loop_point_at(p)
    if lp is not None:
        return lp
    c = ctx.curve
    host = None
    for piece in pieces(c):
        if piece_param(piece, p) is not None:
            host = piece
            break
    if host is None:
        raise TropicError(f"{p} is not on the curve")
    if host.kind == "edge":
        anchor = c.edges[host.index].tail
    else:
        anchor = c.rays[host.index].base
    loop_set = set(ctx.loop_vertices)
    attach = _attachment(c, loop_set, anchor)
    vertex_point = c.vertices[attach]
    out = ctx.loop_point_at(vertex_point)
    assert out is not None
    return out


def _attachment(c: PlaneTropicalCurve, loop_set, start) -> int:
    """First loop vertex on the tree path from start to the loop."""
    if start in loop_set:
        return start
    adj: dict[int, list[int]] = {}
    for e in c.edges:
        adj.setdefault(e.tail, []).append(e.head)
        adj.setdefault(e.head, []).append(e.tail)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w in loop_set:
                return w
            if w not in seen:
                seen.add(w)
                stack.append(w)
    raise AssertionError("tree component not attached to the loop")


def third_point(ctx: CubicContext, p, q) -> Point:
    """The remaining stable intersection of the cubic with the line
    through two of its points.

    Requires a unique line through p and q meeting the cubic in three
    multiplicity-1 points including p and q; everything else raises
    NonGenericError (tangent chords are out of scope).
    """
    from .counting import count_curves
    from .intersection import stable_intersection

    p = (Fraction(p[0]), Fraction(p[1]))
    q = (Fraction(q[0]), Fraction(q[1]))
    if p == q:
        raise NonGenericError("tangent chords are not supported")
    result = count_curves(1, [p, q])
    if result.n_complex != 1 or len(result.records) != 1:
        raise NonGenericError("no unique line through the two points")
    line = result.records[0].curve
    hits = stable_intersection(line, ctx.curve)
    if sorted(h.multiplicity for h in hits) != [1, 1, 1]:
        raise NonGenericError(
            "line does not meet the cubic transversally in three "
            "simple points"
        )
    locations = [h.location for h in hits]
    if p not in locations or q not in locations:
        raise NonGenericError("chord misses its defining points")
    rest = [loc for loc in locations if loc not in (p, q)]
    if len(rest) != 1:
        raise NonGenericError("degenerate chord configuration")
    return rest[0]


def add(ctx: CubicContext, p: LoopPoint, q: LoopPoint) -> LoopPoint:
    """Chord-law addition on the loop with base point O."""
    r = third_point(ctx, ctx.point_of(p), ctx.point_of(q))
    r_loop = retract(ctx, r)
    s = third_point(
        ctx, ctx.point_of(ctx.base), ctx.point_of(r_loop)
    )
    return retract(ctx, s)
