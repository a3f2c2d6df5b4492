"""Plane tropical curves as embedded weighted balanced graphs.

A curve consists of vertices in Q^2, weighted bounded edges between them,
weighted rays with primitive integer directions, and standalone weighted
lines for the vertex-free case.  The central construction is the corner
locus of a tropical polynomial together with its duality certificate: the
cells of the Newton subdivision correspond to the curve's vertices, its
interior edges to bounded edges, and its boundary edges to rays, with the
weight of a curve edge equal to the lattice length of the dual edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import NotDecomposableError, TropicError
from .exact import (
    IntVec,
    Point,
    convex_hull,
    det2,
    lattice_length,
    primitive_decompose,
    primitive_of_rational,
    segment_key,
)
from .subdivision import NewtonSubdivision, subdivision_from_faces
from .tropical import TropicalPolynomial, argmax_terms, relevant_support


class Edge(NamedTuple):
    tail: int
    head: int
    weight: int


class Ray(NamedTuple):
    base: int
    direction: IntVec
    weight: int


class Line(NamedTuple):
    base: Point
    direction: IntVec
    weight: int


@dataclass(frozen=True)
class PlaneTropicalCurve:
    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...]
    rays: tuple[Ray, ...]
    lines: tuple[Line, ...] = ()

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise TropicError("duplicate vertices")
        for e in self.edges:
            if not (0 <= e.tail < n and 0 <= e.head < n) or e.tail == e.head:
                raise TropicError(f"bad edge {e}")
            if e.weight < 1:
                raise TropicError(f"bad weight on {e}")
        for r in self.rays:
            if not 0 <= r.base < n:
                raise TropicError(f"bad ray base {r}")
            _check_primitive(r.direction)
            if r.weight < 1:
                raise TropicError(f"bad weight on {r}")
        for l in self.lines:
            _check_primitive(l.direction)
            if l.weight < 1:
                raise TropicError(f"bad weight on {l}")

    @property
    def is_empty(self) -> bool:
        return not (self.vertices or self.lines)

    def translate(self, v) -> "PlaneTropicalCurve":
        dx, dy = Fraction(v[0]), Fraction(v[1])
        return PlaneTropicalCurve(
            tuple((x + dx, y + dy) for x, y in self.vertices),
            self.edges,
            self.rays,
            tuple(
                Line((b[0] + dx, b[1] + dy), d, w) for b, d, w in self.lines
            ),
        )


def _check_primitive(u: IntVec):
    prim, w = primitive_decompose(u)
    if w != 1:
        raise TropicError(f"direction {u} is not primitive")


def make_curve(vertices, edges, rays, lines=()) -> PlaneTropicalCurve:
    return PlaneTropicalCurve(
        tuple((Fraction(x), Fraction(y)) for x, y in vertices),
        tuple(Edge(*e) for e in edges),
        tuple(Ray(r[0], tuple(r[1]), r[2]) for r in rays),
        tuple(
            Line((Fraction(l[0][0]), Fraction(l[0][1])), tuple(l[1]), l[2])
            for l in lines
        ),
    )


# ---------------------------------------------------------------------------
# geometry of a curve as a set of one-dimensional pieces
# ---------------------------------------------------------------------------

class Piece(NamedTuple):
    """A segment, ray, or full line: base + t*direction for t in the range.

    ``lo``/``hi`` are Fractions or None for minus/plus infinity; bounded
    edges have lo = 0 and hi = their primitive-step length.
    """

    base: tuple
    direction: IntVec
    lo: Fraction | None
    hi: Fraction | None
    weight: int
    kind: str
    index: int

    def at(self, t):
        return (
            self.base[0] + t * self.direction[0],
            self.base[1] + t * self.direction[1],
        )


def pieces(c: PlaneTropicalCurve) -> list[Piece]:
    out = []
    for k, e in enumerate(c.edges):
        p, q = c.vertices[e.tail], c.vertices[e.head]
        u, step = primitive_of_rational(q[0] - p[0], q[1] - p[1])
        out.append(Piece(p, u, Fraction(0), step, e.weight, "edge", k))
    for k, r in enumerate(c.rays):
        out.append(
            Piece(c.vertices[r.base], r.direction, Fraction(0), None,
                  r.weight, "ray", k)
        )
    for k, l in enumerate(c.lines):
        out.append(Piece(l.base, l.direction, None, None, l.weight, "line", k))
    return out


def piece_param(piece: Piece, p) -> Fraction | None:
    """Parameter t with piece.at(t) == p, or None if p is off the piece."""
    dx, dy = p[0] - piece.base[0], p[1] - piece.base[1]
    ux, uy = piece.direction
    if dx * uy != dy * ux:
        return None
    t = dx / ux if ux else dy / uy
    if piece.lo is not None and t < piece.lo:
        return None
    if piece.hi is not None and t > piece.hi:
        return None
    return t


def point_on_curve(c: PlaneTropicalCurve, p) -> bool:
    p = (Fraction(p[0]), Fraction(p[1]))
    if p in c.vertices:
        return True
    return any(piece_param(piece, p) is not None for piece in pieces(c))


# ---------------------------------------------------------------------------
# corner locus and duality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DualityCertificate:
    """Bijections between a Newton subdivision and the dual curve.

    ``cell_vertex`` pairs cell indices with curve vertex indices,
    ``interior_edges`` pairs interior subdivision edges with bounded curve
    edges, ``boundary_edges`` pairs boundary subdivision edges with rays,
    and ``line_cells`` covers the vertex-free case of one-dimensional
    Newton polygons.
    """

    subdivision: NewtonSubdivision
    cell_vertex: tuple[tuple[int, int], ...]
    interior_edges: tuple[tuple[tuple[IntVec, IntVec], int], ...]
    boundary_edges: tuple[tuple[tuple[IntVec, IntVec], int], ...]
    line_cells: tuple[tuple[int, int], ...] = ()


def corner_locus(
    g: TropicalPolynomial,
) -> tuple[PlaneTropicalCurve, DualityCertificate]:
    """The locus where the maximum is attained at least twice, as a curve.

    Built dually from the lifted upper hull: one vertex per 2-cell (at the
    point where the cell's tied affine terms agree), one bounded edge per
    interior subdivision edge, one ray per boundary subdivision edge in the
    primitive outward normal direction, with lattice-length weights.  A
    single relevant monomial yields the empty curve; a one-dimensional
    Newton polygon yields standalone lines.  Balancing is verified before
    returning.
    """
    faces = g.lifted_hull()
    sub = subdivision_from_faces(faces)
    polygon = list(sub.polygon)

    if len(polygon) == 1:
        curve = PlaneTropicalCurve((), (), (), ())
        cert = DualityCertificate(sub, (), (), (), ())
        return curve, cert

    if len(polygon) == 2:
        return _corner_locus_1d(faces, sub)

    cell_of_face = {}
    for fi, f in enumerate(faces):
        cell = tuple(f.cell)
        cell_of_face[fi] = sub.cells.index(cell)

    vertices = []
    for f in faces:
        sx, sy, _ = f.affine
        vertices.append((-sx, -sy))

    owners: dict[tuple[IntVec, IntVec], list[int]] = {}
    for fi, f in enumerate(faces):
        cell = f.cell
        n = len(cell)
        for i in range(n):
            owners.setdefault(
                segment_key(cell[i], cell[(i + 1) % n]), []
            ).append(fi)

    edges, rays = [], []
    interior_map, boundary_map = [], []
    for seg in sorted(owners):
        fs = owners[seg]
        w = lattice_length(*seg)
        if len(fs) == 2:
            a, b = sorted(fs)
            edges.append(Edge(a, b, w))
            interior_map.append((seg, len(edges) - 1))
        else:
            (fi,) = fs
            rays.append(Ray(fi, _outward_normal(seg, polygon), w))
            boundary_map.append((seg, len(rays) - 1))

    curve = PlaneTropicalCurve(
        tuple(vertices), tuple(edges), tuple(rays), ()
    )
    ok, residuals = check_balancing(curve)
    if not ok:
        raise AssertionError(f"corner locus is unbalanced: {residuals}")
    cert = DualityCertificate(
        sub,
        tuple((cell_of_face[fi], fi) for fi in range(len(faces))),
        tuple(interior_map),
        tuple(boundary_map),
        (),
    )
    return curve, cert


def _outward_normal(seg, polygon) -> IntVec:
    a, b = seg
    n = len(polygon)
    for i in range(n):
        p, q = polygon[i], polygon[(i + 1) % n]
        from .exact import point_on_segment
        if point_on_segment(a, p, q) and point_on_segment(b, p, q):
            s = (q[0] - p[0], q[1] - p[1])
            return primitive_decompose((s[1], -s[0]))[0]
    raise AssertionError(f"edge {seg} not on the polygon boundary")


def _corner_locus_1d(faces, sub) -> tuple[PlaneTropicalCurve, DualityCertificate]:
    lines = []
    line_cells = []
    for f in faces:
        cell = f.cell
        a, b = cell[0], cell[-1]
        w = lattice_length(a, b)
        # terms at a and b tie along a full line: <b - a, x> = c_a - c_b
        sx, sy, const = f.affine
        ca = sx * a[0] + sy * a[1] + const
        cb = sx * b[0] + sy * b[1] + const
        d = (b[0] - a[0], b[1] - a[1])
        u, _ = primitive_decompose((-d[1], d[0]))
        u = _canonical_direction(u)
        base = _line_base_from_equation(d, ca - cb, u)
        lines.append(Line(base, u, w))
        line_cells.append((sub.cells.index(tuple(cell)), len(lines) - 1))
    curve = PlaneTropicalCurve((), (), (), tuple(lines))
    cert = DualityCertificate(sub, (), (), (), tuple(line_cells))
    return curve, cert


def _canonical_direction(u: IntVec) -> IntVec:
    if u[0] > 0 or (u[0] == 0 and u[1] > 0):
        return u
    return (-u[0], -u[1])


def _line_base_from_equation(d: IntVec, rhs: Fraction, u: IntVec) -> Point:
    """A point on the line {x : d . x = rhs}, canonically chosen.

    If the line is not parallel to the y-axis it is the point with x = 0,
    otherwise the point with y = 0.
    """
    if u[0] != 0:
        # x = 0: d1*0 + d2*y = rhs
        return (Fraction(0), Fraction(rhs, 1) / d[1])
    return (Fraction(rhs, 1) / d[0], Fraction(0))


def canonical_line(base, direction: IntVec, weight: int) -> Line:
    u = _canonical_direction(direction)
    # constant of the line equation det2(u, x - base) = 0
    k = u[0] * base[1] - u[1] * base[0]
    if u[0] != 0:
        b = (Fraction(0), Fraction(k, u[0]))
    else:
        b = (Fraction(k, -u[1]), Fraction(0))
    return Line(b, u, weight)


# ---------------------------------------------------------------------------
# balancing, degree, genus, smoothness
# ---------------------------------------------------------------------------

def vertex_germs(c: PlaneTropicalCurve, v: int):
    """Outgoing (primitive direction, weight) pairs at vertex v."""
    out = []
    for e in c.edges:
        if e.tail == v or e.head == v:
            p = c.vertices[e.tail if e.tail == v else e.head]
            q = c.vertices[e.head if e.tail == v else e.tail]
            u, _ = primitive_of_rational(q[0] - p[0], q[1] - p[1])
            out.append((u, e.weight))
    for r in c.rays:
        if r.base == v:
            out.append((r.direction, r.weight))
    return out


def check_balancing(c: PlaneTropicalCurve):
    """Weighted primitive directions must cancel at every vertex."""
    residuals = []
    ok = True
    for v in range(len(c.vertices)):
        sx = sy = 0
        for (ux, uy), w in vertex_germs(c, v):
            sx += w * ux
            sy += w * uy
        residuals.append((sx, sy))
        if (sx, sy) != (0, 0):
            ok = False
    return ok, residuals


def degree(c: PlaneTropicalCurve) -> int | None:
    """d when the weighted rays are exactly d copies each of (-1,0),
    (0,-1), (1,1); None for other toric degrees."""
    if c.lines or c.is_empty:
        return None
    counts: dict[IntVec, int] = {}
    for r in c.rays:
        counts[r.direction] = counts.get(r.direction, 0) + r.weight
    wanted = {(-1, 0), (0, -1), (1, 1)}
    if set(counts) != wanted:
        return None
    d = counts[(-1, 0)]
    return d if all(v == d for v in counts.values()) else None


def genus(c: PlaneTropicalCurve) -> int:
    """First Betti number of the curve's graph.

    Disconnected curves use the component-counting formula E - V + C;
    standalone lines are their own contractible components.
    """
    n = len(c.vertices)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in c.edges:
        parent[find(e.tail)] = find(e.head)
    comps = len({find(v) for v in range(n)})
    return len(c.edges) - n + comps


def is_smooth(c: PlaneTropicalCurve, cert: DualityCertificate) -> bool:
    """Smooth iff every dual cell is a lattice triangle of area 1/2."""
    from .exact import polygon_double_area

    return all(
        len(cell) == 3 and polygon_double_area(list(cell)) == 1
        for cell in cert.subdivision.cells
    )


@dataclass(frozen=True)
class DegreeGenusReport:
    degree: int
    genus: int
    bound: int
    deficiency: int
    cells_minimal: bool
    components: int


def components(c: PlaneTropicalCurve) -> int:
    n = len(c.vertices)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in c.edges:
        parent[find(e.tail)] = find(e.head)
    return len({find(v) for v in range(n)}) + len(c.lines)


def degree_genus_report(
    c: PlaneTropicalCurve, cert: DualityCertificate
) -> DegreeGenusReport:
    """Genus against the bound (d-1)(d-2)/2.

    For connected curves the deficiency vanishes exactly when every dual
    cell has the minimal area for its vertex count; a disconnected curve
    with k components lowers the deficiency by k - 1 relative to the total
    area excess of its cells.
    """
    from .exact import polygon_double_area

    d = degree(c)
    if d is None:
        raise TropicError("degree undefined for this curve")
    g = genus(c)
    bound = (d - 1) * (d - 2) // 2
    minimal = all(
        polygon_double_area(list(cell)) == len(cell) - 2
        for cell in cert.subdivision.cells
    )
    return DegreeGenusReport(d, g, bound, bound - g, minimal, components(c))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def canonicalize(c: PlaneTropicalCurve) -> PlaneTropicalCurve:
    """Canonical form: merged duplicate germs, straight 2-valent junctions
    smoothed away, opposite ray pairs turned into standalone lines, and
    everything sorted.  Curves are equal as sets with weights iff their
    canonical forms are equal."""
    verts = list(c.vertices)
    edges: dict[tuple[int, int], int] = {}
    for e in c.edges:
        key = (min(e.tail, e.head), max(e.tail, e.head))
        edges[key] = edges.get(key, 0) + e.weight
    rays: dict[tuple[int, IntVec], int] = {}
    for r in c.rays:
        key = (r.base, r.direction)
        rays[key] = rays.get(key, 0) + r.weight
    lines: dict[tuple[Point, IntVec], int] = {}
    for l in c.lines:
        cl = canonical_line(l.base, l.direction, l.weight)
        key = (cl.base, cl.direction)
        lines[key] = lines.get(key, 0) + cl.weight

    changed = True
    while changed:
        changed = False
        for v in range(len(verts)):
            if verts[v] is None:
                continue
            inc_e = [k for k in edges if v in k]
            inc_r = [k for k in rays if k[0] == v]
            if len(inc_e) + len(inc_r) != 2:
                continue
            germs = []
            for k in inc_e:
                other = k[0] if k[1] == v else k[1]
                u, _ = primitive_of_rational(
                    verts[other][0] - verts[v][0],
                    verts[other][1] - verts[v][1],
                )
                germs.append(("edge", k, other, u, edges[k]))
            for k in inc_r:
                germs.append(("ray", k, None, k[1], rays[k]))
            a, b = germs
            if a[4] != b[4]:
                continue
            if (a[3][0] + b[3][0], a[3][1] + b[3][1]) != (0, 0):
                continue
            w = a[4]
            if a[0] == "edge" and b[0] == "edge":
                lo, hi = sorted((a[2], b[2]))
                del edges[a[1]], edges[b[1]]
                key = (lo, hi)
                edges[key] = edges.get(key, 0) + w
            elif a[0] == "ray" and b[0] == "ray":
                del rays[a[1]], rays[b[1]]
                cl = canonical_line(verts[v], a[3], w)
                key = (cl.base, cl.direction)
                lines[key] = lines.get(key, 0) + w
            else:
                edge, ray = (a, b) if a[0] == "edge" else (b, a)
                del edges[edge[1]], rays[ray[1]]
                key = (edge[2], ray[3])
                rays[key] = rays.get(key, 0) + w
            verts[v] = None
            changed = True
            break

    used = {v for k in edges for v in k} | {k[0] for k in rays}
    keep = [i for i, p in enumerate(verts) if p is not None and i in used]
    order = sorted(keep, key=lambda i: verts[i])
    remap = {old: new for new, old in enumerate(order)}
    new_vertices = tuple(verts[i] for i in order)
    new_edges = tuple(
        sorted(
            Edge(*sorted((remap[a], remap[b])), w)
            for (a, b), w in edges.items()
        )
    )
    new_rays = tuple(
        sorted(Ray(remap[b], u, w) for (b, u), w in rays.items())
    )
    new_lines = tuple(
        sorted(Line(b, u, w) for (b, u), w in lines.items())
    )
    return PlaneTropicalCurve(new_vertices, new_edges, new_rays, new_lines)


# ---------------------------------------------------------------------------
# transverse-union decomposition
# ---------------------------------------------------------------------------

def decompose_transverse_union(c: PlaneTropicalCurve):
    """Split a transverse union into two balanced curves, or None.

    Every vertex must be 3-valent or a 4-valent crossing of two straight
    strands.  Crossings are cut into their two pass-through strands; the
    connected components are regrouped (first component against the union
    of the rest when there are more than two) so that the union of the two
    outputs equals the input.  A connected 3-valent curve returns None.
    """
    cc = canonicalize(c)
    items: list[tuple[str, int]] = (
        [("edge", i) for i in range(len(cc.edges))]
        + [("ray", i) for i in range(len(cc.rays))]
    )
    idx = {item: k for k, item in enumerate(items)}
    parent = list(range(len(items)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for v in range(len(cc.vertices)):
        incident = []
        for i, e in enumerate(cc.edges):
            if v in (e.tail, e.head):
                other = cc.vertices[e.head if e.tail == v else e.tail]
                u, _ = primitive_of_rational(
                    other[0] - cc.vertices[v][0], other[1] - cc.vertices[v][1]
                )
                incident.append((("edge", i), u, e.weight))
        for i, r in enumerate(cc.rays):
            if r.base == v:
                incident.append((("ray", i), r.direction, r.weight))
        if len(incident) == 3:
            for (it, _, _) in incident[1:]:
                union(idx[incident[0][0]], idx[it])
        elif len(incident) == 4:
            pairs = _straight_pairs(incident)
            if pairs is None:
                raise NotDecomposableError(
                    f"vertex {cc.vertices[v]} is 4-valent but not a "
                    "transverse crossing"
                )
            for x, y in pairs:
                union(idx[x], idx[y])
        else:
            raise NotDecomposableError(
                f"vertex {cc.vertices[v]} has valence {len(incident)}"
            )

    groups: dict[int, list[tuple[str, int]]] = {}
    for item in items:
        groups.setdefault(find(idx[item]), []).append(item)
    components = [sorted(g) for g in groups.values()]
    components.sort()
    for l in range(len(cc.lines)):
        components.append([("line", l)])

    if len(components) < 2:
        return None
    sub_curves = [_subcurve(cc, comp) for comp in components]
    sub_curves.sort(key=lambda s: (s.vertices, s.edges, s.rays, s.lines))
    first, rest = sub_curves[0], sub_curves[1:]
    second = rest[0]
    for extra in rest[1:]:
        second = _merge_by_points(second, extra)
    return first, second


def _straight_pairs(incident):
    used = [False] * 4
    pairs = []
    for i in range(4):
        if used[i]:
            continue
        (it_i, u_i, w_i) = incident[i]
        mate = None
        for j in range(i + 1, 4):
            if used[j]:
                continue
            (it_j, u_j, w_j) = incident[j]
            if (u_i[0] + u_j[0], u_i[1] + u_j[1]) == (0, 0) and w_i == w_j:
                mate = j
                break
        if mate is None:
            return None
        used[i] = used[mate] = True
        pairs.append((incident[i][0], incident[mate][0]))
    (p1, p2) = pairs
    d1 = next(u for it, u, _ in incident if it == p1[0])
    d2 = next(u for it, u, _ in incident if it == p2[0])
    if det2(d1, d2) == 0:
        return None  # both strands on one line: overlapping, not transverse
    return pairs


def _subcurve(c: PlaneTropicalCurve, comp) -> PlaneTropicalCurve:
    edge_ids = [i for kind, i in comp if kind == "edge"]
    ray_ids = [i for kind, i in comp if kind == "ray"]
    line_ids = [i for kind, i in comp if kind == "line"]
    vids = sorted(
        {c.edges[i].tail for i in edge_ids}
        | {c.edges[i].head for i in edge_ids}
        | {c.rays[i].base for i in ray_ids}
    )
    remap = {old: new for new, old in enumerate(vids)}
    return canonicalize(
        PlaneTropicalCurve(
            tuple(c.vertices[i] for i in vids),
            tuple(
                Edge(remap[c.edges[i].tail], remap[c.edges[i].head],
                     c.edges[i].weight)
                for i in edge_ids
            ),
            tuple(
                Ray(remap[c.rays[i].base], c.rays[i].direction,
                    c.rays[i].weight)
                for i in ray_ids
            ),
            tuple(c.lines[i] for i in line_ids),
        )
    )


def _merge_by_points(a: PlaneTropicalCurve, b: PlaneTropicalCurve):
    """Graph union identifying vertices by their coordinates (no overlay)."""
    verts = list(a.vertices)
    index = {p: i for i, p in enumerate(verts)}
    for p in b.vertices:
        if p not in index:
            index[p] = len(verts)
            verts.append(p)
    edges = list(a.edges) + [
        Edge(index[b.vertices[e.tail]], index[b.vertices[e.head]], e.weight)
        for e in b.edges
    ]
    rays = list(a.rays) + [
        Ray(index[b.vertices[r.base]], r.direction, r.weight) for r in b.rays
    ]
    return canonicalize(
        PlaneTropicalCurve(tuple(verts), tuple(edges), tuple(rays),
                           a.lines + b.lines)
    )


# ---------------------------------------------------------------------------
# pointwise consistency with the defining polynomial
# ---------------------------------------------------------------------------

def max_attained_twice(g: TropicalPolynomial, p) -> bool:
    return len(argmax_terms(relevant_support(g), p)) >= 2


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def curve_to_json(c: PlaneTropicalCurve) -> dict:
    return {
        "vertices": [[str(x), str(y)] for x, y in c.vertices],
        "edges": [{"from": e.tail, "to": e.head, "w": e.weight}
                  for e in c.edges],
        "rays": [{"base": r.base, "dir": list(r.direction), "w": r.weight}
                 for r in c.rays],
        "lines": [
            {"base": [str(l.base[0]), str(l.base[1])],
             "dir": list(l.direction), "w": l.weight}
            for l in c.lines
        ],
    }


def curve_from_json(obj: dict) -> PlaneTropicalCurve:
    return make_curve(
        [(Fraction(x), Fraction(y)) for x, y in obj.get("vertices", [])],
        [(e["from"], e["to"], e["w"]) for e in obj.get("edges", [])],
        [(r["base"], tuple(r["dir"]), r["w"]) for r in obj.get("rays", [])],
        [((Fraction(l["base"][0]), Fraction(l["base"][1])),
          tuple(l["dir"]), l["w"]) for l in obj.get("lines", [])],
    )
