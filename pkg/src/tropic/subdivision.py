"""Newton subdivisions of lattice polygons: construction, regularity,
and enumeration of unimodular triangulations.

A subdivision is stored as the list of its cells (convex lattice polygons,
CCW vertex cycles) tiling a convex polygon.  Regularity, i.e. existence of
lift heights that are affine on every cell and strictly broken across every
interior edge, is decided exactly with Fourier-Motzkin elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import TropicError
from .exact import (
    IntVec,
    UpperFace,
    convex_hull,
    det2,
    hull_height,
    point_in_polygon,
    point_on_segment,
    polygon_double_area,
    polygon_lattice_points,
    segment_key,
)
from .linear import EQ, LT, LinearSystem, feasible
from .tropical import TropicalPolynomial


@dataclass(frozen=True)
class NewtonSubdivision:
    """Cells tiling a convex lattice polygon, with optional lift heights."""

    polygon: tuple[IntVec, ...]
    cells: tuple[tuple[IntVec, ...], ...]
    edges: tuple[tuple[IntVec, IntVec], ...]
    vertices: tuple[IntVec, ...]
    heights: tuple[tuple[IntVec, Fraction], ...] | None = None

    @staticmethod
    def from_cells(cells, heights=None) -> "NewtonSubdivision":
        """Build and validate a subdivision from raw cell vertex lists."""
        norm_cells = []
        for cell in cells:
            hull = convex_hull(cell)
            if len(hull) != len(set(cell)):
                raise TropicError(f"cell {cell} is not convex")
            if len(hull) < 3 and len(set(cell)) >= 3:
                raise TropicError(f"cell {cell} is degenerate")
            norm_cells.append(tuple(hull))
        polygon = tuple(convex_hull([v for cell in norm_cells for v in cell]))
        sub = NewtonSubdivision(
            polygon,
            tuple(sorted(norm_cells, key=lambda c: sorted(c))),
            _complex_edges(norm_cells),
            tuple(sorted({v for cell in norm_cells for v in cell})),
            None if heights is None else tuple(sorted(heights)),
        )
        _validate_tiling(sub)
        return sub

    def interior_and_boundary_edges(self):
        """Split complex edges by position relative to the polygon boundary."""
        interior, boundary = [], []
        for e in self.edges:
            if _edge_on_polygon_boundary(e, self.polygon):
                boundary.append(e)
            else:
                interior.append(e)
        return interior, boundary


def _cell_edges(cell):
    n = len(cell)
    if n == 1:
        return []
    if n == 2:
        return [segment_key(cell[0], cell[1])]
    return [segment_key(cell[i], cell[(i + 1) % n]) for i in range(n)]


def _complex_edges(cells):
    out = set()
    for cell in cells:
        out.update(_cell_edges(cell))
    return tuple(sorted(out))


def _edge_on_polygon_boundary(edge, polygon) -> bool:
    if len(polygon) < 3:
        return False
    n = len(polygon)
    for i in range(n):
        a, b = polygon[i], polygon[(i + 1) % n]
        if point_on_segment(edge[0], a, b) and point_on_segment(edge[1], a, b):
            return True
    return False


def _validate_tiling(sub: NewtonSubdivision):
    if not sub.cells:
        raise TropicError("subdivision has no cells")
    if all(len(c) <= 2 for c in sub.cells):
        return  # zero- or one-dimensional configuration, nothing to check
    total = sum(polygon_double_area(list(c)) for c in sub.cells)
    if total != polygon_double_area(list(sub.polygon)):
        raise TropicError("cells do not tile the polygon (area mismatch)")
    incidence = {}
    for idx, cell in enumerate(sub.cells):
        for e in _cell_edges(cell):
            incidence.setdefault(e, []).append(idx)
    for e, cells in incidence.items():
        if len(cells) > 2:
            raise TropicError(f"edge {e} belongs to {len(cells)} cells")
        if len(cells) == 1 and not _edge_on_polygon_boundary(e, sub.polygon):
            raise TropicError(f"interior edge {e} has only one cell")


def newton_subdivision(g: TropicalPolynomial) -> NewtonSubdivision:
    """The regular subdivision of the Newton polygon induced by the lift."""
    return subdivision_from_faces(g.lifted_hull())


def subdivision_from_faces(faces: list[UpperFace]) -> NewtonSubdivision:
    support = [a for f in faces for a in f.points]
    polygon = tuple(convex_hull(support))
    cells = tuple(
        sorted((tuple(f.cell) for f in faces), key=lambda c: sorted(c))
    )
    heights = tuple(
        (a, hull_height(faces, a)) for a in polygon_lattice_points(list(polygon))
    )
    return NewtonSubdivision(
        polygon,
        cells,
        _complex_edges(cells),
        tuple(sorted({v for cell in cells for v in cell})),
        heights,
    )


# ---------------------------------------------------------------------------
# regularity
# ---------------------------------------------------------------------------

def _barycentric(w, v0, v1, v2):
    d = det2((v1[0] - v0[0], v1[1] - v0[1]), (v2[0] - v0[0], v2[1] - v0[1]))
    l1 = Fraction(det2((w[0] - v0[0], w[1] - v0[1]),
                       (v2[0] - v0[0], v2[1] - v0[1])), d)
    l2 = Fraction(det2((v1[0] - v0[0], v1[1] - v0[1]),
                       (w[0] - v0[0], w[1] - v0[1])), d)
    return 1 - l1 - l2, l1, l2


def is_regular(sub: NewtonSubdivision):
    """Decide whether lift heights exist that induce exactly this subdivision.

    Heights must make every cell affine and break strictly across every
    interior edge; the decision and the returned witness (vertex -> height)
    are exact.  The cyclic obstruction of pinwheel-style subdivisions shows
    up here as Fourier-Motzkin infeasibility.
    """
    if all(len(c) == 2 for c in sub.cells):
        return True, _segment_witness(sub)

    verts = list(sub.vertices)
    index = {v: k for k, v in enumerate(verts)}
    n = len(verts)
    sys = LinearSystem(n)

    cell_basis = []
    for cell in sub.cells:
        if len(cell) < 3:
            raise TropicError("mixed-dimensional subdivision")
        v0, v1, v2 = cell[0], cell[1], cell[2]
        cell_basis.append((v0, v1, v2))
        for w in cell[3:]:
            row = [Fraction(0)] * n
            l0, l1, l2 = _barycentric(w, v0, v1, v2)
            row[index[w]] += 1
            row[index[v0]] -= l0
            row[index[v1]] -= l1
            row[index[v2]] -= l2
            sys.add(row, 0, EQ)

    incidence = {}
    for idx, cell in enumerate(sub.cells):
        for e in _cell_edges(cell):
            incidence.setdefault(e, []).append(idx)
    for e, owners in incidence.items():
        if len(owners) != 2:
            continue
        ci, di = owners
        v0, v1, v2 = cell_basis[ci]
        w = _vertex_off_edge(sub.cells[di], e)
        # plane of cell ci must pass strictly above the opposite vertex w
        l0, l1, l2 = _barycentric(w, v0, v1, v2)
        row = [Fraction(0)] * n
        row[index[w]] += 1
        row[index[v0]] -= l0
        row[index[v1]] -= l1
        row[index[v2]] -= l2
        sys.add(row, 0, LT)  # h_w - plane_ci(w) < 0

    ok, witness = feasible(sys)
    if not ok:
        return False, None
    return True, {v: witness[index[v]] for v in verts}


def _vertex_off_edge(cell, edge):
    (a, b) = edge
    d = (b[0] - a[0], b[1] - a[1])
    for w in cell:
        if det2(d, (w[0] - a[0], w[1] - a[1])) != 0:
            return w
    raise TropicError("degenerate cell")


def _segment_witness(sub: NewtonSubdivision):
    # all cells are collinear segments: any strictly concave profile works
    verts = sorted(sub.vertices)
    origin = verts[0]
    out = {}
    for v in verts:
        t = abs(v[0] - origin[0]) + abs(v[1] - origin[1])
        out[v] = Fraction(-t * t)
    return out


# ---------------------------------------------------------------------------
# unimodular triangulations
# ---------------------------------------------------------------------------

def _delta_points(d: int):
    return [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]


def _orient(a, b, c) -> int:
    v = det2((b[0] - a[0], b[1] - a[1]), (c[0] - a[0], c[1] - a[1]))
    return (v > 0) - (v < 0)


def _proper_cross(a, b, c, d) -> bool:
    return (_orient(a, b, c) * _orient(a, b, d) < 0
            and _orient(c, d, a) * _orient(c, d, b) < 0)


def _tri_centroid(t):
    return (
        Fraction(t[0][0] + t[1][0] + t[2][0], 3),
        Fraction(t[0][1] + t[1][1] + t[2][1], 3),
    )


def _tri_overlap(t, u) -> bool:
    for p in t:
        if point_in_polygon(p, list(u), boundary=False):
            return True
    for p in u:
        if point_in_polygon(p, list(t), boundary=False):
            return True
    edges_t = [(t[i], t[(i + 1) % 3]) for i in range(3)]
    edges_u = [(u[i], u[(i + 1) % 3]) for i in range(3)]
    for a, b in edges_t:
        for c, d in edges_u:
            if _proper_cross(a, b, c, d):
                return True
    if point_in_polygon(_tri_centroid(t), list(u), boundary=False):
        return True
    if point_in_polygon(_tri_centroid(u), list(t), boundary=False):
        return True
    return False


def enumerate_smooth_types(d: int, *, experimental: bool = False):
    """All regular unimodular triangulations of the degree-d triangle.

    Required scope is d in {1, 2}; d = 3 is allowed behind the experimental
    flag (it is noticeably slower and has no acceptance criterion).
    """
    if d not in (1, 2) and not (d == 3 and experimental):
        raise TropicError(
            "enumerate_smooth_types supports d in {1, 2} "
            "(d = 3 behind experimental=True)"
        )
    pts = _delta_points(d)
    candidates = sorted(
        tuple(sorted(tri)) for tri in combinations(pts, 3)
        if abs(det2(
            (tri[1][0] - tri[0][0], tri[1][1] - tri[0][1]),
            (tri[2][0] - tri[0][0], tri[2][1] - tri[0][1]),
        )) == 1
    )
    corner_cycle = [(0, 0), (d, 0), (0, d)]
    boundary = set()
    for i in range(3):
        a, b = corner_cycle[i], corner_cycle[(i + 1) % 3]
        step = ((b[0] - a[0]) // d, (b[1] - a[1]) // d)
        for k in range(d):
            boundary.add(segment_key(
                (a[0] + k * step[0], a[1] + k * step[1]),
                (a[0] + (k + 1) * step[0], a[1] + (k + 1) * step[1]),
            ))

    results = []
    seen = set()
    seed_edge = segment_key((0, 0), (1, 0))

    def side_of(edge, w) -> int:
        a, b = edge
        return _orient(a, b, w)

    def recurse(chosen, open_edges, closed):
        if not open_edges:
            key = frozenset(chosen)
            if key not in seen:
                seen.add(key)
                results.append(sorted(chosen))
            return
        edge, need = min(open_edges.items())
        for tri in candidates:
            if edge[0] not in tri or edge[1] not in tri:
                continue
            w = next(p for p in tri if p not in edge)
            if side_of(edge, w) != need:
                continue
            if any(_tri_overlap(tri, u) for u in chosen):
                continue
            new_open = dict(open_edges)
            del new_open[edge]
            new_closed = set(closed)
            ok = True
            for f in _cell_edges(list(tri)):
                if f == edge:
                    new_closed.add(f)
                    continue
                wf = next(p for p in tri if p not in f)
                sf = side_of(f, wf)
                if f in boundary:
                    continue
                if f in new_closed:
                    ok = False
                    break
                if f in new_open:
                    if new_open[f] == sf:
                        del new_open[f]
                        new_closed.add(f)
                    else:
                        ok = False
                        break
                else:
                    new_open[f] = -sf
            if ok:
                recurse(chosen + [tri], new_open, new_closed)

    recurse([], {seed_edge: 1}, set())

    out = []
    for tris in sorted(results):
        sub = NewtonSubdivision.from_cells(tris)
        regular, _ = is_regular(sub)
        if regular:
            out.append(sub)
    return out


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def subdivision_to_json(sub: NewtonSubdivision) -> dict:
    obj = {
        "polygon": [list(v) for v in sub.polygon],
        "cells": [[list(v) for v in cell] for cell in sub.cells],
    }
    if sub.heights is not None:
        obj["heights"] = [
            {"pt": list(a), "h": str(h)} for a, h in sub.heights
        ]
    return obj


def subdivision_from_json(obj: dict) -> NewtonSubdivision:
    heights = None
    if "heights" in obj:
        heights = [
            ((int(t["pt"][0]), int(t["pt"][1])), Fraction(t["h"]))
            for t in obj["heights"]
        ]
    return NewtonSubdivision.from_cells(
        [[(int(x), int(y)) for x, y in cell] for cell in obj["cells"]],
        heights,
    )
