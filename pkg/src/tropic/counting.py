"""Counting rational plane tropical curves through points in general
position, with complex (Mikhalkin) and real (Welschinger) multiplicities.

A degree-d rational curve is parametrized by a 3-valent skeleton tree with
3d labeled ends carrying the directions d*(-1,0), d*(0,-1), d*(1,1); the
n = 3d - 1 point conditions attach marks to edges of the skeleton.  For a
combinatorial type (skeleton + set of marked edges) the positions are an
exact square linear system: unknowns are the root vertex (2) and one
length per bounded skeleton edge, each point condition contributes the
line through its edge.  A type is accepted when the system is uniquely
solvable with strictly positive lengths and every mark strictly inside its
edge; its complex multiplicity is |det| of the system, which must equal
the product of the vertex multiplicities w1*w2*|det(u1, u2)| of the
embedded curve (checked on every accepted solution).

Walls (zero lengths, marks at vertices, point pairs aligned with an edge
direction) raise NonGenericError: the documented remedy is to reseed.
Totals are independent of the point choice; the recursion module provides
the independent oracle N_1 = 1, N_2 = 1, N_3 = 12, ...
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .curves import Edge, PlaneTropicalCurve, Ray, check_balancing
from .errors import NonGenericError, TropicError
from .exact import det2, primitive_decompose

_FLOAT_MARGIN = 1e-7


def directions_for_degree(d: int) -> list[tuple[int, int]]:
    return [(-1, 0)] * d + [(0, -1)] * d + [(1, 1)] * d


def vertex_multiplicity(e1, e2) -> int:
    """|det| of two full (weight times primitive) direction vectors."""
    return abs(det2(e1, e2))


def welschinger_sign(m: int) -> int:
    """0 for even complex multiplicity, +1 for m = 1 mod 4, -1 for 3 mod 4."""
    if m < 1:
        raise ValueError("multiplicity must be positive")
    if m % 2 == 0:
        return 0
    return 1 if m % 4 == 1 else -1


# ---------------------------------------------------------------------------
# skeletons: 3-valent trees on the labeled ends
# ---------------------------------------------------------------------------

class Skeleton:
    """A 3-valent tree whose leaves carry the 3d end directions.

    Precomputes everything the point-condition solver needs: oriented
    integer vectors of all edges, path incidences from the root, the
    per-edge condition rows, and the product of vertex multiplicities.
    """

    def __init__(self, d: int, edge_list: list[tuple[int, int]]):
        self.d = d
        m = 3 * d
        self.leaf_dirs = directions_for_degree(d)
        self.nodes = sorted({x for e in edge_list for x in e})
        self.adj: dict[int, list[int]] = {x: [] for x in self.nodes}
        for a, b in edge_list:
            self.adj[a].append(b)
            self.adj[b].append(a)
        self.internal_nodes = [x for x in self.nodes if x >= m]
        self.root = min(self.internal_nodes)

        # orient every edge and derive its integer vector (the sum of leaf
        # directions behind its head)
        self.end_edges = []  # (leaf, anchor)
        self.internal_edges = []  # (a, b) with a < b
        for a, b in edge_list:
            if a < m or b < m:
                leaf, anchor = (a, b) if a < m else (b, a)
                self.end_edges.append((leaf, anchor))
            else:
                self.internal_edges.append((min(a, b), max(a, b)))
        self.end_edges.sort()
        self.internal_edges.sort()

        self.edge_vector = {}
        for a, b in self.internal_edges:
            behind = self._side_leaves(b, a)
            vx = sum(self.leaf_dirs[l][0] for l in behind)
            vy = sum(self.leaf_dirs[l][1] for l in behind)
            self.edge_vector[(a, b)] = (vx, vy)

        # path incidence: pos(x) = root + sum over internal edges of
        # sign * length * vector
        self.path = {self.root: {}}
        self._walk(self.root, None, {})

        self.mult_product = 1
        self.degenerate = False
        for x in self.internal_nodes:
            vecs = [self._away_vector(x, y) for y in self.adj[x]]
            if any(v == (0, 0) for v in vecs):
                self.degenerate = True
                break
            m_v = vertex_multiplicity(vecs[0], vecs[1])
            if m_v == 0:
                self.degenerate = True
                break
            self.mult_product *= m_v

        # solving catalog: every edge a mark can sit on
        self.mark_edges = []
        if not self.degenerate:
            for leaf, anchor in self.end_edges:
                self.mark_edges.append(
                    ("end", leaf, anchor, self.leaf_dirs[leaf])
                )
            for a, b in self.internal_edges:
                self.mark_edges.append(
                    ("internal", (a, b), a, self.edge_vector[(a, b)])
                )
            self._build_rows()

    def _side_leaves(self, start, banned):
        m = 3 * self.d
        seen, stack, leaves = {start, banned}, [start], []
        if start < m:
            leaves.append(start)
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    if y < m:
                        leaves.append(y)
                    else:
                        stack.append(y)
        return leaves

    def _walk(self, x, parent, acc):
        for y in self.adj[x]:
            if y == parent or y < 3 * self.d:
                continue
            key = (min(x, y), max(x, y))
            sign = 1 if x == key[0] else -1
            nxt = dict(acc)
            nxt[key] = nxt.get(key, 0) + sign
            self.path[y] = nxt
            self._walk(y, x, nxt)

    def _away_vector(self, x, y):
        """Integer vector of edge (x, y) oriented away from x."""
        if y < 3 * self.d:
            return self.leaf_dirs[y]
        key = (min(x, y), max(x, y))
        v = self.edge_vector[key]
        return v if key[0] == x else (-v[0], -v[1])

    def _build_rows(self):
        nvar = 2 + len(self.internal_edges)
        self.nvar = nvar
        edge_index = {e: k for k, e in enumerate(self.internal_edges)}
        self.rows = []
        self.anchor_path = []
        self.mark_dirs = []
        for kind, _label, anchor, w in self.mark_edges:
            n = (-w[1], w[0])
            row = [0] * nvar
            row[0], row[1] = n[0], n[1]
            path = self.path[anchor]
            for key, sign in path.items():
                v = self.edge_vector[key]
                row[2 + edge_index[key]] = sign * (n[0] * v[0] + n[1] * v[1])
            self.rows.append(tuple(row))
            self.anchor_path.append(path)
            self.mark_dirs.append(w)

    def anchor_position(self, edge_id: int, phi):
        """Exact position of the anchor vertex of a mark edge under phi."""
        edge_index = {e: k for k, e in enumerate(self.internal_edges)}
        x, y = phi[0], phi[1]
        for key, sign in self.anchor_path[edge_id].items():
            v = self.edge_vector[key]
            ell = phi[2 + edge_index[key]]
            x += sign * ell * v[0]
            y += sign * ell * v[1]
        return x, y

    def node_positions(self, phi):
        edge_index = {e: k for k, e in enumerate(self.internal_edges)}
        out = {}
        for node in self.internal_nodes:
            x, y = phi[0], phi[1]
            for key, sign in self.path[node].items():
                v = self.edge_vector[key]
                ell = phi[2 + edge_index[key]]
                x += sign * ell * v[0]
                y += sign * ell * v[1]
            out[node] = (x, y)
        return out


def _tree_edge_lists(m: int):
    """All 3-valent trees on leaves 0..m-1 (labeled), internal nodes m..."""
    base = [(0, m), (1, m), (2, m)]
    stack = [(base, 3)]
    while stack:
        edges, k = stack.pop()
        if k == m:
            yield edges
            continue
        new_internal = m + k - 2
        for i, (a, b) in enumerate(edges):
            grown = edges[:i] + edges[i + 1:] + [
                (a, new_internal), (b, new_internal), (k, new_internal)
            ]
            stack.append((grown, k + 1))


def _canonical_key(d: int, edge_list) -> str:
    """Canonical string of the tree with leaves labeled by direction class,
    so that permuting same-direction ends does not change the key."""
    m = 3 * d
    adj: dict[int, list[int]] = {}
    for a, b in edge_list:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    def label(x):
        return str(min(x // d, 2)) if x < m else None

    def rooted(x, parent):
        subs = sorted(
            rooted(y, x) for y in adj[x] if y != parent
        )
        if x < m:
            return label(x)
        return "(" + ",".join(subs) + ")"

    # root at the tree center for a rotation-free canonical form
    nodes = list(adj)
    degree_ = {x: len(adj[x]) for x in nodes}
    layer = [x for x in nodes if degree_[x] == 1]
    remaining = set(nodes)
    while len(remaining) > 2:
        nxt = []
        for x in layer:
            remaining.discard(x)
            for y in adj[x]:
                if y in remaining:
                    degree_[y] -= 1
                    if degree_[y] == 1:
                        nxt.append(y)
        layer = nxt
    center = sorted(remaining)
    if len(center) == 1:
        return rooted(center[0], None)
    a, b = center
    return "|".join(sorted([rooted(a, b), rooted(b, a)]))


_SKELETON_CACHE: dict[int, list[Skeleton]] = {}


def skeletons(d: int) -> list[Skeleton]:
    """Valid skeleton classes for degree d, deduplicated up to permutations
    of equal-direction ends; zero-vector edges and flat vertices are out."""
    if d in _SKELETON_CACHE:
        return _SKELETON_CACHE[d]
    seen = {}
    for edge_list in _tree_edge_lists(3 * d):
        key = _canonical_key(d, edge_list)
        if key in seen:
            continue
        skel = Skeleton(d, edge_list)
        if skel.degenerate:
            seen[key] = None
            continue
        if any(v == (0, 0) for v in skel.edge_vector.values()):
            seen[key] = None
            continue
        seen[key] = skel
    out = [s for _, s in sorted(seen.items()) if s is not None]
    _SKELETON_CACHE[d] = out
    return out


# ---------------------------------------------------------------------------
# marked types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MarkedTreeType:
    """A skeleton class together with the set of edges carrying the marks.

    Marks are contracted ends: each is a point condition on the line
    through its edge.  The n marks are matched to the n labeled points in
    all ways when solving; a type whose marks repeat an edge is never
    emitted, since the evaluation map of such a type cannot be injective.
    """

    degree: int
    skeleton_index: int
    marked_edges: tuple[int, ...]

    @property
    def skeleton(self) -> Skeleton:
        return skeletons(self.degree)[self.skeleton_index]

    @property
    def leaf_count(self) -> int:
        return 3 * self.degree + len(self.marked_edges)


def enumerate_types(d: int, n: int | None = None):
    """Stream of valid marked types for degree d with n marks."""
    if n is None:
        n = 3 * d - 1
    if n != 3 * d - 1:
        raise TropicError("rational counting needs n = 3d - 1 marks")
    for si, skel in enumerate(skeletons(d)):
        for combo in combinations(range(len(skel.mark_edges)), n):
            yield MarkedTreeType(d, si, combo)


# ---------------------------------------------------------------------------
# the point configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointConfiguration:
    points: tuple[tuple[Fraction, Fraction], ...]
    seed: int | None = None

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise TropicError("configuration points must be distinct")

    @staticmethod
    def generate(d: int, seed: int) -> "PointConfiguration":
        """n = 3d - 1 deterministic pseudo-random rational points.

        Coordinates have large prime denominators (9973 and 10007), which
        keeps random configurations away from rational-slope coincidences.
        """
        rng = random.Random(seed)
        n = 3 * d - 1
        pts = []
        while len(pts) < n:
            p = (
                Fraction(rng.randint(-20 * 9973, 20 * 9973), 9973),
                Fraction(rng.randint(-20 * 10007, 20 * 10007), 10007),
            )
            if p not in pts:
                pts.append(p)
        return PointConfiguration(tuple(pts), seed)


# ---------------------------------------------------------------------------
# solving a type against points
# ---------------------------------------------------------------------------

def _bareiss_det(rows) -> int:
    """Exact determinant of an integer matrix, fraction-free."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _float_inverse(rows):
    n = len(rows)
    aug = [
        [float(x) for x in row] + [float(i == j) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(aug[r][col]))
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _solve_exact(rows, b):
    """Exact solution of a square integer system with Fraction rhs."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def _guard_walls(skel: Skeleton, pts):
    """Point pairs aligned with any edge direction are walls: two marks on
    one edge would admit a solution family instead of a finite count."""
    dirs = {w for _, _, _, w in skel.mark_edges}
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            diff = (pts[i][0] - pts[j][0], pts[i][1] - pts[j][1])
            for w in dirs:
                if diff[0] * w[1] == diff[1] * w[0]:
                    raise NonGenericError(
                        f"points {i} and {j} are aligned with an edge "
                        f"direction {w}; reseed the configuration"
                    )


def solve_type(t: MarkedTreeType, pts) -> list[tuple[PlaneTropicalCurve, int]]:
    """All solutions of a marked type through the given points.

    Matches the type's marks to the labeled points in every possible way;
    a matching is accepted when the square system has a unique solution
    with strictly positive edge lengths and marks strictly inside their
    edges.  Returns (embedded curve, complex multiplicity) per acceptance
    (None when the system is singular); generic configurations yield at
    most one solution.  Boundary solutions raise NonGenericError.

    The matchings are screened with a float branch-and-bound (upper bounds
    on every length coordinate over all completions of a partial matching);
    the margin is far above float error, so no exact solution is ever
    pruned, and every survivor is re-solved exactly.
    """
    pts = tuple((Fraction(p[0]), Fraction(p[1])) for p in pts)
    skel = t.skeleton
    _guard_walls(skel, pts)
    rows = [skel.rows[e] for e in t.marked_edges]
    det = _bareiss_det(rows)
    if det == 0:
        return None
    if abs(det) != skel.mult_product:
        raise AssertionError(
            "determinant does not match the vertex multiplicity product"
        )
    out = []
    for perm in _candidate_matchings(skel, t.marked_edges, rows, pts):
        accepted = _verify_matching(skel, t.marked_edges, rows, pts, perm)
        if accepted is not None:
            out.append(accepted)
    if len(out) > 1:
        raise NonGenericError(
            "one marked type solved twice; a point must sit on two edges"
        )
    return out


def _candidate_matchings(skel, combo, rows, pts):
    """Float branch-and-bound over mark-to-point matchings.

    Yields permutations (mark index per combo row) whose solution could
    have positive lengths and marks within range; completeness comes from
    the per-row maxima being a relaxation of the assignment constraint.
    """
    n = len(pts)
    inv = _float_inverse(rows)
    rhs = []
    for e in combo:
        w = skel.mark_edges[e][3]
        rhs.append([float(-w[1] * p[0] + w[0] * p[1]) for p in pts])
    cols = [[inv[r][k] for r in range(n)] for k in range(n)]
    contrib = [
        [[rhs[k][i] * cols[k][r] for r in range(n)] for i in range(n)]
        for k in range(n)
    ]

    # most discriminating rows first: larger spread prunes earlier
    def spread(k):
        return -sum(
            max(contrib[k][i][r] for i in range(n))
            - min(contrib[k][i][r] for i in range(n))
            for r in range(2, n)
        )

    order = sorted(range(n), key=spread)
    contrib = [contrib[k] for k in order]
    by_coord = [
        [
            sorted(range(n), key=lambda i, k=k, r=r: -contrib[k][i][r])
            for r in range(n)
        ]
        for k in range(n)
    ]

    stack = [(0, 0, (0.0,) * n, ())]
    while stack:
        k, used, partial, picks = stack.pop()
        if k == n:
            perm = [0] * n
            for slot, mark in zip(order, picks):
                perm[slot] = mark
            if _float_leaf_plausible(skel, combo, pts, partial, perm):
                yield tuple(perm)
            continue
        ck = contrib[k]
        for i in range(n):
            bit = 1 << i
            if used & bit:
                continue
            c = ck[i]
            new = tuple(p + c[r] for r, p in enumerate(partial))
            u2 = used | bit
            ok = True
            for r in range(2, n):
                hi = new[r]
                for k2 in range(k + 1, n):
                    for m in by_coord[k2][r]:
                        if not (u2 >> m) & 1:
                            hi += contrib[k2][m][r]
                            break
                if hi < -_FLOAT_MARGIN:
                    ok = False
                    break
            if ok:
                stack.append((k + 1, u2, new, picks + (i,)))


def _float_leaf_plausible(skel, combo, pts, fphi, perm):
    edge_index = {e: k for k, e in enumerate(skel.internal_edges)}
    for k, e in enumerate(combo):
        kind, label, _anchor, w = skel.mark_edges[e]
        x, y = fphi[0], fphi[1]
        for key, sign in skel.anchor_path[e].items():
            v = skel.edge_vector[key]
            ell = fphi[2 + edge_index[key]]
            x += sign * ell * v[0]
            y += sign * ell * v[1]
        p = pts[perm[k]]
        t_val = (
            (float(p[0]) - x) / w[0] if w[0] else (float(p[1]) - y) / w[1]
        )
        if t_val < -_FLOAT_MARGIN:
            return False
        if kind == "internal":
            hi = fphi[2 + edge_index[label]]
            if t_val > hi + _FLOAT_MARGIN:
                return False
    return True


def _verify_matching(skel, combo, rows, pts, perm):
    n = len(pts)
    b = []
    for k, e in enumerate(combo):
        w = skel.mark_edges[e][3]
        p = pts[perm[k]]
        b.append(-w[1] * p[0] + w[0] * p[1])
    phi = _solve_exact(rows, b)
    for ell in phi[2:]:
        if ell < 0:
            return None
        if ell == 0:
            raise NonGenericError("zero-length edge: wall configuration")
    edge_index = {e: k for k, e in enumerate(skel.internal_edges)}
    for k, e in enumerate(combo):
        kind, label, _anchor, w = skel.mark_edges[e]
        ax, ay = skel.anchor_position(e, phi)
        p = pts[perm[k]]
        t_val = (p[0] - ax) / w[0] if w[0] else (p[1] - ay) / w[1]
        hi = None if kind == "end" else phi[2 + edge_index[label]]
        if t_val < 0 or (hi is not None and t_val > hi):
            return None
        if t_val == 0 or (hi is not None and t_val == hi):
            raise NonGenericError("mark at a vertex: wall configuration")
    positions = skel.node_positions(phi)
    if len(set(positions.values())) != len(positions):
        raise NonGenericError("two vertices collide: wall configuration")
    return _embed(skel, positions)


def _embed(skel: Skeleton, positions) -> tuple[PlaneTropicalCurve, int]:
    order = sorted(positions)
    index = {node: i for i, node in enumerate(order)}
    vertices = tuple(positions[node] for node in order)
    edges = []
    for (a, b) in skel.internal_edges:
        v = skel.edge_vector[(a, b)]
        _, w = primitive_decompose(v)
        edges.append(Edge(index[a], index[b], w))
    rays = []
    for leaf, anchor in skel.end_edges:
        rays.append(Ray(index[anchor], skel.leaf_dirs[leaf], 1))
    curve = PlaneTropicalCurve(vertices, tuple(edges), tuple(rays), ())
    ok, residuals = check_balancing(curve)
    if not ok:
        raise AssertionError(f"embedded curve unbalanced: {residuals}")
    return curve, skel.mult_product


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveRecord:
    curve: PlaneTropicalCurve
    multiplicity: int
    sign: int
    skeleton_index: int
    marked_edges: tuple[int, ...]


@dataclass(frozen=True)
class CountResult:
    degree: int
    points: PointConfiguration
    records: tuple[CurveRecord, ...]
    n_complex: int
    n_welschinger: int
    diagnostics: dict = field(compare=False, default_factory=dict)


def _count_class(args):
    d, si, pts = args
    skel = skeletons(d)[si]
    n = len(pts)
    records = []
    examined = singular = 0
    for combo in combinations(range(len(skel.mark_edges)), n):
        examined += 1
        t = MarkedTreeType(d, si, combo)
        got = solve_type(t, pts)
        if got is None:
            singular += 1
            continue
        for curve, mult in got:
            records.append(
                CurveRecord(curve, mult, welschinger_sign(mult), si, combo)
            )
    return records, examined, singular


def resolve_threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("TROPIC_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def count_curves(d: int, pts, threads: int | None = None) -> CountResult:
    """Count rational degree-d curves through the 3d - 1 given points.

    The result is deterministic for a fixed input regardless of the
    parallel schedule; TROPIC_THREADS (or the explicit argument) caps the
    number of worker processes used across skeleton classes.
    """
    if isinstance(pts, PointConfiguration):
        config = pts
    else:
        config = PointConfiguration(
            tuple((Fraction(p[0]), Fraction(p[1])) for p in pts)
        )
    if len(config.points) != 3 * d - 1:
        raise TropicError(f"degree {d} needs {3 * d - 1} points")
    classes = skeletons(d)
    jobs = [(d, si, config.points) for si in range(len(classes))]
    workers = min(resolve_threads(threads), len(jobs)) if jobs else 1
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_count_class, jobs))
    else:
        chunks = [_count_class(job) for job in jobs]

    records = []
    examined = singular = 0
    for recs, exa, sing in chunks:
        records.extend(recs)
        examined += exa
        singular += sing
    records.sort(key=lambda r: (r.skeleton_index, r.marked_edges))
    n_complex = sum(r.multiplicity for r in records)
    n_welsch = sum(r.sign for r in records)
    return CountResult(
        d,
        config,
        tuple(records),
        n_complex,
        n_welsch,
        {
            "skeleton_classes": len(classes),
            "types_examined": examined,
            "types_singular": singular,
            "curves_found": len(records),
        },
    )


@dataclass(frozen=True)
class InvarianceReport:
    degree: int
    trials: int
    seeds: tuple[int, ...]
    reseeded: tuple[int, ...]
    complex_counts: tuple[int, ...]
    welschinger_counts: tuple[int, ...]

    @property
    def all_equal(self) -> bool:
        return (
            len(set(self.complex_counts)) == 1
            and len(set(self.welschinger_counts)) == 1
        )


def invariance_harness(
    d: int, trials: int, seed: int, threads: int | None = None
) -> InvarianceReport:
    """Run count_curves over independent seeded configurations.

    Configurations flagged non-generic are recorded and replaced by the
    next seed.  The counts must agree across all trials; a mismatch would
    falsify the build, so callers should treat all_equal=False as fatal.
    """
    seeds, reseeded = [], []
    complexes, welsches = [], []
    s = seed
    while len(seeds) < trials:
        config = PointConfiguration.generate(d, s)
        try:
            result = count_curves(d, config, threads)
        except NonGenericError:
            reseeded.append(s)
            s += 1
            continue
        seeds.append(s)
        complexes.append(result.n_complex)
        welsches.append(result.n_welschinger)
        s += 1
    return InvarianceReport(
        d, trials, tuple(seeds), tuple(reseeded),
        tuple(complexes), tuple(welsches),
    )


def count_result_to_json(result: CountResult) -> dict:
    from .curves import curve_to_json

    return {
        "degree": result.degree,
        "seed": result.points.seed,
        "points": [[str(x), str(y)] for x, y in result.points.points],
        "n_complex": str(result.n_complex),
        "n_welschinger": str(result.n_welschinger),
        "curves": [
            {
                "curve": curve_to_json(r.curve),
                "multiplicity": r.multiplicity,
                "welschinger_sign": r.sign,
            }
            for r in result.records
        ],
        "diagnostics": result.diagnostics,
    }
