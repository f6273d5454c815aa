"""Projection of a spherical diameter graph onto its diametral sphere and the
bipartite double cover drawn there.

All spherical computations run on unit-normalized vectors: a point set on
S^3_r is divided by r, and the diametral 2-sphere is the unit sphere of the
hyperplane orthogonal to the pole, expressed in 3 coordinates.
"""
import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .. import constants
from ..utils.exceptions import (
    ArcOverlapError,
    DegenerateCapError,
    HemisphereError,
    InvalidInputError,
    Lemma5ViolationError,
    ProjectionDegeneracyError,
    TheoremPreconditionError,
)
from . import graph as graph_mod
from .geometry import (
    GreatArc,
    PointSet,
    angle_between,
    arc_intersection,
    check_open_hemisphere,
    diameter,
    min_enclosing_cap,
    order_around_centroid,
    slerp,
    spherical_hull_vertices,
    tangent_basis,
)
from .graph import DiameterGraph

logger = logging.getLogger(__name__)

Vec = np.ndarray


def _unit(v: Vec) -> Vec:
    return v / np.linalg.norm(v)


@dataclass(frozen=True, eq=False)
class SphericalPolygon:
    """Spherically convex polygon on the unit 2-sphere.

    Vertices are ordered angularly around their normalized centroid. Two
    vertices make a single great arc and one vertex a point. `labels` holds
    the base vertex each polygon vertex came from, when known.
    """
    vertices: np.ndarray
    labels: Tuple[int, ...] = ()
    sphere_radius: float = 1.0
    presorted: bool = field(default=False, repr=False)

    def __post_init__(self):
        verts = np.array(self.vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 3 or len(verts) == 0:
            raise InvalidInputError("Polygon vertices must be a non-empty list of 3-vectors")
        if self.presorted:
            # Already normalized and ordered (antipodal copies keep the exact negated coordinates)
            object.__setattr__(self, 'vertices', verts)
            object.__setattr__(self, '_pole', self.centroid)
            return
        verts = verts / np.linalg.norm(verts, axis=1)[:, None]
        for i, j in combinations(range(len(verts)), 2):
            if angle_between(verts[i], verts[j]) < constants.ANGLE_TOLERANCE:
                raise InvalidInputError("Polygon vertices must be distinct")
        labels = tuple(self.labels) if self.labels else ()
        order = order_around_centroid(verts)
        verts = verts[order]
        if labels:
            labels = tuple(labels[i] for i in order)
        object.__setattr__(self, 'vertices', verts)
        object.__setattr__(self, 'labels', labels)
        pole = self.centroid
        if np.any(verts @ pole <= constants.HEMISPHERE_TOLERANCE):
            pole = check_open_hemisphere(verts)
        object.__setattr__(self, '_pole', pole)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def pole(self) -> Vec:
        """Witness pole of an open hemisphere holding the polygon."""
        return self._pole

    @property
    def centroid(self) -> Vec:
        """Normalized vertex centroid (the arc midpoint for two vertices)."""
        return _unit(self.vertices.sum(axis=0))

    @property
    def angular_radius(self) -> float:
        c = self.centroid
        return max(angle_between(c, v) for v in self.vertices)

    def edges(self) -> List[GreatArc]:
        k = self.size
        if k == 1:
            return []
        if k == 2:
            return [GreatArc(self.vertices[0], self.vertices[1])]
        return [GreatArc(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    def _edge_normals(self) -> np.ndarray:
        k = self.size
        c = self.centroid
        normals = []
        for i in range(k):
            n = _unit(np.cross(self.vertices[i], self.vertices[(i + 1) % k]))
            normals.append(n if n @ c > 0 else -n)
        return np.array(normals)

    def contains(self, x: Vec, strict: bool = False) -> bool:
        """Point membership; strict asks for the interior (empty for arcs and points)."""
        x = _unit(np.asarray(x, dtype=float))
        tol = constants.ANGLE_TOLERANCE
        if self.size == 1:
            return not strict and angle_between(x, self.vertices[0]) < tol
        if self.size == 2:
            if strict:
                return False
            arc = self.edges()[0]
            n = _unit(np.cross(arc.start, arc.end))
            if abs(x @ n) > tol or x @ self.centroid <= 0:
                return False
            return float(np.cross(arc.start, x) @ n) >= -tol and float(np.cross(x, arc.end) @ n) >= -tol
        dots = self._edge_normals() @ x
        if strict:
            return bool(np.all(dots > tol))
        return bool(np.all(dots >= -tol)) and x @ self.centroid > 0

    def is_vertex(self, x: Vec) -> bool:
        return any(angle_between(x, v) < constants.ANGLE_TOLERANCE for v in self.vertices)

    def __neg__(self) -> "SphericalPolygon":
        return SphericalPolygon(-self.vertices, self.labels, self.sphere_radius, presorted=True)


@dataclass(frozen=True, eq=False)
class Projection:
    """R(v), B(v) and the projected point of every neighbor of v."""
    v: int
    R: SphericalPolygon
    B: SphericalPolygon
    targets: Mapping[int, Vec] = field(default_factory=dict)


@dataclass
class Lemma5Violation:
    kind: str
    v: int
    w: int
    point: Optional[List[float]] = None


@dataclass
class Lemma5Report:
    violations: List[Lemma5Violation]
    pairs_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True, eq=False)
class DoubleCover:
    """Bipartite double cover drawn on the unit diametral sphere.

    Vertex i < base_n is c(kept[i]); vertex base_n + i is c'(kept[i]) = -c(kept[i]).
    """
    base_n: int
    kept: Tuple[int, ...]
    vertices: np.ndarray
    edges: Tuple[Tuple[int, int], ...]
    arcs: Tuple[GreatArc, ...]
    edge_arcs: Tuple[Tuple[int, ...], ...]

    def graph(self) -> DiameterGraph:
        return graph_mod.from_edges(2 * self.base_n, self.edges)


@dataclass
class DrawingReport:
    planar_ok: bool
    crossings: List[Tuple[int, int, List[float]]]
    edge_count: int
    edge_bound: int
    edge_bound_ok: bool


@dataclass
class CoverReport:
    n: int
    kept: List[int]
    pole: Optional[Vec]
    hull_samples: int
    lemma5: Optional[Lemma5Report] = None
    cover: Optional[DoubleCover] = None
    drawing: Optional[DrawingReport] = None
    bipartite: bool = True
    edges_doubled: bool = True
    lifts_ok: bool = True
    pruned_edges: int = 0

    @property
    def ok(self) -> bool:
        if not self.kept:
            return True
        return (self.lemma5 is not None and self.lemma5.ok and self.drawing is not None
                and self.drawing.planar_ok and self.drawing.edge_bound_ok
                and self.bipartite and self.edges_doubled and self.lifts_ok)


def prune_low_degree(g: DiameterGraph) -> Tuple[DiameterGraph, List[int]]:
    """Repeatedly delete vertices of degree <= 1; return the induced subgraph and survivors."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in graph_mod.iter_bits(alive):
            if (g.rows[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    kept = graph_mod.bits_to_list(alive)
    return graph_mod.induced_subgraph(g, kept), kept


def _neighbor_hull_samples(units: np.ndarray, g: DiameterGraph, samples: int) -> np.ndarray:
    """Points of conv_S(N(v)) for every v, spread along arcs joining the hull vertices."""
    out = []
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if len(nbrs) < 2:
            continue
        try:
            hull = [nbrs[i] for i in spherical_hull_vertices(units[nbrs])]
        except HemisphereError as e:
            raise TheoremPreconditionError(f"Neighbors of vertex {v} span no hemisphere: {e}",
                                           sample=units[nbrs].tolist())
        pairs = list(combinations(hull, 2))
        if not pairs:
            continue
        per_pair = math.ceil(samples / len(pairs))
        for k in range(samples):
            p, q = pairs[k % len(pairs)]
            t = (k // len(pairs) + 1) / (per_pair + 1)
            out.append(_unit(slerp(units[p], units[q], t)))
    return np.array(out).reshape(-1, units.shape[1])


def diametral_sphere(ps: PointSet, g: Optional[DiameterGraph] = None,
                     samples: int = constants.HULL_SAMPLES, eps: float = constants.DEFAULT_EPSILON) -> Vec:
    """Pole of an open hemisphere of S^3_r holding X and the spherical hulls of all neighborhoods.

    The diametral sphere is the great sphere orthogonal to the returned pole.

    Args:
        ps: Point set on a 3-sphere; distances are measured relative to its diameter
        g: Its diameter graph, built when omitted
        samples: Boundary samples per neighborhood hull
        eps: Diameter tolerance

    Returns:
        Vec: Unit pole in R^4

    Raises:
        InvalidInputError: If ps is not on a sphere in R^4
        TheoremPreconditionError: If r <= 1/sqrt(2) (in diameter units) or no hemisphere is found
    """
    if not ps.on_sphere or ps.dim != 4:
        raise InvalidInputError("The diametral sphere is defined for point sets on S^3_r in R^4")
    diam, _ = diameter(ps, eps)
    ratio = ps.sphere_radius / diam
    if ratio <= constants.THEOREM1_RADIUS:
        raise TheoremPreconditionError(
            f"Theorem preconditions violated: r/diam = {ratio!r} must exceed 1/sqrt(2)")
    if g is None:
        g = graph_mod.build(ps, eps)
    units = ps.points / ps.sphere_radius
    unit_set = PointSet(4, units, 1.0)
    try:
        pole = min_enclosing_cap(unit_set).pole
    except DegenerateCapError as e:
        raise TheoremPreconditionError(f"Theorem preconditions violated: {e}", sample=units.tolist())
    hull_points = _neighbor_hull_samples(units, g, samples)
    combined = np.vstack([units, hull_points])
    bad = combined @ pole <= constants.HEMISPHERE_TOLERANCE
    if np.any(bad):
        logger.info("Recomputing pole over %d hull samples", len(hull_points))
        try:
            pole = min_enclosing_cap(PointSet(4, combined, 1.0)).pole
        except DegenerateCapError as e:
            raise TheoremPreconditionError(f"Theorem preconditions violated: {e}", sample=combined.tolist())
        bad = combined @ pole <= constants.HEMISPHERE_TOLERANCE
        if np.any(bad):
            raise TheoremPreconditionError("Theorem preconditions violated: no open hemisphere holds X'",
                                           sample=combined[bad].tolist())
    return pole


def project_point(v: Vec, w: Vec, pole: Vec) -> Vec:
    """Where the great circle from unit v through unit w first meets the plane <x, pole> = 0.

    Raises:
        ProjectionDegeneracyError: If v lies on the diametral sphere
    """
    a = float(v @ pole)
    if a <= constants.HEMISPHERE_TOLERANCE:
        raise ProjectionDegeneracyError("Vertex lies on the diametral sphere; its projections are undefined")
    e = w - (v @ w) * v
    e = _unit(e)
    beta = float(e @ pole)
    return (-beta * v + a * e) / math.hypot(a, beta)


def project_RB(ps: PointSet, g: DiameterGraph, v: int, pole: Vec,
               basis: Optional[np.ndarray] = None) -> Tuple[SphericalPolygon, SphericalPolygon]:
    """R(v) and its antipodal copy B(v) on the diametral sphere."""
    proj = _projection(ps, g, v, pole, basis if basis is not None else tangent_basis(pole))
    return proj.R, proj.B


def _projection(ps: PointSet, g: DiameterGraph, v: int, pole: Vec, basis: np.ndarray) -> Projection:
    nbrs = g.neighbors(v)
    if len(nbrs) < 2:
        raise InvalidInputError(f"Vertex {v} has degree {len(nbrs)}; projections need degree >= 2")
    units = ps.points / np.linalg.norm(ps.points, axis=1)[:, None]
    targets = {}
    for w in nbrs:
        u = project_point(units[v], units[w], pole)
        targets[w] = _unit(basis @ u)
    gens = np.array([targets[w] for w in nbrs])
    hull = spherical_hull_vertices(gens)
    R = SphericalPolygon(gens[hull], tuple(nbrs[i] for i in hull))
    return Projection(v, R, -R, targets)


def classify_contact(P: SphericalPolygon, Q: SphericalPolygon) -> Tuple[str, List[Vec]]:
    """Classify how two convex spherical polygons meet.

    Returns:
        Tuple[str, List[Vec]]: ("disjoint" | "vertex" | "overlap", contact points).
        "vertex" means a single common point that is a vertex of both.
    """
    gap = angle_between(P.centroid, Q.centroid)
    if gap > P.angular_radius + Q.angular_radius + 10 * constants.ANGLE_TOLERANCE:
        return "disjoint", []
    points: List[Vec] = []
    overlap = False
    for ea in P.edges():
        for eb in Q.edges():
            try:
                hit = arc_intersection(ea, eb)
            except ArcOverlapError:
                overlap = True
                continue
            if hit is not None:
                points.append(hit)
    for A, Bp in ((P, Q), (Q, P)):
        for x in A.vertices:
            if Bp.contains(x, strict=True):
                overlap = True
            if Bp.contains(x):
                points.append(x)
    distinct: List[Vec] = []
    for x in points:
        if all(angle_between(x, y) >= constants.ANGLE_TOLERANCE for y in distinct):
            distinct.append(x)
    if not distinct and not overlap:
        return "disjoint", []
    if not overlap and len(distinct) == 1 and P.is_vertex(distinct[0]) and Q.is_vertex(distinct[0]):
        return "vertex", distinct
    return "overlap", distinct


def check_lemma5(projections: Mapping[int, Projection], g: DiameterGraph) -> Lemma5Report:
    """Check disjointness of the R(v) and the single-vertex contacts of R(v) with B(u).

    Violations are collected, never raised.
    """
    violations: List[Lemma5Violation] = []
    ids = sorted(projections)
    checked = 0
    for v, w in combinations(ids, 2):
        checked += 1
        kind, pts = classify_contact(projections[v].R, projections[w].R)
        if kind != "disjoint":
            violations.append(Lemma5Violation("R-R", v, w, pts[0].tolist() if pts else None))
    for v in ids:
        for u in ids:
            checked += 1
            kind, pts = classify_contact(projections[v].R, projections[u].B)
            if kind == "disjoint":
                continue
            witness = pts[0].tolist() if pts else None
            if u == v or not g.has_edge(u, v):
                violations.append(Lemma5Violation("R-B non-edge", v, u, witness))
            elif kind != "vertex":
                violations.append(Lemma5Violation("R-B not a single vertex", v, u, witness))
    for v in ids:
        for w, x in projections[v].targets.items():
            if not projections[v].R.is_vertex(x):
                violations.append(Lemma5Violation("projection not a hull vertex", v, w, x.tolist()))
    for violation in violations:
        logger.info("Contact violation %s at (%d, %d)", violation.kind, violation.v, violation.w)
    return Lemma5Report(violations, checked)


def _arc_or_none(p: Vec, q: Vec) -> Optional[GreatArc]:
    if angle_between(p, q) < constants.ANGLE_TOLERANCE:
        return None
    return GreatArc(p, q)


def build_double_cover(g: DiameterGraph, projections: Mapping[int, Projection],
                       report: Optional[Lemma5Report] = None, kept: Optional[Sequence[int]] = None) -> DoubleCover:
    """Assemble the double cover C and its drawing.

    c(v) is the normalized centroid of R(v). For each base edge vw (v < w) the
    shared point x of R(v) and B(w) joins c(v) to c'(w); the reverse cover
    edge c(w)c'(v) is drawn through -x, so the drawing is closed under negation.

    Raises:
        Lemma5ViolationError: If the contact check reports violations
    """
    if report is None:
        report = check_lemma5(projections, g)
    if not report.ok:
        raise Lemma5ViolationError(f"Cannot build the double cover: {len(report.violations)} contact violations")
    n = g.n
    centers = np.array([projections[v].R.centroid for v in range(n)]).reshape(n, 3)
    vertices = np.vstack([centers, -centers])
    edges: List[Tuple[int, int]] = []
    arcs: List[GreatArc] = []
    edge_arcs: List[Tuple[int, ...]] = []

    def add_edge(i: int, j: int, pieces: List[Optional[GreatArc]]) -> None:
        idx = []
        for arc in pieces:
            if arc is not None:
                idx.append(len(arcs))
                arcs.append(arc)
        edges.append((i, j))
        edge_arcs.append(tuple(idx))

    for v, w in g.edges():
        x = projections[v].targets[w]
        add_edge(v, n + w, [_arc_or_none(vertices[v], x), _arc_or_none(x, vertices[n + w])])
        add_edge(w, n + v, [_arc_or_none(-vertices[v], -x), _arc_or_none(-x, -vertices[n + w])])
    kept_ids = tuple(kept) if kept is not None else tuple(range(n))
    return DoubleCover(n, kept_ids, vertices, tuple(edges), tuple(arcs), tuple(edge_arcs))


def _shares_endpoint(a: GreatArc, b: GreatArc, x: Vec) -> bool:
    ends_a = (a.start, a.end)
    ends_b = (b.start, b.end)
    return (any(angle_between(x, p) < constants.ANGLE_TOLERANCE for p in ends_a)
            and any(angle_between(x, q) < constants.ANGLE_TOLERANCE for q in ends_b)
            and any(angle_between(p, q) < constants.ANGLE_TOLERANCE for p in ends_a for q in ends_b))


def verify_drawing(dc: DoubleCover) -> DrawingReport:
    """Test every pair of drawn arcs for contacts other than shared endpoints."""
    crossings = []
    mids = [_unit(a.start + a.end) for a in dc.arcs]
    halves = [a.length / 2 for a in dc.arcs]
    for i, j in combinations(range(len(dc.arcs)), 2):
        if angle_between(mids[i], mids[j]) > halves[i] + halves[j] + 10 * constants.ANGLE_TOLERANCE:
            continue
        a, b = dc.arcs[i], dc.arcs[j]
        try:
            hit = arc_intersection(a, b)
        except ArcOverlapError:
            crossings.append((i, j, _unit(a.start + a.end).tolist()))
            continue
        if hit is not None and not _shares_endpoint(a, b, hit):
            crossings.append((i, j, hit.tolist()))
    edge_count = len(dc.edges)
    bound = 4 * dc.base_n - 4
    return DrawingReport(not crossings, crossings, edge_count, bound, dc.base_n == 0 or edge_count <= bound)


def lift_cycle(dc: DoubleCover, cycle: Sequence[int]) -> List[int]:
    """Closed walk in C over a base cycle, starting at c(cycle[0]).

    Odd cycles lift to one closed walk of twice their length, even cycles to one of equal length.

    Raises:
        InvalidInputError: If consecutive cycle vertices are not adjacent in the base graph
    """
    k = len(cycle)
    n = dc.base_n
    edge_set = {frozenset(e) for e in dc.edges}
    walk = []
    side, j = 0, 0
    while True:
        walk.append(cycle[j % k] + side * n)
        side ^= 1
        j += 1
        if j % k == 0 and side == 0:
            break
    for i in range(len(walk)):
        step = frozenset((walk[i], walk[(i + 1) % len(walk)]))
        if step not in edge_set:
            raise InvalidInputError(f"Cycle step {sorted(step)} is not an edge of the double cover")
    return walk


def run_pipeline(ps: PointSet, eps: float = constants.DEFAULT_EPSILON,
                 samples: int = constants.HULL_SAMPLES,
                 odd_cycle_cap: int = constants.ODD_CYCLE_CAP) -> CoverReport:
    """Prune, find the diametral sphere, project, check contacts, build and verify the cover.

    Raises:
        TheoremPreconditionError: If the instance is outside the hypotheses
    """
    g = graph_mod.build(ps, eps)
    pruned, kept = prune_low_degree(g)
    report = CoverReport(ps.n, kept, None, samples, pruned_edges=pruned.edge_count)
    if not kept:
        return report
    pole = diametral_sphere(ps, g, samples, eps)
    report.pole = pole
    basis = tangent_basis(pole)
    sub = pruned.source
    projections = {v: _projection(sub, pruned, v, pole, basis) for v in range(pruned.n)}
    report.lemma5 = check_lemma5(projections, pruned)
    if not report.lemma5.ok:
        return report
    dc = build_double_cover(pruned, projections, report.lemma5, kept)
    report.cover = dc
    report.drawing = verify_drawing(dc)
    report.bipartite = graph_mod.is_bipartite(dc.graph())
    report.edges_doubled = len(dc.edges) == 2 * pruned.edge_count
    if pruned.n <= odd_cycle_cap:
        report.lifts_ok = all(len(lift_cycle(dc, c)) == 2 * len(c) for c in graph_mod.odd_cycles(pruned, odd_cycle_cap))
    return report
