"""Euclidean and spherical primitives: diameters, enclosing caps, great arcs and cones."""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space
from scipy.optimize import nnls
from scipy.spatial.distance import pdist, squareform

from .. import constants
from ..utils.exceptions import (
    ArcOverlapError,
    DegenerateCapError,
    DegenerateSetError,
    HemisphereError,
    InvalidInputError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PointSet:
    """Finite labeled set of points in R^d, optionally constrained to the sphere of radius r.

    Labels are row indices. Points are never deduplicated.
    """
    dim: int
    points: np.ndarray
    sphere_radius: Optional[float] = None

    def __post_init__(self):
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 2:
            raise InvalidInputError(f"Dimension must be an integer >= 2, got {self.dim}")
        pts = np.array(self.points, dtype=float)
        if pts.size == 0:
            pts = pts.reshape(0, self.dim)
        if pts.ndim != 2 or pts.shape[1] != self.dim:
            raise InvalidInputError(f"Every point must have exactly {self.dim} coordinates")
        if not np.all(np.isfinite(pts)):
            raise InvalidInputError("Point coordinates must be finite")
        if self.sphere_radius is not None:
            r = float(self.sphere_radius)
            if not r > 0:
                raise InvalidInputError(f"Sphere radius must be positive, got {r}")
            norms = np.linalg.norm(pts, axis=1)
            bad = np.flatnonzero(np.abs(norms - r) > r * constants.SPHERE_TOLERANCE)
            if bad.size:
                raise InvalidInputError(
                    f"Point {int(bad[0])} has norm {norms[bad[0]]!r}, not on the sphere of radius {r!r}")
            object.__setattr__(self, 'sphere_radius', r)
        pts.setflags(write=False)
        object.__setattr__(self, 'points', pts)

    @classmethod
    def from_points(cls, points: Sequence[Sequence[float]], sphere_radius: Optional[float] = None) -> "PointSet":
        """Build a PointSet, inferring the dimension from the first point."""
        arr = np.asarray(points, dtype=float)
        if arr.ndim != 2:
            raise InvalidInputError("Points must be a non-empty list of coordinate lists")
        return cls(int(arr.shape[1]), arr, sphere_radius)

    @property
    def n(self) -> int:
        return int(self.points.shape[0])

    @property
    def on_sphere(self) -> bool:
        return self.sphere_radius is not None

    def scaled(self, factor: float) -> "PointSet":
        """Return the set scaled about the origin (sphere radius scales along)."""
        radius = None if self.sphere_radius is None else self.sphere_radius * factor
        return PointSet(self.dim, self.points * factor, radius)

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(self.dim, self.points[list(indices)], self.sphere_radius)

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class SphericalCap:
    """Cap of the unit sphere around a pole; angles in radians."""
    pole: np.ndarray
    angular_radius: float

    def __post_init__(self):
        if not 0.0 <= self.angular_radius <= math.pi:
            raise InvalidInputError(f"Cap angular radius must lie in [0, pi], got {self.angular_radius}")
        object.__setattr__(self, 'pole', _unit(np.asarray(self.pole, dtype=float)))

    def contains(self, u: np.ndarray) -> bool:
        return angle_between(self.pole, u) <= self.angular_radius + constants.CAP_TOLERANCE


@dataclass(frozen=True, eq=False)
class GreatArc:
    """The shorter great-circle arc between two points of a sphere about the origin."""
    start: np.ndarray
    end: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.start, dtype=float)
        b = np.asarray(self.end, dtype=float)
        if a.shape != b.shape or a.ndim != 1:
            raise InvalidInputError("Arc endpoints must be vectors of equal dimension")
        ra, rb = np.linalg.norm(a), np.linalg.norm(b)
        if ra == 0 or rb == 0:
            raise InvalidInputError("Arc endpoints must be nonzero")
        if abs(ra - rb) > constants.SPHERE_TOLERANCE * max(ra, rb):
            raise InvalidInputError("Arc endpoints do not lie on a common sphere")
        theta = angle_between(a, b)
        if theta < constants.ANGLE_TOLERANCE:
            raise InvalidInputError("Arc endpoints coincide")
        if theta > math.pi - constants.ANGLE_TOLERANCE:
            raise InvalidInputError("Arc endpoints are antipodal")
        object.__setattr__(self, 'start', a)
        object.__setattr__(self, 'end', b)

    @property
    def radius(self) -> float:
        return float(np.linalg.norm(self.start))

    @property
    def dim(self) -> int:
        return int(self.start.shape[0])

    @property
    def length(self) -> float:
        """Angular length in radians."""
        return angle_between(self.start, self.end)

    def reversed(self) -> "GreatArc":
        return GreatArc(self.end, self.start)

    def __neg__(self) -> "GreatArc":
        return GreatArc(-self.start, -self.end)


def _unit(v: np.ndarray) -> np.ndarray:
    norm = np.linalg.norm(v)
    if norm == 0:
        raise InvalidInputError("Cannot normalize the zero vector")
    return v / norm


def angle_between(u: np.ndarray, v: np.ndarray) -> float:
    """Angle between two nonzero vectors, accurate near 0 and pi."""
    a = _unit(np.asarray(u, dtype=float))
    b = _unit(np.asarray(v, dtype=float))
    return float(2.0 * math.atan2(np.linalg.norm(a - b), np.linalg.norm(a + b)))


def slerp(u: np.ndarray, v: np.ndarray, t: float) -> np.ndarray:
    """Point at fraction t along the shorter arc from unit u to unit v."""
    theta = angle_between(u, v)
    if theta < constants.ANGLE_TOLERANCE:
        return np.array(u, dtype=float)
    s = math.sin(theta)
    return (math.sin((1 - t) * theta) * u + math.sin(t * theta) * v) / s


def pairwise_distances(ps: PointSet) -> np.ndarray:
    """Full symmetric distance matrix."""
    if ps.n == 0:
        return np.zeros((0, 0))
    return squareform(pdist(ps.points))


def diameter(ps: PointSet, rel_tol: float = constants.DEFAULT_EPSILON) -> Tuple[float, List[Tuple[int, int]]]:
    """Compute the diameter of a point set and the pairs realizing it.

    Args:
        ps: Point set with at least two points
        rel_tol: Relative tolerance for a pair to count as diametral

    Returns:
        Tuple[float, List[Tuple[int, int]]]: (diameter, witness pairs sorted lexicographically)

    Raises:
        DegenerateSetError: If ps has fewer than two points
    """
    if ps.n < 2:
        raise DegenerateSetError(f"Degenerate set: diameter needs at least 2 points, got {ps.n}")
    dists = pdist(ps.points)
    value = float(dists.max())
    rows, cols = np.triu_indices(ps.n, k=1)
    hits = np.flatnonzero(dists >= value * (1 - rel_tol))
    return value, [(int(rows[k]), int(cols[k])) for k in hits]


def jung_radius(d: int) -> float:
    """Circumradius bound sqrt(d/(2d+2)) for unit-diameter sets in R^d."""
    if not isinstance(d, (int, np.integer)) or d <= 0:
        raise InvalidInputError(f"Dimension must be a positive integer, got {d}")
    return math.sqrt(d / (2 * d + 2))


def _ball_from_support(support: List[np.ndarray]) -> Tuple[np.ndarray, float]:
    """Smallest ball with all support points on its boundary (circumball in their affine hull)."""
    pts = np.array(support)
    if len(pts) == 1:
        return pts[0].copy(), 0.0
    base = pts[0]
    A = pts[1:] - base
    gram = A @ A.T
    rhs = 0.5 * np.einsum('ij,ij->i', A, A)
    lam = np.linalg.lstsq(gram, rhs, rcond=None)[0]
    center = base + A.T @ lam
    return center, float(np.max(np.linalg.norm(pts - center, axis=1)))


def _in_ball(ball: Tuple[np.ndarray, float], p: np.ndarray) -> bool:
    center, radius = ball
    return np.linalg.norm(p - center) <= radius * (1 + 1e-12) + 1e-15


def _welzl(points: np.ndarray, support: List[np.ndarray], dim: int) -> Optional[Tuple[np.ndarray, float]]:
    ball = _ball_from_support(support) if support else None
    if len(support) == dim + 1:
        return ball
    for i, p in enumerate(points):
        if ball is None or not _in_ball(ball, p):
            ball = _welzl(points[:i], support + [p], dim)
    return ball


def min_enclosing_ball(points: np.ndarray, seed: int = 0) -> Tuple[np.ndarray, float]:
    """Minimal enclosing ball by randomized incremental construction.

    The shuffle is seeded so repeated calls return identical balls.

    Raises:
        DegenerateSetError: If no points are given
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise DegenerateSetError("Minimal enclosing ball needs at least one point")
    order = np.random.default_rng(seed).permutation(len(pts))
    ball = _welzl(pts[order], [], pts.shape[1])
    return ball


def min_enclosing_cap(ps: PointSet, seed: int = 0) -> SphericalCap:
    """Smallest spherical cap containing a point set on a sphere.

    The pole is the direction of the minimal enclosing ball's center.

    Raises:
        InvalidInputError: If ps is not sphere-constrained
        DegenerateSetError: If ps is empty
        DegenerateCapError: If the ball center is the origin, so no hemisphere holds the set
    """
    if not ps.on_sphere:
        raise InvalidInputError("min_enclosing_cap requires a sphere-constrained point set")
    if ps.n == 0:
        raise DegenerateSetError("min_enclosing_cap requires at least one point")
    r = ps.sphere_radius
    center, radius = min_enclosing_ball(ps.points, seed)
    norm = np.linalg.norm(center)
    if norm <= constants.HEMISPHERE_TOLERANCE * r:
        raise DegenerateCapError(
            f"Degenerate cap: set not confined to any hemisphere (ball radius {radius!r})", radius)
    pole = center / norm
    angular = max(angle_between(pole, p) for p in ps.points)
    return SphericalCap(pole, min(angular, math.pi))


def in_open_hemisphere(ps: PointSet, pole: np.ndarray) -> bool:
    """True iff every point lies strictly on the pole's side of the equator."""
    pole = _unit(np.asarray(pole, dtype=float))
    r = ps.sphere_radius if ps.on_sphere else float(np.max(np.linalg.norm(ps.points, axis=1), initial=0.0))
    return bool(np.all(ps.points @ pole > r * constants.HEMISPHERE_TOLERANCE))


def _on_arc(x: np.ndarray, a: np.ndarray, b: np.ndarray, normal: np.ndarray, tol: float) -> bool:
    return float(np.dot(np.cross(a, x), normal)) >= -tol and float(np.dot(np.cross(x, b), normal)) >= -tol


def _snap(x: np.ndarray, candidates: Sequence[np.ndarray]) -> np.ndarray:
    for c in candidates:
        if angle_between(x, c) < constants.ANGLE_TOLERANCE:
            return c
    return x


def _circle_angle(p: np.ndarray, e1: np.ndarray, e2: np.ndarray) -> float:
    return math.atan2(float(np.dot(p, e2)), float(np.dot(p, e1)))


def _collinear_intersection(a1, a2, b1, b2, n1, n2) -> Optional[np.ndarray]:
    """Intersection of two arcs lying on one great circle."""
    e1, e2 = a1, np.cross(n1, a1)
    len_a = angle_between(a1, a2)
    len_b = angle_between(b1, b2)
    start = _circle_angle(b1, e1, e2)
    if np.dot(n1, n2) > 0:
        lo_b, hi_b = start, start + len_b
    else:
        lo_b, hi_b = start - len_b, start
    tol = constants.ANGLE_TOLERANCE
    touch = None
    for shift in (-2 * math.pi, 0.0, 2 * math.pi):
        lo = max(0.0, lo_b + shift)
        hi = min(len_a, hi_b + shift)
        if hi - lo > tol:
            raise ArcOverlapError("Arcs on one great circle overlap in a segment")
        if hi - lo >= -tol:
            touch = lo
    if touch is None:
        return None
    point = math.cos(touch) * e1 + math.sin(touch) * e2
    return _snap(point, (a1, a2, b1, b2))


def _arc_intersection_3d(a1, a2, b1, b2, tol: float) -> Optional[np.ndarray]:
    for p in (a1, a2):
        for q in (b1, b2):
            if angle_between(p, q) < constants.ANGLE_TOLERANCE:
                # Distinct great circles meet in one antipodal pair, so a shared endpoint is the only contact
                n1, n2 = _unit(np.cross(a1, a2)), _unit(np.cross(b1, b2))
                if np.linalg.norm(np.cross(n1, n2)) <= constants.ANGLE_TOLERANCE:
                    return _collinear_intersection(a1, a2, b1, b2, n1, n2)
                return p
    n1 = _unit(np.cross(a1, a2))
    n2 = _unit(np.cross(b1, b2))
    line = np.cross(n1, n2)
    s = np.linalg.norm(line)
    if s <= constants.ANGLE_TOLERANCE:
        return _collinear_intersection(a1, a2, b1, b2, n1, n2)
    x = line / s
    for cand in (x, -x):
        if _on_arc(cand, a1, a2, n1, tol) and _on_arc(cand, b1, b2, n2, tol):
            return _snap(cand, (a1, a2, b1, b2))
    return None


def arc_intersection(a: GreatArc, b: GreatArc, tol: float = constants.ARC_TOLERANCE) -> Optional[np.ndarray]:
    """Intersection point of two shorter great arcs, shared endpoints included.

    Arcs in R^d for d > 3 are handled in the span of their endpoints; when that
    span is 4-dimensional the two great circles meet only at the origin.

    Args:
        a: First arc
        b: Second arc
        tol: Slack for the on-arc test of unit vectors

    Returns:
        Optional[np.ndarray]: The intersection point on the common sphere, or None

    Raises:
        InvalidInputError: If the arcs lie on spheres of different radius or dimension
        ArcOverlapError: If the arcs share a great circle and overlap in a segment
    """
    if a.dim != b.dim:
        raise InvalidInputError("Arcs live in different dimensions")
    r = a.radius
    if abs(r - b.radius) > constants.SPHERE_TOLERANCE * max(r, b.radius):
        raise InvalidInputError(f"Arcs lie on spheres of different radius ({r!r} vs {b.radius!r})")
    ends = np.array([a.start, a.end, b.start, b.end]) / r
    if a.dim == 3:
        hit = _arc_intersection_3d(*ends, tol=tol)
        return None if hit is None else hit * r
    if a.dim < 3:
        padded = np.zeros((4, 3))
        padded[:, :a.dim] = ends
        hit = _arc_intersection_3d(*padded, tol=tol)
        return None if hit is None else hit[:a.dim] * r
    _, s, vt = np.linalg.svd(ends)
    rank = int(np.sum(s > 1e-12 * s[0]))
    if rank > 3:
        return None
    basis = np.zeros((3, a.dim))
    basis[:rank] = vt[:rank]
    hit = _arc_intersection_3d(*(ends @ basis.T), tol=tol)
    return None if hit is None else (hit @ basis) * r


def cone_membership(x: np.ndarray, generators: Sequence[np.ndarray]) -> Optional[np.ndarray]:
    """Non-negative coefficients expressing x in the cone of the generators.

    Returns:
        Optional[np.ndarray]: lambda >= 0 with |sum lambda_i g_i - x| <= 1e-8 |x|, or None if infeasible
    """
    G = np.asarray(generators, dtype=float)
    if G.ndim != 2 or G.shape[0] == 0:
        raise InvalidInputError("Cone membership needs at least one generator")
    if np.any(np.linalg.norm(G, axis=1) == 0):
        raise InvalidInputError("Cone generators must be nonzero")
    x = np.asarray(x, dtype=float)
    coeffs, residual = nnls(G.T, x)
    if residual <= constants.CONE_TOLERANCE * np.linalg.norm(x):
        return coeffs
    return None


def spherical_hull_vertices(generators: Sequence[np.ndarray]) -> List[int]:
    """Indices of a minimal generating subset of the cone spanned by the generators.

    Coincident directions (angle below 1e-9) are merged, keeping the lowest index.

    Raises:
        HemisphereError: If the generators do not lie in an open hemisphere
    """
    units = np.array([_unit(np.asarray(g, dtype=float)) for g in generators])
    if len(units) == 0:
        return []
    kept: List[int] = []
    for i, u in enumerate(units):
        if all(angle_between(u, units[j]) >= constants.ANGLE_TOLERANCE for j in kept):
            kept.append(i)
    check_open_hemisphere(units[kept])
    if len(kept) <= 2:
        return kept
    vertices = []
    for i in kept:
        others = [units[j] for j in kept if j != i]
        if cone_membership(units[i], others) is None:
            vertices.append(i)
    return vertices


def check_open_hemisphere(units: np.ndarray) -> np.ndarray:
    """Return a pole whose open hemisphere holds every unit vector.

    Raises:
        HemisphereError: If no such hemisphere exists
    """
    ps = PointSet(units.shape[1], units, 1.0)
    try:
        pole = min_enclosing_cap(ps).pole
    except DegenerateCapError as e:
        raise HemisphereError(f"Generators do not lie in an open hemisphere: {e}")
    if not in_open_hemisphere(ps, pole):
        raise HemisphereError("Generators do not lie in an open hemisphere")
    return pole


def order_around_centroid(units: np.ndarray) -> List[int]:
    """Angular order of unit 3-vectors around their normalized centroid."""
    if len(units) <= 2:
        return list(range(len(units)))
    centroid = _unit(units.sum(axis=0))
    t1, t2 = tangent_basis(centroid)
    angles = [math.atan2(float(u @ t2), float(u @ t1)) for u in units]
    return [int(i) for i in np.argsort(angles, kind='stable')]


def tangent_basis(pole: np.ndarray) -> np.ndarray:
    """Orthonormal basis (as rows) of the hyperplane orthogonal to pole."""
    return null_space(np.asarray(pole, dtype=float)[None, :]).T


def diametral_coordinates(x: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Coordinates of vectors in pole-perpendicular space with respect to basis rows."""
    return np.asarray(x, dtype=float) @ basis.T


def ambient_point(y: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Inverse of diametral_coordinates."""
    return np.asarray(y, dtype=float) @ basis


def lemma3_arcs_intersect(ps: PointSet, rel_tol: float = constants.DEFAULT_EPSILON) -> Tuple[bool, Optional[Tuple[Tuple[int, int], Tuple[int, int]]]]:
    """Check that every two diameter arcs of a set on a 2-sphere meet.

    For a unit-diameter set on S^2_r with r > sqrt(3/8) this always holds.

    Returns:
        Tuple[bool, Optional[...]]: (all pairs meet, first non-meeting pair of diameter pairs)
    """
    if ps.dim != 3 or not ps.on_sphere:
        raise InvalidInputError("Diameter arcs are checked on a 2-sphere in R^3")
    _, pairs = diameter(ps, rel_tol)
    arcs = [GreatArc(ps.points[i], ps.points[j]) for i, j in pairs]
    for x in range(len(arcs)):
        for y in range(x + 1, len(arcs)):
            try:
                hit = arc_intersection(arcs[x], arcs[y])
            except ArcOverlapError:
                continue
            if hit is None:
                logger.info("Diameter arcs %s and %s do not meet", pairs[x], pairs[y])
                return False, (pairs[x], pairs[y])
    return True, None
