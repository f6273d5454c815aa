"""Tests for geometric primitives"""
import math
from itertools import combinations

import numpy as np
import pytest

from diamgraph.core import geometry
from diamgraph.core.geometry import GreatArc, PointSet, SphericalCap
from diamgraph.services import sweeps
from diamgraph.utils.exceptions import (
    ArcOverlapError,
    DegenerateCapError,
    DegenerateSetError,
    HemisphereError,
    InvalidInputError,
)

pytestmark = pytest.mark.core


def test_pointset_validation():
    """Test PointSet rejects bad shapes and off-sphere points"""
    with pytest.raises(InvalidInputError):
        PointSet(1, np.zeros((2, 1)))
    with pytest.raises(InvalidInputError):
        PointSet(3, np.zeros((2, 4)))
    with pytest.raises(InvalidInputError):
        PointSet(2, np.array([[0.0, np.nan]]))
    with pytest.raises(InvalidInputError):
        PointSet(2, np.array([[1.0, 0.0], [0.5, 0.0]]), 1.0)

def test_pointset_is_read_only():
    """Test PointSet coordinates cannot be modified in place"""
    ps = PointSet.from_points([[0, 0], [1, 0]])
    assert ps.dim == 2 and ps.n == 2 and len(ps) == 2
    with pytest.raises(ValueError):
        ps.points[0, 0] = 5.0

def test_pointset_scaled_and_subset():
    """Test scaling carries the sphere radius along"""
    ps = PointSet.from_points([[1, 0], [0, 1], [-1, 0]], sphere_radius=1.0)
    scaled = ps.scaled(2.0)
    assert scaled.sphere_radius == 2.0
    assert np.allclose(scaled.points[0], [2, 0])
    sub = ps.subset([2, 0])
    assert sub.n == 2 and np.allclose(sub.points[0], [-1, 0])

def test_diameter_square():
    """Test the unit square's diameter and both diagonals"""
    ps = PointSet.from_points([[0, 0], [1, 0], [1, 1], [0, 1]])
    value, pairs = geometry.diameter(ps)
    assert value == pytest.approx(math.sqrt(2), abs=1e-15)
    assert pairs == [(0, 2), (1, 3)]

def test_diameter_equilateral_triangle():
    """Test all three sides of a unit triangle are diameters"""
    ps = PointSet.from_points([[0, 0], [1, 0], [0.5, math.sqrt(3) / 2]])
    value, pairs = geometry.diameter(ps)
    assert value == pytest.approx(1.0, abs=1e-15)
    assert pairs == [(0, 1), (0, 2), (1, 2)]

def test_diameter_degenerate():
    """Test a single point has no diameter"""
    with pytest.raises(DegenerateSetError):
        geometry.diameter(PointSet.from_points([[0.0, 0.0]]))

def test_diameter_is_scale_equivariant(simplex):
    """Test scaling multiplies the diameter and keeps the witness pairs"""
    value, pairs = geometry.diameter(simplex)
    scaled_value, scaled_pairs = geometry.diameter(simplex.scaled(3.0))
    assert scaled_value == pytest.approx(3 * value, rel=1e-14)
    assert scaled_pairs == pairs

def test_jung_radius():
    """Test circumradius bounds in low dimensions"""
    assert geometry.jung_radius(2) == pytest.approx(1 / math.sqrt(3), abs=1e-15)
    assert geometry.jung_radius(3) == pytest.approx(math.sqrt(3 / 8), abs=1e-15)
    assert geometry.jung_radius(4) == pytest.approx(math.sqrt(2 / 5), abs=1e-15)
    with pytest.raises(InvalidInputError):
        geometry.jung_radius(0)

def test_simplex_circumradius_matches_jung(simplex):
    """Test the unit 4-simplex lies on the Jung sphere"""
    norms = np.linalg.norm(simplex.points, axis=1)
    assert np.allclose(norms, geometry.jung_radius(4), atol=1e-12)

def test_min_enclosing_ball_is_deterministic():
    """Test the seeded shuffle gives the same ball each time"""
    pts = np.random.default_rng(3).normal(size=(30, 4))
    c1, r1 = geometry.min_enclosing_ball(pts, seed=5)
    c2, r2 = geometry.min_enclosing_ball(pts, seed=5)
    assert np.array_equal(c1, c2) and r1 == r2
    assert np.all(np.linalg.norm(pts - c1, axis=1) <= r1 * (1 + 1e-9))

def test_min_enclosing_ball_segment():
    """Test the ball of two points is centered at their midpoint"""
    center, radius = geometry.min_enclosing_ball(np.array([[0.0, 0.0], [2.0, 0.0]]))
    assert np.allclose(center, [1, 0])
    assert radius == pytest.approx(1.0)

def test_min_enclosing_cap_small_cluster():
    """Test the cap around a cluster near the north pole"""
    pts = np.array([[0.1, 0, 1], [-0.1, 0, 1], [0, 0.1, 1], [0, -0.1, 1]], dtype=float)
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    cap = geometry.min_enclosing_cap(PointSet(3, pts, 1.0))
    assert np.allclose(cap.pole, [0, 0, 1], atol=1e-9)
    assert cap.angular_radius == pytest.approx(math.atan(0.1), abs=1e-9)
    assert all(cap.contains(p) for p in pts)

def test_min_enclosing_cap_degenerate():
    """Test antipodal points are confined to no hemisphere"""
    ps = PointSet.from_points([[1, 0, 0], [-1, 0, 0]], sphere_radius=1.0)
    with pytest.raises(DegenerateCapError) as excinfo:
        geometry.min_enclosing_cap(ps)
    assert excinfo.value.ball_radius == pytest.approx(1.0)

def test_spherical_cap_validation():
    """Test cap radii outside [0, pi] are rejected"""
    with pytest.raises(InvalidInputError):
        SphericalCap(np.array([0, 0, 1.0]), 4.0)

def test_great_arc_validation():
    """Test coincident and antipodal endpoints are rejected"""
    with pytest.raises(InvalidInputError):
        GreatArc(np.array([1.0, 0, 0]), np.array([1.0, 0, 0]))
    with pytest.raises(InvalidInputError):
        GreatArc(np.array([1.0, 0, 0]), np.array([-1.0, 0, 0]))
    arc = GreatArc(np.array([1.0, 0, 0]), np.array([0, 1.0, 0]))
    assert arc.length == pytest.approx(math.pi / 2)
    assert np.allclose((-arc).start, [-1, 0, 0])

def test_arc_intersection_crossing():
    """Test two arcs crossing at the north pole"""
    a = GreatArc(np.array([1.0, 0, 1]) / math.sqrt(2), np.array([-1.0, 0, 1]) / math.sqrt(2))
    b = GreatArc(np.array([0, 1.0, 1]) / math.sqrt(2), np.array([0, -1.0, 1]) / math.sqrt(2))
    hit = geometry.arc_intersection(a, b)
    assert np.allclose(hit, [0, 0, 1], atol=1e-12)

def test_arc_intersection_disjoint():
    """Test arcs on crossing great circles that miss each other"""
    a = GreatArc(np.array([1.0, 0, 0]), np.array([0, 1.0, 0]))
    b = GreatArc(np.array([0, 0, 1.0]), np.array([-1.0, 0, 1]) / math.sqrt(2))
    assert geometry.arc_intersection(a, b) is None

def test_arc_intersection_shared_endpoint():
    """Test a shared endpoint counts as an intersection"""
    p = np.array([0, 0, 1.0])
    a = GreatArc(p, np.array([1.0, 0, 0]))
    b = GreatArc(p, np.array([0, 1.0, 0]))
    assert np.array_equal(geometry.arc_intersection(a, b), p)

def test_arc_intersection_collinear():
    """Test overlap on one great circle raises and touching returns the point"""
    x, y = np.array([1.0, 0, 0]), np.array([0, 1.0, 0])
    mid = np.array([1.0, 1.0, 0]) / math.sqrt(2)
    with pytest.raises(ArcOverlapError):
        geometry.arc_intersection(GreatArc(x, y), GreatArc(mid, np.array([-1.0, 1.0, 0]) / math.sqrt(2)))
    far = np.array([-1.0, 0.2, 0])
    far /= np.linalg.norm(far)
    hit = geometry.arc_intersection(GreatArc(x, y), GreatArc(y, far))
    assert np.allclose(hit, y)

def test_arc_intersection_in_r4():
    """Test arcs in R^4 are intersected inside their 3-dimensional span"""
    a = GreatArc(np.array([1.0, 0, 1, 0]) / math.sqrt(2), np.array([-1.0, 0, 1, 0]) / math.sqrt(2))
    b = GreatArc(np.array([0, 1.0, 1, 0]) / math.sqrt(2), np.array([0, -1.0, 1, 0]) / math.sqrt(2))
    assert np.allclose(geometry.arc_intersection(a, b), [0, 0, 1, 0], atol=1e-12)
    c = GreatArc(np.array([1.0, 0, 0, 0]), np.array([0, 1.0, 0, 0]))
    d = GreatArc(np.array([0, 0, 1.0, 0]), np.array([0, 0, 0, 1.0]))
    assert geometry.arc_intersection(c, d) is None

def test_arc_intersection_radius_mismatch():
    """Test arcs on different spheres are rejected"""
    a = GreatArc(np.array([1.0, 0, 0]), np.array([0, 1.0, 0]))
    b = GreatArc(np.array([2.0, 0, 0]), np.array([0, 0, 2.0]))
    with pytest.raises(InvalidInputError):
        geometry.arc_intersection(a, b)

def test_cone_membership():
    """Test non-negative combinations of the coordinate axes"""
    gens = np.eye(3)
    coeffs = geometry.cone_membership(np.array([1.0, 2.0, 3.0]), gens)
    assert np.allclose(coeffs, [1, 2, 3])
    assert geometry.cone_membership(np.array([-1.0, 0, 0]), gens) is None

def test_spherical_hull_vertices_drops_interior():
    """Test a direction inside the cone of the others is not a hull vertex"""
    gens = [np.array([1.0, 0, 1]), np.array([-1.0, 0, 1]), np.array([0, 1.0, 1]),
            np.array([0, -1.0, 1]), np.array([0, 0, 1.0])]
    assert geometry.spherical_hull_vertices(gens) == [0, 1, 2, 3]

def test_spherical_hull_vertices_merges_duplicates():
    """Test coincident directions keep the lowest index"""
    gens = [np.array([1.0, 0, 1]), np.array([2.0, 0, 2]), np.array([0, 1.0, 1])]
    assert geometry.spherical_hull_vertices(gens) == [0, 2]

def test_spherical_hull_vertices_hemisphere_error():
    """Test generators spanning no open hemisphere"""
    gens = [np.array([1.0, 0, 0]), np.array([-1.0, 0, 0]), np.array([0, 1.0, 0])]
    with pytest.raises(HemisphereError):
        geometry.spherical_hull_vertices(gens)

def test_spherical_hull_matches_brute_force():
    """Test hull vertices against a subset search over random caps"""
    rng = np.random.default_rng(11)
    for _ in range(50):
        k = int(rng.integers(3, 11))
        pole = np.array([0, 0, 1.0])
        gens = [pole + 0.6 * rng.normal(size=3) * np.array([1, 1, 0]) for _ in range(k)]
        hull = geometry.spherical_hull_vertices(gens)
        for i in range(k):
            others = [gens[j] for j in range(k) if j != i]
            inside = geometry.cone_membership(gens[i], others) is not None
            assert (i in hull) == (not inside)
        # Every generator is in the cone of the hull vertices
        assert all(geometry.cone_membership(g, [gens[h] for h in hull]) is not None for g in gens)

def test_tangent_basis_round_trip():
    """Test ambient_point inverts diametral_coordinates on the pole's complement"""
    pole = np.array([1.0, 2.0, 2.0, 4.0]) / 5
    basis = geometry.tangent_basis(pole)
    assert basis.shape == (3, 4)
    assert np.allclose(basis @ pole, 0, atol=1e-12)
    x = np.array([0.3, -0.2, 0.5, -0.025])
    x -= (x @ pole) * pole
    y = geometry.diametral_coordinates(x, basis)
    assert np.allclose(geometry.ambient_point(y, basis), x, atol=1e-12)

def test_diameter_arcs_meet_on_large_sphere():
    """Test diameter arcs of a unit triangle on S^2_1 pairwise meet"""
    r = 1.0
    rho = 1 / math.sqrt(3)
    h = math.sqrt(r * r - rho * rho)
    pts = [(rho * math.cos(t), rho * math.sin(t), h) for t in (0, 2 * math.pi / 3, 4 * math.pi / 3)]
    ok, witness = geometry.lemma3_arcs_intersect(PointSet(3, np.array(pts), r))
    assert ok and witness is None

def test_diameter_arcs_need_two_sphere():
    """Test the arc check rejects points in R^4"""
    with pytest.raises(InvalidInputError):
        geometry.lemma3_arcs_intersect(PointSet.from_points([[1, 0, 0, 0], [0, 1, 0, 0]], 1.0))

def test_in_open_hemisphere():
    """Test strict hemisphere membership"""
    ps = PointSet.from_points([[1, 0, 0], [0, 1, 0]], sphere_radius=1.0)
    assert geometry.in_open_hemisphere(ps, np.array([1.0, 1.0, 0]))
    assert not geometry.in_open_hemisphere(ps, np.array([1.0, 0, 0]))

def test_pairwise_distances_symmetric(pentagon_star):
    """Test the distance matrix is symmetric with a zero diagonal"""
    d = geometry.pairwise_distances(pentagon_star)
    assert np.allclose(d, d.T) and np.all(np.diag(d) == 0)
    for i, j in combinations(range(5), 2):
        assert d[i, j] <= 1 + 1e-12

def _random_orthogonal(rng, d):
    q, r = np.linalg.qr(rng.normal(size=(d, d)))
    return q * np.sign(np.diag(r))

@pytest.mark.parametrize("seed", [0, 1, 2])
def test_diameter_is_rigid_motion_invariant(simplex, seed):
    """Test rotations, reflections and translations keep the diameter and its pairs"""
    rng = np.random.default_rng(seed)
    for ps in (simplex, PointSet.from_points(rng.normal(size=(12, 4)))):
        value, pairs = geometry.diameter(ps)
        moved = PointSet.from_points(ps.points @ _random_orthogonal(rng, 4).T + rng.normal(size=4))
        moved_value, moved_pairs = geometry.diameter(moved)
        assert moved_value == pytest.approx(value, rel=1e-12)
        assert moved_pairs == pairs

def test_jung_radius_is_increasing():
    """Test the bound grows with the dimension and stays below 1/sqrt(2)"""
    radii = [geometry.jung_radius(d) for d in range(1, 65)]
    assert all(a < b for a, b in zip(radii, radii[1:]))
    assert radii[-1] < 1 / math.sqrt(2)

@pytest.mark.parametrize("dim", [3, 4])
@pytest.mark.parametrize("r", [0.72, 1.0, 2.0])
def test_unit_diameter_sets_fit_in_a_hemisphere(dim, r):
    """Test the enclosing-cap pole witnesses an open hemisphere when r exceeds the Jung radius"""
    assert r > geometry.jung_radius(dim)
    rng = np.random.default_rng(dim * 10 + int(r * 10))
    for _ in range(25):
        ps = sweeps.random_sphere_instance(int(rng.integers(3, 11)), r, rng, dim=dim)
        cap = geometry.min_enclosing_cap(ps)
        assert geometry.in_open_hemisphere(ps, cap.pole)
        assert cap.angular_radius < math.pi / 2

def _random_arc(rng):
    a, b = rng.normal(size=(2, 3))
    return GreatArc(a / np.linalg.norm(a), b / np.linalg.norm(b))

def _on_arc(arc, x):
    normal = np.cross(arc.start, arc.end)
    normal /= np.linalg.norm(normal)
    through = geometry.angle_between(arc.start, x) + geometry.angle_between(x, arc.end)
    return abs(x @ normal) < 1e-9 and through == pytest.approx(arc.length, abs=1e-9)

def test_arc_intersection_is_symmetric():
    """Test swapping the arcs gives the same answer and hits lie on both arcs"""
    rng = np.random.default_rng(21)
    hits = 0
    for _ in range(300):
        a, b = _random_arc(rng), _random_arc(rng)
        x = geometry.arc_intersection(a, b)
        y = geometry.arc_intersection(b, a)
        assert (x is None) == (y is None)
        if x is None:
            continue
        hits += 1
        assert np.allclose(x, y, atol=1e-12)
        assert np.linalg.norm(x) == pytest.approx(1.0)
        assert _on_arc(a, x) and _on_arc(b, x)
    assert hits > 10

def test_spherical_hull_vertices_is_idempotent():
    """Test the hull of the hull vertices is all of them"""
    rng = np.random.default_rng(13)
    pole = np.array([0, 0, 1.0])
    for _ in range(30):
        gens = [pole + 0.6 * rng.normal(size=3) * np.array([1, 1, 0]) for _ in range(int(rng.integers(3, 12)))]
        hull = geometry.spherical_hull_vertices(gens)
        assert geometry.spherical_hull_vertices([gens[h] for h in hull]) == list(range(len(hull)))
