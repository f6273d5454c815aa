"""Verification suites and explicit counterexamples for diameter graphs."""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import networkx as nx
import numpy as np
from scipy.linalg import helmert

from .. import constants
from ..core import cover
from ..core import graph as graph_mod
from ..core.geometry import PointSet, diameter, lemma3_arcs_intersect
from ..utils.exceptions import DiamgraphError, InvalidInputError, SizeCapError

logger = logging.getLogger(__name__)


@dataclass
class Claim:
    """One checked statement; passed is None when the claim was not asserted."""
    name: str
    passed: Optional[bool]
    witness: Optional[Dict[str, Any]] = None


@dataclass
class TheoremReport:
    theorem: str
    claims: List[Claim] = field(default_factory=list)
    instance: Dict[str, Any] = field(default_factory=dict)
    hypothesis_ok: bool = True
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """No asserted claim failed."""
        return all(c.passed is not False for c in self.claims)

    @property
    def failures(self) -> List[Claim]:
        return [c for c in self.claims if c.passed is False]


def _instance(ps: PointSet, eps: float, **extra) -> Dict[str, Any]:
    info: Dict[str, Any] = {"n": ps.n, "dim": ps.dim, "r": ps.sphere_radius, "epsilon": eps}
    info.update(extra)
    return info


def _disjoint_odd_cycles(g: graph_mod.DiameterGraph, cap: int) -> Optional[List[List[int]]]:
    cycles = graph_mod.odd_cycles(g, cap)
    masks = [sum(1 << v for v in c) for c in cycles]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if not masks[i] & masks[j]:
                return [cycles[i], cycles[j]]
    return None


def verify_theorem1(ps: PointSet, eps: float = constants.DEFAULT_EPSILON,
                    chromatic_cap: int = constants.CHROMATIC_CAP,
                    odd_cycle_cap: int = constants.ODD_CYCLE_CAP,
                    samples: int = constants.HULL_SAMPLES) -> TheoremReport:
    """Check the sphere bounds on a set in S^3_r with r > 1/sqrt(2) (diameter units).

    Claims: at most 2n - 2 diameters, chromatic number at most 4, no two
    vertex-disjoint odd cycles, and the double-cover pipeline re-deriving the
    edge bound. Instances outside the hypothesis are reported, not raised, and
    carry no asserted claims.

    Raises:
        InvalidInputError: If ps is not a point set on a sphere in R^4
    """
    if ps.dim != 4 or not ps.on_sphere:
        raise InvalidInputError("verify_theorem1 needs points on a 3-sphere in R^4")
    diam, _ = diameter(ps, eps)
    ratio = ps.sphere_radius / diam
    report = TheoremReport("theorem1", instance=_instance(
        ps, eps, diameter=diam, radius_ratio=ratio, chromatic_cap=chromatic_cap, odd_cycle_cap=odd_cycle_cap))
    if ratio <= constants.THEOREM1_RADIUS:
        report.hypothesis_ok = False
        report.notes.append(f"hypothesis violated: r/diam = {ratio!r} <= 1/sqrt(2); claims not asserted")
        return report

    g = graph_mod.build(ps, eps)
    n, e = ps.n, g.edge_count
    report.claims.append(Claim("edges <= 2n-2", e <= 2 * n - 2, {"edges": e, "bound": 2 * n - 2}))

    try:
        chi = graph_mod.chromatic_number(g, chromatic_cap)
        report.claims.append(Claim("chromatic number <= 4", chi <= 4, {"chromatic_number": chi}))
    except SizeCapError as err:
        report.claims.append(Claim("chromatic number <= 4", None, {"cap": err.cap}))
        report.notes.append(str(err))

    if n <= odd_cycle_cap:
        pair = _disjoint_odd_cycles(g, odd_cycle_cap)
        report.claims.append(Claim("odd cycles pairwise intersect", pair is None,
                                   None if pair is None else {"cycles": pair}))
    else:
        report.claims.append(Claim("odd cycles pairwise intersect", None, {"cap": odd_cycle_cap}))
        report.notes.append(f"odd-cycle claim skipped above n = {odd_cycle_cap}")

    try:
        result = cover.run_pipeline(ps, eps, samples, odd_cycle_cap)
    except DiamgraphError as err:
        report.claims.append(Claim("double cover drawing", False, {"error": str(err)}))
    else:
        witness: Dict[str, Any] = {"kept": len(result.kept), "pruned_edges": result.pruned_edges}
        if result.cover is not None:
            witness.update(cover_vertices=len(result.cover.vertices), cover_edges=len(result.cover.edges),
                           crossings=len(result.drawing.crossings))
        if result.lemma5 is not None and not result.lemma5.ok:
            witness["violations"] = [(v.kind, v.v, v.w) for v in result.lemma5.violations]
        report.claims.append(Claim("double cover drawing", result.ok, witness))
    return report


def counterexample_vazsonyi_sqrt2(m: int) -> PointSet:
    """K_{m,m} as a diameter graph on S^3_{1/sqrt(2)}.

    Each part sits on an arc of width just under pi/2 of one of two orthogonal
    great circles, so every cross pair is at distance 1 and every same-circle
    chord is shorter.
    """
    if not isinstance(m, (int, np.integer)) or m < 3:
        raise InvalidInputError(f"m must be an integer >= 3, got {m}")
    r = 1 / math.sqrt(2)
    width = math.pi / 2 * (1 - 1e-6)
    angles = [j * width / (m - 1) for j in range(m)]
    pts = [(r * math.cos(t), r * math.sin(t), 0.0, 0.0) for t in angles]
    pts += [(0.0, 0.0, r * math.cos(t), r * math.sin(t)) for t in angles]
    return PointSet(4, np.array(pts), r)


def counterexample_borsuk_sqrt25() -> PointSet:
    """Unit regular 4-simplex centered at the origin, lying on S^3_{sqrt(2/5)}."""
    # Orthonormal rows spanning the sum-zero hyperplane of R^5
    basis = helmert(5)
    vertices = np.eye(5) / math.sqrt(2)
    vertices -= vertices.mean(axis=0)
    pts = vertices @ basis.T
    norms = np.linalg.norm(pts, axis=1)
    radius = math.sqrt(2 / 5)
    return PointSet(4, pts * (radius / norms)[:, None], radius)


def verify_schur(ps: PointSet, eps: float = constants.DEFAULT_EPSILON) -> TheoremReport:
    """Check the 4-clique bounds of a set in R^4.

    Raises:
        InvalidInputError: If ps is not in R^4 or has fewer than 5 points
    """
    if ps.dim != 4 or ps.n < 5:
        raise InvalidInputError(f"verify_schur needs at least 5 points of R^4, got {ps.n} in R^{ps.dim}")
    g = graph_mod.build(ps, eps)
    report = TheoremReport("schur", instance=_instance(ps, eps, diameter=g.diam))
    count = graph_mod.count_cliques(g, 4)
    report.claims.append(Claim("4-cliques <= n", count <= ps.n, {"cliques": count, "n": ps.n}))
    bad = graph_mod.cliques_sharing_exactly(g, 4, 1)
    report.claims.append(Claim("no 4-cliques sharing exactly one vertex", not bad,
                               {"pairs": [list(p) for p in bad[:5]]} if bad else None))
    partition = graph_mod.clique_equivalence_partition(g, 4)
    report.claims.append(Claim("cliques in a class share >= 2 vertices", partition.all_share_ok,
                               {"classes": len(partition.classes)}))
    over = [c for c in partition.classes if len(c.cliques) > len(c.vertices)]
    report.claims.append(Claim("class cliques <= class vertices", not over,
                               {"classes": [{"vertices": c.vertices, "cliques": len(c.cliques)} for c in over]}
                               if over else None))
    if count < ps.n:
        report.notes.append(f"{count} 4-cliques, {ps.n - count} below the extremal value n")
    return report


def verify_d5_cliques(ps: PointSet, eps: float = constants.DEFAULT_EPSILON) -> TheoremReport:
    """A diameter graph in R^4 holds at most one 5-clique."""
    g = graph_mod.build(ps, eps)
    count = graph_mod.count_cliques(g, 5)
    report = TheoremReport("five-cliques", instance=_instance(ps, eps, diameter=g.diam))
    report.claims.append(Claim("5-cliques <= 1", count <= 1, {"cliques": count}))
    return report


def verify_lemma8(g: graph_mod.DiameterGraph) -> TheoremReport:
    """Triangle count against 4e/3 - 2n/3 for a diameter graph."""
    check = graph_mod.triangle_bound_check(g)
    report = TheoremReport("triangle-bound", instance={"n": g.n, "edges": g.edge_count})
    if not check.applicable:
        report.notes.append("graph has no source points; the bound is only asserted for diameter graphs")
    report.claims.append(Claim("triangles <= 4e/3 - 2n/3", check.ok if check.applicable else None, {
        "triangles": check.triangles, "bound": str(check.bound), "effective_bound": str(check.effective_bound)}))
    return report


def verify_lemma3(ps: PointSet, eps: float = constants.DEFAULT_EPSILON) -> TheoremReport:
    """Every two diameter arcs of a set on S^2_r meet when r > sqrt(3/8) (diameter units)."""
    diam, _ = diameter(ps, eps)
    ratio = ps.sphere_radius / diam if ps.on_sphere else None
    report = TheoremReport("diameter-arcs", instance=_instance(ps, eps, diameter=diam, radius_ratio=ratio))
    if ratio is None or ratio <= math.sqrt(3 / 8):
        report.hypothesis_ok = False
        report.notes.append("hypothesis violated: needs a 2-sphere with r/diam > sqrt(3/8)")
        return report
    ok, pair = lemma3_arcs_intersect(ps, eps)
    report.claims.append(Claim("diameter arcs pairwise meet", ok, None if ok else {"pairs": list(pair)}))
    return report


def verify_kst(n: int = 52, trials: int = 100, seed: int = 0, s: int = 7) -> TheoremReport:
    """Density condition at e = ceil(n^2/4) and a K_{s,3} in random graphs of that density."""
    m = -(-n * n // 4)
    report = TheoremReport("kst", instance={"n": n, "edges": m, "s": s, "trials": trials, "seed": seed})
    condition = graph_mod.kst_condition(n, m, s)
    report.claims.append(Claim("density condition", condition, {"n": n, "edges": m, "s": s}))
    if not condition:
        report.notes.append("density condition fails; no K_{s,3} is forced")
        return report
    misses = []
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        G = nx.gnm_random_graph(n, m, seed=int(child.generate_state(1)[0]))
        g = graph_mod.from_edges(n, list(G.edges()))
        if graph_mod.find_Ks3(g, s) is None:
            misses.append(i)
    report.claims.append(Claim(f"K_{{{s},3}} found in every random graph", not misses,
                               {"missing_trials": misses} if misses else None))
    return report


def report_suite(ps: PointSet, eps: float = constants.DEFAULT_EPSILON) -> List[TheoremReport]:
    """Every suite whose hypotheses match the shape of ps."""
    reports = []
    if ps.dim == 4:
        if ps.on_sphere:
            reports.append(verify_theorem1(ps, eps))
        if ps.n >= 5:
            reports.append(verify_schur(ps, eps))
        reports.append(verify_d5_cliques(ps, eps))
    if ps.dim == 3 and ps.on_sphere:
        reports.append(verify_lemma3(ps, eps))
    reports.append(verify_lemma8(graph_mod.build(ps, eps)))
    return reports


def verify_cover(ps: PointSet, eps: float = constants.DEFAULT_EPSILON,
                 samples: int = constants.HULL_SAMPLES,
                 odd_cycle_cap: int = constants.ODD_CYCLE_CAP) -> TheoremReport:
    """Each stage of the double-cover pipeline as a separate claim."""
    if ps.dim != 4 or not ps.on_sphere:
        raise InvalidInputError("verify_cover needs points on a 3-sphere in R^4")
    diam, _ = diameter(ps, eps)
    ratio = ps.sphere_radius / diam
    report = TheoremReport("cover", instance=_instance(ps, eps, diameter=diam, radius_ratio=ratio,
                                                       hull_samples=samples))
    if ratio <= constants.THEOREM1_RADIUS:
        report.hypothesis_ok = False
        report.notes.append(f"hypothesis violated: r/diam = {ratio!r} <= 1/sqrt(2); claims not asserted")
        return report
    result = cover.run_pipeline(ps, eps, samples, odd_cycle_cap)
    report.instance["kept"] = len(result.kept)
    if not result.kept:
        report.notes.append("no vertex survives pruning; nothing to draw")
        return report
    lemma5 = result.lemma5
    report.claims.append(Claim("projected polygons touch as required", lemma5.ok,
                               None if lemma5.ok else {"violations": [(v.kind, v.v, v.w) for v in lemma5.violations]}))
    if result.cover is None:
        return report
    drawing = result.drawing
    report.claims.append(Claim("cover is bipartite", result.bipartite))
    report.claims.append(Claim("cover has twice the base edges", result.edges_doubled,
                               {"cover_edges": len(result.cover.edges), "base_edges": result.pruned_edges}))
    report.claims.append(Claim("drawing has no crossings", drawing.planar_ok,
                               {"crossings": [list(c[:2]) for c in drawing.crossings[:5]]} if drawing.crossings else None))
    report.claims.append(Claim("cover edges <= 4n-4", drawing.edge_bound_ok,
                               {"edges": drawing.edge_count, "bound": drawing.edge_bound}))
    report.claims.append(Claim("odd cycles lift to doubled walks", result.lifts_ok))
    return report


def verify_counterexamples(m: int = 4, eps: float = constants.DEFAULT_EPSILON) -> TheoremReport:
    """Sharpness of the radius threshold and chromatic number 5 on S^3_{sqrt(2/5)}."""
    report = TheoremReport("counterexamples", instance={"m": m, "epsilon": eps})
    kmm = counterexample_vazsonyi_sqrt2(m)
    g = graph_mod.build(kmm, eps)
    n = kmm.n
    report.claims.append(Claim("K_{m,m} has unit diameter", abs(g.diam - 1) <= 1e-9, {"diameter": g.diam}))
    report.claims.append(Claim("K_{m,m} is the diameter graph", g.edge_count == m * m and graph_mod.is_bipartite(g),
                               {"edges": g.edge_count}))
    if m >= 4:
        report.claims.append(Claim("K_{m,m} exceeds 2n-2", g.edge_count > 2 * n - 2,
                                   {"edges": g.edge_count, "bound": 2 * n - 2}))
    simplex = counterexample_borsuk_sqrt25()
    norms = np.linalg.norm(simplex.points, axis=1)
    report.claims.append(Claim("simplex lies on radius sqrt(2/5)",
                               bool(np.all(np.abs(norms - math.sqrt(2 / 5)) <= 1e-12)), {"max_norm": float(norms.max())}))
    chi = graph_mod.chromatic_number(graph_mod.build(simplex, eps))
    report.claims.append(Claim("simplex needs 5 colors", chi == 5, {"chromatic_number": chi}))
    return report
