"""Diameter graphs and exact combinatorial analysis on bitset adjacency."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from .. import constants
from ..utils.exceptions import DegenerateSetError, InvalidInputError, SizeCapError
from .geometry import PointSet, diameter, pairwise_distances

logger = logging.getLogger(__name__)

Clique = Tuple[int, ...]


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order."""
    while mask:
        yield _lsb_index(mask)
        mask &= mask - 1


def bits_to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True, eq=False)
class DiameterGraph:
    """Graph on vertices 0..n-1 with adjacency rows packed as Python int bitsets.

    A graph built from a PointSet keeps it as `source`; abstract graphs have none.
    """
    n: int
    rows: Tuple[int, ...]
    diam: float = 1.0
    tolerance: float = constants.DEFAULT_EPSILON
    source: Optional[PointSet] = None

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InvalidInputError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")
        if not self.diam > 0:
            raise InvalidInputError(f"Diameter must be positive, got {self.diam}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise InvalidInputError(f"Row {v} has a self loop or an out-of-range vertex")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidInputError(f"Adjacency is not symmetric at ({v},{u})")
        object.__setattr__(self, 'rows', tuple(self.rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return bits_to_list(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (i, j) with i < j in lexicographic order."""
        return [(v, u) for v in range(self.n) for u in iter_bits(self.rows[v] >> (v + 1) << (v + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self.n, self.n), dtype=bool)
        for v, u in self.edges():
            mat[v, u] = mat[u, v] = True
        return mat


def from_edges(n: int, edges: Sequence[Tuple[int, int]], diam: float = 1.0) -> DiameterGraph:
    """Build an abstract graph from an edge list.

    Raises:
        InvalidInputError: If an edge is a loop or refers to a missing vertex
    """
    rows = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"Invalid edge ({u},{v}) for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return DiameterGraph(n, tuple(rows), diam)


def build(ps: PointSet, eps: float = constants.DEFAULT_EPSILON) -> DiameterGraph:
    """Build the diameter graph of a point set.

    Args:
        ps: Point set with at least two points
        eps: Pairs with dist >= diam * (1 - eps) are edges

    Returns:
        DiameterGraph: Graph whose source is ps

    Raises:
        InvalidInputError: If eps is outside [0, 1e-3]
        DegenerateSetError: If fewer than two points or all points coincide
    """
    if not 0 <= eps <= constants.MAX_EPSILON:
        raise InvalidInputError(f"Tolerance must lie in [0, {constants.MAX_EPSILON}], got {eps}")
    value, _ = diameter(ps, eps)
    if value <= 1e-12:
        raise DegenerateSetError("Degenerate set: all points coincide")
    adjacent = pairwise_distances(ps) >= value * (1 - eps)
    np.fill_diagonal(adjacent, False)
    rows = tuple(sum(1 << int(u) for u in np.flatnonzero(adjacent[v])) for v in range(ps.n))
    return DiameterGraph(ps.n, rows, value, eps, ps)


def induced_subgraph(g: DiameterGraph, kept: Sequence[int]) -> DiameterGraph:
    """Subgraph induced on `kept`, relabeled 0..len(kept)-1 in the given order."""
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in iter_bits(g.rows[v]):
            if u in position:
                row |= 1 << position[u]
        rows.append(row)
    source = g.source.subset(kept) if g.source is not None else None
    return DiameterGraph(len(kept), tuple(rows), g.diam, g.tolerance, source)


def degree_sequence(g: DiameterGraph) -> List[int]:
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


def to_networkx(g: DiameterGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def is_bipartite(g: DiameterGraph) -> bool:
    return nx.is_bipartite(to_networkx(g))


def _count_from(candidates: int, depth: int, rows: Tuple[int, ...]) -> int:
    if depth == 1:
        return candidates.bit_count()
    total = 0
    while candidates:
        v = _lsb_index(candidates)
        candidates &= candidates - 1
        # Only later vertices extend the clique, so each clique is counted once
        total += _count_from(candidates & rows[v], depth - 1, rows)
    return total


def count_cliques(g: DiameterGraph, l: int) -> int:
    """Exact number of l-cliques by neighborhood intersection over higher-indexed neighbors."""
    if l < 1:
        raise InvalidInputError(f"Clique size must be positive, got {l}")
    if l > g.n:
        return 0
    return _count_from((1 << g.n) - 1, l, g.rows)


def _enumerate_from(prefix: List[int], candidates: int, depth: int, rows: Tuple[int, ...], out: List[Clique]) -> None:
    if depth == 0:
        out.append(tuple(prefix))
        return
    while candidates:
        v = _lsb_index(candidates)
        candidates &= candidates - 1
        prefix.append(v)
        _enumerate_from(prefix, candidates & rows[v], depth - 1, rows, out)
        prefix.pop()


def enumerate_cliques(g: DiameterGraph, l: int) -> List[Clique]:
    """All l-cliques as sorted vertex tuples, in lexicographic order."""
    if l < 1:
        raise InvalidInputError(f"Clique size must be positive, got {l}")
    out: List[Clique] = []
    if l <= g.n:
        _enumerate_from([], (1 << g.n) - 1, l, g.rows, out)
    return out


@dataclass
class CliqueReport:
    counts: Dict[int, int]
    cliques_of_size: Optional[int] = None
    cliques: List[Clique] = field(default_factory=list)


def clique_report(g: DiameterGraph, sizes: Sequence[int] = (2, 3, 4, 5), list_size: Optional[int] = None) -> CliqueReport:
    counts = {l: count_cliques(g, l) for l in sizes}
    report = CliqueReport(counts)
    if list_size is not None:
        report.cliques_of_size = list_size
        report.cliques = enumerate_cliques(g, list_size)
    return report


def greedy_clique(g: DiameterGraph) -> List[int]:
    """A maximal clique grown from the highest-degree vertex in descending-degree order."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique: List[int] = []
    candidates = (1 << g.n) - 1
    for v in order:
        if candidates >> v & 1:
            clique.append(v)
            candidates &= g.rows[v]
    return clique


def _k_colorable(g: DiameterGraph, k: int, clique: List[int]) -> Optional[List[int]]:
    """Backtracking k-colouring with the clique pre-coloured and new colours opened in order."""
    in_clique = set(clique)
    order = clique + sorted((v for v in range(g.n) if v not in in_clique), key=lambda v: (-g.degree(v), v))
    coloring = [-1] * g.n
    for c, v in enumerate(clique):
        coloring[v] = c

    def assign(pos: int, n_used: int) -> bool:
        if pos == g.n:
            return True
        v = order[pos]
        forbidden = 0
        for u in iter_bits(g.rows[v]):
            if coloring[u] >= 0:
                forbidden |= 1 << coloring[u]
        for c in range(min(k, n_used + 1)):
            if not forbidden >> c & 1:
                coloring[v] = c
                if assign(pos + 1, max(n_used, c + 1)):
                    return True
        coloring[v] = -1
        return False

    return coloring if assign(len(clique), len(clique)) else None


def chromatic_number(g: DiameterGraph, cap: int = constants.CHROMATIC_CAP) -> int:
    """Exact chromatic number.

    Lower bound from a greedy clique, upper bound from a largest-first greedy colouring,
    then k-colourability is decided for increasing k.

    Raises:
        SizeCapError: If g has more than `cap` vertices
    """
    if g.n > cap:
        raise SizeCapError(f"Chromatic number search is capped at n <= {cap}, got n={g.n}", cap)
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    clique = greedy_clique(g)
    greedy = nx.greedy_color(to_networkx(g), strategy='largest_first')
    upper = max(greedy.values()) + 1
    for k in range(len(clique), upper):
        if _k_colorable(g, k, clique) is not None:
            return k
    return upper


def odd_cycles(g: DiameterGraph, cap: int = constants.ODD_CYCLE_CAP) -> List[List[int]]:
    """All chordless odd cycles, each listed once starting from its smallest vertex.

    Every odd cycle's vertex set contains a chordless odd cycle, so these decide
    questions about vertex-disjoint odd cycles.

    Raises:
        SizeCapError: If g has more than `cap` vertices
    """
    if g.n > cap:
        raise SizeCapError(f"Odd-cycle enumeration is capped at n <= {cap}, got n={g.n}", cap)
    found: Dict[int, List[int]] = {}
    rows = g.rows

    def extend(path: List[int], path_mask: int, s: int) -> None:
        last = path[-1]
        inner = path_mask & ~(1 << s) & ~(1 << last)
        for w in iter_bits(rows[last] >> (s + 1) << (s + 1)):
            if path_mask >> w & 1 or rows[w] & inner:
                continue
            if rows[w] >> s & 1:
                if len(path) % 2 == 0:
                    mask = path_mask | 1 << w
                    found.setdefault(mask, path + [w])
                continue
            path.append(w)
            extend(path, path_mask | 1 << w, s)
            path.pop()

    for s in range(g.n):
        for v in iter_bits(rows[s] >> (s + 1) << (s + 1)):
            extend([s, v], 1 << s | 1 << v, s)
    return [found[m] for m in sorted(found, key=lambda m: (m.bit_count(), found[m]))]


def odd_cycles_pairwise_intersect(g: DiameterGraph, cap: int = constants.ODD_CYCLE_CAP) -> bool:
    """True iff no two vertex-disjoint odd cycles exist."""
    masks = [sum(1 << v for v in cycle) for cycle in odd_cycles(g, cap)]
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if not masks[i] & masks[j]:
                logger.info("Disjoint odd cycles %s and %s", bits_to_list(masks[i]), bits_to_list(masks[j]))
                return False
    return True


def find_Ks3(g: DiameterGraph, s: int) -> Optional[Tuple[List[int], Tuple[int, int, int]]]:
    """Find a K_{s,3}: a vertex triple with at least s common neighbors.

    Returns:
        Optional[Tuple[List[int], Tuple[int, int, int]]]: (s common neighbors, the triple), or None
    """
    if s < 1:
        raise InvalidInputError(f"s must be positive, got {s}")
    for i, j, k in combinations(range(g.n), 3):
        common = g.rows[i] & g.rows[j] & g.rows[k]
        if common.bit_count() >= s:
            return bits_to_list(common)[:s], (i, j, k)
    return None


def kst_condition(n: int, e: Union[int, Fraction], s: int) -> bool:
    """Edge-density condition forcing a K_{s,3}, evaluated exactly.

    With c = e/n^2 the condition 2cn(2cn-1)(2cn-2) > (s-1)(n-1)(n-2) is
    multiplied through by n^3.
    """
    if n < 3:
        raise InvalidInputError(f"n must be at least 3, got {n}")
    e = Fraction(e)
    if e < 0 or e > Fraction(n * (n - 1), 2):
        raise InvalidInputError(f"Edge count {e} is outside [0, n(n-1)/2]")
    return 2 * e * (2 * e - n) * (2 * e - 2 * n) > (s - 1) * (n - 1) * (n - 2) * n ** 3


@dataclass
class TriangleBound:
    triangles: int
    bound: Fraction
    effective_bound: Fraction
    secondary_bound: Fraction
    ok: bool
    applicable: bool


def triangle_bound_check(g: DiameterGraph) -> TriangleBound:
    """Compare the triangle count with 4e/3 - 2n/3.

    Isolated vertices contribute negatively to the raw bound, so `ok` is decided
    against the bound over non-isolated vertices. `applicable` records whether
    g is a genuine diameter graph (built from points).
    """
    t = count_cliques(g, 3)
    e = g.edge_count
    n_active = sum(1 for v in range(g.n) if g.rows[v])
    bound = Fraction(4 * e, 3) - Fraction(2 * g.n, 3)
    effective = Fraction(4 * e, 3) - Fraction(2 * n_active, 3)
    secondary = Fraction(g.n * g.n, 3) + Fraction(2 * g.n, 3)
    return TriangleBound(t, bound, effective, secondary, t <= effective, g.source is not None)


def cliques_sharing_exactly(g: DiameterGraph, l: int, k: int) -> List[Tuple[Clique, Clique]]:
    """Unordered pairs of distinct l-cliques meeting in exactly k vertices."""
    cliques = enumerate_cliques(g, l)
    masks = [sum(1 << v for v in c) for c in cliques]
    pairs = []
    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            if (masks[i] & masks[j]).bit_count() == k:
                pairs.append((cliques[i], cliques[j]))
    return pairs


@dataclass
class CliqueClass:
    vertices: List[int]
    cliques: List[Clique]
    share_ok: bool


@dataclass
class CliquePartition:
    clique_size: int
    classes: List[CliqueClass]

    @property
    def all_share_ok(self) -> bool:
        return all(c.share_ok for c in self.classes)


def clique_equivalence_partition(g: DiameterGraph, l: int) -> CliquePartition:
    """Group l-cliques into components of the "share a vertex" relation.

    Each class reports its vertex union and whether every two of its cliques
    share at least two vertices.
    """
    if l < 2:
        raise InvalidInputError(f"Clique size must be at least 2, got {l}")
    cliques = enumerate_cliques(g, l)
    masks = [sum(1 << v for v in c) for c in cliques]
    H = nx.Graph()
    H.add_nodes_from(range(len(cliques)))
    H.add_edges_from((i, j) for i, j in combinations(range(len(cliques)), 2) if masks[i] & masks[j])
    classes = []
    for component in nx.connected_components(H):
        members = sorted(component)
        union = 0
        for i in members:
            union |= masks[i]
        share_ok = all((masks[i] & masks[j]).bit_count() >= 2 for i, j in combinations(members, 2))
        classes.append(CliqueClass(bits_to_list(union), [cliques[i] for i in members], share_ok))
    classes.sort(key=lambda c: c.vertices)
    return CliquePartition(l, classes)
