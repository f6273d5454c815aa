"""Tests for diameter graphs and their combinatorics"""
from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from diamgraph.core import graph as graph_mod
from diamgraph.core.geometry import PointSet
from diamgraph.utils.exceptions import DegenerateSetError, InvalidInputError, SizeCapError

pytestmark = pytest.mark.core


def _complete(n):
    return graph_mod.from_edges(n, list(combinations(range(n), 2)))

def _cycle(n):
    return graph_mod.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

def _naive_count(g, l):
    return sum(1 for c in combinations(range(g.n), l) if all(g.has_edge(u, v) for u, v in combinations(c, 2)))


def test_bit_helpers():
    """Test bitset iteration order"""
    assert graph_mod.bits_to_list(0b101001) == [0, 3, 5]
    assert graph_mod.bits_to_list(0) == []

def test_from_edges_rejects_loops():
    """Test loops and out-of-range vertices are invalid"""
    with pytest.raises(InvalidInputError):
        graph_mod.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidInputError):
        graph_mod.from_edges(3, [(0, 3)])

def test_graph_rejects_asymmetric_rows():
    """Test adjacency rows must be symmetric"""
    with pytest.raises(InvalidInputError):
        graph_mod.DiameterGraph(2, (0b10, 0))

def test_build_simplex(simplex):
    """Test the unit simplex has the complete graph as diameter graph"""
    g = graph_mod.build(simplex)
    assert g.n == 5 and g.edge_count == 10
    assert g.diam == pytest.approx(1.0, abs=1e-12)
    assert g.source is simplex
    assert graph_mod.clique_report(g).counts == {2: 10, 3: 10, 4: 5, 5: 1}

def test_build_pentagon(pentagon_star):
    """Test the pentagon with unit diagonals gives a 5-cycle of diameters"""
    g = graph_mod.build(pentagon_star)
    assert g.edge_count == 5
    assert graph_mod.degree_sequence(g) == [2] * 5
    assert g.edges() == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]

def test_build_square_diagonals():
    """Test only the two diagonals of a square are diameters"""
    g = graph_mod.build(PointSet.from_points([[0, 0], [1, 0], [1, 1], [0, 1]]))
    assert g.edges() == [(0, 2), (1, 3)]

def test_build_validates_epsilon_and_degeneracy():
    """Test the tolerance range and coincident points"""
    ps = PointSet.from_points([[0, 0], [1, 0]])
    with pytest.raises(InvalidInputError):
        graph_mod.build(ps, eps=0.01)
    with pytest.raises(DegenerateSetError):
        graph_mod.build(PointSet.from_points([[1, 1], [1, 1]]))

def test_build_is_scale_invariant(pentagon_star):
    """Test scaling a set does not change its diameter graph"""
    g = graph_mod.build(pentagon_star)
    assert graph_mod.build(pentagon_star.scaled(7.5)).edges() == g.edges()

def test_induced_subgraph(simplex):
    """Test relabeling and source tracking of induced subgraphs"""
    sub = graph_mod.induced_subgraph(graph_mod.build(simplex), [4, 1, 2])
    assert sub.n == 3 and sub.edge_count == 3
    assert np.allclose(sub.source.points[0], simplex.points[4])

def test_adjacency_matrix_and_networkx():
    """Test conversions agree with the edge list"""
    g = _cycle(5)
    mat = g.adjacency_matrix()
    assert mat.sum() == 10 and mat[0, 1] and not mat[0, 2]
    assert nx.is_isomorphic(graph_mod.to_networkx(g), nx.cycle_graph(5))
    assert not graph_mod.is_bipartite(g)
    assert graph_mod.is_bipartite(_cycle(6))

def test_count_cliques_complete():
    """Test clique counts of K_6 are binomial coefficients"""
    g = _complete(6)
    assert [graph_mod.count_cliques(g, l) for l in range(1, 7)] == [6, 15, 20, 15, 6, 1]
    assert graph_mod.count_cliques(g, 7) == 0
    with pytest.raises(InvalidInputError):
        graph_mod.count_cliques(g, 0)

def test_count_cliques_matches_naive_enumeration():
    """Test counting against brute force on random graphs"""
    rng = np.random.default_rng(2024)
    for trial in range(100):
        n = int(rng.integers(1, 11))
        G = nx.gnp_random_graph(n, float(rng.random()), seed=trial)
        g = graph_mod.from_edges(n, list(G.edges()))
        for l in range(1, 6):
            assert graph_mod.count_cliques(g, l) == _naive_count(g, l)
            assert len(graph_mod.enumerate_cliques(g, l)) == _naive_count(g, l)

def test_enumerate_cliques_is_lexicographic():
    """Test cliques are sorted tuples in lexicographic order"""
    assert graph_mod.enumerate_cliques(_complete(4), 3) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

def test_chromatic_number_small_graphs():
    """Test exact chromatic numbers of standard graphs"""
    assert graph_mod.chromatic_number(graph_mod.from_edges(3, [])) == 1
    assert graph_mod.chromatic_number(_cycle(6)) == 2
    assert graph_mod.chromatic_number(_cycle(5)) == 3
    assert graph_mod.chromatic_number(_complete(5)) == 5
    petersen = nx.petersen_graph()
    assert graph_mod.chromatic_number(graph_mod.from_edges(10, list(petersen.edges()))) == 3

def test_chromatic_number_matches_brute_force():
    """Test against trying every colouring on small random graphs"""
    from itertools import product
    rng = np.random.default_rng(5)
    for trial in range(20):
        n = int(rng.integers(2, 8))
        G = nx.gnp_random_graph(n, 0.5, seed=trial)
        g = graph_mod.from_edges(n, list(G.edges()))
        brute = next(k for k in range(1, n + 1)
                     if any(all(c[u] != c[v] for u, v in g.edges()) for c in product(range(k), repeat=n)))
        assert graph_mod.chromatic_number(g) == brute

def test_chromatic_number_cap():
    """Test the size cap is enforced"""
    with pytest.raises(SizeCapError) as excinfo:
        graph_mod.chromatic_number(graph_mod.from_edges(70, []), cap=64)
    assert excinfo.value.cap == 64

def test_odd_cycles():
    """Test chordless odd cycles of small graphs"""
    assert graph_mod.odd_cycles(_cycle(5)) == [[0, 1, 2, 3, 4]]
    assert graph_mod.odd_cycles(_cycle(6)) == []
    assert len(graph_mod.odd_cycles(_complete(4))) == 4
    with pytest.raises(SizeCapError):
        graph_mod.odd_cycles(graph_mod.from_edges(17, []))

def test_odd_cycles_pairwise_intersect():
    """Test two triangles sharing a vertex against two disjoint ones"""
    bowtie = graph_mod.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert graph_mod.odd_cycles_pairwise_intersect(bowtie)
    disjoint = graph_mod.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not graph_mod.odd_cycles_pairwise_intersect(disjoint)

def test_odd_cycles_through_chords():
    """Test a chorded 7-cycle leaves only its triangle"""
    g = graph_mod.from_edges(7, [(i, (i + 1) % 7) for i in range(7)] + [(0, 2)])
    cycles = graph_mod.odd_cycles(g)
    assert [0, 1, 2] in cycles
    assert graph_mod.odd_cycles_pairwise_intersect(g)

def test_kst_condition():
    """Test the exact density condition around n = 51, 52"""
    assert graph_mod.kst_condition(52, 676, 7)
    assert graph_mod.kst_condition(51, 651, 7)
    assert not graph_mod.kst_condition(51, Fraction(51 * 51, 4), 7)
    assert not graph_mod.kst_condition(51, 650, 7)
    with pytest.raises(InvalidInputError):
        graph_mod.kst_condition(5, 11, 7)

def test_find_Ks3():
    """Test K_{7,3} is found in the complete bipartite graph and not in a cycle"""
    edges = [(i, j) for i in range(3) for j in range(3, 10)]
    found = graph_mod.find_Ks3(graph_mod.from_edges(10, edges), 7)
    assert found == ([3, 4, 5, 6, 7, 8, 9], (0, 1, 2))
    assert graph_mod.find_Ks3(_cycle(8), 1) is None

def test_triangle_bound_check(simplex, pentagon_star):
    """Test the triangle bound is tight on the simplex"""
    check = graph_mod.triangle_bound_check(graph_mod.build(simplex))
    assert check.triangles == 10 and check.bound == 10 and check.ok and check.applicable
    assert graph_mod.triangle_bound_check(graph_mod.build(pentagon_star)).ok
    abstract = graph_mod.triangle_bound_check(_complete(4))
    assert not abstract.applicable

def test_triangle_bound_ignores_isolated_vertices():
    """Test isolated vertices do not lower the effective bound"""
    g = graph_mod.from_edges(6, [(0, 1), (1, 2), (0, 2)])
    check = graph_mod.triangle_bound_check(g)
    assert check.bound == Fraction(4 * 3, 3) - Fraction(12, 3)
    assert check.effective_bound == Fraction(2)
    assert check.triangles > check.bound and check.ok

def test_cliques_sharing_exactly(simplex):
    """Test every two 4-cliques of the simplex share three vertices"""
    g = graph_mod.build(simplex)
    assert graph_mod.cliques_sharing_exactly(g, 4, 1) == []
    assert len(graph_mod.cliques_sharing_exactly(g, 4, 3)) == 10

def test_clique_equivalence_partition(simplex):
    """Test the simplex forms a single class of five 4-cliques"""
    partition = graph_mod.clique_equivalence_partition(graph_mod.build(simplex), 4)
    assert len(partition.classes) == 1
    assert partition.classes[0].vertices == [0, 1, 2, 3, 4]
    assert len(partition.classes[0].cliques) == 5
    assert partition.all_share_ok

def test_clique_equivalence_partition_two_classes():
    """Test disjoint triangles form separate classes"""
    g = graph_mod.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    partition = graph_mod.clique_equivalence_partition(g, 3)
    assert [c.vertices for c in partition.classes] == [[0, 1, 2], [3, 4, 5]]

def _wheel(rim):
    spokes = [(0, i) for i in range(1, rim + 1)]
    return graph_mod.from_edges(rim + 1, spokes + [(i, i % rim + 1) for i in range(1, rim + 1)])

def test_wheel_odd_cycles():
    """Test W5 has five spoke triangles and its rim, all meeting pairwise"""
    g = _wheel(5)
    cycles = graph_mod.odd_cycles(g)
    assert len(cycles) == 6
    assert [1, 2, 3, 4, 5] in cycles
    assert sum(1 for c in cycles if len(c) == 3 and c[0] == 0) == 5
    assert graph_mod.odd_cycles_pairwise_intersect(g)
    assert graph_mod.chromatic_number(g) == 4

def test_wheel_plus_disjoint_triangle():
    """Test a triangle apart from W5 gives two disjoint odd cycles"""
    g = _wheel(5)
    extra = graph_mod.from_edges(9, list(g.edges()) + [(6, 7), (7, 8), (6, 8)])
    assert not graph_mod.odd_cycles_pairwise_intersect(extra)

@pytest.mark.parametrize("s", [1, 2])
def test_find_Ks3_in_six_cycle(s):
    """Test no vertex triple of C6 has a common neighbor"""
    assert graph_mod.find_Ks3(_cycle(6), s) is None

def test_find_Ks3_in_k33():
    """Test K_{3,3} holds a K_{2,3} and a K_{3,3} but no K_{4,3}"""
    g = graph_mod.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert graph_mod.find_Ks3(g, 2) == ([3, 4], (0, 1, 2))
    assert graph_mod.find_Ks3(g, 3) == ([3, 4, 5], (0, 1, 2))
    assert graph_mod.find_Ks3(g, 4) is None
