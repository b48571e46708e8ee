import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from umlauf import graph_core as gc
from umlauf.graph_core import Graph, load_fixture

CLOSED = ["octahedron", "icosahedron", "torus_6x6", "torus_6x6_twist3"]


def _nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(G.vertices)
    g.add_edges_from(tuple(e) for e in G.edges)
    return g


def test_empty_graph_has_dimension_minus_one():
    assert gc.graph_dimension(Graph()) == -1
    assert gc.euler_characteristic(Graph()) == 0


def test_isolated_point_is_zero_dimensional():
    assert gc.point_dimension(Graph([1]), 1) == 0
    assert gc.graph_dimension(Graph([1, 2])) == 0


def test_path_and_cycle_are_one_dimensional():
    assert gc.graph_dimension(Graph(range(4), [(0, 1), (1, 2), (2, 3)])) == 1
    assert gc.graph_dimension(Graph(range(5), [(i, (i + 1) % 5) for i in range(5)])) == 1


def test_mixed_sphere_is_undefined():
    # a triangle with a pendant vertex: the apex sees an edge plus an isolated point
    G = Graph(range(4), [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert gc.point_dimension(G, 2) is None
    assert gc.graph_dimension(G) is None


@pytest.mark.parametrize("name,dim", [
    ("tetrahedron", 3), ("octahedron", 2), ("icosahedron", 2), ("cube", 1),
    ("dodecahedron", 1), ("wheel", 2), ("torus_6x6", 2),
])
def test_fixture_dimension(name, dim):
    assert gc.graph_dimension(load_fixture(name)) == dim


@pytest.mark.parametrize("name,chi", [
    ("tetrahedron", 2), ("octahedron", 2), ("icosahedron", 2), ("wheel", 1),
    ("annulus", 0), ("torus_6x6", 0), ("torus_6x6_twist3", 0),
])
def test_euler_characteristic(name, chi):
    # tetrahedron: 4 - 6 + 4 triangles (the solid is not counted)
    assert gc.euler_characteristic(load_fixture(name)) == chi


def test_faces_match_networkx_triangles():
    for name in ["tetrahedron", "octahedron", "icosahedron", "wheel", "annulus", "torus_6x6"]:
        G = load_fixture(name)
        tri = {frozenset(c) for c in nx.enumerate_all_cliques(_nx(G)) if len(c) == 3}
        assert gc.faces(G) == tri


def test_spheres_match_bfs():
    G = load_fixture("torus_6x6")
    g = _nx(G)
    for p in list(G)[:6]:
        dist = nx.single_source_shortest_path_length(g, p)
        for r in (1, 2, 3):
            s = gc.sphere_in_graph(G, p, r)
            assert set(s) == {q for q, d in dist.items() if d == r}


@pytest.mark.parametrize("name", CLOSED)
def test_closed_surface_face_edge_counts(name):
    G = load_fixture(name)
    f, e = len(gc.faces(G)), G.number_of_edges()
    assert 3 * f == 2 * e
    assert sum(gc.sphere_in_graph(G, p, 1).number_of_edges() for p in G) == 3 * f


@pytest.mark.parametrize("name,total", [
    ("octahedron", 12), ("icosahedron", 12), ("torus_6x6", 0), ("torus_6x6_twist3", 0),
    ("wheel", 6), ("annulus", 0),
])
def test_combinatorial_gauss_bonnet(name, total):
    G = load_fixture(name)
    assert gc.k1_total(G) == total == 6 * gc.euler_characteristic(G)


def test_octahedron_pointwise_k1():
    G = load_fixture("octahedron")
    assert all(gc.k1_curvature(G, p) == 2 for p in G)


def test_icosahedron_pointwise_k1():
    G = load_fixture("icosahedron")
    assert all(gc.k1_curvature(G, p) == 1 for p in G)


def test_cube_has_no_two_dimensional_points():
    G = load_fixture("cube")
    with pytest.raises(gc.NotTwoDimensionalPoint):
        gc.k1_total(G)


def test_wheel_classification():
    G = load_fixture("wheel")
    kinds = {p: gc.classify_point_generic(G, p) for p in G}
    assert kinds.pop("0,0") is gc.PointType.INTERIOR
    assert set(kinds.values()) == {gc.PointType.BOUNDARY}
    assert gc.k1_curvature(G, "0,0") == 0
    assert all(gc.k1_curvature(G, p) == 1 for p in kinds)


@pytest.mark.parametrize("name,cycles,cone_chi", [("wheel", 1, 2), ("annulus", 2, 2)])
def test_coning_boundaries_closes_surface(name, cycles, cone_chi):
    G = load_fixture(name)
    assert len(gc.boundary_cycles(G)) == cycles
    C = gc.cone_boundary_cycles(G)
    assert gc.euler_characteristic(C) == cone_chi
    assert gc.k1_total(C) == 6 * cone_chi


def test_boundary_cycles_in_walk_order():
    G = load_fixture("wheel")
    (walk,) = gc.boundary_cycles(G)
    assert len(walk) == 6
    for a, b in zip(walk, walk[1:] + walk[:1]):
        assert G.has_edge(a, b)


def test_boundary_not_cycles():
    # two triangles sharing only vertex 0: every point is a boundary point and
    # the boundary graph has a degree-4 vertex
    G = Graph(range(5), [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    assert all(gc.classify_point_generic(G, p) is gc.PointType.BOUNDARY for p in G)
    with pytest.raises(gc.BoundaryNotCycles):
        gc.boundary_cycles(G)


def test_parse_graph_rejects_garbage():
    with pytest.raises(ValueError):
        gc.parse_graph("1 2 3\n")
    G = gc.parse_graph("# c\nv 9\n1 2\n")
    assert set(G) == {1, 2, 9} and G.has_edge(2, 1)


def test_graph_basics():
    G = Graph(range(4), [(0, 1), (2, 3)])
    assert not G.is_connected()
    assert sorted(map(sorted, G.components())) == [[0, 1], [2, 3]]
    assert G == Graph([3, 2, 1, 0], [(1, 0), (3, 2)])
    assert hash(G) == hash(Graph(range(4), [(3, 2), (0, 1)]))
    with pytest.raises(ValueError):
        Graph([0], [(0, 0)])


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["octahedron", "icosahedron", "wheel", "annulus"]), st.randoms())
def test_invariants_survive_relabelling(name, rnd):
    G = load_fixture(name)
    labels = list(range(len(G)))
    rnd.shuffle(labels)
    m = dict(zip(sorted(G, key=repr), labels))
    H = Graph(m.values(), [tuple(m[v] for v in e) for e in G.edges])
    assert gc.euler_characteristic(H) == gc.euler_characteristic(G)
    assert gc.graph_dimension(H) == gc.graph_dimension(G)
    assert gc.k1_total(H) == gc.k1_total(G)
    assert sorted(gc.k1_curvature(H, m[p]) for p in G) == sorted(gc.k1_curvature(G, p) for p in G)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n)
    .map(lambda es: (n, [e for e in es if e[0] != e[1]]))))
def test_random_graphs_euler_matches_networkx(data):
    n, edges = data
    G = Graph(range(n), edges)
    g = _nx(G)
    tri = sum(nx.triangles(g).values()) // 3
    assert gc.euler_characteristic(G) == n - g.number_of_edges() + tri
    # dimension of the clique K_n is n - 1
    K = Graph(range(n), itertools.combinations(range(n), 2))
    assert gc.graph_dimension(K) == n - 1
