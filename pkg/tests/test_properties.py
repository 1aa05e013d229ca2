import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from src.graph.bfs import bfs, closed_k_neighborhood, diameter, distance_profile, k_sphere, multi_source_levels
from src.graph.core import Graph, build_graph, delete_vertices
from src.graph.io import read_edge_list, write_edge_list
from src.oracle.brute_force import enumerate_diametral_paths, is_k_laminar_bf, is_strongly_k_laminar_bf
from src.recognition.laminar import is_k_laminar
from src.recognition.strongly import is_strongly_k_laminar


@st.composite
def connected_graphs(draw: st.DrawFn, max_n: int = 9) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(min_value=0, max_value=v - 1)), v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges.update(draw(st.lists(st.sampled_from(pairs), max_size=2 * n)))
    return build_graph([(str(u), str(v)) for u, v in sorted(edges)], isolated=[str(v) for v in range(n)])


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(graph.vertices())
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


@given(connected_graphs())
def test_diameter_matches_networkx(graph):
    assert diameter(graph) == nx.diameter(to_networkx(graph))


@given(connected_graphs())
def test_radius_and_diameter_bounds(graph):
    profile = distance_profile(graph)
    assert profile.radius <= profile.diameter <= 2 * profile.radius


@given(connected_graphs(), st.integers(min_value=0, max_value=4))
def test_ball_is_truncated_bfs(graph, k):
    levels = bfs(graph, 0).levels
    assert closed_k_neighborhood(graph, 0, k) == {v for v in graph.vertices() if levels[v] <= k}
    assert multi_source_levels(graph, [0], limit=k) == [h if h <= k else -1 for h in levels]


@given(connected_graphs())
def test_edge_list_round_trip_keeps_distances(graph):
    again = read_edge_list(write_edge_list(graph))
    assert (again.n, again.m, diameter(again)) == (graph.n, graph.m, diameter(graph))


@given(connected_graphs(), st.data())
def test_deletion_keeps_induced_edges(graph, data):
    removed = data.draw(st.sets(st.sampled_from(list(graph.vertices()))))
    reduced = delete_vertices(graph, removed)
    kept = [v for v in graph.vertices() if v not in removed]
    assert reduced.n == len(kept)
    assert reduced.m == sum(1 for u, v in graph.edges() if u not in removed and v not in removed)
    assert list(reduced.labels) == [graph.label(v) for v in kept]


@given(connected_graphs(), st.data())
def test_deletion_never_shortens_distances(graph, data):
    removed = data.draw(st.sets(st.sampled_from(list(graph.vertices()))))
    reduced = delete_vertices(graph, removed)
    kept = [v for v in graph.vertices() if v not in removed]
    for i, u in enumerate(kept):
        before = bfs(graph, u).levels
        after = bfs(reduced, i).levels
        for j, v in enumerate(kept):
            if after[j] >= 0:
                assert after[j] >= before[v]


@given(connected_graphs(), st.data())
def test_layers_partition_neighborhoods(graph, data):
    layers = bfs(graph, data.draw(st.sampled_from(list(graph.vertices()))))
    level = layers.levels
    for u, v in graph.edges():
        assert abs(level[u] - level[v]) <= 1
    for v in graph.vertices():
        down, same, up = layers.down[v], layers.same[v], layers.up[v]
        assert sorted(down + same + up) == list(graph.neighbors(v))
        assert all(level[w] == level[v] - 1 for w in down)
        assert all(level[w] == level[v] for w in same)
        assert all(level[w] == level[v] + 1 for w in up)
        for group in (down, same, up):
            assert list(group) == sorted(group, key=layers.order.__getitem__)


@given(connected_graphs(), st.integers(min_value=0, max_value=5))
def test_ball_grows_by_one_sphere(graph, k):
    for x in graph.vertices():
        assert closed_k_neighborhood(graph, x, k) == closed_k_neighborhood(graph, x, k - 1) | k_sphere(graph, x, k)


@settings(max_examples=60)
@given(connected_graphs(), st.integers(min_value=0, max_value=3))
def test_recognizers_agree_with_oracle(graph, k):
    assert is_k_laminar(graph, k).verdict == is_k_laminar_bf(graph, k).verdict
    assert is_strongly_k_laminar(graph, k).verdict == is_strongly_k_laminar_bf(graph, k).verdict


@settings(max_examples=60)
@given(connected_graphs())
def test_diametral_path_endpoints_have_max_eccentricity(graph):
    profile = distance_profile(graph)
    for path in enumerate_diametral_paths(graph, profile=profile).paths:
        assert profile.eccentricities[path[0]] == profile.diameter
        assert profile.eccentricities[path[-1]] == profile.diameter
