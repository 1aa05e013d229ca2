import pytest

from src.core.exceptions import DisconnectedGraphException, PreconditionException
from src.core.enums import RecognitionMode, Verdict
from src.graph.bfs import diameter
from src.graph.core import build_graph
from src.graph.generators import cycle_graph, path_graph, spider_graph
from src.graph.paths import validate_counterexample, validate_witness
from src.recognition.asteroidal import find_asteroidal_triple, is_asteroidal_triple
from src.recognition.dominating import dominating_diameter_from
from src.recognition.k_dominating import k_dominating_diameter_from
from src.recognition.laminar import is_1_laminar, is_k_laminar, laminar_index, laminar_index_small
from src.recognition.strongly import is_strongly_k_laminar, strongly_laminar_index
from tests.conftest import ids, labels


def assert_witness(graph, outcome):
    assert outcome.verdict == Verdict.YES
    validate_witness(graph, outcome.witness, outcome.k, diameter(graph))
    assert outcome.source == outcome.witness[0]


class TestDominatingSearch:
    def test_g1_from_a(self, g1):
        path = dominating_diameter_from(g1, g1.vertex("a"))
        assert labels(g1, path) == ["a", "b", "c", "d", "f"]
        validate_witness(g1, path, 1, 4)

    def test_g1_minus_d_from_a(self, g1_minus_d):
        assert dominating_diameter_from(g1_minus_d, g1_minus_d.vertex("a")) is None

    def test_path_graph_is_its_own_witness(self):
        graph = path_graph(5)
        assert dominating_diameter_from(graph, 0) == (0, 1, 2, 3, 4)

    def test_source_outside_max_ecc(self, g1):
        with pytest.raises(PreconditionException, match="not in MaxEcc"):
            dominating_diameter_from(g1, g1.vertex("c"))

    def test_invariant_check(self, g2):
        path = dominating_diameter_from(g2, g2.vertex("a"), check_invariants=True)
        validate_witness(g2, path, 1, 4)

    def test_disconnected(self):
        graph = build_graph([("a", "b"), ("c", "d")])
        with pytest.raises(DisconnectedGraphException):
            dominating_diameter_from(graph, 0, diameter=1)


class TestKDominatingSearch:
    def test_spider_three_legs(self):
        spider = spider_graph(3, 2)
        path = k_dominating_diameter_from(spider, spider.vertex("l1_2"), 2)
        validate_witness(spider, path, 2, 4)

    def test_g1_minus_d(self, g1_minus_d):
        path = k_dominating_diameter_from(g1_minus_d, g1_minus_d.vertex("a"), 2)
        validate_witness(g1_minus_d, path, 2, 4)

    def test_eight_cycle(self):
        cycle = cycle_graph(8)
        for v in cycle.vertices():
            validate_witness(cycle, k_dominating_diameter_from(cycle, v, 2), 2, 4)

    def test_leaf_at_window_edge(self):
        # y2 is only covered by the path vertex exactly k levels below it
        graph = build_graph([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"),
                             ("5", "6"), ("6", "7"), ("3", "y1"), ("y1", "y2")])
        path = k_dominating_diameter_from(graph, graph.vertex("0"), 2)
        assert labels(graph, path) == ["0", "1", "2", "3", "4", "5", "6", "7"]

    @pytest.mark.parametrize("k", [0, 1, 4, 5])
    def test_k_outside_range(self, g1, k):
        with pytest.raises(PreconditionException):
            k_dominating_diameter_from(g1, g1.vertex("a"), k)


class TestKLaminar:
    def test_g1_is_1_laminar(self, g1):
        assert_witness(g1, is_1_laminar(g1))

    def test_g1_minus_d_is_not_1_laminar(self, g1_minus_d):
        outcome = is_1_laminar(g1_minus_d)
        assert outcome.verdict == Verdict.NO
        assert outcome.witness is None

    def test_g1_minus_d_is_2_laminar(self, g1_minus_d):
        assert_witness(g1_minus_d, is_k_laminar(g1_minus_d, 2))

    def test_g2_is_1_laminar(self, g2):
        assert_witness(g2, is_1_laminar(g2))

    def test_path_is_0_laminar(self):
        outcome = is_k_laminar(path_graph(5), 0)
        assert outcome.witness == (0, 1, 2, 3, 4)

    def test_cycle_is_not_0_laminar(self):
        assert not is_k_laminar(cycle_graph(6), 0).holds

    @pytest.mark.parametrize("name", ["g1", "g2", "g3"])
    def test_diameter_laminar(self, request, name):
        graph = request.getfixturevalue(name)
        assert_witness(graph, is_k_laminar(graph, diameter(graph)))
        assert_witness(graph, is_k_laminar(graph, diameter(graph) + 3))

    def test_single_vertex(self):
        outcome = is_k_laminar(path_graph(1), 0)
        assert outcome.witness == (0,)
        assert is_strongly_k_laminar(path_graph(1), 0).holds

    def test_negative_k(self, g1):
        with pytest.raises(PreconditionException):
            is_k_laminar(g1, -1)
        with pytest.raises(PreconditionException):
            is_strongly_k_laminar(g1, -1)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphException):
            is_k_laminar(build_graph([("a", "b"), ("c", "d")]), 1)


class TestStronglyLaminar:
    def test_g3_strongly_1(self, g3):
        outcome = is_strongly_k_laminar(g3, 1)
        assert outcome.holds
        assert outcome.mode == RecognitionMode.STRONGLY

    def test_g2_counterexample(self, g2):
        outcome = is_strongly_k_laminar(g2, 1)
        assert outcome.verdict == Verdict.NO
        found = outcome.counterexample
        assert g2.label(found.center) == "g"
        assert labels(g2, found.path) == ["a", "b", "c", "d", "e"]
        validate_counterexample(g2, found.center, found.path, 1, 4)

    def test_g1_not_strongly_1(self, g1):
        found = is_strongly_k_laminar(g1, 1).counterexample
        validate_counterexample(g1, found.center, found.path, 1, 4)

    @pytest.mark.parametrize("name", ["g1", "g2", "g3"])
    def test_strongly_at_diameter(self, request, name):
        graph = request.getfixturevalue(name)
        assert is_strongly_k_laminar(graph, diameter(graph)).holds


class TestIndices:
    def test_strongly_indices(self, g1, g2, g3, g1_minus_d):
        assert strongly_laminar_index(g3) == 1
        assert strongly_laminar_index(g2) == 2
        assert strongly_laminar_index(g1) == 2
        assert strongly_laminar_index(g1_minus_d) == 2
        assert strongly_laminar_index(path_graph(7)) == 0

    def test_laminar_indices(self, g1, g2, g1_minus_d):
        assert laminar_index(g1) == 1
        assert laminar_index(g2) == 1
        assert laminar_index(g1_minus_d) == 2
        assert laminar_index(path_graph(1)) == 0

    def test_laminar_index_cap(self, g1_minus_d):
        capped = laminar_index_small(g1_minus_d, 1)
        assert capped.exceeded
        assert laminar_index_small(g1_minus_d, 3).index == 2


class TestAsteroidalTriples:
    def test_known_triples(self, g1, g3):
        assert is_asteroidal_triple(g1, *ids(g1, "a f h"))
        assert is_asteroidal_triple(g3, *ids(g3, "g i d"))
        assert find_asteroidal_triple(g1) is not None
        assert is_asteroidal_triple(g3, *find_asteroidal_triple(g3))

    def test_g2_is_at_free(self, g2):
        assert find_asteroidal_triple(g2) is None

    def test_adjacent_vertices_are_no_triple(self, g1):
        assert not is_asteroidal_triple(g1, *ids(g1, "a b h"))
        assert not is_asteroidal_triple(g1, *ids(g1, "a a h"))

    def test_paths_are_at_free(self):
        assert find_asteroidal_triple(path_graph(8)) is None
