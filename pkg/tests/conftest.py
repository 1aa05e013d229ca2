from typing import List, Sequence

import pytest

from src.graph.core import Graph, delete_vertices
from src.graph.generators import gnp, largest_component, fixture_graph
from src.graph.io import save_graph
from src.graph.paths import Path


def ids(graph: Graph, labels: str) -> Path:
    """Vertex ids of whitespace-separated labels, e.g. ``ids(g1, "a b c")``."""
    return tuple(graph.vertex(label) for label in labels.split())


def labels(graph: Graph, path: Sequence[int]) -> List[str]:
    return graph.path_labels(path)


def random_corpus(count: int, max_n: int = 12, first_seed: int = 0) -> List[Graph]:
    """Largest components of seeded G(n, p) samples, n in 4..max_n, p in {0.2, 0.35, 0.5}."""
    probabilities = (0.2, 0.35, 0.5)
    corpus = []
    for seed in range(first_seed, first_seed + count):
        n = 4 + seed % (max_n - 3)
        corpus.append(largest_component(gnp(n, probabilities[seed % 3], seed)))
    return corpus


@pytest.fixture
def g1() -> Graph:
    return fixture_graph("g1")


@pytest.fixture
def g1_minus_d(g1) -> Graph:
    return delete_vertices(g1, [g1.vertex("d")])


@pytest.fixture
def g2() -> Graph:
    return fixture_graph("g2")


@pytest.fixture
def g3() -> Graph:
    return fixture_graph("g3")


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph to an edge-list file and return its path."""
    def write(graph: Graph, name: str = "graph.txt") -> str:
        path = tmp_path / name
        save_graph(graph, path)
        return str(path)

    return write
