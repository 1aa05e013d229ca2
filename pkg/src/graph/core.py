"""Immutable undirected simple graph over dense integer vertex ids."""

from bisect import bisect_left
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from src.core.exceptions import GraphConstructionException, UnknownVertexException
from src.core.logger import get_logger

logger = get_logger(__name__)

Edge = Tuple[str, str]


class Graph:
    """Undirected simple graph with sorted adjacency lists and a label table.

    Vertices are ``0..n-1``; labels only matter at the I/O boundary.
    Instances are never mutated after construction.
    """

    __slots__ = ("_adjacency", "_labels", "_index", "_edge_count")

    def __init__(self, adjacency: Sequence[Sequence[int]], labels: Sequence[str]):
        if len(adjacency) != len(labels):
            raise GraphConstructionException("Adjacency and label table sizes differ")
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        self._labels: Tuple[str, ...] = tuple(labels)
        self._index: Dict[str, int] = {label: v for v, label in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise GraphConstructionException("Duplicate vertex labels")
        degree_sum = 0
        for u, nbrs in enumerate(self._adjacency):
            for v in nbrs:
                if v == u:
                    raise GraphConstructionException(f"Self-loop on vertex '{self._labels[u]}'")
                if not self.has_edge(v, u):
                    raise GraphConstructionException(
                        f"Asymmetric adjacency between '{self._labels[u]}' and '{self._labels[v]}'"
                    )
            degree_sum += len(nbrs)
        self._edge_count = degree_sum // 2

    @property
    def n(self) -> int:
        return len(self._adjacency)

    @property
    def m(self) -> int:
        return self._edge_count

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def vertices(self) -> range:
        return range(len(self._adjacency))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> List[Tuple[int, int]]:
        """Each edge once, as ``(u, v)`` with ``u < v``."""
        return [(u, v) for u, nbrs in enumerate(self._adjacency) for v in nbrs if u < v]

    def label(self, v: int) -> str:
        self.require_vertex(v)
        return self._labels[v]

    def vertex(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexException(f"Unknown vertex label '{label}'")

    def require_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._adjacency):
            raise UnknownVertexException(f"Vertex id {v} is not in a graph with {self.n} vertices")

    def path_labels(self, path: Iterable[int]) -> List[str]:
        return [self._labels[v] for v in path]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges: Iterable[Edge], isolated: Iterable[str] = ()) -> Graph:
    """Build a graph from label pairs.

    Duplicate and reversed mentions collapse to one edge. Vertex ids follow
    first appearance, edges before isolated declarations.

    Raises:
        GraphConstructionException: on a self-loop or an empty label
    """
    index: Dict[str, int] = {}
    labels: List[str] = []
    neighbor_sets: List[Set[int]] = []

    def intern(label: str) -> int:
        if not isinstance(label, str) or not label:
            raise GraphConstructionException(f"Vertex labels must be non-empty strings, got {label!r}")
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
            neighbor_sets.append(set())
        return index[label]

    for a, b in edges:
        if a == b:
            raise GraphConstructionException(f"Self-loop on vertex '{a}'")
        u, v = intern(a), intern(b)
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    for label in isolated:
        intern(label)

    graph = Graph(neighbor_sets, labels)
    logger.debug(f"Built {graph!r}")
    return graph


def delete_vertices(graph: Graph, removed: Iterable[int]) -> Graph:
    """Induced subgraph on the vertices not in ``removed``.

    Survivors are renumbered densely in their original order; labels are kept.
    """
    gone = set(removed)
    for v in gone:
        graph.require_vertex(v)
    if not gone:
        return graph
    keep = [v for v in graph.vertices() if v not in gone]
    new_id = {v: i for i, v in enumerate(keep)}
    adjacency = [[new_id[w] for w in graph.neighbors(v) if w in new_id] for v in keep]
    return Graph(adjacency, [graph.labels[v] for v in keep])


def induced_subgraph(graph: Graph, kept: Iterable[int]) -> Graph:
    kept_set = set(kept)
    return delete_vertices(graph, [v for v in graph.vertices() if v not in kept_set])
