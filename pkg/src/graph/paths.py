"""Paths as vertex-id tuples, and the checks applied to witnesses."""

from typing import Iterable, Optional, Sequence, Tuple

from src.core.exceptions import ContractViolationException
from src.graph.bfs import bfs, closed_k_neighborhood, multi_source_levels
from src.graph.core import Graph

Path = Tuple[int, ...]


def path_length(path: Sequence[int]) -> int:
    return len(path) - 1


def check_path(graph: Graph, path: Sequence[int]) -> None:
    """Raise unless ``path`` is a non-empty simple path of ``graph``."""
    if not path:
        raise ContractViolationException("Path is empty")
    for v in path:
        graph.require_vertex(v)
    if len(set(path)) != len(path):
        raise ContractViolationException(f"Path repeats a vertex: {graph.path_labels(path)}")
    for u, v in zip(path, path[1:]):
        if not graph.has_edge(u, v):
            raise ContractViolationException(
                f"'{graph.label(u)}' and '{graph.label(v)}' are consecutive on the path but not adjacent"
            )


def is_path(graph: Graph, path: Sequence[int]) -> bool:
    try:
        check_path(graph, path)
    except ContractViolationException:
        return False
    return True


def is_shortest_path(graph: Graph, path: Sequence[int]) -> bool:
    if not is_path(graph, path):
        return False
    return bfs(graph, path[0]).level(path[-1]) == path_length(path)


def domination_radius(graph: Graph, path: Iterable[int]) -> Optional[int]:
    """Largest distance from a vertex to the path, ``None`` if some vertex cannot reach it."""
    levels = multi_source_levels(graph, list(path))
    if min(levels, default=0) < 0:
        return None
    return max(levels, default=0)


def is_k_dominating(graph: Graph, path: Iterable[int], k: int) -> bool:
    """Every vertex within distance k of the path (truncated multi-source BFS)."""
    levels = multi_source_levels(graph, list(path), limit=k)
    return all(level >= 0 for level in levels)


def validate_witness(graph: Graph, path: Sequence[int], k: int, diameter: int) -> None:
    """Independent check of a k-dominating diametral path."""
    check_path(graph, path)
    if path_length(path) != diameter:
        raise ContractViolationException(
            f"Witness has length {path_length(path)}, diameter is {diameter}"
        )
    if not is_shortest_path(graph, path):
        raise ContractViolationException(f"Witness {graph.path_labels(path)} is not a shortest path")
    if not is_k_dominating(graph, path, k):
        raise ContractViolationException(f"Witness {graph.path_labels(path)} is not {k}-dominating")


def validate_counterexample(graph: Graph, center: int, path: Sequence[int], k: int, diameter: int) -> None:
    """Check a diametral path that avoids N^k[center]."""
    check_path(graph, path)
    if path_length(path) != diameter or not is_shortest_path(graph, path):
        raise ContractViolationException(f"Counterexample {graph.path_labels(path)} is not diametral")
    hit = closed_k_neighborhood(graph, center, k).intersection(path)
    if hit:
        raise ContractViolationException(
            f"Counterexample path meets N^{k}['{graph.label(center)}'] at {graph.path_labels(sorted(hit))}"
        )
