"""Asteroidal triples by component labelling of G minus N[x]."""

from itertools import combinations
from typing import List, Optional, Tuple

from src.graph.bfs import connected_components
from src.graph.core import Graph, delete_vertices

Triple = Tuple[int, int, int]


def avoiding_components(graph: Graph, x: int) -> List[int]:
    """Component index of each vertex in G minus N[x]; -1 for vertices of N[x]."""
    blocked = set(graph.neighbors(x))
    blocked.add(x)
    survivors = [v for v in graph.vertices() if v not in blocked]
    component = [-1] * graph.n
    for index, members in enumerate(connected_components(delete_vertices(graph, blocked))):
        for v in members:
            component[survivors[v]] = index
    return component


def _joined(component: List[int], a: int, b: int) -> bool:
    return component[a] >= 0 and component[a] == component[b]


def is_asteroidal_triple(graph: Graph, x: int, y: int, z: int) -> bool:
    """Each pair of x, y, z is joined by a path avoiding the closed neighborhood of the third."""
    if len({x, y, z}) != 3:
        return False
    for v in (x, y, z):
        graph.require_vertex(v)
    return (
        _joined(avoiding_components(graph, x), y, z)
        and _joined(avoiding_components(graph, y), x, z)
        and _joined(avoiding_components(graph, z), x, y)
    )


def find_asteroidal_triple(graph: Graph) -> Optional[Triple]:
    """First asteroidal triple in lexicographic id order, or ``None`` for AT-free graphs."""
    components = [avoiding_components(graph, x) for x in graph.vertices()]
    for x, y, z in combinations(graph.vertices(), 3):
        if (
            _joined(components[x], y, z)
            and _joined(components[y], x, z)
            and _joined(components[z], x, y)
        ):
            return (x, y, z)
    return None
