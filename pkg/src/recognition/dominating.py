"""Dominating diametral path search from one source (modified BFS over FEASIBLE edges)."""

from collections import deque
from typing import Deque, Dict, Optional, Set, Tuple

from src.core.exceptions import DisconnectedGraphException, PreconditionException
from src.core.logger import get_logger
from src.graph.bfs import BfsLayers, bfs, diameter as graph_diameter
from src.graph.core import Graph
from src.graph.paths import Path
from src.schemas.config import config

logger = get_logger(__name__)

DirectedEdge = Tuple[int, int]


def source_layers(graph: Graph, source: int, diameter: Optional[int]) -> Tuple[BfsLayers, int]:
    """BFS from ``source`` after checking that it has maximum eccentricity."""
    graph.require_vertex(source)
    if diameter is None:
        diameter = graph_diameter(graph)
    layers = bfs(graph, source)
    if layers.reached != graph.n:
        raise DisconnectedGraphException()
    if layers.eccentricity != diameter:
        raise PreconditionException(
            f"Source '{graph.label(source)}' has eccentricity {layers.eccentricity}, "
            f"not the diameter {diameter}: it is not in MaxEcc"
        )
    return layers, diameter


def _unwind(feasible: Dict[DirectedEdge, Optional[int]], u: int, v: int) -> Path:
    path = [v, u]
    edge = (u, v)
    while True:
        previous = feasible[edge]
        if previous is None:
            break
        path.append(previous)
        edge = (previous, edge[0])
    path.reverse()
    return tuple(path)


def _assert_prefix_dominates(graph: Graph, layers: BfsLayers, prefix: Path) -> None:
    covered: Set[int] = set(prefix)
    for p in prefix:
        covered.update(graph.neighbors(p))
    last = len(prefix) - 1
    for layer in layers.layers[:last]:
        assert covered.issuperset(layer), (
            f"FEASIBLE prefix {graph.path_labels(prefix)} leaves part of an earlier layer undominated"
        )


def dominating_diameter_from(
    graph: Graph,
    source: int,
    *,
    diameter: Optional[int] = None,
    check_invariants: Optional[bool] = None,
) -> Optional[Path]:
    """Find a 1-dominating diametral path starting at ``source``.

    Args:
        graph: connected host graph
        source: a vertex of MaxEcc(graph)
        diameter: diameter of ``graph`` when already known
        check_invariants: assert the queue invariant on every dequeued edge

    Returns:
        The path from ``source``, or ``None`` when no such path starts there.

    Raises:
        PreconditionException: ``source`` is not of maximum eccentricity
    """
    layers, diameter = source_layers(graph, source, diameter)
    if diameter == 0:
        return (source,)
    if check_invariants is None:
        check_invariants = config.check_invariants

    level = layers.levels
    layer_sets = [frozenset(layer) for layer in layers.layers]
    same = [frozenset(nbrs) for nbrs in layers.same]
    up = [frozenset(nbrs) for nbrs in layers.up]
    down = [frozenset(nbrs) for nbrs in layers.down]

    # FEASIBLE edge -> the predecessor vertex that justified it (None for edges out of the source)
    feasible: Dict[DirectedEdge, Optional[int]] = {}
    queue: Deque[int] = deque()
    queued: Set[int] = set()
    for v in layers.up[source]:
        feasible[(source, v)] = None
        queue.append(v)
        queued.add(v)

    while queue:
        v = queue.popleft()
        h = level[v]
        for u in layers.down[v]:
            if (u, v) not in feasible:
                continue
            if check_invariants:
                _assert_prefix_dominates(graph, layers, _unwind(feasible, u, v))
            missing = layer_sets[h].difference(same[v], up[u], (v,))
            if h == diameter:
                if not missing:
                    path = _unwind(feasible, u, v)
                    logger.debug(f"Dominating diametral path from '{graph.label(source)}': {graph.path_labels(path)}")
                    return path
                continue
            for w in layers.up[v]:
                if missing <= down[w]:
                    feasible.setdefault((v, w), u)
                    if w not in queued:
                        queued.add(w)
                        queue.append(w)

    logger.debug(f"No dominating diametral path starts at '{graph.label(source)}'")
    return None

