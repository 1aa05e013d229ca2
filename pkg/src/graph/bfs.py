"""BFS layering and the distance queries built on it.

Every quantity here is recomputed by BFS on demand; no all-pairs matrix is kept.
"""

from collections import deque
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from src.core.exceptions import DisconnectedGraphException
from src.graph.core import Graph

UNREACHABLE = None


class BfsLayers:
    """One-source BFS result.

    ``layers[i]`` is the i-th neighborhood of the source in visit order.
    For a reached vertex v at level h, ``down[v]``, ``same[v]`` and ``up[v]``
    hold N(v) ∩ L_{h-1}, N(v) ∩ L_h and N(v) ∩ L_{h+1}, each sorted by
    visit order.
    """

    __slots__ = ("source", "_level", "order", "parent", "layers", "down", "same", "up")

    def __init__(self, graph: Graph, source: int):
        graph.require_vertex(source)
        n = graph.n
        level = [-1] * n
        order = [-1] * n
        parent = [-1] * n
        level[source] = 0
        order[source] = 0
        visited = [source]
        queue = deque([source])
        while queue:
            u = queue.popleft()
            next_level = level[u] + 1
            for w in graph.neighbors(u):
                if level[w] < 0:
                    level[w] = next_level
                    order[w] = len(visited)
                    parent[w] = u
                    visited.append(w)
                    queue.append(w)

        layers: List[List[int]] = []
        for v in visited:
            if level[v] == len(layers):
                layers.append([])
            layers[level[v]].append(v)

        down: List[Tuple[int, ...]] = [()] * n
        same: List[Tuple[int, ...]] = [()] * n
        up: List[Tuple[int, ...]] = [()] * n
        for v in visited:
            h = level[v]
            below, beside, above = [], [], []
            for w in sorted(graph.neighbors(v), key=order.__getitem__):
                lw = level[w]
                if lw < h:
                    below.append(w)
                elif lw == h:
                    beside.append(w)
                else:
                    above.append(w)
            down[v], same[v], up[v] = tuple(below), tuple(beside), tuple(above)

        self.source = source
        self._level = level
        self.order = order
        self.parent = parent
        self.layers: Tuple[Tuple[int, ...], ...] = tuple(tuple(layer) for layer in layers)
        self.down = down
        self.same = same
        self.up = up

    def level(self, v: int) -> Optional[int]:
        """Distance from the source, or ``None`` when unreachable."""
        h = self._level[v]
        return h if h >= 0 else UNREACHABLE

    @property
    def levels(self) -> List[int]:
        """Raw level array, ``-1`` for unreachable vertices."""
        return self._level

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    @property
    def reached(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def path_to(self, v: int) -> Tuple[int, ...]:
        """Shortest path from the source to ``v`` along BFS-tree parents."""
        if self._level[v] < 0:
            return ()
        path = [v]
        while path[-1] != self.source:
            path.append(self.parent[path[-1]])
        path.reverse()
        return tuple(path)


def bfs(graph: Graph, source: int) -> BfsLayers:
    return BfsLayers(graph, source)


def distance(graph: Graph, x: int, y: int) -> Optional[int]:
    """Shortest-path length, ``None`` when y is unreachable from x."""
    graph.require_vertex(y)
    return bfs(graph, x).level(y)


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return bfs(graph, 0).reached == graph.n


def connected_components(graph: Graph) -> List[Tuple[int, ...]]:
    seen = [False] * graph.n
    components = []
    for v in graph.vertices():
        if not seen[v]:
            component = tuple(sorted(w for layer in bfs(graph, v).layers for w in layer))
            for w in component:
                seen[w] = True
            components.append(component)
    return components


def require_connected(graph: Graph) -> None:
    if graph.n == 0:
        raise DisconnectedGraphException("Graph has no vertices")
    if not is_connected(graph):
        raise DisconnectedGraphException(
            f"Graph with {graph.n} vertices has {len(connected_components(graph))} connected components"
        )


def eccentricity(graph: Graph, x: int) -> int:
    layers = bfs(graph, x)
    if layers.reached != graph.n:
        raise DisconnectedGraphException(f"Eccentricity of '{graph.label(x)}' is undefined: graph is not connected")
    return layers.eccentricity


def eccentricities(graph: Graph) -> List[int]:
    """Eccentricity of every vertex, by n BFS passes."""
    require_connected(graph)
    return [bfs(graph, v).eccentricity for v in graph.vertices()]


def diameter(graph: Graph) -> int:
    return max(eccentricities(graph))


def radius(graph: Graph) -> int:
    return min(eccentricities(graph))


def max_ecc_set(graph: Graph) -> Tuple[int, ...]:
    """Vertices of maximum eccentricity, in id order."""
    ecc = eccentricities(graph)
    top = max(ecc)
    return tuple(v for v in graph.vertices() if ecc[v] == top)


def closed_k_neighborhood(graph: Graph, x: int, k: int) -> FrozenSet[int]:
    """N^k[x]: vertices at distance at most k, by truncated BFS."""
    graph.require_vertex(x)
    if k < 0:
        return frozenset()
    reached: Set[int] = {x}
    frontier = [x]
    for _ in range(k):
        next_frontier = []
        for u in frontier:
            for w in graph.neighbors(u):
                if w not in reached:
                    reached.add(w)
                    next_frontier.append(w)
        if not next_frontier:
            break
        frontier = next_frontier
    return frozenset(reached)


def k_sphere(graph: Graph, x: int, k: int) -> FrozenSet[int]:
    """N^k(x): vertices at distance exactly k."""
    if k < 0:
        return frozenset()
    layers = bfs(graph, x).layers
    return frozenset(layers[k]) if k < len(layers) else frozenset()


def multi_source_levels(graph: Graph, sources: Sequence[int], limit: Optional[int] = None) -> List[int]:
    """Distance of every vertex to the nearest source, ``-1`` beyond ``limit`` or unreachable."""
    level = [-1] * graph.n
    queue = deque()
    for s in sources:
        if level[s] < 0:
            level[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        if limit is not None and level[u] >= limit:
            continue
        for w in graph.neighbors(u):
            if level[w] < 0:
                level[w] = level[u] + 1
                queue.append(w)
    return level


class DistanceProfile:
    """Eccentricities of a connected graph with its diameter and MaxEcc set."""

    __slots__ = ("eccentricities", "diameter", "radius", "max_ecc")

    def __init__(self, graph: Graph):
        self.eccentricities = eccentricities(graph)
        self.diameter = max(self.eccentricities)
        self.radius = min(self.eccentricities)
        self.max_ecc = tuple(v for v in graph.vertices() if self.eccentricities[v] == self.diameter)


def distance_profile(graph: Graph) -> DistanceProfile:
    return DistanceProfile(graph)
