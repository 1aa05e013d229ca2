"""k-dominating diametral path search from one source, for fixed k >= 2.

States are partial shortest paths from the source reduced to their last 2k
vertices. A vertex of layer q can only be covered by path vertices at levels
q-k..q+k, so layer q is decided once the path reaches level q+k, and two
partial paths sharing their last 2k vertices have identical futures.
"""

from typing import Dict, FrozenSet, List, Optional, Tuple

from src.core.exceptions import PreconditionException
from src.core.logger import get_logger
from src.graph.bfs import closed_k_neighborhood
from src.graph.core import Graph
from src.graph.paths import Path
from src.recognition.dominating import source_layers

logger = get_logger(__name__)

State = Tuple[int, ...]


class BallCache(dict):
    """Lazily computed closed k-neighborhoods of one graph."""

    def __init__(self, graph: Graph, k: int):
        super().__init__()
        self.graph = graph
        self.k = k

    def __missing__(self, v: int) -> FrozenSet[int]:
        ball = closed_k_neighborhood(self.graph, v, self.k)
        self[v] = ball
        return ball


def _unwind(parent: Dict[State, Optional[State]], state: State) -> Path:
    path = [state[-1]]
    while True:
        state = parent[state]
        if state is None:
            break
        path.append(state[-1])
    path.reverse()
    return tuple(path)


def k_dominating_diameter_from(
    graph: Graph,
    source: int,
    k: int,
    *,
    diameter: Optional[int] = None,
    balls: Optional[BallCache] = None,
) -> Optional[Path]:
    """Find a k-dominating diametral path starting at ``source``.

    Layers 0..k are within k of the source and never checked. Extending a
    state to level t decides layer t-k with the window of levels t-2k..t;
    the states reaching the diameter level then sweep the remaining layers.

    Raises:
        PreconditionException: ``source`` not in MaxEcc, or k outside [2, diameter)
    """
    layers, diameter = source_layers(graph, source, diameter)
    if not 2 <= k < diameter:
        raise PreconditionException(f"k-dominating search needs 2 <= k < diameter, got k={k}, diameter={diameter}")
    if balls is None or balls.k != k:
        balls = BallCache(graph, k)

    layer_sets = [frozenset(layer) for layer in layers.layers]
    window = 2 * k
    root: State = (source,)
    parent: Dict[State, Optional[State]] = {root: None}
    frontier: List[State] = [root]

    for depth in range(1, diameter + 1):
        decided = depth - k
        successors: List[State] = []
        for state in frontier:
            missing = None
            if decided > k:
                missing = layer_sets[decided].difference(*(balls[u] for u in state))
            for w in layers.up[state[-1]]:
                if missing is not None and not missing <= balls[w]:
                    continue
                successor = (state + (w,))[-window:]
                if successor not in parent:
                    parent[successor] = state
                    successors.append(successor)
        frontier = successors
        logger.debug(f"Level {depth}: {len(frontier)} states from '{graph.label(source)}'")
        if not frontier:
            return None

    first_open = max(k + 1, diameter - k + 1)
    for state in frontier:
        covered = frozenset().union(*(balls[u] for u in state))
        if all(layer_sets[i] <= covered for i in range(first_open, diameter + 1)):
            path = _unwind(parent, state)
            logger.debug(f"{k}-dominating diametral path from '{graph.label(source)}': {graph.path_labels(path)}")
            return path
    return None
