"""Strongly k-laminar test by deleting closed k-neighborhoods."""

from typing import Dict, List, Optional, Sequence

from src.core.enums import RecognitionMode, Verdict
from src.core.exceptions import PreconditionException
from src.core.logger import get_logger
from src.graph.bfs import DistanceProfile, bfs, closed_k_neighborhood, distance_profile
from src.graph.core import Graph, delete_vertices
from src.schemas.recognition import Counterexample, RecognitionOutcome

logger = get_logger(__name__)


class StronglyContext:
    """Distances from every MaxEcc vertex, shared by all deletion centers."""

    __slots__ = ("profile", "distances")

    def __init__(self, graph: Graph, profile: Optional[DistanceProfile] = None):
        self.profile = profile or distance_profile(graph)
        self.distances: Dict[int, List[int]] = {a: bfs(graph, a).levels for a in self.profile.max_ecc}


def counterexample_at(graph: Graph, center: int, k: int, context: StronglyContext) -> Optional[Counterexample]:
    """A diametral path of ``graph`` inside G minus N^k[center], if one exists.

    A pair (a, b) with d(a, b) = diameter in both G and G minus N^k[center]
    gives such a path: a shortest a-b path of the reduced graph is then a
    shortest path of G as well.
    """
    diameter = context.profile.diameter
    removed = closed_k_neighborhood(graph, center, k)
    if len(removed) == graph.n:
        return None
    reduced = delete_vertices(graph, removed)
    original: Sequence[int] = [v for v in graph.vertices() if v not in removed]
    renumbered = {v: i for i, v in enumerate(original)}

    for a in context.profile.max_ecc:
        if a in removed:
            continue
        layers = bfs(reduced, renumbered[a])
        if len(layers.layers) <= diameter:
            continue
        for b_reduced in layers.layers[diameter]:
            b = original[b_reduced]
            if context.distances[a][b] == diameter:
                path = tuple(original[w] for w in layers.path_to(b_reduced))
                return Counterexample(center=center, path=path)
    return None


def is_strongly_k_laminar(graph: Graph, k: int, context: Optional[StronglyContext] = None) -> RecognitionOutcome:
    """Every diametral path is k-dominating.

    Raises:
        DisconnectedGraphException: graph not connected
        PreconditionException: negative k
    """
    if k < 0:
        raise PreconditionException(f"k must be non-negative, got {k}")
    context = context or StronglyContext(graph)
    diameter = context.profile.diameter
    for x in graph.vertices():
        found = counterexample_at(graph, x, k, context)
        if found is not None:
            logger.debug(
                f"Not strongly {k}-laminar: {graph.path_labels(found.path)} avoids N^{k}['{graph.label(x)}']"
            )
            return RecognitionOutcome(
                verdict=Verdict.NO, k=k, mode=RecognitionMode.STRONGLY,
                diameter=diameter, counterexample=found,
            )
    return RecognitionOutcome(verdict=Verdict.YES, k=k, mode=RecognitionMode.STRONGLY, diameter=diameter)


def strongly_laminar_index(graph: Graph) -> int:
    """Smallest k with the strongly k-laminar property, by binary search over [0, diameter]."""
    context = StronglyContext(graph)
    low, high = 0, context.profile.diameter
    while low < high:
        middle = (low + high) // 2
        if is_strongly_k_laminar(graph, middle, context).holds:
            high = middle
        else:
            low = middle + 1
    return low
