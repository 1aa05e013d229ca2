"""k-laminar recognition over all MaxEcc sources, and laminar indices."""

from typing import Callable, Optional

from src.core.enums import RecognitionMode, Verdict
from src.core.exceptions import PreconditionException
from src.core.logger import get_logger
from src.graph.bfs import DistanceProfile, bfs, distance_profile
from src.graph.core import Graph
from src.graph.paths import Path
from src.recognition.dominating import dominating_diameter_from
from src.recognition.k_dominating import BallCache, k_dominating_diameter_from
from src.schemas.recognition import IndexResult, RecognitionOutcome

logger = get_logger(__name__)

SourceSearch = Callable[[int], Optional[Path]]


def _outcome(k: int, profile: DistanceProfile, witness: Optional[Path]) -> RecognitionOutcome:
    if witness is None:
        return RecognitionOutcome(verdict=Verdict.NO, k=k, diameter=profile.diameter)
    return RecognitionOutcome(
        verdict=Verdict.YES, k=k, diameter=profile.diameter, witness=witness, source=witness[0]
    )


def any_diametral_path(graph: Graph, profile: DistanceProfile) -> Path:
    """A shortest path between the first MaxEcc vertex and its first farthest vertex."""
    layers = bfs(graph, profile.max_ecc[0])
    return layers.path_to(layers.layers[-1][0])


def spanning_diametral_path(graph: Graph, profile: DistanceProfile) -> Optional[Path]:
    """The 0-laminar case: a diametral path through every vertex exists iff all layers are singletons."""
    for s in profile.max_ecc:
        layers = bfs(graph, s)
        if all(len(layer) == 1 for layer in layers.layers):
            return tuple(layer[0] for layer in layers.layers)
    return None


def source_search(graph: Graph, k: int, profile: DistanceProfile) -> SourceSearch:
    """Per-source search for 1 <= k < diameter; each call is independent of the others."""
    if k == 1:
        return lambda s: dominating_diameter_from(graph, s, diameter=profile.diameter)
    balls = BallCache(graph, k)
    return lambda s: k_dominating_diameter_from(graph, s, k, diameter=profile.diameter, balls=balls)


def trivial_outcome(graph: Graph, k: int, profile: DistanceProfile) -> Optional[RecognitionOutcome]:
    """Answer the cases that need no per-source search, or ``None``."""
    if k < 0:
        raise PreconditionException(f"k must be non-negative, got {k}")
    if k >= profile.diameter:
        # every graph is diam(G)-laminar
        return _outcome(k, profile, any_diametral_path(graph, profile))
    if k == 0:
        return _outcome(k, profile, spanning_diametral_path(graph, profile))
    return None


def is_1_laminar(graph: Graph, profile: Optional[DistanceProfile] = None) -> RecognitionOutcome:
    profile = profile or distance_profile(graph)
    trivial = trivial_outcome(graph, 1, profile)
    if trivial is not None:
        return trivial
    search = source_search(graph, 1, profile)
    for s in profile.max_ecc:
        witness = search(s)
        if witness is not None:
            return _outcome(1, profile, witness)
    return _outcome(1, profile, None)


def is_k_laminar(graph: Graph, k: int, profile: Optional[DistanceProfile] = None) -> RecognitionOutcome:
    """Some diametral path is k-dominating.

    Raises:
        DisconnectedGraphException: graph not connected
        PreconditionException: negative k
    """
    if k < 0:
        raise PreconditionException(f"k must be non-negative, got {k}")
    profile = profile or distance_profile(graph)
    trivial = trivial_outcome(graph, k, profile)
    if trivial is not None:
        return trivial
    if k == 1:
        return is_1_laminar(graph, profile)
    search = source_search(graph, k, profile)
    for s in profile.max_ecc:
        witness = search(s)
        if witness is not None:
            return _outcome(k, profile, witness)
    logger.debug(f"{graph!r} is not {k}-laminar")
    return _outcome(k, profile, None)


def laminar_index_small(graph: Graph, k_max: Optional[int] = None) -> IndexResult:
    """Smallest k <= k_max with a k-dominating diametral path, by ascending scan.

    The scan stops at the diameter, where every graph is laminar; ``k_max=None``
    scans up to it.
    """
    if k_max is not None and k_max < 0:
        raise PreconditionException(f"k_max must be non-negative, got {k_max}")
    profile = distance_profile(graph)
    limit = profile.diameter if k_max is None else min(k_max, profile.diameter)
    for k in range(0, limit + 1):
        if is_k_laminar(graph, k, profile).holds:
            return IndexResult(mode=RecognitionMode.LAMINAR, index=k, k_max=k_max)
    return IndexResult(mode=RecognitionMode.LAMINAR, index=None, k_max=k_max)


def laminar_index(graph: Graph) -> int:
    return laminar_index_small(graph).index
