"""Exhaustive reference answers over the set of all diametral paths.

Only meant for small graphs: the number of diametral paths can grow
exponentially, so every entry point is guarded by a vertex limit and a
path cap.
"""

from typing import List, Optional

from src.core.enums import RecognitionMode, Verdict
from src.core.exceptions import EnumerationOverflowException, PreconditionException, SizeGuardException
from src.core.logger import get_logger
from src.graph.bfs import DistanceProfile, bfs, distance_profile, multi_source_levels
from src.graph.core import Graph
from src.graph.paths import Path, domination_radius
from src.schemas.config import config
from src.schemas.oracle import DiametralPathSet, PathDomination
from src.schemas.recognition import Counterexample, RecognitionOutcome

logger = get_logger(__name__)


def _check_size(graph: Graph, max_vertices: Optional[int]) -> None:
    limit = config.oracle_max_vertices if max_vertices is None else max_vertices
    if graph.n > limit:
        raise SizeGuardException(f"Brute-force oracle refuses a graph with {graph.n} vertices (limit {limit})")


def enumerate_diametral_paths(
    graph: Graph,
    cap: Optional[int] = None,
    *,
    max_vertices: Optional[int] = None,
    profile: Optional[DistanceProfile] = None,
) -> DiametralPathSet:
    """List every diametral path by backtracking BFS predecessor DAGs.

    For each MaxEcc pair a < b at distance diameter, every level-monotone
    route from b down to a is one shortest a-b path.

    Raises:
        SizeGuardException: more vertices than the oracle limit
        EnumerationOverflowException: more than ``cap`` paths
        DisconnectedGraphException: graph not connected
    """
    _check_size(graph, max_vertices)
    cap = config.oracle_path_cap if cap is None else cap
    profile = profile or distance_profile(graph)
    diameter = profile.diameter
    if diameter == 0:
        return DiametralPathSet(n=graph.n, m=graph.m, diameter=0, paths=((0,),))

    paths: List[Path] = []
    for a in profile.max_ecc:
        layers = bfs(graph, a)
        targets = [b for b in layers.layers[diameter] if b > a]
        for b in sorted(targets):
            # iterative DFS over (vertex, route from vertex back up to b)
            stack = [(b, (b,))]
            while stack:
                v, route = stack.pop()
                if v == a:
                    paths.append(tuple(reversed(route)))
                    if len(paths) > cap:
                        raise EnumerationOverflowException(
                            f"More than {cap} diametral paths in a graph with {graph.n} vertices"
                        )
                    continue
                for u in reversed(layers.down[v]):
                    stack.append((u, route + (u,)))

    paths.sort()
    logger.debug(f"{len(paths)} diametral paths of length {diameter} in {graph!r}")
    return DiametralPathSet(n=graph.n, m=graph.m, diameter=diameter, paths=tuple(paths))


def domination_profile(
    graph: Graph,
    *,
    cap: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> List[PathDomination]:
    """Domination radius of every diametral path."""
    enumerated = enumerate_diametral_paths(graph, cap, max_vertices=max_vertices)
    return [PathDomination(path=path, radius=domination_radius(graph, path)) for path in enumerated.paths]


def _check_k(k: int) -> None:
    if k < 0:
        raise PreconditionException(f"k must be non-negative, got {k}")


def is_k_laminar_bf(
    graph: Graph,
    k: int,
    *,
    cap: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> RecognitionOutcome:
    """Some enumerated diametral path is k-dominating."""
    _check_k(k)
    enumerated = enumerate_diametral_paths(graph, cap, max_vertices=max_vertices)
    for path in enumerated.paths:
        if domination_radius(graph, path) <= k:
            return RecognitionOutcome(
                verdict=Verdict.YES, k=k, diameter=enumerated.diameter, witness=path, source=path[0]
            )
    return RecognitionOutcome(verdict=Verdict.NO, k=k, diameter=enumerated.diameter)


def is_strongly_k_laminar_bf(
    graph: Graph,
    k: int,
    *,
    cap: Optional[int] = None,
    max_vertices: Optional[int] = None,
) -> RecognitionOutcome:
    """Every enumerated diametral path is k-dominating.

    The counterexample center is the first vertex farther than k from the
    offending path.
    """
    _check_k(k)
    enumerated = enumerate_diametral_paths(graph, cap, max_vertices=max_vertices)
    for path in enumerated.paths:
        levels = multi_source_levels(graph, path)
        far = [v for v in graph.vertices() if levels[v] > k]
        if far:
            return RecognitionOutcome(
                verdict=Verdict.NO, k=k, mode=RecognitionMode.STRONGLY, diameter=enumerated.diameter,
                counterexample=Counterexample(center=far[0], path=path),
            )
    return RecognitionOutcome(verdict=Verdict.YES, k=k, mode=RecognitionMode.STRONGLY, diameter=enumerated.diameter)


def laminar_index_bf(graph: Graph, *, cap: Optional[int] = None, max_vertices: Optional[int] = None) -> int:
    return min(entry.radius for entry in domination_profile(graph, cap=cap, max_vertices=max_vertices))


def strongly_laminar_index_bf(graph: Graph, *, cap: Optional[int] = None, max_vertices: Optional[int] = None) -> int:
    return max(entry.radius for entry in domination_profile(graph, cap=cap, max_vertices=max_vertices))
