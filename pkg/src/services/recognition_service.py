import asyncio
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from src.core.enums import RecognitionMode, Verdict
from src.core.exceptions import PreconditionException
from src.core.logger import get_logger
from src.graph.bfs import DistanceProfile, distance_profile
from src.graph.core import Graph
from src.oracle.brute_force import (
    is_k_laminar_bf,
    is_strongly_k_laminar_bf,
    laminar_index_bf,
    strongly_laminar_index_bf,
)
from src.recognition.asteroidal import Triple, find_asteroidal_triple
from src.recognition.laminar import laminar_index_small, source_search, trivial_outcome
from src.recognition.strongly import StronglyContext, counterexample_at, strongly_laminar_index
from src.schemas.command import GraphStats
from src.schemas.config import config
from src.schemas.recognition import IndexResult, RecognitionOutcome
from src.services.interfaces.recognition_interface import RecognitionServiceInterface

logger = get_logger(__name__)

T = TypeVar("T")


class RecognitionService(RecognitionServiceInterface):
    """Recognition service running per-source searches on worker threads.

    Searches from distinct MaxEcc sources (or deletion centers) are
    independent; results merge by first success in vertex-id order so the
    answer does not depend on scheduling.
    """

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers or config.max_workers

    async def _first_success(self, items: Sequence[int], search: Callable[[int], Optional[T]]) -> Optional[Tuple[int, T]]:
        semaphore = asyncio.Semaphore(self.max_workers)

        async def run(item: int) -> Optional[T]:
            async with semaphore:
                return await asyncio.to_thread(search, item)

        results: List[Optional[T]] = await asyncio.gather(*(run(item) for item in items))
        for item, result in zip(items, results):
            if result is not None:
                return item, result
        return None

    async def stats(self, graph: Graph) -> GraphStats:
        profile = await asyncio.to_thread(distance_profile, graph)
        return GraphStats(
            n=graph.n,
            m=graph.m,
            diameter=profile.diameter,
            radius=profile.radius,
            max_ecc=graph.path_labels(profile.max_ecc),
        )

    async def _laminar(self, graph: Graph, k: int, profile: DistanceProfile) -> RecognitionOutcome:
        trivial = trivial_outcome(graph, k, profile)
        if trivial is not None:
            return trivial
        found = await self._first_success(profile.max_ecc, source_search(graph, k, profile))
        if found is None:
            return RecognitionOutcome(verdict=Verdict.NO, k=k, diameter=profile.diameter)
        source, witness = found
        return RecognitionOutcome(
            verdict=Verdict.YES, k=k, diameter=profile.diameter, witness=witness, source=source
        )

    async def _strongly(self, graph: Graph, k: int, context: StronglyContext) -> RecognitionOutcome:
        found = await self._first_success(
            list(graph.vertices()), lambda x: counterexample_at(graph, x, k, context)
        )
        diameter = context.profile.diameter
        if found is None:
            return RecognitionOutcome(verdict=Verdict.YES, k=k, mode=RecognitionMode.STRONGLY, diameter=diameter)
        return RecognitionOutcome(
            verdict=Verdict.NO, k=k, mode=RecognitionMode.STRONGLY, diameter=diameter, counterexample=found[1]
        )

    async def recognize(self, graph: Graph, k: int, strongly: bool = False, oracle: bool = False) -> RecognitionOutcome:
        """Decide k-laminarity, or strongly k-laminarity with ``strongly``.

        Raises:
            PreconditionException: negative k
            DisconnectedGraphException: graph not connected
            SizeGuardException: ``oracle`` on a graph above the oracle limit
        """
        if k < 0:
            raise PreconditionException(f"k must be non-negative, got {k}")
        mode = RecognitionMode.STRONGLY if strongly else RecognitionMode.LAMINAR
        logger.info(f"Recognizing {mode} {k}-laminarity of {graph!r}{' with the oracle' if oracle else ''}")
        if oracle:
            check = is_strongly_k_laminar_bf if strongly else is_k_laminar_bf
            return await asyncio.to_thread(check, graph, k)
        if strongly:
            context = await asyncio.to_thread(StronglyContext, graph)
            return await self._strongly(graph, k, context)
        profile = await asyncio.to_thread(distance_profile, graph)
        return await self._laminar(graph, k, profile)

    async def index(self, graph: Graph, strongly: bool = False, k_max: Optional[int] = None, oracle: bool = False) -> IndexResult:
        """Smallest k with the property; ``exceeded`` when it is above ``k_max``.

        The strongly index comes from binary search, the plain index from the
        ascending scan of ``laminar_index_small``.
        """
        if k_max is not None and k_max < 0:
            raise PreconditionException(f"k_max must be non-negative, got {k_max}")
        mode = RecognitionMode.STRONGLY if strongly else RecognitionMode.LAMINAR

        if not (oracle or strongly):
            result = await asyncio.to_thread(laminar_index_small, graph, k_max)
            logger.info(f"Laminar index of {graph!r}: {result.index}")
            return result

        if oracle:
            compute = strongly_laminar_index_bf if strongly else laminar_index_bf
        else:
            compute = strongly_laminar_index
        value = await asyncio.to_thread(compute, graph)
        if k_max is not None and value > k_max:
            return IndexResult(mode=mode, index=None, k_max=k_max)
        return IndexResult(mode=mode, index=value, k_max=k_max)

    async def asteroidal_triple(self, graph: Graph) -> Optional[Triple]:
        return await asyncio.to_thread(find_asteroidal_triple, graph)
