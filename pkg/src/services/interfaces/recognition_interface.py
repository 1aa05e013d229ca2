from abc import ABC, abstractmethod
from typing import Optional

from src.graph.core import Graph
from src.recognition.asteroidal import Triple
from src.schemas.command import GraphStats
from src.schemas.recognition import IndexResult, RecognitionOutcome


class RecognitionServiceInterface(ABC):
    """Abstract interface for laminar recognition services"""

    @abstractmethod
    async def stats(self, graph: Graph) -> GraphStats:
        """Diameter, radius and MaxEcc of a connected graph"""
        pass

    @abstractmethod
    async def recognize(self, graph: Graph, k: int, strongly: bool = False, oracle: bool = False) -> RecognitionOutcome:
        """Decide (strongly) k-laminarity"""
        pass

    @abstractmethod
    async def index(self, graph: Graph, strongly: bool = False, k_max: Optional[int] = None, oracle: bool = False) -> IndexResult:
        """Laminar or strongly laminar index, capped by k_max"""
        pass

    @abstractmethod
    async def asteroidal_triple(self, graph: Graph) -> Optional[Triple]:
        """Some asteroidal triple, or None for AT-free graphs"""
        pass
