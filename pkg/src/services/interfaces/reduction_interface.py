from abc import ABC, abstractmethod
from typing import List

from src.schemas.reduction import CnfFormula, EquivalenceReport, ReductionInstance, RolesReport


class ReductionServiceInterface(ABC):
    """Abstract interface for 3SAT reduction services"""

    @abstractmethod
    async def reduce(self, formula: CnfFormula) -> ReductionInstance:
        """Build the gadget graph of a formula"""
        pass

    @abstractmethod
    async def validate(self, instance: ReductionInstance) -> RolesReport:
        """Structural check of a built instance"""
        pass

    @abstractmethod
    async def verify(self, formula: CnfFormula) -> EquivalenceReport:
        """Compare satisfiability with laminarity of the gadget graph"""
        pass

    @abstractmethod
    async def verify_batch(self, formulas: List[CnfFormula]) -> List[EquivalenceReport]:
        """Verify a corpus of formulas"""
        pass
