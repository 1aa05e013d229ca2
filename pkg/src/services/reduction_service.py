import asyncio
from typing import List, Optional

from src.core.logger import get_logger
from src.reduction.construction import build_reduction, validate_roles
from src.reduction.equivalence import verify_equivalence
from src.schemas.config import config
from src.schemas.reduction import CnfFormula, EquivalenceReport, ReductionInstance, RolesReport
from src.services.interfaces.reduction_interface import ReductionServiceInterface

logger = get_logger(__name__)


class ReductionService(ReductionServiceInterface):
    """3SAT reduction service; batch verification runs one formula per worker thread"""

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers or config.max_workers

    async def reduce(self, formula: CnfFormula) -> ReductionInstance:
        return await asyncio.to_thread(build_reduction, formula)

    async def validate(self, instance: ReductionInstance) -> RolesReport:
        report = await asyncio.to_thread(validate_roles, instance)
        for problem in report.problems:
            logger.error(f"Reduction structure: {problem}")
        return report

    async def verify(self, formula: CnfFormula) -> EquivalenceReport:
        return await asyncio.to_thread(verify_equivalence, formula)

    async def verify_batch(self, formulas: List[CnfFormula]) -> List[EquivalenceReport]:
        semaphore = asyncio.Semaphore(self.max_workers)

        async def run(formula: CnfFormula) -> EquivalenceReport:
            async with semaphore:
                return await self.verify(formula)

        reports = await asyncio.gather(*(run(formula) for formula in formulas))
        broken = sum(1 for report in reports if not report.agree)
        logger.info(f"Verified {len(reports)} formulas, {broken} disagreements")
        return list(reports)
