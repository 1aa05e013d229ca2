from typing import Optional

from src.services.recognition_service import RecognitionService
from src.services.reduction_service import ReductionService


def get_recognition_service(max_workers: Optional[int] = None) -> RecognitionService:
    """Dependency injection for RecognitionService.

    Args:
        max_workers: Concurrent per-source searches, config default when None

    Returns:
        RecognitionService: Configured recognition service instance
    """
    return RecognitionService(max_workers)


def get_reduction_service(max_workers: Optional[int] = None) -> ReductionService:
    """Dependency injection for ReductionService.

    Returns:
        ReductionService: Configured reduction service instance
    """
    return ReductionService(max_workers)
