import time
from typing import Awaitable, Callable, Optional

from src.core.enums import CommandName, ExitCode
from src.core.exceptions import LaminarException
from src.core.logger import get_logger
from src.graph.core import Graph
from src.schemas.command import CommandPayload, CommandResult, GraphSummary

logger = get_logger(__name__)


def summarize(graph: Graph, diameter: Optional[int] = None) -> GraphSummary:
    return GraphSummary(n=graph.n, m=graph.m, diameter=diameter)


async def run_command(command: CommandName, body: Callable[[], Awaitable[CommandResult]]) -> CommandResult:
    """Run a command body, timing it and turning exceptions into exit codes.

    Toolkit exceptions carry their own exit code; anything else is logged
    and reported as an input error.
    """
    started = time.perf_counter()
    try:
        result = await body()
    except LaminarException as e:
        logger.error(f"{command} failed: {e.message}")
        result = CommandResult(
            exit_code=ExitCode(e.exit_code),
            payload=CommandPayload(command=command, error=e.message),
        )
    except Exception as e:
        logger.exception(f"Unexpected error in {command}: {e}")
        result = CommandResult(
            exit_code=ExitCode.USAGE_ERROR,
            payload=CommandPayload(command=command, error=f"Unexpected error: {e}"),
        )
    if result.payload is not None:
        result.payload.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    return result
