from typing import Optional

from src.commands.base import run_command, summarize
from src.core.enums import CommandName, ExitCode, Verdict
from src.graph.generators import generate
from src.graph.io import load_graph, write_edge_list
from src.graph.paths import validate_counterexample, validate_witness
from src.core.logger import get_logger
from src.schemas.command import CommandPayload, CommandResult, CounterexamplePayload
from src.services.recognition_service import RecognitionService

logger = get_logger(__name__)


async def cmd_stats(graph_file: str, service: RecognitionService) -> CommandResult:
    """Report n, m, diameter, radius and MaxEcc of a connected graph."""
    async def body() -> CommandResult:
        graph = load_graph(graph_file)
        stats = await service.stats(graph)
        return CommandResult(
            exit_code=ExitCode.HOLDS,
            payload=CommandPayload(
                command=CommandName.STATS,
                graph=summarize(graph, stats.diameter),
                details={"radius": stats.radius, "max_ecc": stats.max_ecc},
            ),
        )

    return await run_command(CommandName.STATS, body)


async def cmd_recognize(
    graph_file: str,
    k: int,
    service: RecognitionService,
    strongly: bool = False,
    oracle: bool = False,
) -> CommandResult:
    """Decide (strongly) k-laminarity; evidence is re-validated before it is printed."""
    async def body() -> CommandResult:
        graph = load_graph(graph_file)
        outcome = await service.recognize(graph, k, strongly=strongly, oracle=oracle)
        payload = CommandPayload(
            command=CommandName.RECOGNIZE,
            graph=summarize(graph, outcome.diameter),
            verdict=outcome.verdict,
            details={"k": k, "mode": outcome.mode, "oracle": oracle},
        )
        if outcome.witness is not None:
            validate_witness(graph, outcome.witness, k, outcome.diameter)
            payload.witness = graph.path_labels(outcome.witness)
            payload.details["source"] = graph.label(outcome.witness[0])
        if outcome.counterexample is not None:
            found = outcome.counterexample
            validate_counterexample(graph, found.center, found.path, k, outcome.diameter)
            payload.counterexample = CounterexamplePayload(
                center=graph.label(found.center), path=graph.path_labels(found.path)
            )
        exit_code = ExitCode.HOLDS if outcome.holds else ExitCode.DOES_NOT_HOLD
        return CommandResult(exit_code=exit_code, payload=payload)

    return await run_command(CommandName.RECOGNIZE, body)


async def cmd_index(
    graph_file: str,
    service: RecognitionService,
    strongly: bool = False,
    k_max: Optional[int] = None,
    oracle: bool = False,
) -> CommandResult:
    """Laminar or strongly laminar index; ``exceeded`` above ``k_max``."""
    async def body() -> CommandResult:
        graph = load_graph(graph_file)
        stats = await service.stats(graph)
        result = await service.index(graph, strongly=strongly, k_max=k_max, oracle=oracle)
        return CommandResult(
            exit_code=ExitCode.DOES_NOT_HOLD if result.exceeded else ExitCode.HOLDS,
            payload=CommandPayload(
                command=CommandName.INDEX,
                graph=summarize(graph, stats.diameter),
                details={
                    "mode": result.mode,
                    "index": "exceeded" if result.exceeded else result.index,
                    "k_max": k_max,
                },
            ),
        )

    return await run_command(CommandName.INDEX, body)


async def cmd_generate(name: str, seed: Optional[int] = None) -> CommandResult:
    """Edge list of a named fixture or family on standard output."""
    async def body() -> CommandResult:
        graph = generate(name, seed)
        logger.info(f"Generated {graph!r} from '{name}'")
        return CommandResult(exit_code=ExitCode.HOLDS, text=write_edge_list(graph))

    return await run_command(CommandName.GENERATE, body)


async def cmd_at(graph_file: str, service: RecognitionService) -> CommandResult:
    """Exit 0 with an asteroidal triple, 1 when the graph is AT-free."""
    async def body() -> CommandResult:
        graph = load_graph(graph_file)
        stats = await service.stats(graph)
        triple = await service.asteroidal_triple(graph)
        payload = CommandPayload(
            command=CommandName.AT,
            graph=summarize(graph, stats.diameter),
            verdict=Verdict.YES if triple is not None else Verdict.NO,
            details={"triple": graph.path_labels(triple) if triple is not None else None},
        )
        return CommandResult(exit_code=ExitCode.HOLDS if triple is not None else ExitCode.DOES_NOT_HOLD, payload=payload)

    return await run_command(CommandName.AT, body)
