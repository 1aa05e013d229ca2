from src.commands.base import run_command, summarize
from src.core.enums import CommandName, ExitCode, Verdict
from src.core.logger import get_logger
from src.graph.bfs import is_connected
from src.graph.io import save_graph
from src.reduction.cnf import load_cnf
from src.reduction.construction import certify_diameter, save_roles
from src.schemas.command import CommandPayload, CommandResult
from src.services.reduction_service import ReductionService

logger = get_logger(__name__)


def roles_path(graph_file: str) -> str:
    return f"{graph_file}.roles"


async def cmd_reduce(
    cnf_file: str,
    out: str,
    service: ReductionService,
    verify: bool = False,
    strict: bool = False,
) -> CommandResult:
    """Build the gadget graph of a CNF file, write it with its roles sidecar, optionally verify."""
    async def body() -> CommandResult:
        formula = load_cnf(cnf_file, strict=strict)
        instance = await service.reduce(formula)
        roles = await service.validate(instance)
        save_graph(instance.graph, out)
        save_roles(instance, roles_path(out))
        logger.info(f"Wrote {instance.graph!r} to {out}")

        diameter = None
        details = {
            "n_padded": instance.n_padded,
            "k_target": instance.k_target,
            "roles_file": roles_path(out),
            "roles": roles.model_dump(mode="json"),
        }
        if is_connected(instance.graph):
            certificate = certify_diameter(instance)
            diameter = certificate.value
            details["diameter"] = certificate.model_dump(mode="json")

        exit_code = ExitCode.HOLDS if roles.valid else ExitCode.DOES_NOT_HOLD
        verdict, witness = None, None
        if verify:
            report = await service.verify(formula)
            verdict = Verdict.YES if report.laminar else Verdict.NO
            witness = report.witness
            details["equivalence"] = report.model_dump(mode="json")
            if not report.agree:
                exit_code = ExitCode.DOES_NOT_HOLD

        payload = CommandPayload(
            command=CommandName.REDUCE,
            graph=summarize(instance.graph, diameter),
            verdict=verdict,
            witness=witness,
            details=details,
        )
        return CommandResult(exit_code=exit_code, payload=payload)

    return await run_command(CommandName.REDUCE, body)
