import argparse
import asyncio
import sys
from typing import List, Optional

from src.commands.graph_commands import cmd_at, cmd_generate, cmd_index, cmd_recognize, cmd_stats
from src.commands.reduction_commands import cmd_reduce
from src.core.dependencies import get_recognition_service, get_reduction_service
from src.core.enums import CommandName, LogLevel
from src.core.logger import get_logger, setup_logging
from src.schemas.command import CommandResult

logger = get_logger(__name__)


def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laminar",
        description="Recognize k-laminar graphs, compute laminar indices and build 3SAT gadget graphs.",
    )
    parser.add_argument("--log-level", choices=[level.value for level in LogLevel], default=None,
                        help="Diagnostics level on standard error")
    parser.add_argument("--workers", type=int, default=None, help="Concurrent per-source searches")
    commands = parser.add_subparsers(dest="command", required=True)

    stats = commands.add_parser(CommandName.STATS.value, help="n, m, diameter, radius and MaxEcc")
    stats.add_argument("graph_file")

    recognize = commands.add_parser(CommandName.RECOGNIZE.value, help="Decide (strongly) k-laminarity")
    recognize.add_argument("graph_file")
    recognize.add_argument("--k", type=int, required=True)
    recognize.add_argument("--strongly", action="store_true", help="Every diametral path must be k-dominating")
    recognize.add_argument("--oracle", action="store_true", help="Use exhaustive diametral path enumeration")

    index = commands.add_parser(CommandName.INDEX.value, help="Laminar or strongly laminar index")
    index.add_argument("graph_file")
    index.add_argument("--strongly", action="store_true")
    index.add_argument("--max", dest="k_max", type=_non_negative, default=None, help="Report 'exceeded' above this k")
    index.add_argument("--oracle", action="store_true")

    generate = commands.add_parser(CommandName.GENERATE.value, help="Edge list of a fixture or family")
    generate.add_argument("name", help="g1..g5, path:N, cycle:N, spider:LEGS:LEN, pathpower:N:R or gnp:N:P[:SEED]")
    generate.add_argument("--seed", type=int, default=None, help="Seed for a gnp name without one")

    reduce = commands.add_parser(CommandName.REDUCE.value, help="Gadget graph of a DIMACS CNF formula")
    reduce.add_argument("cnf_file")
    reduce.add_argument("--out", required=True, help="Edge-list file; roles go to <out>.roles")
    reduce.add_argument("--verify", action="store_true", help="Check satisfiability against laminarity")
    reduce.add_argument("--strict", action="store_true", help="Reject empty clauses and clauses over 3 literals")

    at = commands.add_parser(CommandName.AT.value, help="Find an asteroidal triple")
    at.add_argument("graph_file")
    return parser


async def dispatch(args: argparse.Namespace) -> CommandResult:
    command = CommandName(args.command)
    if command == CommandName.GENERATE:
        return await cmd_generate(args.name, args.seed)
    if command == CommandName.REDUCE:
        service = get_reduction_service(args.workers)
        return await cmd_reduce(args.cnf_file, args.out, service, verify=args.verify, strict=args.strict)

    service = get_recognition_service(args.workers)
    if command == CommandName.STATS:
        return await cmd_stats(args.graph_file, service)
    if command == CommandName.RECOGNIZE:
        return await cmd_recognize(args.graph_file, args.k, service, strongly=args.strongly, oracle=args.oracle)
    if command == CommandName.INDEX:
        return await cmd_index(args.graph_file, service, strongly=args.strongly, k_max=args.k_max, oracle=args.oracle)
    return await cmd_at(args.graph_file, service)


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command, print its output and return the exit code.

    argparse itself exits with status 2 on a usage error.
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    result = asyncio.run(dispatch(args))
    logger.debug(f"{args.command} finished with exit code {int(result.exit_code)}")
    output = result.render()
    if output:
        sys.stdout.write(output if output.endswith("\n") else output + "\n")
    return int(result.exit_code)
