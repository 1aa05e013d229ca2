"""Satisfiability against laminarity of the gadget graph, checked by exhaustion."""

from typing import Dict, Optional, Sequence, Tuple

from src.core.enums import RoleKind
from src.core.exceptions import ContractViolationException, SizeGuardException
from src.core.logger import get_logger
from src.graph.bfs import distance_profile, is_connected
from src.oracle.brute_force import is_k_laminar_bf
from src.recognition.laminar import is_k_laminar
from src.reduction.cnf import brute_force_sat, evaluate
from src.reduction.construction import build_reduction, padded_variable_count
from src.schemas.config import config
from src.schemas.reduction import CnfFormula, EquivalenceReport, ReductionInstance

logger = get_logger(__name__)


def assignment_from_witness(instance: ReductionInstance, path: Sequence[int]) -> Tuple[bool, ...]:
    """Variable i is true iff the path passes through X_i; padding variables are dropped.

    Raises:
        ContractViolationException: the path visits both X_i and Xbar_i, or neither
    """
    chosen: Dict[int, bool] = {}
    for v in path:
        role = instance.roles[v]
        if role.kind not in (RoleKind.POS_LITERAL, RoleKind.NEG_LITERAL):
            continue
        variable, value = role.indices[0], role.kind == RoleKind.POS_LITERAL
        if chosen.get(variable, value) != value:
            raise ContractViolationException(f"Path visits both X{variable} and Xbar{variable}")
        chosen[variable] = value
    skipped = [i for i in range(1, instance.n_padded + 1) if i not in chosen]
    if skipped:
        raise ContractViolationException(f"Path visits no literal of variables {skipped}")
    return tuple(chosen[i] for i in range(1, instance.formula.variable_count + 1))


def verify_equivalence(formula: CnfFormula, *, max_variables: Optional[int] = None) -> EquivalenceReport:
    """Compare brute-force satisfiability with k_target-laminarity of the gadget graph.

    Laminarity comes from the diametral path oracle; the fast recognizer is
    run as well while k_target stays small. A disconnected gadget graph
    (empty clause) is not laminar.

    Raises:
        SizeGuardException: padded variable count above the limit
        ReductionException: formula without clauses
    """
    limit = config.reduction_max_variables if max_variables is None else max_variables
    n_padded = padded_variable_count(formula.variable_count)
    if n_padded > limit:
        raise SizeGuardException(f"Equivalence check refuses {n_padded} padded variables (limit {limit})")

    instance = build_reduction(formula)
    graph, k = instance.graph, instance.k_target
    satisfying = brute_force_sat(formula)
    report = dict(
        n_padded=n_padded,
        k_target=k,
        vertex_count=graph.n,
        satisfiable=satisfying is not None,
        assignment=list(satisfying) if satisfying is not None else None,
    )

    if not is_connected(graph):
        logger.info("Gadget graph is disconnected, so it is not laminar")
        return EquivalenceReport(laminar=False, **report)

    profile = distance_profile(graph)
    outcome = is_k_laminar_bf(graph, k, max_vertices=config.reduction_oracle_max_vertices)
    fast = None
    if k <= config.reduction_fast_max_k:
        fast = is_k_laminar(graph, k, profile).holds

    witness_assignment = None
    satisfies = None
    if outcome.witness is not None:
        witness_assignment = assignment_from_witness(instance, outcome.witness)
        satisfies = evaluate(formula, witness_assignment)

    result = EquivalenceReport(
        diameter=profile.diameter,
        laminar=outcome.holds,
        fast_laminar=fast,
        witness=graph.path_labels(outcome.witness) if outcome.witness is not None else None,
        witness_assignment=list(witness_assignment) if witness_assignment is not None else None,
        witness_assignment_satisfies=satisfies,
        **report,
    )
    if result.agree:
        logger.info(f"Equivalence holds: satisfiable={result.satisfiable}, {k}-laminar={result.laminar}")
    else:
        logger.warning(f"Equivalence broken: {result.model_dump()}")
    return result
