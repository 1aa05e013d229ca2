"""Gadget graph of a CNF formula.

Layout for n (padded, even) variables:

    V1 - ... - Vn = {X1, Xbar1} = ... = {Xn, Xbarn} = V(n+1) - ... - V(2n)

Consecutive literal pairs are completely joined and X_i is adjacent to
Xbar_i, so every shortest V1-V2n path picks one literal per variable. Each
clause gets a hub joined to the vertex of each of its literals by a chain
of n/2 + 1 edges.
"""

from collections import Counter
from pathlib import Path
from typing import Dict, List, Tuple, Union

from src.core.enums import RoleKind
from src.core.exceptions import ContractViolationException, ReductionException
from src.core.logger import get_logger
from src.graph.bfs import bfs, distance_profile
from src.graph.core import build_graph
from src.schemas.reduction import (
    CnfFormula,
    DiameterCertificate,
    ReductionInstance,
    RolesReport,
    VertexRole,
    role_label,
)

logger = get_logger(__name__)

MIN_PADDED_VARIABLES = 4


def padded_variable_count(variables: int) -> int:
    return max(MIN_PADDED_VARIABLES, variables + variables % 2)


def build_reduction(formula: CnfFormula) -> ReductionInstance:
    """Build the gadget graph with the role of every vertex.

    Raises:
        ReductionException: formula without clauses
    """
    if not formula.clauses:
        raise ReductionException("Cannot reduce an empty formula")
    n = padded_variable_count(formula.variable_count)
    half = n // 2
    roles: Dict[str, VertexRole] = {}

    def vertex(kind: RoleKind, *indices: int) -> str:
        label = role_label(kind, indices)
        roles.setdefault(label, VertexRole(kind=kind, indices=indices))
        return label

    def literal(variable: int, positive: bool) -> str:
        return vertex(RoleKind.POS_LITERAL if positive else RoleKind.NEG_LITERAL, variable)

    edges: List[Tuple[str, str]] = []
    for j in range(1, n):
        edges.append((vertex(RoleKind.SPINE_CHAIN, j), vertex(RoleKind.SPINE_CHAIN, j + 1)))
    left_end = vertex(RoleKind.SPINE_CHAIN, n)
    edges.extend([(left_end, literal(1, True)), (left_end, literal(1, False))])

    for i in range(1, n + 1):
        edges.append((literal(i, True), literal(i, False)))
        if i < n:
            for here in (True, False):
                for there in (True, False):
                    edges.append((literal(i, here), literal(i + 1, there)))

    right_end = vertex(RoleKind.SPINE_CHAIN, n + 1)
    edges.extend([(literal(n, True), right_end), (literal(n, False), right_end)])
    for j in range(n + 1, 2 * n):
        edges.append((vertex(RoleKind.SPINE_CHAIN, j), vertex(RoleKind.SPINE_CHAIN, j + 1)))

    isolated: List[str] = []
    for j, clause in enumerate(formula.clauses, 1):
        hub = vertex(RoleKind.CLAUSE_HUB, j)
        if not clause:
            isolated.append(hub)
        for occurrence, lit in enumerate(clause, 1):
            previous = hub
            for position in range(1, half + 1):
                current = vertex(RoleKind.OCCURRENCE_CHAIN, j, occurrence, position)
                edges.append((previous, current))
                previous = current
            edges.append((previous, literal(abs(lit), lit > 0)))

    graph = build_graph(edges, isolated)
    instance = ReductionInstance(
        formula=formula,
        graph=graph,
        n_padded=n,
        k_target=half + 1,
        roles=tuple(roles[label] for label in graph.labels),
    )
    logger.info(
        f"Reduced formula with {formula.variable_count} variables and {formula.clause_count} clauses "
        f"to {graph!r}, k_target={instance.k_target}"
    )
    return instance


def _check_adjacent(instance: ReductionInstance, a: int, b: int, problems: List[str]) -> None:
    if not instance.graph.has_edge(a, b):
        graph = instance.graph
        problems.append(f"Missing edge {graph.label(a)}-{graph.label(b)}")


def validate_roles(instance: ReductionInstance) -> RolesReport:
    """Walk the roles and check every structural property of the construction."""
    graph, formula, n = instance.graph, instance.formula, instance.n_padded
    half = n // 2
    m, m_phi = formula.clause_count, formula.occurrence_count
    problems: List[str] = []

    counts = Counter(role.kind for role in instance.roles)
    expected = {
        RoleKind.POS_LITERAL: n,
        RoleKind.NEG_LITERAL: n,
        RoleKind.SPINE_CHAIN: 2 * n,
        RoleKind.CLAUSE_HUB: m,
        RoleKind.OCCURRENCE_CHAIN: m_phi * half,
    }
    for kind, count in expected.items():
        if counts.get(kind, 0) != count:
            problems.append(f"{counts.get(kind, 0)} vertices of role {kind}, expected {count}")
    if len(instance.roles) != graph.n:
        problems.append(f"{len(instance.roles)} roles for {graph.n} vertices")

    for i in range(1, n + 1):
        x, x_bar = instance.literal_vertex(i, True), instance.literal_vertex(i, False)
        _check_adjacent(instance, x, x_bar, problems)
        if i < n:
            for here in (x, x_bar):
                for there in (instance.literal_vertex(i + 1, True), instance.literal_vertex(i + 1, False)):
                    _check_adjacent(instance, here, there, problems)

    for j in range(1, 2 * n):
        if j != n:
            _check_adjacent(instance, instance.spine_vertex(j), instance.spine_vertex(j + 1), problems)
    for positive in (True, False):
        _check_adjacent(instance, instance.spine_vertex(n), instance.literal_vertex(1, positive), problems)
        _check_adjacent(instance, instance.spine_vertex(n + 1), instance.literal_vertex(n, positive), problems)

    for j, clause in enumerate(formula.clauses, 1):
        for occurrence, lit in enumerate(clause, 1):
            chain = [instance.hub_vertex(j)]
            chain.extend(
                instance.vertex_of(RoleKind.OCCURRENCE_CHAIN, j, occurrence, position)
                for position in range(1, half + 1)
            )
            chain.append(instance.literal_vertex(abs(lit), lit > 0))
            for a, b in zip(chain, chain[1:]):
                _check_adjacent(instance, a, b, problems)
            for internal in chain[1:-1]:
                if graph.degree(internal) != 2:
                    problems.append(f"Chain vertex {graph.label(internal)} has degree {graph.degree(internal)}")

    hub_per_clause = 4 * n + m + m_phi * half
    hub_per_occurrence = 4 * n + m_phi * (half + 1)
    if graph.n != hub_per_clause:
        problems.append(f"{graph.n} vertices, expected 4n + m + m_φ·n/2 = {hub_per_clause}")

    k = instance.k_target
    bounds = (4 * k * k, 16 * k * k)
    occurrences = formula.occurrences() + [0] * (n - formula.variable_count)
    regime = all(2 <= count <= 3 for count in occurrences)
    within = None
    if regime:
        within = bounds[0] <= hub_per_occurrence <= bounds[1]
        if not within:
            problems.append(f"Vertex count {hub_per_occurrence} outside [{bounds[0]}, {bounds[1]}]")

    return RolesReport(
        vertex_count=graph.n,
        role_counts=dict(counts),
        hub_per_clause_count=hub_per_clause,
        hub_per_occurrence_count=hub_per_occurrence,
        occurrence_regime=regime,
        size_bounds=bounds,
        within_size_bounds=within,
        problems=problems,
    )


def certify_diameter(instance: ReductionInstance) -> DiameterCertificate:
    """Diameter by exhaustive BFS, checked to be attained by V1-V2n with every hub strictly inside.

    Raises:
        DisconnectedGraphException: the formula has an empty clause
        ContractViolationException: the spine pair does not attain the diameter or a hub reaches it
    """
    graph, n = instance.graph, instance.n_padded
    profile = distance_profile(graph)
    spine_distance = bfs(graph, instance.spine_vertex(1)).level(instance.spine_vertex(2 * n))
    if spine_distance != profile.diameter:
        raise ContractViolationException(
            f"d(V1, V{2 * n}) = {spine_distance} but the diameter is {profile.diameter}"
        )
    hubs = [instance.hub_vertex(j) for j in range(1, instance.formula.clause_count + 1)]
    max_hub = max((profile.eccentricities[h] for h in hubs), default=None)
    if max_hub is not None and max_hub >= profile.diameter:
        raise ContractViolationException(
            f"A clause hub has eccentricity {max_hub}, not below the diameter {profile.diameter}"
        )

    stated = 3 * n + 2
    note = None
    if profile.diameter != stated:
        note = (
            f"Computed diameter {profile.diameter} differs from 3n+2 = {stated}: spine chains of n vertices "
            f"give d(V1, X1) = {n} and a ladder crossing of {n - 1} edges"
        )
    return DiameterCertificate(
        value=profile.diameter,
        spine_distance=spine_distance,
        max_hub_eccentricity=max_hub,
        stated_value=stated,
        note=note,
    )


def certified_diameter(instance: ReductionInstance) -> int:
    return certify_diameter(instance).value


def write_roles(instance: ReductionInstance) -> str:
    """Roles sidecar: one tab-separated ``label role indices`` line per vertex, in id order."""
    lines = [
        f"{label}\t{role.kind}\t{','.join(str(i) for i in role.indices)}"
        for label, role in zip(instance.graph.labels, instance.roles)
    ]
    return "\n".join(lines) + "\n"


def save_roles(instance: ReductionInstance, path: Union[str, Path]) -> None:
    Path(path).write_text(write_roles(instance), encoding="utf-8")
