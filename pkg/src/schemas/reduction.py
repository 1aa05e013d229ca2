from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator
from typing import Dict, List, Optional, Tuple

from src.core.enums import RoleKind
from src.graph.core import Graph


class CnfFormula(BaseModel):
    """CNF formula over variables 1..variable_count; literals are signed integers."""
    model_config = ConfigDict(frozen=True)

    variable_count: int = Field(..., ge=0, description="Number of declared variables n")
    clauses: Tuple[Tuple[int, ...], ...] = Field(default=(), description="Clauses as tuples of signed literals")

    @model_validator(mode="after")
    def _literals_in_range(self) -> "CnfFormula":
        for clause in self.clauses:
            for literal in clause:
                if literal == 0 or abs(literal) > self.variable_count:
                    raise ValueError(f"Literal {literal} outside variables 1..{self.variable_count}")
        return self

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    @property
    def occurrence_count(self) -> int:
        """m_φ: total number of literal occurrences."""
        return sum(len(clause) for clause in self.clauses)

    def occurrences(self) -> List[int]:
        """Occurrence count of each variable, index 0 for variable 1."""
        counts = [0] * self.variable_count
        for clause in self.clauses:
            for literal in clause:
                counts[abs(literal) - 1] += 1
        return counts

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.variable_count} {self.clause_count}"]
        lines.extend(" ".join(str(literal) for literal in (*clause, 0)) for clause in self.clauses)
        return "\n".join(lines) + "\n"


class VertexRole(BaseModel):
    """Role of one gadget vertex.

    ``indices`` is (i,) for literals, (j,) for spine chain vertices and clause
    hubs, and (clause, occurrence, position) for occurrence chain vertices,
    all 1-based; positions count from the hub.
    """
    model_config = ConfigDict(frozen=True)

    kind: RoleKind
    indices: Tuple[int, ...]


class ReductionInstance(BaseModel):
    """Gadget graph built from a CNF formula, with the role of every vertex by id."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    formula: CnfFormula
    graph: Graph
    n_padded: int = Field(..., ge=4, description="Even variable count after padding")
    k_target: int = Field(..., ge=3, description="n_padded / 2 + 1")
    roles: Tuple[VertexRole, ...]

    def vertex_of(self, kind: RoleKind, *indices: int) -> int:
        return self.graph.vertex(role_label(kind, indices))

    def literal_vertex(self, variable: int, positive: bool) -> int:
        return self.vertex_of(RoleKind.POS_LITERAL if positive else RoleKind.NEG_LITERAL, variable)

    def spine_vertex(self, j: int) -> int:
        return self.vertex_of(RoleKind.SPINE_CHAIN, j)

    def hub_vertex(self, j: int) -> int:
        return self.vertex_of(RoleKind.CLAUSE_HUB, j)


def role_label(kind: RoleKind, indices: Tuple[int, ...]) -> str:
    """Vertex label of a role, e.g. X3, Xbar3, V7, C2 or C2_1_3."""
    if kind == RoleKind.POS_LITERAL:
        return f"X{indices[0]}"
    if kind == RoleKind.NEG_LITERAL:
        return f"Xbar{indices[0]}"
    if kind == RoleKind.SPINE_CHAIN:
        return f"V{indices[0]}"
    if kind == RoleKind.CLAUSE_HUB:
        return f"C{indices[0]}"
    return "C" + "_".join(str(i) for i in indices)


class RolesReport(BaseModel):
    """Structural check of a built reduction instance."""
    vertex_count: int
    role_counts: Dict[RoleKind, int]
    hub_per_clause_count: int = Field(..., description="4n + m + m_φ·n/2, one hub per clause")
    hub_per_occurrence_count: int = Field(..., description="4n + m_φ(n/2+1), one hub copy per occurrence")
    occurrence_regime: bool = Field(..., description="Every padded variable occurs 2 or 3 times")
    size_bounds: Tuple[int, int] = Field(..., description="(4k², 16k²) for k = k_target")
    within_size_bounds: Optional[bool] = Field(default=None, description="Only evaluated inside the occurrence regime")
    problems: List[str] = Field(default_factory=list)

    @computed_field
    @property
    def valid(self) -> bool:
        return not self.problems


class DiameterCertificate(BaseModel):
    """Diameter of a gadget graph and where it is attained."""
    value: int
    spine_distance: int = Field(..., description="d(V_1, V_2n)")
    max_hub_eccentricity: Optional[int] = Field(default=None, description="None when the formula has no clause")
    stated_value: int = Field(..., description="3n + 2 for the padded n")
    note: Optional[str] = Field(default=None, description="Calibration remark when value differs from stated_value")


class EquivalenceReport(BaseModel):
    """Satisfiability of a formula against k_target-laminarity of its gadget graph."""
    n_padded: int
    k_target: int
    vertex_count: int
    diameter: Optional[int] = Field(default=None, description="None when the gadget graph is disconnected")
    satisfiable: bool
    laminar: bool
    fast_laminar: Optional[bool] = Field(default=None, description="Fast recognizer verdict when k_target is small enough")
    assignment: Optional[List[bool]] = Field(default=None, description="First satisfying assignment found")
    witness: Optional[List[str]] = Field(default=None, description="k_target-dominating diametral path as labels")
    witness_assignment: Optional[List[bool]] = Field(default=None, description="Assignment read off the witness")
    witness_assignment_satisfies: Optional[bool] = None

    @computed_field
    @property
    def agree(self) -> bool:
        if self.fast_laminar is not None and self.fast_laminar != self.laminar:
            return False
        if self.witness_assignment_satisfies is False:
            return False
        return self.satisfiable == self.laminar
