from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional

from src.core.enums import CommandName, ExitCode, Verdict


class GraphSummary(BaseModel):
    """Size of the graph a command ran on."""
    n: int = Field(..., ge=0, description="Number of vertices")
    m: int = Field(..., ge=0, description="Number of edges")
    diameter: Optional[int] = Field(default=None, ge=0, description="Diameter when the graph is connected")


class GraphStats(BaseModel):
    """Distance quantities of a connected graph."""
    n: int
    m: int
    diameter: int
    radius: int
    max_ecc: List[str] = Field(..., description="Labels of the vertices of maximum eccentricity")


class CounterexamplePayload(BaseModel):
    center: str = Field(..., description="Label of the vertex whose k-neighborhood the path avoids")
    path: List[str] = Field(..., description="Diametral path as labels")


class CommandPayload(BaseModel):
    """JSON document a command writes to standard output."""
    command: CommandName
    graph: Optional[GraphSummary] = None
    verdict: Optional[Verdict] = None
    witness: Optional[List[str]] = Field(default=None, description="Witness path as ordered labels")
    counterexample: Optional[CounterexamplePayload] = None
    details: Dict[str, Any] = Field(default_factory=dict, description="Command-specific results")
    error: Optional[str] = None
    elapsed_ms: float = 0.0


class CommandResult(BaseModel):
    """Exit code plus standard output of one command invocation."""
    exit_code: ExitCode
    payload: Optional[CommandPayload] = None
    text: Optional[str] = Field(default=None, description="Raw output for commands that emit no JSON")

    def render(self) -> str:
        if self.payload is not None:
            return self.payload.model_dump_json(exclude_none=True, indent=2)
        return self.text or ""
