from pydantic import BaseModel, ConfigDict, Field
from typing import Tuple


class DiametralPathSet(BaseModel):
    """Every diametral path of a graph, each listed once with the smaller endpoint first."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Vertex count of the host graph")
    m: int = Field(..., ge=0, description="Edge count of the host graph")
    diameter: int = Field(..., ge=0, description="Diameter of the host graph")
    paths: Tuple[Tuple[int, ...], ...] = Field(default=(), description="Diametral paths as vertex-id tuples")

    @property
    def count(self) -> int:
        return len(self.paths)


class PathDomination(BaseModel):
    """A diametral path and the largest distance from any vertex to it."""
    model_config = ConfigDict(frozen=True)

    path: Tuple[int, ...]
    radius: int = Field(..., ge=0)
