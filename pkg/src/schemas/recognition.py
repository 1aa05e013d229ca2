from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import Optional, Tuple

from src.core.enums import RecognitionMode, Verdict


class Counterexample(BaseModel):
    """A vertex and a diametral path that avoids its closed k-neighborhood."""
    model_config = ConfigDict(frozen=True)

    center: int = Field(..., ge=0, description="Vertex x whose N^k[x] the path avoids")
    path: Tuple[int, ...] = Field(..., min_length=1, description="Diametral path inside G minus N^k[x]")


class RecognitionOutcome(BaseModel):
    """Verdict of a (strongly) k-laminar query with its evidence."""
    model_config = ConfigDict(frozen=True)

    verdict: Verdict = Field(..., description="Whether the property holds")
    k: int = Field(..., ge=0, description="Query parameter")
    mode: RecognitionMode = Field(default=RecognitionMode.LAMINAR, description="Plain or strongly query")
    diameter: int = Field(..., ge=0, description="Diameter of the host graph")
    witness: Optional[Tuple[int, ...]] = Field(default=None, description="k-dominating diametral path")
    counterexample: Optional[Counterexample] = Field(default=None, description="Violation of the strongly property")
    source: Optional[int] = Field(default=None, description="MaxEcc vertex the witness starts from")

    @model_validator(mode="after")
    def _evidence_matches_verdict(self) -> "RecognitionOutcome":
        if self.witness is not None and self.verdict != Verdict.YES:
            raise ValueError("A witness is only attached to a yes verdict")
        if self.counterexample is not None and self.verdict != Verdict.NO:
            raise ValueError("A counterexample is only attached to a no verdict")
        return self

    @property
    def holds(self) -> bool:
        return self.verdict == Verdict.YES


class IndexResult(BaseModel):
    """Laminar or strongly laminar index, ``None`` when the search cap was exceeded."""
    mode: RecognitionMode
    index: Optional[int] = Field(default=None, ge=0)
    k_max: Optional[int] = Field(default=None, ge=0)

    @property
    def exceeded(self) -> bool:
        return self.index is None

