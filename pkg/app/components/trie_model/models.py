from typing import List, Optional

from pydantic import BaseModel, Field


class TriePredictRequest(BaseModel):
    """Inline corpus and the per-node cost function to sum."""
    strings: List[str] = Field(..., min_length=1)
    cost: str = "Q"
    trials: int = Field(default=0, ge=0)
    seed: Optional[int] = None


class TriePredictResponse(BaseModel):
    size: int
    nodes: int
    reduced_nodes: int
    cost: str
    prediction: str
    prediction_value: float
    measured_mean: Optional[float] = None
    relative_error: Optional[float] = None
