from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


CHECK_NAMES = (
    "buildheap-uniform",
    "binomial-build-uniform",
    "binomial-pop-uniform",
    "alt-split",
    "preservation",
    "mature-phase",
    "c-monotone",
    "h-residual",
    "g-concavity",
    "appendix-bound",
    "normalization",
    "crossing",
    "binomial-ratio",
)


class VerifyRequest(BaseModel):
    """A named check with its size parameter."""
    check: str
    n: int = Field(..., ge=0)
    trials: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None


class VerifyResponse(BaseModel):
    check: str
    n: int
    passed: bool
    summary: Dict[str, Any] = Field(default_factory=dict)
    rows: List[Dict[str, Any]] = Field(default_factory=list)
