from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from app.components.base.exceptions import ExperimentConfigError

ALGORITHMS = ("classic", "floyd", "modified", "binomial", "quicksort-strings")


class ExperimentConfig(BaseModel):
    """One experiment: algorithm, instance size, red range, trials and output."""
    algo: str = "modified"
    n: int = Field(..., ge=0)
    r: int = Field(..., ge=0)
    lo: Optional[int] = None  # default n - r
    trials: int = Field(default=200, ge=1)
    seed: int = Field(default=20240611, ge=0)
    out: Optional[str] = None
    jobs: int = Field(default=1, ge=1)
    r_sweep: List[int] = Field(default_factory=list)
    n_sweep: List[int] = Field(default_factory=list)
    r_ratio: Optional[float] = Field(default=None, gt=0, le=1)
    corpus: Optional[str] = None

    @model_validator(mode="after")
    def _check_ranges(self) -> "ExperimentConfig":
        if self.algo not in ALGORITHMS:
            raise ValueError(f"unknown algo {self.algo!r}; expected one of {', '.join(ALGORITHMS)}")
        for r in self.r_sweep or [self.r]:
            if r > self.n:
                raise ValueError(f"r={r} exceeds n={self.n}")
        if self.lo is not None and (self.lo < 0 or self.lo + self.r > self.n):
            raise ValueError(f"red range [{self.lo}, {self.lo + self.r}) does not fit in 0..{self.n}")
        return self

    def red_offset(self, r: int) -> int:
        return self.n - r if self.lo is None else self.lo


def build_config(**values: Any) -> ExperimentConfig:
    """Validate raw values; pydantic errors surface as ExperimentConfigError."""
    try:
        return ExperimentConfig(**values)
    except ValidationError as e:
        raise ExperimentConfigError(
            "Invalid experiment configuration",
            component="experiments",
            details={"errors": [err["msg"] for err in e.errors()]},
        )


class FitResult(BaseModel):
    """Least-squares fit of mean red/red comparisons against c*r*log2(r) + b*r."""
    rs: List[int]
    means: List[float]
    c_hat: float
    b: float
    residual_norm: float


class ExperimentResponse(BaseModel):
    config: ExperimentConfig
    points: List[Dict[str, Any]]
    fit: Optional[FitResult] = None
    failures: int = 0
