from fastapi import APIRouter, Depends, HTTPException

from app.components.base.exceptions import ComponentError

from .models import ExperimentConfig, ExperimentResponse
from .service import ExperimentService

router = APIRouter(prefix="/experiments", tags=["Experiments"])

_service: ExperimentService | None = None


def get_service() -> ExperimentService:
    global _service
    if _service is None:
        _service = ExperimentService()
    return _service


@router.post("/run", response_model=ExperimentResponse)
async def run(
    request: ExperimentConfig,
    service: ExperimentService = Depends(get_service),
) -> ExperimentResponse:
    """Run a small experiment inline."""
    try:
        return await service.process(request)
    except ComponentError as e:
        raise HTTPException(status_code=400, detail=e.to_dict())
