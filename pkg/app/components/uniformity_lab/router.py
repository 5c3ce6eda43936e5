from fastapi import APIRouter, Depends, HTTPException

from app.components.base.exceptions import ComponentError

from .models import VerifyRequest, VerifyResponse
from .service import UniformityLabService

router = APIRouter(prefix="/verify", tags=["Verify"])

_service: UniformityLabService | None = None


def get_service() -> UniformityLabService:
    global _service
    if _service is None:
        _service = UniformityLabService()
    return _service


@router.post("/{check}", response_model=VerifyResponse)
async def verify(
    check: str,
    n: int,
    trials: int | None = None,
    seed: int | None = None,
    service: UniformityLabService = Depends(get_service),
) -> VerifyResponse:
    """Run one verification check."""
    try:
        return await service.process(VerifyRequest(check=check, n=n, trials=trials, seed=seed))
    except ComponentError as e:
        raise HTTPException(status_code=400, detail=e.to_dict())
