from fastapi import APIRouter, Depends, HTTPException

from app.components.base.exceptions import ComponentError

from .models import TableRequest, TableResponse
from .service import CombinatoricsService

router = APIRouter(prefix="/tables", tags=["Tables"])

_service: CombinatoricsService | None = None


def get_service() -> CombinatoricsService:
    global _service
    if _service is None:
        _service = CombinatoricsService()
    return _service


@router.get("/{name}", response_model=TableResponse)
async def get_table(
    name: str,
    max: int = 16,
    service: CombinatoricsService = Depends(get_service),
) -> TableResponse:
    """Render a named table up to index `max`."""
    try:
        return await service.process(TableRequest(name=name, max=max))
    except ComponentError as e:
        raise HTTPException(status_code=400, detail=e.to_dict())
