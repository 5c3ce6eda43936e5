from fastapi import APIRouter, Depends, HTTPException

from app.components.base.exceptions import ComponentError

from .models import TriePredictRequest, TriePredictResponse
from .service import TrieModelService

router = APIRouter(prefix="/trie", tags=["Trie Model"])

_service: TrieModelService | None = None


def get_service() -> TrieModelService:
    global _service
    if _service is None:
        _service = TrieModelService()
    return _service


@router.post("/predict", response_model=TriePredictResponse)
async def predict(
    request: TriePredictRequest,
    service: TrieModelService = Depends(get_service),
) -> TriePredictResponse:
    """Predict expected symbol comparisons from the corpus trie."""
    try:
        return await service.process(request)
    except ComponentError as e:
        raise HTTPException(status_code=400, detail=e.to_dict())
