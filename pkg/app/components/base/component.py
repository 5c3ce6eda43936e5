from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any, Dict, Generic, TypeVar

from pydantic import BaseModel

from .logging import get_logger

TRequest = TypeVar("TRequest", bound=BaseModel)
TResponse = TypeVar("TResponse", bound=BaseModel)


class BaseComponent(ABC, Generic[TRequest, TResponse]):
    """Service surface shared by the API routers and the command line.

    Subclasses name themselves and implement `process()`; the bound logger
    and the health report come for free.
    """

    @property
    @abstractmethod
    def component_name(self) -> str:
        pass

    @abstractmethod
    async def process(self, request: TRequest) -> TResponse:
        pass

    @cached_property
    def log(self) -> Any:
        return get_logger(self.component_name)

    async def health_check(self) -> Dict[str, Any]:
        return {"component": self.component_name, "status": "healthy"}

    async def __call__(self, request: TRequest) -> TResponse:
        return await self.process(request)
