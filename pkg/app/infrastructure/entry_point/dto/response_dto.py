from typing import Any, Optional

from pydantic import BaseModel


class ResponseDTO(BaseModel):
    """Envelope of every /flag response; `data` is the report payload or the error detail."""

    apiCode: str
    data: Optional[Any] = None
    message: Optional[str] = None
    status: Optional[bool] = None
