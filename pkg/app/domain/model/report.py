from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field

Scalar = Union[str, int, bool]


class Report(BaseModel):
    command: str
    shape: Optional[str] = None
    summary: Dict[str, Scalar] = Field(default_factory=dict)
    columns: List[str] = Field(default_factory=list)
    rows: List[List[Scalar]] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)
