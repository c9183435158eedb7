from typing import Optional

from pydantic import BaseModel


class ShapeInput(BaseModel):
    shape: str
    check: bool = False


class SeriesInput(BaseModel):
    shape: str
    max_degree: int = 2
    degrees: Optional[str] = None
    check: bool = False


class CensusInput(BaseModel):
    n_max: int = 7
    modulo_duality: bool = True
    check: bool = False
