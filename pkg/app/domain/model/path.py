from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict


class KernelKind(str, Enum):
    # annihilates Ker(boundary): the box vectors
    BOUNDARY = "boundary"
    # annihilates Ker(delta): box vectors and roof sums
    DELTA = "delta"


class EdgeFunctional(BaseModel):
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]
    kernel: KernelKind

    @property
    def weight(self) -> int:
        return sum(self.values)

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.values) if v)

    def as_map(self) -> dict:
        return {str(i): v for i, v in enumerate(self.values)}


class PositivePath(BaseModel):
    """Monotone Down/Left lattice path from O_i to the origin."""

    model_config = ConfigDict(frozen=True)

    roof: int
    steps: str
    points: Tuple[Tuple[int, int], ...]
    crossed: Tuple[int, ...]
    # heights[c-1]: row at which the path leaves column c, for c = 1..n_i
    heights: Tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.roof}:{self.steps}"


class Meander(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    paths: Tuple[PositivePath, ...]
    functional: EdgeFunctional

    @property
    def incident(self) -> Tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.functional.values) if v == 1)

    @property
    def label(self) -> str:
        return "|".join(p.steps for p in self.paths)


class PathComparison(BaseModel):
    model_config = ConfigDict(frozen=True)

    comparable: bool
    minimum: PositivePath
    maximum: PositivePath


class PathSection(BaseModel):
    model_config = ConfigDict(frozen=True)

    path: PositivePath
    functional: EdgeFunctional


class UpperSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    edge: int
    roof: int
    members: Tuple[int, ...]
    indicator: EdgeFunctional
    sections: Tuple[PathSection, ...]
