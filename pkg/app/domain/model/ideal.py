from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from app.domain.model.path import EdgeFunctional, PositivePath


class QuadraticRelation(BaseModel):
    """z_p z_q - z_min z_max for an incomparable pair of positive paths."""

    model_config = ConfigDict(frozen=True)

    first: PositivePath
    second: PositivePath
    minimum: PositivePath
    maximum: PositivePath

    @property
    def degree(self) -> Tuple[int, int]:
        return tuple(sorted((self.first.roof, self.second.roof)))


class Decomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    functional: EdgeFunctional
    paths: Tuple[PositivePath, ...]
    # (lambda(rho_1), ..., lambda(rho_l))
    degree: Tuple[int, ...]


class HilbertBasisReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    weight_bound: int
    points_checked: int
    decomposed: int
    minimum_positive_weight: Optional[int]
    generator_weights: Tuple[int, ...]
    decomposable_generators: Tuple[str, ...]
    violations: Tuple[str, ...]

    @property
    def lightest_generator_weight(self) -> int:
        return min(self.generator_weights)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.decomposable_generators


class SectionPoints(BaseModel):
    model_config = ConfigDict(frozen=True)

    edge: int
    roof: int
    points: Tuple[EdgeFunctional, ...]
    # the same points as functionals on the dot lattice
    dot_points: Tuple[Tuple[int, ...], ...]
    matches_sections: bool
