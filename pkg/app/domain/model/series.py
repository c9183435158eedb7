from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_serializer


def fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class SeriesIndex(BaseModel):
    model_config = ConfigDict(frozen=True)

    roof_degrees: Tuple[int, ...]
    box_degrees: Tuple[int, ...] = ()


class Coefficient(BaseModel):
    """A = B / prod_i (m_i!)^(k_i + k_{i+1})."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Fraction
    numerator: int

    @field_serializer("value")
    def _value_text(self, value: Fraction) -> str:
        return fraction_text(value)


class EdgeDegrees(BaseModel):
    model_config = ConfigDict(frozen=True)

    values: Tuple[int, ...]

    @property
    def admissible(self) -> bool:
        return all(d >= 0 for d in self.values)


class SeriesTerm(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    roof_degrees: Tuple[int, ...]
    value: Fraction
    numerator: int

    @field_serializer("value")
    def _value_text(self, value: Fraction) -> str:
        return fraction_text(value)


class MirrorMonomial(BaseModel):
    model_config = ConfigDict(frozen=True)

    edge: int
    roof_edge: int
    exponent: Tuple[int, ...]

    @property
    def coefficient(self) -> str:
        return f"c{self.edge}"


class MirrorEquation(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int
    degree: Tuple[int, ...]
    roof_edges: Tuple[int, ...]
    monomials: Tuple[MirrorMonomial, ...]

    @property
    def term_count(self) -> int:
        return 1 + len(self.monomials)


class MirrorSystem(BaseModel):
    model_config = ConfigDict(frozen=True)

    degrees: Tuple[Tuple[int, ...], ...]
    # segment (1-based) of every roof edge, roof by roof in roof order
    assignment: Tuple[Tuple[int, ...], ...]
    equations: Tuple[MirrorEquation, ...]
    # c_e c_f = c_g c_h with (e, f) the corner of the box
    box_constraints: Tuple[Tuple[int, int, int, int], ...]
    newton_support: Tuple[Tuple[Tuple[int, ...], ...], ...]
