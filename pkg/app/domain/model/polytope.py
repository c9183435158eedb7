from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict


class Facet(BaseModel):
    model_config = ConfigDict(frozen=True)

    meander: int
    # u_m over the dot basis; the facet is {x : <u_m, x> = 1}
    functional: Tuple[int, ...]
    incident: Tuple[int, ...]


class ReflexivePolytope(BaseModel):
    model_config = ConfigDict(frozen=True)

    dimension: int
    vertices: Tuple[Tuple[int, ...], ...]
    facets: Tuple[Facet, ...]
    hull_vertices: Tuple[int, ...]
    reflexive: bool
    interior_points: Optional[int] = None


class HullFacet(BaseModel):
    """Facet {x : <normal, x> <= offset} with a primitive integral normal."""

    model_config = ConfigDict(frozen=True)

    normal: Tuple[int, ...]
    offset: int
    incident: Tuple[int, ...]


class SimplicialCone(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    omitted: Tuple[int, ...]
    generators: Tuple[int, ...]
    determinant: int
    meander: int


class ConifoldStratum(BaseModel):
    model_config = ConfigDict(frozen=True)

    box: int
    # delta images of (e, f, g, h)
    vectors: Tuple[Tuple[int, ...], ...]
    # e - g, f - g, g: sends g, e, f, h to (0,0,1), (1,0,1), (0,1,1), (1,1,1)
    basis: Tuple[Tuple[int, ...], ...]
    minor_gcd: int
    unit_minor: Optional[Tuple[int, int, int]] = None
    codimension: int = 3
