from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from app.domain.model.flag_shape import FlagShape


class GridPoint(BaseModel):
    """Point in doubled coordinates: (x, y) stands for (x/2, y/2)."""

    model_config = ConfigDict(frozen=True)

    x: int
    y: int

    @model_validator(mode="after")
    def _same_parity(self):
        if (self.x - self.y) % 2:
            raise ValueError(f"mixed parity grid point ({self.x}, {self.y})")
        return self

    def as_tuple(self) -> Tuple[int, int]:
        return (self.x, self.y)


class VertexKind(str, Enum):
    DOT = "dot"
    STAR = "star"


class Vertex(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: VertexKind
    position: GridPoint
    # position in the D basis (dots) or the star number (stars)
    index: int
    column: Optional[int] = None
    row: Optional[int] = None

    @property
    def label(self) -> str:
        return f"d{self.index}" if self.kind == VertexKind.DOT else f"s{self.index}"


class Direction(str, Enum):
    HORIZONTAL = "H"
    VERTICAL = "V"


class GraphEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    tail: Vertex
    head: Vertex
    direction: Direction
    roof: Optional[int] = None
    corner_of: Optional[int] = None
    opposite_of: Optional[int] = None

    @property
    def edge_class(self) -> str:
        return f"roof:{self.roof}" if self.roof is not None else f"corner:{self.corner_of}"


class Box(BaseModel):
    """Unit-square cycle of the graph; `center` is its lattice point."""

    model_config = ConfigDict(frozen=True)

    id: int
    center: GridPoint
    # (vertical e, horizontal f) meeting at the lower-left vertex
    corner: Tuple[int, int]
    # (horizontal g, vertical h) meeting at the upper-right vertex
    opposite: Tuple[int, int]

    @property
    def edges(self) -> Tuple[int, int, int, int]:
        return (*self.corner, *self.opposite)


class RegionKind(str, Enum):
    OUTSIDE = "outside"
    ROOF = "roof"
    BOX = "box"


class Region(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: RegionKind
    index: int = 0

    @property
    def label(self) -> str:
        if self.kind == RegionKind.OUTSIDE:
            return "0"
        if self.kind == RegionKind.ROOF:
            return f"R{self.index}"
        return f"b{self.index}"


class DualEdge(BaseModel):
    """Segment of the dual graph crossing exactly one edge, oriented up or right."""

    model_config = ConfigDict(frozen=True)

    edge: int
    tail: Region
    head: Region
    segment: Tuple[GridPoint, GridPoint]


class LadderGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: FlagShape
    cells: Tuple[Tuple[int, int], ...]
    dots: Tuple[Vertex, ...]
    stars: Tuple[Vertex, ...]
    edges: Tuple[GraphEdge, ...]
    boxes: Tuple[Box, ...]
    roofs: Tuple[Tuple[int, ...], ...]
    dual_edges: Tuple[DualEdge, ...]

    @property
    def dot_count(self) -> int:
        return len(self.dots)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def roof_of(self, edge_id: int) -> Optional[int]:
        return self.edges[edge_id].roof

    def roof_size(self, roof: int) -> int:
        return len(self.roofs[roof - 1])


class IntVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    basis: str
    values: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)


class KernelBases(BaseModel):
    model_config = ConfigDict(frozen=True)

    box_vectors: Tuple[IntVector, ...]
    roof_vectors: Tuple[IntVector, ...]
    boundary_rank: int
    delta_rank: int
    # minor of the kernel basis on one corner edge per box and the first edge of each roof
    pivot_columns: Tuple[int, ...]
    pivot_determinant: int


class TransposeReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: FlagShape
    dual_shape: FlagShape
    counts: Tuple[int, int, int, int]
    dual_counts: Tuple[int, int, int, int]
    roof_sizes: Tuple[int, ...]
    dual_roof_sizes: Tuple[int, ...]
    isomorphic: bool
