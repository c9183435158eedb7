from typing import Tuple

from pydantic import BaseModel, ConfigDict

from app.domain.model.flag_shape import FlagShape


def splitting_notation(parts: Tuple[Tuple[int, ...], ...]) -> str:
    """Group equal parts as k(v), largest part first: "(3)+2(1)"."""
    ordered = sorted(parts, reverse=True)
    chunks = []
    i = 0
    while i < len(ordered):
        j = i
        while j < len(ordered) and ordered[j] == ordered[i]:
            j += 1
        multiplicity = j - i
        vector = "(%s)" % ",".join(str(x) for x in ordered[i])
        chunks.append(vector if multiplicity == 1 else f"{multiplicity}{vector}")
        i = j
    return "+".join(chunks)


class Splitting(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: Tuple[Tuple[int, ...], ...]
    listed: bool = True

    @property
    def notation(self) -> str:
        return splitting_notation(self.parts)


class CensusEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: FlagShape
    dimension: int
    anticanonical: Tuple[int, ...]
    required: int
    splittings: Tuple[Splitting, ...]
    dual_shape: FlagShape
    self_dual: bool
    listed_count: int = 0


class CensusDiscrepancy(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: FlagShape
    unlisted: Tuple[str, ...]
    unmatched: Tuple[str, ...]


class ExcludedShape(BaseModel):
    model_config = ConfigDict(frozen=True)

    shape: FlagShape
    reason: str


class FeasibleFlags(BaseModel):
    model_config = ConfigDict(frozen=True)

    shapes: Tuple[FlagShape, ...]
    excluded: Tuple[ExcludedShape, ...]


class CensusTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_max: int
    modulo_duality: bool
    rows: Tuple[CensusEntry, ...]
    discrepancies: Tuple[CensusDiscrepancy, ...]
