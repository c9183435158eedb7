import logging
from itertools import combinations, product
from typing import List, Optional, Set, Tuple

from sympy.utilities.iterables import multiset_partitions

from app.domain.model.census import (
    CensusDiscrepancy, CensusEntry, CensusTable, ExcludedShape, FeasibleFlags, Splitting, splitting_notation,
)
from app.domain.model.flag_shape import FlagShape
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.ladder_graph_usecase import LadderGraphUseCase
from app.domain.usecase.util.reference_census import REFERENCE_SPLITTINGS, parse_splitting, reference_order

logger = logging.getLogger("Census UseCase")

Parts = Tuple[Tuple[int, ...], ...]

# excess <= 4 is the same as dim - 3 <= sum of the -K_F components
_SLACK = 4


def _sorted_parts(parts) -> Parts:
    return tuple(sorted((tuple(p) for p in parts), reverse=True))


def _reversed_parts(parts: Parts) -> Parts:
    return _sorted_parts(tuple(reversed(p)) for p in parts)


def _canonical(parts: Parts, self_dual: bool) -> Parts:
    parts = _sorted_parts(parts)
    if not self_dual:
        return parts
    return min(parts, _reversed_parts(parts))


def _canonical_shape(shape: FlagShape) -> FlagShape:
    dual = shape.dual()
    return shape if shape.steps <= dual.steps else dual


def _excess(shape: FlagShape) -> int:
    padded = shape.padded
    n = shape.ambient
    total = (padded[1] - 1) * (n - padded[1] - 1)
    for i in range(2, shape.length + 1):
        total += (padded[i] - padded[i - 1]) * (n - padded[i] - 1)
    return total


def _exclusion(shape: FlagShape) -> Optional[str]:
    n = shape.ambient
    if shape.steps in ((1,), (n - 1,)):
        return "projective space"
    if shape.steps == (1, n - 1):
        return "F(1,n-1,n) family"
    if shape.dimension - 3 <= 0:
        return "dimension at most 3"
    return None


class CensusUseCase:
    def __init__(self, ladder_graph_usecase: LadderGraphUseCase):
        self.ladder_graph_usecase = ladder_graph_usecase

    def anticanonical(self, shape: FlagShape) -> Tuple[int, ...]:
        return shape.anticanonical

    def _all_shapes(self, n_max: int) -> List[FlagShape]:
        shapes = []
        for n in range(2, n_max + 1):
            for length in range(1, n):
                for steps in combinations(range(1, n), length):
                    shapes.append(FlagShape(steps=steps, ambient=n))
        return shapes

    def feasible_flags(self, n_max: int) -> FeasibleFlags:
        """Shapes whose -K_F can be split into dim - 3 nonzero nef classes, one per duality pair."""
        logger.info("Init feasible flags usecase")
        if n_max < 2:
            raise CustomException(ResponseCodeEnum.KOS10, "n-max must be at least 2")
        shapes: List[FlagShape] = []
        excluded: List[ExcludedShape] = []
        seen: Set[FlagShape] = set()
        for shape in self._all_shapes(n_max):
            canonical = _canonical_shape(shape)
            if canonical in seen or _excess(shape) > _SLACK:
                continue
            seen.add(canonical)
            reason = _exclusion(canonical)
            if reason is not None:
                excluded.append(ExcludedShape(shape=canonical, reason=reason))
            else:
                shapes.append(canonical)

        order = {text: k for k, text in enumerate(reference_order())}
        shapes.sort(key=lambda s: (order.get(s.text, len(order)), -s.ambient, s.steps))
        logger.debug(f"{len(shapes)} feasible shapes up to n = {n_max}")
        return FeasibleFlags(shapes=tuple(shapes), excluded=tuple(excluded))

    def _splittings(self, shape: FlagShape) -> List[Parts]:
        target = shape.anticanonical
        required = shape.dimension - 3
        candidates = sorted(
            (v for v in product(*(range(k + 1) for k in target)) if any(v)),
            reverse=True,
        )
        found: List[Parts] = []

        def extend(start: int, remaining: Tuple[int, ...], chosen: List[Tuple[int, ...]]):
            left = required - len(chosen)
            if left == 0:
                if not any(remaining):
                    found.append(tuple(chosen))
                return
            if sum(remaining) < left:
                return
            for k in range(start, len(candidates)):
                vector = candidates[k]
                if all(a <= b for a, b in zip(vector, remaining)):
                    chosen.append(vector)
                    extend(k, tuple(b - a for a, b in zip(vector, remaining)), chosen)
                    chosen.pop()

        extend(0, target, [])
        return found

    def enumerate_splittings(self, shape: FlagShape, modulo_duality: bool = True) -> CensusEntry:
        logger.info("Init enumerate splittings usecase")
        required = shape.dimension - 3
        if required <= 0:
            raise CustomException(ResponseCodeEnum.KOS07, f"{shape.label} has dimension {shape.dimension}")
        found = self._splittings(shape)
        if not found:
            raise CustomException(ResponseCodeEnum.KOS07, f"{shape.label} admits no splitting")

        self_dual = shape.is_self_dual
        if modulo_duality and self_dual:
            found = sorted({_canonical(parts, True) for parts in found}, reverse=True)

        listed = self._reference(shape)
        splittings = tuple(
            Splitting(parts=parts, listed=_canonical(parts, self_dual) in listed if listed is not None else False)
            for parts in found
        )
        return CensusEntry(
            shape=shape,
            dimension=shape.dimension,
            anticanonical=shape.anticanonical,
            required=required,
            splittings=splittings,
            dual_shape=shape.dual(),
            self_dual=self_dual,
            listed_count=len(listed) if listed is not None else 0,
        )

    def _reference(self, shape: FlagShape) -> Optional[Set[Parts]]:
        texts = REFERENCE_SPLITTINGS.get(shape.text)
        if texts is None:
            return None
        return {_canonical(parse_splitting(t), shape.is_self_dual) for t in texts}

    def census_table(self, n_max: int, modulo_duality: bool = True) -> CensusTable:
        logger.info("Init census table usecase")
        try:
            rows = []
            discrepancies = []
            for shape in self.feasible_flags(n_max).shapes:
                entry = self.enumerate_splittings(shape, modulo_duality)
                rows.append(entry)
                listed = self._reference(shape) or set()
                computed = {_canonical(s.parts, shape.is_self_dual) for s in entry.splittings}
                unlisted = sorted(computed - listed, reverse=True)
                unmatched = sorted(listed - computed, reverse=True)
                if unlisted or unmatched:
                    discrepancies.append(CensusDiscrepancy(
                        shape=shape,
                        unlisted=tuple(splitting_notation(p) for p in unlisted),
                        unmatched=tuple(splitting_notation(p) for p in unmatched),
                    ))
            for d in discrepancies:
                logger.debug(f"{d.shape.label}: {len(d.unlisted)} unlisted, {len(d.unmatched)} unmatched")
            return CensusTable(
                n_max=n_max, modulo_duality=modulo_duality,
                rows=tuple(rows), discrepancies=tuple(discrepancies),
            )
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def splittings_oracle(self, shape: FlagShape) -> Set[Parts]:
        """Splittings as partitions of the multiset holding K_i copies of label i."""
        target = shape.anticanonical
        labels = [i for i, k in enumerate(target) for _ in range(k)]
        found = set()
        for blocks in multiset_partitions(labels, shape.dimension - 3):
            parts = [tuple(block.count(i) for i in range(len(target))) for block in blocks]
            found.add(_sorted_parts(parts))
        return found

    def verify_entry(self, entry: CensusEntry):
        """Cross-check an entry against the ladder graph and the multiset-partition oracle."""
        graph = self.ladder_graph_usecase.build_graph(entry.shape)
        sizes = tuple(len(roof) for roof in graph.roofs)
        if sizes != entry.anticanonical or len(graph.dots) != entry.dimension:
            raise CustomException(ResponseCodeEnum.KOC07, f"{entry.shape.label}: roofs {sizes}, |D| {len(graph.dots)}")
        self_dual = entry.self_dual
        oracle = {_canonical(parts, self_dual) for parts in self.splittings_oracle(entry.shape)}
        computed = {_canonical(s.parts, self_dual) for s in entry.splittings}
        if oracle != computed:
            raise CustomException(
                ResponseCodeEnum.KOC07,
                f"{entry.shape.label}: oracle finds {len(oracle)} splittings, enumeration {len(computed)}",
            )

