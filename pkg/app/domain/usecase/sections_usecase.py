import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from app.domain.model.ideal import Decomposition, HilbertBasisReport, QuadraticRelation, SectionPoints
from app.domain.model.ladder_graph import LadderGraph, RegionKind
from app.domain.model.path import EdgeFunctional, KernelKind, PositivePath
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.paths_usecase import PathsUseCase, annihilates
from app.domain.usecase.util.enumeration import balanced_functionals
from app.domain.usecase.util.parallel import ordered_map

logger = logging.getLogger("Sections UseCase")


def _exact_cover(target: FrozenSet[int], candidates: Sequence[FrozenSet[int]]) -> bool:
    if not target:
        return True
    pivot = min(target)
    for support in candidates:
        if pivot in support and support <= target:
            if _exact_cover(target - support, candidates):
                return True
    return False


class SectionsUseCase:
    def __init__(self, paths_usecase: PathsUseCase):
        self.paths_usecase = paths_usecase

    def _paths_by_crossing(self, graph: LadderGraph) -> Dict[Tuple[int, FrozenSet[int]], PositivePath]:
        index = {}
        for paths in self.paths_usecase.all_paths(graph):
            for path in paths:
                index[(path.roof, frozenset(path.crossed))] = path
        return index

    def cone_lattice_points(self, graph: LadderGraph, weight_bound: int) -> List[EdgeFunctional]:
        """Lattice points of C* (nonnegative, box balanced) of weight at most the bound."""
        lower = [0] * len(graph.edges)
        return [
            EdgeFunctional(values=v, kernel=KernelKind.BOUNDARY)
            for v in balanced_functionals(graph, lower, weight_bound=weight_bound)
        ]

    def greedy_decompose(self, graph: LadderGraph, values: Sequence[int],
                         index: Optional[dict] = None) -> Decomposition:
        """Peel positive paths off a functional of C* until nothing is left.

        Each peel starts at the first positive edge of the lowest roof that still
        carries weight and follows the dual graph down through the boxes, leaving
        each box through its vertical corner edge when that is positive and through
        the horizontal one otherwise.
        """
        values = tuple(values)
        if len(values) != len(graph.edges):
            raise CustomException(ResponseCodeEnum.KOS05, f"expected {len(graph.edges)} values")
        if any(v < 0 for v in values) or not annihilates(graph, values, KernelKind.BOUNDARY):
            raise CustomException(ResponseCodeEnum.KOS05, "negative value or unbalanced box")
        index = index if index is not None else self._paths_by_crossing(graph)
        tails = {dual.edge: dual.tail for dual in graph.dual_edges}
        remaining = list(values)
        peeled: List[PositivePath] = []

        while any(remaining):
            start = None
            for roof in graph.roofs:
                start = next((k for k in roof if remaining[k] > 0), None)
                if start is not None:
                    break
            if start is None:
                raise CustomException(ResponseCodeEnum.KOC01, "positive weight but no positive roof edge")
            crossed = [start]
            region = tails[start]
            while region.kind == RegionKind.BOX:
                vertical, horizontal = graph.boxes[region.index].corner
                if remaining[vertical] > 0:
                    step = vertical
                elif remaining[horizontal] > 0:
                    step = horizontal
                else:
                    raise CustomException(ResponseCodeEnum.KOC01, f"peeling stuck in box {region.index}")
                crossed.append(step)
                region = tails[step]
            roof = graph.edges[start].roof
            path = index.get((roof, frozenset(crossed)))
            if path is None:
                raise CustomException(ResponseCodeEnum.KOC01, f"no positive path crosses {sorted(crossed)}")
            for k in path.crossed:
                remaining[k] -= 1
            peeled.append(path)

        degree = self.paths_usecase.path_degree(graph, values)
        if len(peeled) != sum(degree):
            raise CustomException(ResponseCodeEnum.KOC01, f"{len(peeled)} paths for degree {degree}")
        return Decomposition(
            functional=EdgeFunctional(values=values, kernel=KernelKind.BOUNDARY),
            paths=tuple(peeled),
            degree=degree,
        )

    def check_hilbert_basis(self, graph: LadderGraph, weight_bound: Optional[int] = None) -> HilbertBasisReport:
        logger.info("Init check hilbert basis usecase")
        n = graph.shape.ambient
        bound = 2 * n if weight_bound is None else weight_bound
        if bound < 0 or bound > 2 * n:
            raise CustomException(ResponseCodeEnum.KOS10, f"weight bound must lie in 0..{2 * n}")
        try:
            index = self._paths_by_crossing(graph)
            points = [p for p in balanced_functionals(graph, [0] * len(graph.edges), weight_bound=bound)]
            violations: List[str] = []
            decomposed = 0
            lightest: Optional[int] = None
            for values in points:
                weight = sum(values)
                if not weight:
                    continue
                lightest = weight if lightest is None else min(lightest, weight)
                try:
                    result = self.greedy_decompose(graph, values, index)
                except CustomException as e:
                    violations.append(f"{list(values)}: {e.message}")
                    continue
                total = [0] * len(values)
                for path in result.paths:
                    for k in path.crossed:
                        total[k] += 1
                if tuple(total) != values:
                    violations.append(f"{list(values)}: peeled paths do not re-sum")
                else:
                    decomposed += 1

            generators = [p for paths in self.paths_usecase.all_paths(graph) for p in paths]
            weights = tuple(len(p.crossed) for p in generators)
            if lightest is not None and lightest < min(weights):
                violations.append(f"weight {lightest} lies below every generator")
            supports = [frozenset(p.crossed) for p in generators]
            decomposable = tuple(
                path.label for k, path in enumerate(generators)
                if _exact_cover(supports[k], supports[:k] + supports[k + 1:])
            )
            logger.debug(f"{len(points)} cone points up to weight {bound}")
            return HilbertBasisReport(
                weight_bound=bound,
                points_checked=len(points),
                decomposed=decomposed,
                minimum_positive_weight=lightest,
                generator_weights=weights,
                decomposable_generators=decomposable,
                violations=tuple(violations),
            )
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def section_polytope_points(self, graph: LadderGraph, edge_id: int) -> SectionPoints:
        logger.info("Init section polytope points usecase")
        upper = self.paths_usecase.upper_set_and_sections(graph, edge_id)
        members = set(upper.members)
        lower = [-1 if k in members else 0 for k in range(len(graph.edges))]
        points = sorted(balanced_functionals(graph, lower, roof_sum=0))
        expected = {s.functional.values for s in upper.sections}
        return SectionPoints(
            edge=edge_id,
            roof=upper.roof,
            points=tuple(EdgeFunctional(values=p, kernel=KernelKind.DELTA) for p in points),
            dot_points=tuple(self.paths_usecase.descend(graph, p) for p in points),
            matches_sections=set(points) == expected and len(points) == len(expected),
        )

    def quadratic_relations(self, graph: LadderGraph) -> List[QuadraticRelation]:
        logger.info("Init quadratic relations usecase")
        try:
            paths = [p for group in self.paths_usecase.all_paths(graph) for p in group]

            def relations_from(k: int) -> List[QuadraticRelation]:
                found = []
                for other in paths[k + 1:]:
                    comparison = self.paths_usecase.path_order_ops(graph, paths[k], other)
                    if comparison.comparable:
                        continue
                    relation = QuadraticRelation(
                        first=paths[k], second=other,
                        minimum=comparison.minimum, maximum=comparison.maximum,
                    )
                    self.check_identity(graph, relation)
                    found.append(relation)
                return found

            return [r for chunk in ordered_map(relations_from, range(len(paths))) for r in chunk]
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def check_identity(self, graph: LadderGraph, relation: QuadraticRelation):
        width = len(graph.edges)
        left = [0] * width
        right = [0] * width
        for path in (relation.first, relation.second):
            for k in path.crossed:
                left[k] += 1
        for path in (relation.minimum, relation.maximum):
            for k in path.crossed:
                right[k] += 1
        if left != right:
            raise CustomException(
                ResponseCodeEnum.KOC06,
                f"{relation.first.label} * {relation.second.label}",
            )
