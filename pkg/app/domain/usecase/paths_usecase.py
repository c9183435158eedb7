import logging
from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from app.domain.model.flag_shape import FlagShape
from app.domain.model.ladder_graph import Direction, LadderGraph, VertexKind
from app.domain.model.path import (
    EdgeFunctional, KernelKind, Meander, PathComparison, PathSection, PositivePath, UpperSet,
)
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.ladder_graph_usecase import LadderGraphUseCase, _construct
from app.domain.usecase.util.parallel import ordered_map

logger = logging.getLogger("Paths UseCase")

Segment = FrozenSet[Tuple[int, int]]


def _crossing_map(graph: LadderGraph) -> Dict[Segment, int]:
    """Unit lattice segment (doubled endpoints) -> the edge whose dual segment it is."""
    return {
        frozenset((dual.segment[0].as_tuple(), dual.segment[1].as_tuple())): dual.edge
        for dual in graph.dual_edges
    }


def _walk(shape: FlagShape, roof: int, steps: str, crossings: Dict[Segment, int]) -> PositivePath:
    n = shape.ambient
    x, y = shape.padded[roof], n - shape.padded[roof]
    points = [(x, y)]
    crossed = []
    heights = [0] * shape.padded[roof]
    for step in steps:
        before = (2 * x, 2 * y)
        if step == "D":
            y -= 1
        else:
            heights[x - 1] = y
            x -= 1
        points.append((x, y))
        edge = crossings.get(frozenset((before, (2 * x, 2 * y))))
        if edge is not None:
            crossed.append(edge)
    return PositivePath(roof=roof, steps=steps, points=tuple(points),
                        crossed=tuple(sorted(crossed)), heights=tuple(heights))


@lru_cache(maxsize=256)
def _paths(shape: FlagShape, roof: int) -> Tuple[PositivePath, ...]:
    graph = _construct(shape)
    crossings = _crossing_map(graph)
    lefts, downs = shape.padded[roof], shape.ambient - shape.padded[roof]
    words: List[str] = []

    def extend(prefix: str, left: int, down: int):
        if not left and not down:
            words.append(prefix)
            return
        if down:
            extend(prefix + "D", left, down - 1)
        if left:
            extend(prefix + "L", left - 1, down)

    extend("", lefts, downs)
    return tuple(_walk(shape, roof, w, crossings) for w in words)


def _path_from_heights(shape: FlagShape, roof: int, heights: Sequence[int]) -> PositivePath:
    y = shape.ambient - shape.padded[roof]
    steps = []
    for column in range(shape.padded[roof], 0, -1):
        steps.append("D" * (y - heights[column - 1]))
        steps.append("L")
        y = heights[column - 1]
    steps.append("D" * y)
    word = "".join(steps)
    for path in _paths(shape, roof):
        if path.steps == word:
            return path
    raise CustomException(ResponseCodeEnum.KOC01, f"no path {word} from O_{roof}")


def _dominates(shape: FlagShape, upper: PositivePath, lower: PositivePath) -> bool:
    # the under-region of a path from O_i is unbounded above columns beyond n_i
    if shape.padded[upper.roof] > shape.padded[lower.roof]:
        return False
    return all(a >= b for a, b in zip(upper.heights, lower.heights))


def annihilates(graph: LadderGraph, values: Sequence[int], kernel: KernelKind) -> bool:
    for box in graph.boxes:
        e, f = box.corner
        g, h = box.opposite
        if values[e] + values[f] != values[g] + values[h]:
            return False
    if kernel == KernelKind.DELTA:
        return all(sum(values[k] for k in roof) == 0 for roof in graph.roofs)
    return True


def _unit_segments(path: PositivePath):
    return (frozenset(pair) for pair in zip(path.points, path.points[1:]))


class PathsUseCase:
    def __init__(self, ladder_graph_usecase: LadderGraphUseCase):
        self.ladder_graph_usecase = ladder_graph_usecase

    def enumerate_positive_paths(self, graph: LadderGraph, roof: int) -> List[PositivePath]:
        logger.info("Init enumerate positive paths usecase")
        if not 1 <= roof <= graph.shape.length:
            raise CustomException(ResponseCodeEnum.KOS10, f"roof index {roof} outside 1..{graph.shape.length}")
        try:
            return list(_paths(graph.shape, roof))
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def all_paths(self, graph: LadderGraph) -> List[List[PositivePath]]:
        roofs = range(1, graph.shape.length + 1)
        return ordered_map(lambda i: list(_paths(graph.shape, i)), roofs)

    def path_functional(self, graph: LadderGraph, path: PositivePath) -> EdgeFunctional:
        values = [0] * len(graph.edges)
        for k in path.crossed:
            values[k] = 1
        return EdgeFunctional(values=tuple(values), kernel=KernelKind.BOUNDARY)

    def path_degree(self, graph: LadderGraph, values: Sequence[int]) -> Tuple[int, ...]:
        return tuple(sum(values[k] for k in roof) for roof in graph.roofs)

    def path_order_ops(self, graph: LadderGraph, first: PositivePath,
                       second: PositivePath) -> PathComparison:
        shape = graph.shape
        if _dominates(shape, first, second):
            return PathComparison(comparable=True, minimum=second, maximum=first)
        if _dominates(shape, second, first):
            return PathComparison(comparable=True, minimum=first, maximum=second)

        narrow, wide = sorted((first, second), key=lambda p: p.roof)
        width = shape.padded[narrow.roof]
        upper = [max(a, b) for a, b in zip(narrow.heights, wide.heights[:width])]
        lower = [min(a, b) for a, b in zip(narrow.heights, wide.heights[:width])]
        lower += list(wide.heights[width:])
        return PathComparison(
            comparable=False,
            minimum=_path_from_heights(shape, wide.roof, lower),
            maximum=_path_from_heights(shape, narrow.roof, upper),
        )

    def enumerate_meanders(self, graph: LadderGraph) -> List[Meander]:
        """l-tuples of positive paths whose union is a tree.

        All paths end at the origin, so every union is connected and the tree test
        reduces to counting. Partial tuples that already close a cycle are pruned.
        """
        logger.info("Init enumerate meanders usecase")
        try:
            per_roof = self.all_paths(graph)
            found: List[Tuple[PositivePath, ...]] = []

            def extend(chosen: Tuple[PositivePath, ...], vertices: frozenset, segments: frozenset):
                if len(segments) != len(vertices) - 1:
                    return
                if len(chosen) == len(per_roof):
                    found.append(chosen)
                    return
                for path in per_roof[len(chosen)]:
                    extend(chosen + (path,), vertices | frozenset(path.points),
                           segments | frozenset(_unit_segments(path)))

            extend((), frozenset({(0, 0)}), frozenset())
            return [
                Meander(id=k, paths=paths, functional=self._meander_values(graph, paths))
                for k, paths in enumerate(found)
            ]
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def _meander_values(self, graph: LadderGraph, paths: Sequence[PositivePath]) -> EdgeFunctional:
        values = [1] * len(graph.edges)
        for path in paths:
            size = graph.roof_size(path.roof)
            for k in path.crossed:
                values[k] -= size
        if not annihilates(graph, values, KernelKind.DELTA):
            raise CustomException(ResponseCodeEnum.KOC01, "meander functional misses a kernel relation")
        return EdgeFunctional(values=tuple(values), kernel=KernelKind.DELTA)

    def meander_functional(self, graph: LadderGraph, meander: Meander) -> EdgeFunctional:
        return self._meander_values(graph, meander.paths)

    def upper_set(self, graph: LadderGraph, edge_id: int) -> Tuple[int, ...]:
        if not 0 <= edge_id < len(graph.edges) or graph.edges[edge_id].roof is None:
            raise CustomException(ResponseCodeEnum.KOS04, f"edge {edge_id}")
        edge = graph.edges[edge_id]
        x, y = edge.tail.position.as_tuple()
        members = [edge_id]
        for other in graph.edges:
            if other.id == edge_id or other.direction != edge.direction:
                continue
            ox, oy = other.tail.position.as_tuple()
            if edge.direction == Direction.HORIZONTAL and ox == x and oy < y:
                members.append(other.id)
            elif edge.direction == Direction.VERTICAL and oy == y and ox < x:
                members.append(other.id)
        return tuple(sorted(members))

    def upper_set_and_sections(self, graph: LadderGraph, edge_id: int) -> UpperSet:
        logger.info("Init upper set usecase")
        members = set(self.upper_set(graph, edge_id))
        roof = graph.edges[edge_id].roof
        indicator = tuple(1 if k in members else 0 for k in range(len(graph.edges)))

        sections = []
        for path in _paths(graph.shape, roof):
            crossed = set(path.crossed)
            values = []
            for k in range(len(graph.edges)):
                if k in members:
                    values.append(0 if k in crossed else -1)
                else:
                    values.append(1 if k in crossed else 0)
            crossing = self.path_functional(graph, path).values
            if any(c != v + u for c, v, u in zip(crossing, values, indicator)):
                raise CustomException(ResponseCodeEnum.KOC06, f"section identity for {path.label}")
            if not annihilates(graph, values, KernelKind.DELTA):
                raise CustomException(ResponseCodeEnum.KOC01, f"section {path.label} is not Cartier")
            sections.append(PathSection(
                path=path, functional=EdgeFunctional(values=tuple(values), kernel=KernelKind.DELTA),
            ))
        if not annihilates(graph, indicator, KernelKind.BOUNDARY):
            raise CustomException(ResponseCodeEnum.KOC01, f"indicator of U({edge_id})")
        return UpperSet(
            edge=edge_id,
            roof=roof,
            members=tuple(sorted(members)),
            indicator=EdgeFunctional(values=indicator, kernel=KernelKind.BOUNDARY),
            sections=tuple(sections),
        )

    def cartier_difference(self, graph: LadderGraph, edge_id: int, other_id: int) -> EdgeFunctional:
        """v[e'] - v[e] for two edges of the same roof."""
        if graph.edges[edge_id].roof != graph.edges[other_id].roof:
            raise CustomException(ResponseCodeEnum.KOS04, f"edges {edge_id}, {other_id} on different roofs")
        first = set(self.upper_set(graph, edge_id))
        second = set(self.upper_set(graph, other_id))
        values = tuple(
            (1 if k in second else 0) - (1 if k in first else 0) for k in range(len(graph.edges))
        )
        if not annihilates(graph, values, KernelKind.DELTA):
            raise CustomException(ResponseCodeEnum.KOC01, "difference of upper sets is not Cartier")
        return EdgeFunctional(values=values, kernel=KernelKind.DELTA)

    def descend(self, graph: LadderGraph, values: Sequence[int]) -> Tuple[int, ...]:
        """The functional u on L(D) with u(delta(e)) = values[e], stars fixed at zero."""
        potential: Dict[str, int] = {star.label: 0 for star in graph.stars}
        adjacency: Dict[str, List[Tuple[str, int]]] = {}
        for edge in graph.edges:
            adjacency.setdefault(edge.tail.label, []).append((edge.head.label, values[edge.id]))
            adjacency.setdefault(edge.head.label, []).append((edge.tail.label, -values[edge.id]))
        queue = deque(potential)
        while queue:
            current = queue.popleft()
            for neighbour, step in adjacency.get(current, []):
                if neighbour not in potential:
                    potential[neighbour] = potential[current] + step
                    queue.append(neighbour)
        for edge in graph.edges:
            if potential[edge.head.label] - potential[edge.tail.label] != values[edge.id]:
                raise CustomException(ResponseCodeEnum.KOS05, "functional does not descend to L(D)")
        return tuple(potential[dot.label] for dot in graph.dots)
