import logging
from collections import deque
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from app.domain.model.flag_shape import FlagShape
from app.domain.model.ladder_graph import (
    Box, Direction, DualEdge, GraphEdge, GridPoint, IntVector, KernelBases, LadderGraph,
    Region, RegionKind, TransposeReport, Vertex, VertexKind,
)
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.util.lattice import determinant, rank

logger = logging.getLogger("Ladder Graph UseCase")

EdgeRef = Union[int, GraphEdge]


def _consistency(detail: str) -> CustomException:
    return CustomException(ResponseCodeEnum.KOC01, detail)


def _place_vertices(shape: FlagShape) -> Tuple[List[Vertex], List[Vertex]]:
    n = shape.ambient
    padded = shape.padded
    dot_cells = []
    for column in range(1, n + 1):
        height = n - padded[shape.block_of(column)]
        for row in range(1, height + 1):
            dot_cells.append((column, row))
    # D basis order: top row first, then left to right
    dot_cells.sort(key=lambda cell: (-cell[1], cell[0]))
    dots = [
        Vertex(kind=VertexKind.DOT, position=GridPoint(x=2 * c - 1, y=2 * r - 1),
               index=i, column=c, row=r)
        for i, (c, r) in enumerate(dot_cells)
    ]
    # star i: the (1/2, 1/2) shift of the lower-left corner of the diagonal square Q_i
    stars = [
        Vertex(kind=VertexKind.STAR,
               position=GridPoint(x=2 * padded[i - 1] + 1, y=2 * (n - padded[i]) + 1),
               index=i)
        for i in range(1, shape.length + 2)
    ]
    return dots, stars


def _region(kind: RegionKind, index: int = 0) -> Region:
    return Region(kind=kind, index=index)


@lru_cache(maxsize=64)
def _construct(shape: FlagShape) -> LadderGraph:
    dots, stars = _place_vertices(shape)
    at: Dict[Tuple[int, int], Vertex] = {v.position.as_tuple(): v for v in (*dots, *stars)}
    if len(at) != len(dots) + len(stars):
        raise _consistency("star placed on a dot")

    raw = []
    for vertex in at.values():
        x, y = vertex.position.as_tuple()
        right = at.get((x + 2, y))
        if right is not None:
            if vertex.kind == VertexKind.STAR and right.kind == VertexKind.STAR:
                raise _consistency(f"adjacent stars {vertex.label}, {right.label}")
            raw.append((vertex, right, Direction.HORIZONTAL))
        below = at.get((x, y - 2))
        if below is not None:
            if vertex.kind == VertexKind.STAR and below.kind == VertexKind.STAR:
                raise _consistency(f"adjacent stars {vertex.label}, {below.label}")
            raw.append((vertex, below, Direction.VERTICAL))
    raw.sort(key=lambda t: (-t[0].position.y, t[0].position.x, t[2].value))
    by_ends = {
        (t.position.as_tuple(), h.position.as_tuple()): i for i, (t, h, _) in enumerate(raw)
    }

    centers = []
    for vertex in at.values():
        x, y = vertex.position.as_tuple()
        if (x + 2, y) in at and (x, y - 2) in at and (x + 2, y - 2) in at:
            centers.append((x + 1, y - 1))
    centers.sort(key=lambda c: (-c[1], c[0]))

    corner_of: Dict[int, int] = {}
    opposite_of: Dict[int, int] = {}
    boxes = []
    for b, (cx, cy) in enumerate(centers):
        ul, ur, ll, lr = (cx - 1, cy + 1), (cx + 1, cy + 1), (cx - 1, cy - 1), (cx + 1, cy - 1)
        try:
            e, f = by_ends[(ul, ll)], by_ends[(ll, lr)]
            g, h = by_ends[(ul, ur)], by_ends[(ur, lr)]
        except KeyError:
            raise _consistency(f"box at {(cx, cy)} is not a 4-cycle")
        for edge in (e, f):
            if edge in corner_of:
                raise _consistency(f"edge {edge} in two corners")
            corner_of[edge] = b
        for edge in (g, h):
            if edge in opposite_of:
                raise _consistency(f"edge {edge} in two opposite corners")
            opposite_of[edge] = b
        boxes.append(Box(id=b, center=GridPoint(x=cx, y=cy), corner=(e, f), opposite=(g, h)))

    roof_of: Dict[int, int] = {}
    roofs = []
    for i in range(1, shape.length + 1):
        current = stars[i - 1]
        path = []
        while True:
            outgoing = [
                k for k, (t, _, _) in enumerate(raw) if t == current and k not in corner_of
            ]
            if len(outgoing) != 1:
                raise _consistency(f"roof {i} branches at {current.label}")
            edge = outgoing[0]
            if edge in roof_of:
                raise _consistency(f"edge {edge} on roofs {roof_of[edge]} and {i}")
            roof_of[edge] = i
            path.append(edge)
            current = raw[edge][1]
            if current.kind == VertexKind.STAR:
                break
        if current != stars[i]:
            raise _consistency(f"roof {i} ends at {current.label}")
        roofs.append(tuple(path))

    for k in range(len(raw)):
        if (k in roof_of) == (k in corner_of):
            raise _consistency(f"edge {k} is not in exactly one roof or corner")

    edges = tuple(
        GraphEdge(id=k, tail=t, head=h, direction=d, roof=roof_of.get(k),
                  corner_of=corner_of.get(k), opposite_of=opposite_of.get(k))
        for k, (t, h, d) in enumerate(raw)
    )

    box_at = {box.center.as_tuple(): box.id for box in boxes}
    dual_edges = []
    for edge in edges:
        x, y = edge.tail.position.as_tuple()
        if edge.direction == Direction.HORIZONTAL:
            tail_point, head_point = (x + 1, y - 1), (x + 1, y + 1)
        else:
            tail_point, head_point = (x - 1, y - 1), (x + 1, y - 1)
        if tail_point in box_at:
            tail = _region(RegionKind.BOX, box_at[tail_point])
        elif tail_point[0] == 0 or tail_point[1] == 0:
            tail = _region(RegionKind.OUTSIDE)
        else:
            raise _consistency(f"dual tail of edge {edge.id} is outside but off the axes")
        if head_point in box_at:
            head = _region(RegionKind.BOX, box_at[head_point])
        elif edge.roof is not None:
            head = _region(RegionKind.ROOF, edge.roof)
        else:
            raise _consistency(f"non-roof edge {edge.id} has an outside dual head")
        dual_edges.append(DualEdge(
            edge=edge.id, tail=tail, head=head,
            segment=(GridPoint(x=tail_point[0], y=tail_point[1]),
                     GridPoint(x=head_point[0], y=head_point[1])),
        ))

    graph = LadderGraph(
        shape=shape,
        cells=tuple((d.column, d.row) for d in dots),
        dots=tuple(dots),
        stars=tuple(stars),
        edges=edges,
        boxes=tuple(boxes),
        roofs=tuple(roofs),
        dual_edges=tuple(dual_edges),
    )
    _verify_counts(graph)
    return graph


def _verify_counts(graph: LadderGraph):
    shape = graph.shape
    if len(graph.cells) != shape.dimension:
        raise _consistency("cell count differs from the dimension")
    expected_boxes = len(graph.edges) - len(graph.dots) - len(graph.stars) + 1
    if len(graph.boxes) != expected_boxes:
        raise _consistency(f"{len(graph.boxes)} boxes, cycle rank {expected_boxes}")
    blocks = shape.blocks
    for i, roof in enumerate(graph.roofs, start=1):
        if len(roof) != blocks[i - 1] + blocks[i]:
            raise _consistency(f"roof {i} has {len(roof)} edges")

    neighbours: Dict[str, List[str]] = {}
    for edge in graph.edges:
        neighbours.setdefault(edge.tail.label, []).append(edge.head.label)
        neighbours.setdefault(edge.head.label, []).append(edge.tail.label)
    start = graph.stars[0].label
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in neighbours.get(queue.popleft(), []):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if len(seen) != len(graph.dots) + len(graph.stars):
        raise _consistency("graph is not connected")


def delta_values(graph: LadderGraph, edge: GraphEdge) -> Tuple[int, ...]:
    values = [0] * len(graph.dots)
    if edge.head.kind == VertexKind.DOT:
        values[edge.head.index] += 1
    if edge.tail.kind == VertexKind.DOT:
        values[edge.tail.index] -= 1
    return tuple(values)


def delta_matrix(graph: LadderGraph) -> List[Tuple[int, ...]]:
    """Row e is delta(e) over the dot basis."""
    return [delta_values(graph, edge) for edge in graph.edges]


def _boundary_values(graph: LadderGraph, edge: GraphEdge) -> Tuple[int, ...]:
    width = len(graph.dots)
    values = [0] * (width + len(graph.stars))

    def slot(vertex: Vertex) -> int:
        return vertex.index if vertex.kind == VertexKind.DOT else width + vertex.index - 1

    values[slot(edge.head)] += 1
    values[slot(edge.tail)] -= 1
    return tuple(values)


class LadderGraphUseCase:
    def build_shape(self, steps: Sequence[int], ambient: int) -> FlagShape:
        logger.info("Init build shape usecase")
        steps = tuple(int(s) for s in steps)
        if not steps:
            raise CustomException(ResponseCodeEnum.KOS01, "at least one step is required")
        if steps[0] <= 0:
            raise CustomException(ResponseCodeEnum.KOS01, "steps must be positive")
        if any(a >= b for a, b in zip(steps, steps[1:])):
            raise CustomException(ResponseCodeEnum.KOS01, "steps must be strictly increasing")
        if steps[-1] >= ambient:
            raise CustomException(ResponseCodeEnum.KOS01, f"n_l = {steps[-1]} must be below n = {ambient}")
        return FlagShape(steps=steps, ambient=ambient)

    def flag_dimension(self, shape: FlagShape) -> int:
        return shape.dimension

    def build_graph(self, shape: FlagShape) -> LadderGraph:
        logger.info("Init build graph usecase")
        try:
            graph = _construct(shape)
            logger.debug(
                f"{shape.label}: |D|={len(graph.dots)} |E|={len(graph.edges)} |B|={len(graph.boxes)}"
            )
            return graph
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def delta_vector(self, graph: LadderGraph, edge: EdgeRef) -> IntVector:
        if isinstance(edge, int):
            edge = graph.edges[edge]
        return IntVector(basis="D", values=delta_values(graph, edge))

    def boundary_vector(self, graph: LadderGraph, edge: EdgeRef) -> IntVector:
        if isinstance(edge, int):
            edge = graph.edges[edge]
        return IntVector(basis="D+S", values=_boundary_values(graph, edge))

    def kernel_bases(self, graph: LadderGraph) -> KernelBases:
        logger.info("Init kernel bases usecase")
        try:
            width = len(graph.edges)
            box_vectors = []
            for box in graph.boxes:
                values = [0] * width
                for k in box.corner:
                    values[k] += 1
                for k in box.opposite:
                    values[k] -= 1
                box_vectors.append(tuple(values))
            roof_vectors = [
                tuple(1 if k in roof else 0 for k in range(width)) for roof in graph.roofs
            ]

            deltas = delta_matrix(graph)
            boundaries = [_boundary_values(graph, edge) for edge in graph.edges]
            for rho in box_vectors:
                if any(sum(rho[k] * row[j] for k, row in enumerate(boundaries))
                       for j in range(len(boundaries[0]))):
                    raise _consistency("box vector outside Ker(boundary)")
            for rho in roof_vectors:
                if any(sum(rho[k] * row[j] for k, row in enumerate(deltas))
                       for j in range(len(graph.dots))):
                    raise _consistency("roof vector outside Ker(delta)")

            boundary_rank = rank(boundaries)
            delta_rank = rank(deltas)
            if width - boundary_rank != len(box_vectors):
                raise _consistency(f"Ker(boundary) has rank {width - boundary_rank}")
            if width - delta_rank != len(box_vectors) + len(roof_vectors):
                raise _consistency(f"Ker(delta) has rank {width - delta_rank}")

            pivots = tuple(box.corner[0] for box in graph.boxes) + tuple(r[0] for r in graph.roofs)
            basis = box_vectors + roof_vectors
            box_minor = determinant([[rho[c] for c in pivots[:len(box_vectors)]] for rho in box_vectors])
            full_minor = determinant([[rho[c] for c in pivots] for rho in basis])
            if abs(box_minor) != 1 or abs(full_minor) != 1:
                raise _consistency(f"pivot minors {box_minor}, {full_minor} are not units")

            return KernelBases(
                box_vectors=tuple(IntVector(basis="E", values=v) for v in box_vectors),
                roof_vectors=tuple(IntVector(basis="E", values=v) for v in roof_vectors),
                boundary_rank=boundary_rank,
                delta_rank=delta_rank,
                pivot_columns=pivots,
                pivot_determinant=full_minor,
            )
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def build_dual_graph(self, graph: LadderGraph) -> Tuple[DualEdge, ...]:
        crossed = [dual.edge for dual in graph.dual_edges]
        if sorted(crossed) != list(range(len(graph.edges))):
            raise _consistency("dual edges are not in bijection with edges")
        roof_heads = set()
        for dual in graph.dual_edges:
            if dual.head.kind == RegionKind.ROOF:
                if graph.edges[dual.edge].roof != dual.head.index:
                    raise _consistency(f"edge {dual.edge} has a foreign roof head")
                roof_heads.add(dual.head.index)
            if dual.tail.kind == RegionKind.ROOF or dual.head.kind == RegionKind.OUTSIDE:
                raise _consistency(f"dual edge {dual.edge} is misoriented")
        if roof_heads != set(range(1, graph.shape.length + 1)):
            raise _consistency("dual graph misses a roof region")
        return graph.dual_edges

    def transpose_invariants(self, shape: FlagShape) -> TransposeReport:
        """Compare the graph of a shape with the reflected graph of its dual shape."""
        logger.info("Init transpose invariants usecase")
        graph = self.build_graph(shape)
        dual_shape = shape.dual()
        dual = self.build_graph(dual_shape)

        def flip(point: GridPoint) -> Tuple[int, int]:
            return (point.y, point.x)

        def edge_set(g: LadderGraph, reflect: bool):
            key = flip if reflect else GridPoint.as_tuple
            return {frozenset((key(e.tail.position), key(e.head.position))) for e in g.edges}

        def roof_sets(g: LadderGraph, reflect: bool):
            key = flip if reflect else GridPoint.as_tuple
            return [
                {frozenset((key(g.edges[k].tail.position), key(g.edges[k].head.position)))
                 for k in roof}
                for roof in g.roofs
            ]

        same_vertices = (
            {flip(v.position) for v in (*graph.dots, *graph.stars)}
            == {v.position.as_tuple() for v in (*dual.dots, *dual.stars)}
        )
        same_edges = edge_set(graph, True) == edge_set(dual, False)
        same_roofs = roof_sets(graph, True) == list(reversed(roof_sets(dual, False)))
        same_boxes = (
            {flip(b.center) for b in graph.boxes} == {b.center.as_tuple() for b in dual.boxes}
        )

        def counts(g: LadderGraph) -> Tuple[int, int, int, int]:
            return (len(g.dots), len(g.stars), len(g.edges), len(g.boxes))

        return TransposeReport(
            shape=shape,
            dual_shape=dual_shape,
            counts=counts(graph),
            dual_counts=counts(dual),
            roof_sizes=tuple(len(r) for r in graph.roofs),
            dual_roof_sizes=tuple(len(r) for r in dual.roofs),
            isomorphic=same_vertices and same_edges and same_roofs and same_boxes,
        )
