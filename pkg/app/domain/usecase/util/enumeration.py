from typing import Iterator, List, Optional, Sequence, Tuple

from app.domain.model.ladder_graph import LadderGraph


def balanced_functionals(graph: LadderGraph, lower: Sequence[int],
                         roof_sum: Optional[int] = None,
                         weight_bound: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Integral functionals on L(E) with values >= lower that balance every box.

    Roof edges are chosen first, either summing to `roof_sum` on every roof or
    (when it is None) freely up to `weight_bound`. Boxes are then filled from the
    upper right: the opposite corner of a box is always fixed before its corner.
    """
    if roof_sum is None and weight_bound is None:
        raise ValueError("free roof values need a weight bound")
    width = len(graph.edges)
    roof_edges: List[int] = [k for roof in graph.roofs for k in roof]
    last_of_roof = {roof[-1] for roof in graph.roofs}
    roof_of = {k: i for i, roof in enumerate(graph.roofs) for k in roof}
    boxes = sorted(graph.boxes, key=lambda b: -(b.center.x + b.center.y))
    values = [0] * width

    def fill_boxes(position: int) -> Iterator[Tuple[int, ...]]:
        if position == len(boxes):
            if weight_bound is None or sum(values) <= weight_bound:
                yield tuple(values)
            return
        box = boxes[position]
        e, f = box.corner
        g, h = box.opposite
        total = values[g] + values[h]
        for value in range(lower[e], total - lower[f] + 1):
            values[e] = value
            values[f] = total - value
            yield from fill_boxes(position + 1)

    def fill_roofs(position: int, roof_partial: int, weight: int) -> Iterator[Tuple[int, ...]]:
        if position == len(roof_edges):
            yield from fill_boxes(0)
            return
        k = roof_edges[position]
        if roof_sum is not None:
            if k in last_of_roof:
                value = roof_sum - roof_partial
                if value >= lower[k]:
                    values[k] = value
                    yield from fill_roofs(position + 1, 0, weight + value)
                return
            rest = [j for j in graph.roofs[roof_of[k]] if roof_edges.index(j) > position]
            top = roof_sum - roof_partial - sum(lower[j] for j in rest)
        else:
            top = weight_bound - weight
        for value in range(lower[k], top + 1):
            values[k] = value
            yield from fill_roofs(position + 1, roof_partial + value, weight + value)

    yield from fill_roofs(0, 0, 0)
