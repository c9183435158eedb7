import logging
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from app.application.settings import settings
from app.domain.model.ladder_graph import LadderGraph, Region, RegionKind
from app.domain.model.series import (
    Coefficient, EdgeDegrees, MirrorEquation, MirrorMonomial, MirrorSystem, SeriesIndex, SeriesTerm,
)
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.ladder_graph_usecase import delta_matrix
from app.domain.usecase.paths_usecase import PathsUseCase
from app.domain.usecase.util.parallel import ordered_map
from app.domain.usecase.util.rational import binomial, factorial_product
from app.domain.usecase.util.series_ring import (
    coefficient, exponential, geometric, laurent_ring, monomial, select, truncated_product,
)

logger = logging.getLogger("Hypergeometric UseCase")

Degrees = Sequence[Sequence[int]]


def _region_degree(region: Region, idx: SeriesIndex) -> int:
    if region.kind == RegionKind.ROOF:
        return idx.roof_degrees[region.index - 1]
    if region.kind == RegionKind.BOX:
        return idx.box_degrees[region.index]
    return 0


def _denominator(graph: LadderGraph, roof_degrees: Sequence[int]) -> int:
    result = 1
    for i, m in enumerate(roof_degrees, start=1):
        result *= factorial(m) ** graph.roof_size(i)
    return result


def _coefficient(graph: LadderGraph, value: Fraction, roof_degrees: Sequence[int]) -> Coefficient:
    numerator = value * _denominator(graph, roof_degrees)
    if numerator.denominator != 1:
        raise CustomException(ResponseCodeEnum.KOC07, f"B = {numerator} is not integral")
    return Coefficient(value=value, numerator=numerator.numerator)


def admissible_box_degrees(graph: LadderGraph, roof_degrees: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Every box degree vector with all d_e >= 0 for the given roof degrees.

    Boxes are fixed from the upper right, each bounded by the regions its dual
    edges point into; a box without such an edge would leave the sum infinite.
    """
    heads: Dict[int, List[Region]] = {box.id: [] for box in graph.boxes}
    for dual in graph.dual_edges:
        if dual.tail.kind == RegionKind.BOX:
            heads[dual.tail.index].append(dual.head)
    if any(not regions for regions in heads.values()):
        raise CustomException(ResponseCodeEnum.KOC01, "box without an upward dual edge")
    order = sorted(graph.boxes, key=lambda b: -(b.center.x + b.center.y))
    values = [0] * len(graph.boxes)

    def bound(region: Region) -> int:
        if region.kind == RegionKind.ROOF:
            return roof_degrees[region.index - 1]
        if region.kind == RegionKind.BOX:
            return values[region.index]
        return 0

    def fill(position: int) -> Iterator[Tuple[int, ...]]:
        if position == len(order):
            yield tuple(values)
            return
        box = order[position]
        for value in range(min(bound(r) for r in heads[box.id]) + 1):
            values[box.id] = value
            yield from fill(position + 1)

    yield from fill(0)


def roof_degree_indices(length: int, max_roof_degree: int) -> List[Tuple[int, ...]]:
    """Roof degree vectors of total degree at most the bound, graded then lexicographic."""
    indices = [m for m in product(range(max_roof_degree + 1), repeat=length) if sum(m) <= max_roof_degree]
    return sorted(indices, key=lambda m: (sum(m), m))


class HypergeometricUseCase:
    def __init__(self, paths_usecase: PathsUseCase):
        self.paths_usecase = paths_usecase

    def _check_index(self, graph: LadderGraph, idx: SeriesIndex):
        if len(idx.roof_degrees) != graph.shape.length or len(idx.box_degrees) != len(graph.boxes):
            raise CustomException(
                ResponseCodeEnum.KOS10,
                f"index needs {graph.shape.length} roof and {len(graph.boxes)} box degrees",
            )
        if any(m < 0 for m in (*idx.roof_degrees, *idx.box_degrees)):
            raise CustomException(ResponseCodeEnum.KOS10, "degrees must be nonnegative")

    def edge_degrees(self, graph: LadderGraph, idx: SeriesIndex) -> EdgeDegrees:
        self._check_index(graph, idx)
        values = [0] * len(graph.edges)
        for dual in graph.dual_edges:
            values[dual.edge] = _region_degree(dual.head, idx) - _region_degree(dual.tail, idx)
        return EdgeDegrees(values=tuple(values))

    def coefficient_closed_form(self, graph: LadderGraph, idx: SeriesIndex) -> Coefficient:
        self._check_index(graph, idx)
        numerator = 1
        for dual in graph.dual_edges:
            numerator *= binomial(_region_degree(dual.head, idx), _region_degree(dual.tail, idx))
        value = Fraction(numerator, _denominator(graph, idx.roof_degrees))
        return Coefficient(value=value, numerator=numerator)

    def coefficient_degree_product(self, graph: LadderGraph, idx: SeriesIndex) -> Coefficient:
        degrees = self.edge_degrees(graph, idx)
        if not degrees.admissible:
            return Coefficient(value=Fraction(0), numerator=0)
        return _coefficient(graph, Fraction(1, factorial_product(degrees.values)), idx.roof_degrees)

    def constant_term_oracle(self, graph: LadderGraph, idx: SeriesIndex,
                             truncation: Optional[int] = None) -> Coefficient:
        """Constant term of the truncated integrand at the requested (q, q~) degree.

        Variables are ordered q_1..q_l, q~_b per box, then y_e per edge. The roof
        and box equations contribute geometric series, each edge an exponential.
        """
        logger.info("Init constant term oracle usecase")
        self._check_index(graph, idx)
        self._check_gates(graph, idx.roof_degrees)
        target = (*idx.roof_degrees, *idx.box_degrees)
        order = max(target, default=0) if truncation is None else truncation
        if order < max(target, default=0):
            raise CustomException(ResponseCodeEnum.KOS09, f"order {order} below degree {max(target)}")
        try:
            l, boxes = graph.shape.length, len(graph.boxes)
            names = [f"q{i}" for i in range(1, l + 1)]
            names += [f"qb{b.id}" for b in graph.boxes]
            names += [f"y{e.id}" for e in graph.edges]
            R, gens = laurent_ring(names)
            width = len(gens)
            bounds = list(zip(gens[:l + boxes], target))

            def y(edge: int) -> int:
                return l + boxes + edge

            integrand = R.one
            for i, roof in enumerate(graph.roofs):
                step = [0] * width
                step[i] = 1
                for k in roof:
                    step[y(k)] = -1
                integrand = truncated_product(integrand, geometric(R, step, gens[i], order + 1), bounds)
            for box in graph.boxes:
                step = [0] * width
                step[l + box.id] = 1
                for k in box.opposite:
                    step[y(k)] += 1
                for k in box.corner:
                    step[y(k)] -= 1
                integrand = truncated_product(
                    integrand, geometric(R, step, gens[l + box.id], order + 1), bounds,
                )
            integrand = select(integrand, lambda exponent: exponent[:l + boxes] == target)

            for edge in graph.edges:
                slot = y(edge.id)
                needed = max((-e[slot] for e in integrand.keys()), default=0)
                if needed > order:
                    raise CustomException(ResponseCodeEnum.KOS09, f"edge {edge.id} needs order {needed}")
                integrand = select(
                    integrand * exponential(gens[slot], order + 1),
                    lambda exponent: exponent[slot] == 0,
                )
            value = coefficient(integrand, (*target, *([0] * len(graph.edges))))
            return _coefficient(graph, value, idx.roof_degrees)
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def _check_gates(self, graph: LadderGraph, roof_degrees: Sequence[int]):
        if len(graph.edges) > settings.ORACLE_MAX_EDGES:
            raise CustomException(ResponseCodeEnum.KOS10, f"oracle limited to {settings.ORACLE_MAX_EDGES} edges")
        if sum(roof_degrees) > settings.ORACLE_MAX_DEGREE:
            raise CustomException(ResponseCodeEnum.KOS10, f"oracle limited to degree {settings.ORACLE_MAX_DEGREE}")

    def phi_F(self, graph: LadderGraph, max_roof_degree: int) -> List[SeriesTerm]:
        """Coefficients of the series at q~ = 1, one term per roof degree vector."""
        logger.info("Init phi F usecase")
        if max_roof_degree < 0:
            raise CustomException(ResponseCodeEnum.KOS10, "maximal degree must be nonnegative")
        try:
            def term(roof_degrees: Tuple[int, ...]) -> SeriesTerm:
                total = Fraction(0)
                for box_degrees in admissible_box_degrees(graph, roof_degrees):
                    idx = SeriesIndex(roof_degrees=roof_degrees, box_degrees=box_degrees)
                    total += self.coefficient_degree_product(graph, idx).value
                numerator = total * _denominator(graph, roof_degrees)
                return SeriesTerm(roof_degrees=roof_degrees, value=total, numerator=numerator.numerator)

            return ordered_map(term, roof_degree_indices(graph.shape.length, max_roof_degree))
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def check_degrees(self, graph: LadderGraph, degrees: Degrees) -> Tuple[Tuple[int, ...], ...]:
        checked = []
        for j, vector in enumerate(degrees, start=1):
            vector = tuple(vector)
            if len(vector) != graph.shape.length:
                raise CustomException(ResponseCodeEnum.KOS03, f"degree {j} needs {graph.shape.length} entries")
            if any(v < 0 for v in vector) or not any(vector):
                raise CustomException(ResponseCodeEnum.KOS03, f"degree {j} must be nonnegative and nonzero")
            checked.append(vector)
        return tuple(checked)

    def phi_X(self, graph: LadderGraph, degrees: Degrees, max_roof_degree: int) -> List[SeriesTerm]:
        logger.info("Init phi X usecase")
        degrees = self.check_degrees(graph, degrees)
        terms = []
        for term in self.phi_F(graph, max_roof_degree):
            factor = 1
            for vector in degrees:
                factor *= factorial(sum(d * m for d, m in zip(vector, term.roof_degrees)))
            value = term.value * factor
            terms.append(SeriesTerm(
                roof_degrees=term.roof_degrees,
                value=value,
                numerator=term.numerator * factor,
            ))
        return terms

    def verify_coefficients(self, graph: LadderGraph, max_roof_degree: int,
                            with_oracle: bool = False) -> int:
        """Compare the closed form with the degree product on every index in range.

        Box degrees run up to the largest roof degree, so inadmissible indices are
        covered too. Returns the number of indices compared.
        """
        logger.info("Init verify coefficients usecase")
        checked = 0
        for roof_degrees in roof_degree_indices(graph.shape.length, max_roof_degree):
            top = max(roof_degrees, default=0)
            for box_degrees in product(range(top + 1), repeat=len(graph.boxes)):
                idx = SeriesIndex(roof_degrees=roof_degrees, box_degrees=box_degrees)
                closed = self.coefficient_closed_form(graph, idx)
                degree_product = self.coefficient_degree_product(graph, idx)
                if closed.value != degree_product.value:
                    raise CustomException(
                        ResponseCodeEnum.KOC07,
                        f"{roof_degrees}|{box_degrees}: {closed.value} != {degree_product.value}",
                    )
                if with_oracle and sum(roof_degrees) <= settings.ORACLE_MAX_DEGREE:
                    oracle = self.constant_term_oracle(graph, idx)
                    if oracle.value != closed.value:
                        raise CustomException(
                            ResponseCodeEnum.KOC07,
                            f"{roof_degrees}|{box_degrees}: oracle gives {oracle.value}",
                        )
                checked += 1
        return checked

    def mirror_system(self, graph: LadderGraph, degrees: Degrees,
                      assignment: Optional[Sequence[Sequence[int]]] = None) -> MirrorSystem:
        logger.info("Init mirror system usecase")
        degrees = self.check_degrees(graph, degrees)
        sizes = tuple(len(roof) for roof in graph.roofs)
        totals = tuple(sum(vector[i] for vector in degrees) for i in range(graph.shape.length))
        if totals != sizes:
            raise CustomException(ResponseCodeEnum.KOS06, f"degrees sum to {totals}, roofs have {sizes}")
        if assignment is None:
            assignment = tuple(
                tuple(j for j, vector in enumerate(degrees, start=1) for _ in range(vector[i]))
                for i in range(graph.shape.length)
            )
        else:
            assignment = tuple(tuple(segments) for segments in assignment)
            if len(assignment) != graph.shape.length:
                raise CustomException(ResponseCodeEnum.KOS06, f"assignment needs {graph.shape.length} roofs")
            for i, segments in enumerate(assignment):
                counts = tuple(segments.count(j) for j in range(1, len(degrees) + 1))
                if len(segments) != sizes[i] or counts != tuple(v[i] for v in degrees):
                    raise CustomException(ResponseCodeEnum.KOS06, f"roof {i + 1} segments {segments}")

        vectors = delta_matrix(graph)
        groups: List[List[MirrorMonomial]] = [[] for _ in degrees]
        roof_edges: List[List[int]] = [[] for _ in degrees]
        for roof, segments in zip(graph.roofs, assignment):
            for edge_id, j in zip(roof, segments):
                roof_edges[j - 1].append(edge_id)
                for f in self.paths_usecase.upper_set(graph, edge_id):
                    groups[j - 1].append(MirrorMonomial(edge=f, roof_edge=edge_id, exponent=vectors[f]))
        covered = sorted(m.edge for group in groups for m in group)
        if covered != list(range(len(graph.edges))):
            raise CustomException(ResponseCodeEnum.KOC01, "upper sets do not partition the edges")

        equations = tuple(
            MirrorEquation(index=j, degree=degrees[j - 1], roof_edges=tuple(roof_edges[j - 1]),
                           monomials=tuple(groups[j - 1]))
            for j in range(1, len(degrees) + 1)
        )
        origin = (0,) * len(graph.dots)
        support = []
        for group in groups:
            points = [origin]
            for monomial in group:
                if monomial.exponent not in points:
                    points.append(monomial.exponent)
            support.append(tuple(points))
        return MirrorSystem(
            degrees=degrees,
            assignment=assignment,
            equations=equations,
            box_constraints=tuple((*box.corner, *box.opposite) for box in graph.boxes),
            newton_support=tuple(support),
        )

    def period_oracle(self, graph: LadderGraph, degrees: Degrees, roof_degrees: Sequence[int],
                      truncation: Optional[int] = None,
                      assignment: Optional[Sequence[Sequence[int]]] = None) -> Fraction:
        """Constant term of the period integrand, summed over box degrees (q~ = 1).

        Each equation contributes the truncated geometric series of 1/E_j, where E_j
        is one minus the sum of the edge variables of its upper sets.
        """
        logger.info("Init period oracle usecase")
        roof_degrees = tuple(roof_degrees)
        if len(roof_degrees) != graph.shape.length or any(m < 0 for m in roof_degrees):
            raise CustomException(ResponseCodeEnum.KOS10, f"roof degrees {roof_degrees}")
        self._check_gates(graph, roof_degrees)
        system = self.mirror_system(graph, degrees, assignment)
        width = len(graph.edges)
        R, gens = laurent_ring([f"y{e.id}" for e in graph.edges])
        needed_total = sum(m * graph.roof_size(i) for i, m in enumerate(roof_degrees, start=1))
        order = needed_total if truncation is None else truncation
        try:
            series = []
            for equation in system.equations:
                variables = tuple(m.edge for m in equation.monomials)
                linear = sum((gens[k] for k in variables), R.zero)
                total = sum((linear ** d for d in range(order + 1)), R.zero)
                series.append((variables, total))

            value = Fraction(0)
            for box_degrees in product(range(max(roof_degrees, default=0) + 1), repeat=len(graph.boxes)):
                exponent = [0] * width
                for i, roof in enumerate(graph.roofs):
                    for k in roof:
                        exponent[k] -= roof_degrees[i]
                for box, m in zip(graph.boxes, box_degrees):
                    for k in box.opposite:
                        exponent[k] += m
                    for k in box.corner:
                        exponent[k] -= m
                if any(e > 0 for e in exponent):
                    continue
                for variables, total in series:
                    if -sum(exponent[k] for k in variables) > order:
                        raise CustomException(ResponseCodeEnum.KOS09, f"order {order} too small")
                integrand = monomial(R, exponent)
                for variables, total in series:
                    integrand = select(integrand * total, lambda e, v=variables: all(e[k] == 0 for k in v))
                value += coefficient(integrand, (0,) * width)
            return value
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def check_duality(self, graph: LadderGraph, dual: LadderGraph, max_roof_degree: int) -> bool:
        own = {t.roof_degrees: t.value for t in self.phi_F(graph, max_roof_degree)}
        other = {tuple(reversed(t.roof_degrees)): t.value for t in self.phi_F(dual, max_roof_degree)}
        return own == other
