import logging
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from app.application.settings import settings
from app.domain.model.ladder_graph import LadderGraph
from app.domain.model.path import Meander
from app.domain.model.polytope import ConifoldStratum, Facet, HullFacet, ReflexivePolytope, SimplicialCone
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.ladder_graph_usecase import delta_matrix
from app.domain.usecase.paths_usecase import PathsUseCase
from app.domain.usecase.util.hull import facets_by_enumeration
from app.domain.usecase.util.lattice import determinant, dot, maximal_minor_gcd, rank
from app.domain.usecase.util.parallel import ordered_map

logger = logging.getLogger("Polytope UseCase")


def _hull_vertices(count: int, facets: Sequence[Tuple[int, ...]]) -> Tuple[int, ...]:
    vertices = []
    for point in range(count):
        around = [set(f) for f in facets if point in f]
        if around and set.intersection(*around) == {point}:
            vertices.append(point)
    return tuple(vertices)


class PolytopeUseCase:
    def __init__(self, paths_usecase: PathsUseCase):
        self.paths_usecase = paths_usecase

    def build_polytope_with_facets(self, graph: LadderGraph, scan: Optional[bool] = None) -> ReflexivePolytope:
        """Delta = conv(delta(E)) with one facet per meander, certified reflexive.

        With `scan` the lattice points of the bounding box are tested as well; by
        default the scan runs whenever the box fits the configured budget.
        """
        logger.info("Init build polytope usecase")
        try:
            meanders = self.paths_usecase.enumerate_meanders(graph)
            vectors = delta_matrix(graph)
            dimension = len(graph.dots)

            def certify(meander: Meander) -> Facet:
                functional = self.paths_usecase.descend(graph, meander.functional.values)
                levels = [dot(functional, v) for v in vectors]
                if levels != list(meander.functional.values):
                    raise CustomException(ResponseCodeEnum.KOC02, f"meander {meander.id} does not descend")
                if max(levels) != 1 or any(value > 1 for value in levels):
                    raise CustomException(ResponseCodeEnum.KOC02, f"meander {meander.id} exceeds level 1")
                incident = meander.incident
                if rank([vectors[k] for k in incident]) != dimension:
                    raise CustomException(ResponseCodeEnum.KOC02, f"meander {meander.id} is not a facet")
                return Facet(meander=meander.id, functional=functional, incident=incident)

            facets = ordered_map(certify, meanders)
            if len({f.incident for f in facets}) != len(facets):
                raise CustomException(ResponseCodeEnum.KOC02, "two meanders share a facet")

            interior = None
            box_size = 1
            for j in range(dimension):
                column = [v[j] for v in vectors]
                box_size *= max(column) - min(column) + 1
            if scan or (scan is None and box_size <= settings.SCAN_MAX_POINTS):
                interior = self.interior_lattice_points(vectors, [f.functional for f in facets])
                if interior != 1:
                    raise CustomException(ResponseCodeEnum.KOC02, f"{interior} interior lattice points")

            return ReflexivePolytope(
                dimension=dimension,
                vertices=tuple(vectors),
                facets=tuple(facets),
                hull_vertices=_hull_vertices(len(vectors), [f.incident for f in facets]),
                reflexive=True,
                interior_points=interior,
            )
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def interior_lattice_points(self, vectors: Sequence[Sequence[int]],
                                functionals: Sequence[Sequence[int]], stop_after: int = 2) -> int:
        """Count lattice points strictly inside {u_m <= 1} within the bounding box of the vectors."""
        ranges = [
            range(min(v[j] for v in vectors), max(v[j] for v in vectors) + 1)
            for j in range(len(vectors[0]))
        ]
        found = 0
        for point in product(*ranges):
            if all(dot(u, point) <= 0 for u in functionals):
                found += 1
                if found >= stop_after:
                    break
        return found

    def brute_force_facets(self, points: Sequence[Sequence[int]]) -> List[HullFacet]:
        logger.info("Init brute force facets usecase")
        if points and len(points[0]) > settings.HULL_MAX_DIMENSION:
            raise CustomException(ResponseCodeEnum.KOS10, f"dimension above {settings.HULL_MAX_DIMENSION}")
        if len(points) > settings.HULL_MAX_POINTS:
            raise CustomException(ResponseCodeEnum.KOS10, f"more than {settings.HULL_MAX_POINTS} points")
        return facets_by_enumeration(points)

    def hull_agrees(self, graph: LadderGraph, polytope: ReflexivePolytope) -> bool:
        hull = self.brute_force_facets(polytope.vertices)
        return {f.incident for f in hull} == {f.incident for f in polytope.facets}

    def refined_fan(self, graph: LadderGraph) -> List[SimplicialCone]:
        logger.info("Init refined fan usecase")
        try:
            vectors = delta_matrix(graph)
            meanders = self.paths_usecase.enumerate_meanders(graph)
            by_paths: Dict[Tuple[str, ...], Meander] = {
                tuple(p.label for p in m.paths): m for m in meanders
            }
            per_roof = self.paths_usecase.all_paths(graph)
            box_edges = [set(box.edges) for box in graph.boxes]
            choices = list(product(*graph.roofs, *(box.corner for box in graph.boxes)))
            l = graph.shape.length

            def cone(item: Tuple[int, Tuple[int, ...]]) -> SimplicialCone:
                number, choice = item
                omitted = set(choice)
                generators = tuple(k for k in range(len(vectors)) if k not in omitted)
                det = determinant([vectors[k] for k in generators])
                if abs(det) != 1:
                    raise CustomException(ResponseCodeEnum.KOC03, f"cone {number} has determinant {det}")
                box_choice = choice[l:]
                tuple_paths = []
                for i in range(l):
                    candidates = []
                    for path in per_roof[i]:
                        crossed = set(path.crossed)
                        if choice[i] not in crossed:
                            continue
                        if all(box_choice[b] in crossed for b, edges in enumerate(box_edges)
                               if crossed & edges):
                            candidates.append(path)
                    if len(candidates) != 1:
                        raise CustomException(
                            ResponseCodeEnum.KOC04, f"cone {number}: {len(candidates)} paths for roof {i + 1}",
                        )
                    tuple_paths.append(candidates[0])
                meander = by_paths.get(tuple(p.label for p in tuple_paths))
                if meander is None:
                    raise CustomException(ResponseCodeEnum.KOC04, f"cone {number} picks no meander")
                if any(meander.functional.values[k] != 1 for k in generators):
                    raise CustomException(ResponseCodeEnum.KOC04, f"cone {number} leaves facet {meander.id}")
                return SimplicialCone(
                    id=number, omitted=tuple(sorted(omitted)), generators=generators,
                    determinant=det, meander=meander.id,
                )

            return ordered_map(cone, list(enumerate(choices)))
        except CustomException as e:
            logger.error(f"Custom exception: {e}")
            raise e
        except Exception as e:
            logger.error(f"Unhandled error: {e}")
            raise CustomException(ResponseCodeEnum.KOG01)

    def singular_strata(self, graph: LadderGraph) -> List[ConifoldStratum]:
        logger.info("Init singular strata usecase")
        vectors = delta_matrix(graph)
        strata = []
        for box in graph.boxes:
            e, f, g, h = (vectors[k] for k in box.edges)
            if [a + b for a, b in zip(e, f)] != [a + b for a, b in zip(g, h)]:
                raise CustomException(ResponseCodeEnum.KOC05, f"box {box.id} is not a square")
            basis = (
                tuple(a - b for a, b in zip(e, g)),
                tuple(a - b for a, b in zip(f, g)),
                tuple(g),
            )
            if rank(basis) != 3:
                raise CustomException(ResponseCodeEnum.KOC05, f"box {box.id} spans rank {rank(basis)}")
            gcd_value, unit = maximal_minor_gcd(basis)
            if gcd_value != 1:
                raise CustomException(ResponseCodeEnum.KOC05, f"box {box.id} is not saturated")
            strata.append(ConifoldStratum(
                box=box.id, vectors=(e, f, g, h), basis=basis, minor_gcd=gcd_value, unit_minor=unit,
            ))
        return strata
