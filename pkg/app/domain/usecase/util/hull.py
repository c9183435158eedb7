import logging
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from app.domain.model.polytope import HullFacet
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.util.lattice import dot, integer_nullspace, rank

logger = logging.getLogger("Hull Oracle")


def facets_by_enumeration(points: Sequence[Sequence[int]]) -> List[HullFacet]:
    """Facets of conv(points) by testing the hyperplane through every d-subset.

    Exponential in the number of points; meant as an independent oracle at desk scale.
    """
    if not points:
        raise CustomException(ResponseCodeEnum.KOS08, "no points")
    width = len(points[0])
    base = points[0]
    if rank([[a - b for a, b in zip(p, base)] for p in points[1:]]) < width:
        raise CustomException(ResponseCodeEnum.KOS08, f"affine rank below {width}")

    found: Dict[Tuple[int, ...], HullFacet] = {}
    for subset in combinations(range(len(points)), width):
        anchor = points[subset[0]]
        differences = [[a - b for a, b in zip(points[i], anchor)] for i in subset[1:]]
        kernel = integer_nullspace(differences, width)
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        offset = dot(normal, anchor)
        values = [dot(normal, p) for p in points]
        if all(v <= offset for v in values):
            pass
        elif all(v >= offset for v in values):
            normal = tuple(-x for x in normal)
            offset = -offset
            values = [-v for v in values]
        else:
            continue
        incident = tuple(i for i, v in enumerate(values) if v == offset)
        if incident not in found:
            found[incident] = HullFacet(normal=normal, offset=offset, incident=incident)
    logger.debug(f"{len(found)} facets from {len(points)} points in dimension {width}")
    return [found[key] for key in sorted(found)]
