import logging

from dependency_injector.wiring import inject, Provide

import app.infrastructure.entry_point.mapper.flag_mapper as flag_mapper
from app.application.container import Container
from app.application.settings import settings
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.ladder_graph_usecase import LadderGraphUseCase, delta_matrix
from app.domain.usecase.paths_usecase import PathsUseCase
from app.domain.usecase.polytope_usecase import PolytopeUseCase
from app.infrastructure.entry_point.command.common import (
    CheckOption, FormatOption, OutOption, SeedOrderOption, ShapeArgument,
    certificate, check_options, load_graph, publish,
)
from app.infrastructure.entry_point.utils.exception_handler import exit_code_guard

logger = logging.getLogger("Geometry Command")


def graph(shape: ShapeArgument, output_format: FormatOption = "text", out: OutOption = None,
          check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Ladder graph: dots, stars, edges with their delta images, boxes and roofs."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _graph(shape, output_format, out, check)


@inject
def _graph(text, output_format, out, check,
           ladder_graph_usecase: LadderGraphUseCase = Provide[Container.ladder_graph_usecase]):
    logger.info("Init graph command")
    ladder_graph = load_graph(text)
    kernel = transpose = None
    if check:
        kernel = ladder_graph_usecase.kernel_bases(ladder_graph)
        ladder_graph_usecase.build_dual_graph(ladder_graph)
        transpose = ladder_graph_usecase.transpose_invariants(ladder_graph.shape)
        certificate(transpose.isomorphic, ResponseCodeEnum.KOC01, "reflected graph differs from the dual")
    publish(flag_mapper.map_graph_to_report(ladder_graph, delta_matrix(ladder_graph), kernel, transpose),
            output_format, out)


def polytope(shape: ShapeArgument, output_format: FormatOption = "text", out: OutOption = None,
             check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Facets of conv(delta(E)), one per meander, with the reflexivity certificate."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _polytope(shape, output_format, out, check)


@inject
def _polytope(text, output_format, out, check,
              polytope_usecase: PolytopeUseCase = Provide[Container.polytope_usecase]):
    logger.info("Init polytope command")
    ladder_graph = load_graph(text)
    result = polytope_usecase.build_polytope_with_facets(ladder_graph, scan=True if check else None)
    hull = None
    within_gates = (
        len(ladder_graph.dots) <= settings.HULL_MAX_DIMENSION and len(ladder_graph.edges) <= settings.HULL_MAX_POINTS
    )
    if check and within_gates:
        hull = polytope_usecase.hull_agrees(ladder_graph, result)
        certificate(hull, ResponseCodeEnum.KOC02, "hull oracle finds other facets")
    elif check:
        logger.warning(f"Hull oracle skipped for {ladder_graph.shape.label}")
    publish(flag_mapper.map_polytope_to_report(ladder_graph.shape.label, result, hull), output_format, out)


def fan(shape: ShapeArgument, output_format: FormatOption = "text", out: OutOption = None,
        check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Maximal cones of the refined fan, each unimodular and inside a meander cone."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _fan(shape, output_format, out, check)


@inject
def _fan(text, output_format, out, check,
         polytope_usecase: PolytopeUseCase = Provide[Container.polytope_usecase],
         paths_usecase: PathsUseCase = Provide[Container.paths_usecase]):
    logger.info("Init fan command")
    ladder_graph = load_graph(text)
    cones = polytope_usecase.refined_fan(ladder_graph)
    if check:
        meanders = paths_usecase.enumerate_meanders(ladder_graph)
        used = {c.meander for c in cones}
        certificate(len(used) == len(meanders), ResponseCodeEnum.KOC04,
                    f"{len(used)} of {len(meanders)} facets refined")
    publish(flag_mapper.map_fan_to_report(ladder_graph.shape.label, cones), output_format, out)


def strata(shape: ShapeArgument, output_format: FormatOption = "text", out: OutOption = None,
           check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Codimension-3 conifold strata, one per box, with their normal forms."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _strata(shape, output_format, out, check)


@inject
def _strata(text, output_format, out, check,
            polytope_usecase: PolytopeUseCase = Provide[Container.polytope_usecase]):
    logger.info("Init strata command")
    ladder_graph = load_graph(text)
    result = polytope_usecase.singular_strata(ladder_graph)
    if check:
        certificate(len(result) == len(ladder_graph.boxes), ResponseCodeEnum.KOC05,
                    f"{len(result)} strata for {len(ladder_graph.boxes)} boxes")
        for stratum in result:
            e, f, g, h = stratum.vectors
            # e + f = g + h with a unimodular 3x3 minor
            balanced = all(a + b == c + d for a, b, c, d in zip(e, f, g, h))
            certificate(balanced and stratum.minor_gcd == 1, ResponseCodeEnum.KOC05,
                        f"box {stratum.box}")
    publish(flag_mapper.map_strata_to_report(ladder_graph.shape.label, result), output_format, out)


COMMANDS = {
    "graph": graph,
    "polytope": polytope,
    "fan": fan,
    "strata": strata,
}
