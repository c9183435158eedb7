import logging
from typing import Optional

import typer
from dependency_injector.wiring import inject, Provide
from typing_extensions import Annotated

import app.infrastructure.entry_point.mapper.flag_mapper as flag_mapper
import app.infrastructure.entry_point.validator.validator as validator
from app.application.container import Container
from app.domain.model.path import KernelKind
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.paths_usecase import PathsUseCase, annihilates
from app.domain.usecase.sections_usecase import SectionsUseCase
from app.infrastructure.entry_point.command.common import (
    CheckOption, FormatOption, OutOption, SeedOrderOption, ShapeArgument,
    certificate, check_options, load_graph, publish,
)
from app.infrastructure.entry_point.utils.exception_handler import exit_code_guard

logger = logging.getLogger("Paths Command")

RoofOption = Annotated[Optional[int], typer.Option("--roof", help="Only the paths of roof i.")]
ValuesOption = Annotated[str, typer.Option("--values", help="Edge values v0,v1,... of a cone point.")]


def paths(shape: ShapeArgument, roof: RoofOption = None, output_format: FormatOption = "text",
          out: OutOption = None, check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Positive paths of every roof (or of one) with the edges they cross."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _paths(shape, roof, output_format, out, check)


@inject
def _paths(text, roof, output_format, out, check,
           paths_usecase: PathsUseCase = Provide[Container.paths_usecase],
           sections_usecase: SectionsUseCase = Provide[Container.sections_usecase]):
    logger.info("Init paths command")
    ladder_graph = load_graph(text)
    if roof is None:
        per_roof = paths_usecase.all_paths(ladder_graph)
    else:
        per_roof = [paths_usecase.enumerate_positive_paths(ladder_graph, roof)]

    upper_sets = None
    if check:
        for group in per_roof:
            for path in group:
                values = paths_usecase.path_functional(ladder_graph, path).values
                certificate(annihilates(ladder_graph, values, KernelKind.BOUNDARY),
                            ResponseCodeEnum.KOC06, f"{path.label} misses a box relation")
        upper_sets = []
        for edges in ladder_graph.roofs:
            for edge_id in edges:
                upper_sets.append(paths_usecase.upper_set_and_sections(ladder_graph, edge_id))
                points = sections_usecase.section_polytope_points(ladder_graph, edge_id)
                certificate(points.matches_sections, ResponseCodeEnum.KOC06,
                            f"section polytope of edge {edge_id}")
            for first, second in zip(edges, edges[1:]):
                paths_usecase.cartier_difference(ladder_graph, first, second)
        covered = sorted(k for u in upper_sets for k in u.members)
        certificate(covered == list(range(len(ladder_graph.edges))), ResponseCodeEnum.KOC01,
                    "upper sets do not partition the edges")
    publish(flag_mapper.map_paths_to_report(ladder_graph.shape.label, per_roof, upper_sets), output_format, out)


def meanders(shape: ShapeArgument, output_format: FormatOption = "text", out: OutOption = None,
             check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Tuples of positive paths, one per roof, whose union is a tree."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _meanders(shape, output_format, out, check)


@inject
def _meanders(text, output_format, out, check,
              paths_usecase: PathsUseCase = Provide[Container.paths_usecase]):
    logger.info("Init meanders command")
    ladder_graph = load_graph(text)
    found = paths_usecase.enumerate_meanders(ladder_graph)
    if check:
        for meander in found:
            recomputed = paths_usecase.meander_functional(ladder_graph, meander)
            certificate(recomputed == meander.functional, ResponseCodeEnum.KOC06, f"meander {meander.id}")
            paths_usecase.descend(ladder_graph, recomputed.values)
    publish(flag_mapper.map_meanders_to_report(ladder_graph.shape.label, found), output_format, out)


def relations(shape: ShapeArgument, output_format: FormatOption = "text", out: OutOption = None,
              check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Quadratic relations z_p z_q = z_min z_max of the incomparable path pairs."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _relations(shape, output_format, out, check)


@inject
def _relations(text, output_format, out, check,
               sections_usecase: SectionsUseCase = Provide[Container.sections_usecase]):
    logger.info("Init relations command")
    ladder_graph = load_graph(text)
    found = sections_usecase.quadratic_relations(ladder_graph)
    if check:
        for relation in found:
            sections_usecase.check_identity(ladder_graph, relation)
    publish(flag_mapper.map_relations_to_report(ladder_graph.shape.label, found), output_format, out)


def decompose(shape: ShapeArgument, values: ValuesOption, output_format: FormatOption = "text",
              out: OutOption = None, check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Write a point of the cone as a sum of positive paths."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _decompose(shape, values, output_format, out, check)


@inject
def _decompose(text, values, output_format, out, check,
               sections_usecase: SectionsUseCase = Provide[Container.sections_usecase]):
    logger.info("Init decompose command")
    ladder_graph = load_graph(text)
    try:
        parsed = validator.parse_values(values)
    except ValueError as e:
        raise CustomException(ResponseCodeEnum.KOS05, str(e))
    decomposition = sections_usecase.greedy_decompose(ladder_graph, parsed)
    hilbert = None
    if check:
        hilbert = sections_usecase.check_hilbert_basis(ladder_graph)
        certificate(hilbert.ok, ResponseCodeEnum.KOC07, "; ".join(hilbert.violations) or "decomposable generator")
    publish(flag_mapper.map_decomposition_to_report(ladder_graph.shape.label, decomposition, hilbert),
            output_format, out)


COMMANDS = {
    "paths": paths,
    "meanders": meanders,
    "relations": relations,
    "decompose": decompose,
}
