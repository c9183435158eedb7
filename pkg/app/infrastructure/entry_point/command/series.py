import logging
from typing import Optional

import typer
from dependency_injector.wiring import inject, Provide
from typing_extensions import Annotated

import app.infrastructure.entry_point.mapper.flag_mapper as flag_mapper
import app.infrastructure.entry_point.validator.validator as validator
from app.application.container import Container
from app.application.settings import settings
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.hypergeometric_usecase import HypergeometricUseCase
from app.infrastructure.entry_point.command.common import (
    CheckOption, FormatOption, OutOption, SeedOrderOption, ShapeArgument,
    certificate, check_options, load_graph, publish,
)
from app.infrastructure.entry_point.utils.exception_handler import exit_code_guard

logger = logging.getLogger("Series Command")

MaxDegreeOption = Annotated[int, typer.Option("--max-deg", help="Bound on the total roof degree.")]
DegreesOption = Annotated[str, typer.Option("--degrees", help='Degree vectors "a,b;c,d;..." of the hypersurfaces.')]
AssignmentOption = Annotated[
    Optional[str], typer.Option("--assignment", help='Segment of every roof edge, roof by roof: "1,1,2;2,3".'),
]

# highest degree the period oracle runs at
PERIOD_MAX_DEGREE = 2


def _bound(max_degree: int):
    try:
        validator.validate_degree_bound(max_degree)
    except ValueError as e:
        raise CustomException(ResponseCodeEnum.KOS10, str(e))


def series(shape: ShapeArgument, max_degree: MaxDegreeOption = 2, output_format: FormatOption = "text",
           out: OutOption = None, check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Coefficients of the hypergeometric series of the flag manifold at q~ = 1."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _bound(max_degree)
        _series(shape, max_degree, output_format, out, check)


@inject
def _series(text, max_degree, output_format, out, check,
            hypergeometric_usecase: HypergeometricUseCase = Provide[Container.hypergeometric_usecase]):
    logger.info("Init series command")
    ladder_graph = load_graph(text)
    extra = {}
    if check:
        oracle = len(ladder_graph.edges) <= settings.ORACLE_MAX_EDGES
        extra["indices_checked"] = hypergeometric_usecase.verify_coefficients(
            ladder_graph, max_degree, with_oracle=oracle,
        )
        extra["oracle"] = oracle
    terms = hypergeometric_usecase.phi_F(ladder_graph, max_degree)
    publish(flag_mapper.map_series_to_report("series", ladder_graph.shape.label, terms, extra),
            output_format, out)


def ci_series(shape: ShapeArgument, degrees: DegreesOption, max_degree: MaxDegreeOption = 2,
              output_format: FormatOption = "text", out: OutOption = None, check: CheckOption = False,
              seed_order: SeedOrderOption = "fixed"):
    """Series of the complete intersection cut out by sections of the given degrees."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _bound(max_degree)
        _ci_series(shape, degrees, max_degree, output_format, out, check)


@inject
def _ci_series(text, degrees, max_degree, output_format, out, check,
               hypergeometric_usecase: HypergeometricUseCase = Provide[Container.hypergeometric_usecase]):
    logger.info("Init ci-series command")
    ladder_graph = load_graph(text)
    parsed = flag_mapper.map_text_to_degrees(degrees)
    terms = hypergeometric_usecase.phi_X(ladder_graph, parsed, max_degree)
    extra = {}
    if check:
        checked = 0
        if len(ladder_graph.edges) <= settings.ORACLE_MAX_EDGES:
            limit = min(PERIOD_MAX_DEGREE, settings.ORACLE_MAX_DEGREE)
            for term in terms:
                if sum(term.roof_degrees) > limit:
                    continue
                period = hypergeometric_usecase.period_oracle(ladder_graph, parsed, term.roof_degrees)
                certificate(period == term.value, ResponseCodeEnum.KOC07,
                            f"period {period} at {term.roof_degrees}, series {term.value}")
                checked += 1
        extra["periods_checked"] = checked
    publish(flag_mapper.map_series_to_report("ci-series", ladder_graph.shape.label, terms, extra),
            output_format, out)


def mirror(shape: ShapeArgument, degrees: DegreesOption, assignment: AssignmentOption = None,
           output_format: FormatOption = "text", out: OutOption = None, check: CheckOption = False,
           seed_order: SeedOrderOption = "fixed"):
    """Laurent polynomials of the mirror of a complete intersection, one per degree vector."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _mirror(shape, degrees, assignment, output_format, out)


@inject
def _mirror(text, degrees, assignment, output_format, out,
            hypergeometric_usecase: HypergeometricUseCase = Provide[Container.hypergeometric_usecase]):
    logger.info("Init mirror command")
    ladder_graph = load_graph(text)
    parsed = flag_mapper.map_text_to_degrees(degrees)
    try:
        segments = validator.parse_assignment(assignment)
    except ValueError as e:
        raise CustomException(ResponseCodeEnum.KOS06, str(e))
    system = hypergeometric_usecase.mirror_system(ladder_graph, parsed, segments)
    publish(flag_mapper.map_mirror_to_report(ladder_graph.shape.label, system), output_format, out)


COMMANDS = {
    "series": series,
    "ci-series": ci_series,
    "mirror": mirror,
}
