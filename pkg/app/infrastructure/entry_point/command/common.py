from typing import Optional

import typer
from dependency_injector.wiring import inject, Provide
from typing_extensions import Annotated

import app.infrastructure.entry_point.mapper.flag_mapper as flag_mapper
import app.infrastructure.entry_point.validator.validator as validator
from app.application.container import Container
from app.domain.gateway.report_gateway import ReportGateway
from app.domain.model.ladder_graph import LadderGraph
from app.domain.model.report import Report
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.domain.usecase.ladder_graph_usecase import LadderGraphUseCase

ShapeArgument = Annotated[str, typer.Argument(help='Flag shape "n1,...,nl/n", e.g. "1,2,4/5".')]
FormatOption = Annotated[str, typer.Option("--format", help="json, csv or text.")]
OutOption = Annotated[Optional[str], typer.Option("--out", help="Write to FILE instead of stdout.")]
CheckOption = Annotated[bool, typer.Option("--check", help="Run the independent certificates and oracles.")]
SeedOrderOption = Annotated[str, typer.Option("--seed-order", help="Enumeration order; only 'fixed'.")]

COMMANDS = {}


def check_options(output_format: str, seed_order: str = "fixed"):
    try:
        validator.validate_format(output_format)
        validator.validate_seed_order(seed_order)
    except ValueError as e:
        raise CustomException(ResponseCodeEnum.KOS10, str(e))


@inject
def load_graph(
    text: str,
    ladder_graph_usecase: LadderGraphUseCase = Provide[Container.ladder_graph_usecase],
) -> LadderGraph:
    steps, ambient = flag_mapper.map_text_to_shape_args(text)
    shape = ladder_graph_usecase.build_shape(steps, ambient)
    return ladder_graph_usecase.build_graph(shape)


@inject
def publish(
    report: Report,
    output_format: str,
    out: Optional[str],
    report_gateway: ReportGateway = Provide[Container.report_gateway],
):
    report_gateway.publish(report, output_format, out)


def certificate(ok: bool, response_code: ResponseCodeEnum, detail: str):
    if not ok:
        raise CustomException(response_code, detail)
