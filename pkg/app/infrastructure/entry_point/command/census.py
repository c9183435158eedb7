import logging

import typer
from dependency_injector.wiring import inject, Provide
from typing_extensions import Annotated

import app.infrastructure.entry_point.mapper.flag_mapper as flag_mapper
from app.application.container import Container
from app.domain.usecase.census_usecase import CensusUseCase
from app.infrastructure.entry_point.command.common import (
    CheckOption, FormatOption, OutOption, SeedOrderOption, check_options, publish,
)
from app.infrastructure.entry_point.utils.exception_handler import exit_code_guard

logger = logging.getLogger("Census Command")

NMaxOption = Annotated[int, typer.Option("--n-max", help="Largest ambient dimension n.")]
DualityOption = Annotated[
    bool, typer.Option("--modulo-duality/--no-modulo-duality", help="Identify splittings of self-dual shapes."),
]


def census(n_max: NMaxOption = 7, modulo_duality: DualityOption = True, output_format: FormatOption = "text",
           out: OutOption = None, check: CheckOption = False, seed_order: SeedOrderOption = "fixed"):
    """Calabi-Yau complete-intersection 3-folds in flag manifolds with n <= n-max."""
    with exit_code_guard():
        check_options(output_format, seed_order)
        _census(n_max, modulo_duality, output_format, out, check)


@inject
def _census(n_max, modulo_duality, output_format, out, check,
            census_usecase: CensusUseCase = Provide[Container.census_usecase]):
    logger.info("Init census command")
    table = census_usecase.census_table(n_max, modulo_duality)
    if check:
        for entry in table.rows:
            census_usecase.verify_entry(entry)
    publish(flag_mapper.map_census_to_report(table, True if check else None), output_format, out)


COMMANDS = {
    "census": census,
}
