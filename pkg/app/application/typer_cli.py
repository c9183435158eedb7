import typer

from app.application.container import Container
from app.application.handler import Commands


def create_cli() -> typer.Typer:
    container = Container()
    cli = typer.Typer(
        name="flagtoric",
        help="Toric degenerations of partial flag manifolds: ladder graphs, polytopes, series and census.",
        no_args_is_help=True,
        add_completion=False,
    )
    cli.container = container
    for module in Commands.iterator():
        for name, command in getattr(module, "COMMANDS", {}).items():
            cli.command(name=name)(command)
    return cli
