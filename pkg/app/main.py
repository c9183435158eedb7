import logging
import sys

import app.application.fast_api as fast_api
import app.application.typer_cli as typer_cli
from app.application.settings import settings

logging.basicConfig(level=settings.LOG_LEVEL,
                    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                    stream=sys.stderr)

logger = logging.getLogger()

app = fast_api.create_app()

cli = typer_cli.create_cli()


def run():
    cli()


if __name__ == "__main__":
    run()
