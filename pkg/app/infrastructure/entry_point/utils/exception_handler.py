import logging
import sys
from contextlib import contextmanager

import typer
from fastapi import Request
from fastapi.responses import JSONResponse

from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum

logger = logging.getLogger("Exception Handler")


async def custom_exception_handler(request: Request, exc: CustomException):
    return JSONResponse(status_code=exc.http_status, content=exc.to_dict())


def diagnostic(exc: CustomException) -> str:
    line = f"error {exc.code}: {exc.message}"
    return f"{line}: {exc.detail}" if exc.detail else line


@contextmanager
def exit_code_guard():
    """Turn domain errors raised by a command into a diagnostic and its exit code."""
    try:
        yield
    except CustomException as e:
        typer.echo(diagnostic(e), file=sys.stderr)
        raise typer.Exit(code=e.exit_code)
    except ValueError as e:
        error = CustomException(ResponseCodeEnum.KOS10, str(e))
        typer.echo(diagnostic(error), file=sys.stderr)
        raise typer.Exit(code=error.exit_code)
    except typer.Exit:
        raise
    except Exception as e:
        logger.error(f"Unhandled exception: {e}")
        error = CustomException(ResponseCodeEnum.KOG01, str(e))
        typer.echo(diagnostic(error), file=sys.stderr)
        raise typer.Exit(code=error.exit_code)
