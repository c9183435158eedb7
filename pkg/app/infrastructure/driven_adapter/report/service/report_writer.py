import logging
from typing import Callable, Dict, Optional

import typer

from app.domain.gateway.report_gateway import ReportGateway
from app.domain.model.report import Report
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
import app.infrastructure.driven_adapter.report.mapper.report_mapper as mapper

logger = logging.getLogger("Report Writer")

RENDERERS: Dict[str, Callable[[Report], str]] = {
    "json": mapper.map_report_to_json,
    "csv": mapper.map_report_to_csv,
    "text": mapper.map_report_to_text,
}


class ReportWriter(ReportGateway):
    def __init__(self):
        logger.info("Init report writer service")

    def render(self, report: Report, output_format: str) -> str:
        renderer = RENDERERS.get(output_format)
        if renderer is None:
            raise CustomException(ResponseCodeEnum.KOS10, f"unknown format '{output_format}'")
        return renderer(report)

    def publish(self, report: Report, output_format: str, out: Optional[str] = None) -> str:
        content = self.render(report, output_format)
        if out is None:
            typer.echo(content, nl=False)
            return content
        try:
            with open(out, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(content)
            logger.debug(f"Wrote {len(content)} characters to {out}")
        except OSError as e:
            logger.error(f"Error writing report: {e}")
            raise CustomException(ResponseCodeEnum.KOS10, f"cannot write {out}")
        return content
