import csv
import io
import json

from fastapi.encoders import jsonable_encoder
from rich import box
from rich.console import Console
from rich.table import Table

from app.domain.model.report import Report, Scalar

SCHEMA = "flagtoric/1"
TEXT_WIDTH = 160


def scalar_text(value: Scalar) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def map_report_to_json(report: Report) -> str:
    document = {
        "schema": SCHEMA,
        "command": report.command,
        "shape": report.shape,
        "summary": report.summary,
        "data": jsonable_encoder(report.data),
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def map_report_to_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([scalar_text(value) for value in row])
    return buffer.getvalue()


def map_report_to_text(report: Report) -> str:
    summary = " ".join(f"{key}={scalar_text(value)}" for key, value in report.summary.items())
    if not report.columns:
        return summary + "\n"
    table = Table(box=box.SIMPLE_HEAD, show_edge=False, pad_edge=False)
    for column in report.columns:
        table.add_column(column, no_wrap=True)
    for row in report.rows:
        table.add_row(*(scalar_text(value) for value in row))
    console = Console(file=io.StringIO(), width=TEXT_WIDTH, color_system=None,
                      force_terminal=False, legacy_windows=False)
    console.print(table)
    lines = [line.rstrip() for line in console.file.getvalue().splitlines()]
    return summary + "\n" + "\n".join(lines) + "\n"
