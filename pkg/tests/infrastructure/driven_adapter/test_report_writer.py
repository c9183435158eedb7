import json

import pytest

import app.infrastructure.driven_adapter.report.mapper.report_mapper as report_mapper
from app.domain.model.report import Report
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.infrastructure.driven_adapter.report.service.report_writer import ReportWriter


def sample_report() -> Report:
    return Report(
        command="series", shape="F(2,5)",
        summary={"terms": 2, "oracle": False},
        columns=["index", "A", "B"],
        rows=[["0", "1", "1"], ["1", "3", "3"]],
        data={"series": [{"index": [0], "A": "1"}]},
    )


class TestReportMapper:
    def test_json(self):
        document = json.loads(report_mapper.map_report_to_json(sample_report()))
        assert document["schema"] == report_mapper.SCHEMA
        assert document["shape"] == "F(2,5)"
        assert document["summary"]["oracle"] is False

    def test_csv(self):
        assert report_mapper.map_report_to_csv(sample_report()) == "index,A,B\n0,1,1\n1,3,3\n"

    def test_text(self):
        text = report_mapper.map_report_to_text(sample_report())
        lines = text.splitlines()
        assert lines[0] == "terms=2 oracle=false"
        assert any(line.split() == ["1", "3", "3"] for line in lines)
        assert all(line == line.rstrip() for line in lines)

    def test_text_without_table(self):
        report = Report(command="x", summary={"ok": True})
        assert report_mapper.map_report_to_text(report) == "ok=true\n"


class TestReportWriter:
    def test_unknown_format(self):
        with pytest.raises(CustomException) as error:
            ReportWriter().render(sample_report(), "xml")
        assert error.value.response_code == ResponseCodeEnum.KOS10

    def test_writes_file(self, tmp_path):
        target = tmp_path / "series.csv"
        content = ReportWriter().publish(sample_report(), "csv", str(target))
        assert target.read_text(encoding="utf-8") == content

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(CustomException) as error:
            ReportWriter().publish(sample_report(), "csv", str(tmp_path / "missing" / "out.csv"))
        assert error.value.response_code == ResponseCodeEnum.KOS10
