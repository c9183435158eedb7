import pytest
import typer

from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCodeEnum
from app.infrastructure.entry_point.utils.api_response import ApiResponse
from app.infrastructure.entry_point.utils.exception_handler import diagnostic, exit_code_guard


class TestDiagnostic:
    def test_with_detail(self):
        error = CustomException(ResponseCodeEnum.KOS02, "unexpected 'x' at position 2")
        assert diagnostic(error) == "error KOS02: Shape could not be parsed: unexpected 'x' at position 2"

    def test_without_detail(self):
        assert diagnostic(CustomException(ResponseCodeEnum.KOC03)) == "error KOC03: Unimodularity certificate failed"


class TestExitCodeGuard:
    @pytest.mark.parametrize("raised, code", [
        (CustomException(ResponseCodeEnum.KOS01), 1),
        (CustomException(ResponseCodeEnum.KOC02), 2),
        (ValueError("bad"), 1),
        (RuntimeError("boom"), 2),
    ])
    def test_exit_codes(self, capsys, raised, code):
        with pytest.raises(typer.Exit) as exit_info:
            with exit_code_guard():
                raise raised
        assert exit_info.value.exit_code == code
        assert capsys.readouterr().err.startswith("error ")

    def test_passes_exit_through(self):
        with pytest.raises(typer.Exit) as exit_info:
            with exit_code_guard():
                raise typer.Exit(code=0)
        assert exit_info.value.exit_code == 0


class TestApiResponse:
    def test_error_body(self):
        body = ApiResponse.create_error_response(CustomException(ResponseCodeEnum.KOS07, "F(1,3)"))
        assert body == {"apiCode": "KOS07", "data": "F(1,3)",
                        "message": "Shape is not feasible for the census", "status": False}

    def test_success_body(self):
        body = ApiResponse.create_response(ResponseCodeEnum.KO000, {"terms": 2})
        assert body["status"] is True
        assert body["data"] == {"terms": 2}
