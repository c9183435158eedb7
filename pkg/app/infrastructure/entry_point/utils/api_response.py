from fastapi.encoders import jsonable_encoder

from app.domain.model.report import Report
from app.domain.model.util.custom_exceptions import CustomException
from app.domain.model.util.response_codes import ResponseCode, ResponseCodeEnum


class ApiResponse:
    @staticmethod
    def create_response(response_enum: ResponseCodeEnum, data=None):
        response_code = ResponseCode(response_enum)
        return {
            "apiCode": response_code.code,
            "data": jsonable_encoder(data),
            "message": response_code.message,
            "status": response_code.http_status == 200
        }

    @staticmethod
    def create_report_response(report: Report):
        return ApiResponse.create_response(ResponseCodeEnum.KO000, {
            "command": report.command,
            "shape": report.shape,
            "summary": report.summary,
            "data": report.data,
        })

    @staticmethod
    def create_error_response(exception: CustomException):
        return exception.to_dict()
