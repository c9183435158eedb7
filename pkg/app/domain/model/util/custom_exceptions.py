from typing import Optional


class CustomException(Exception):
    def __init__(self, response_code_enum, detail: Optional[str] = None):
        super().__init__(f"{response_code_enum.name}: {response_code_enum.message}"
                         + (f" ({detail})" if detail else ""))
        self.response_code = response_code_enum
        self.http_status = response_code_enum.http_status
        self.exit_code = response_code_enum.exit_code
        self.code = response_code_enum.name
        self.message = response_code_enum.message
        self.detail = detail

    def to_dict(self):
        return {
            "apiCode": self.code,
            "data": self.detail,
            "message": self.message,
            "status": self.http_status == 200
        }
