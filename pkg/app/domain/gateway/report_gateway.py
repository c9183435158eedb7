from abc import ABC, abstractmethod
from typing import Optional

from app.domain.model.report import Report


class ReportGateway(ABC):

    @abstractmethod
    def render(self, report: Report, output_format: str) -> str:
        pass

    @abstractmethod
    def publish(self, report: Report, output_format: str, out: Optional[str] = None) -> str:
        pass
