from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional, Union

from domain.models.report import ScenarioReport


class ReportRepository(ABC):
    """
    Interface for storing and rendering scenario reports.
    """

    @abstractmethod
    def to_document(self, report: ScenarioReport, include_timing: bool = True) -> Dict[str, Any]:
        """
        Machine-readable form of a report with a fixed key order.

        Args:
            report: The report to convert.
            include_timing: Leave out the timing field when False so that two runs compare equal.

        Returns:
            A JSON-serializable dictionary.
        """
        pass

    @abstractmethod
    def save(self, report: ScenarioReport, destination: Optional[Union[str, Path]] = None) -> Path:
        """
        Writes a report as JSON.

        Args:
            report: The report to store.
            destination: Target file; a default location under the reports directory when None.

        Returns:
            The path written.
        """
        pass

    @abstractmethod
    def render(self, report: ScenarioReport) -> str:
        """
        Human-readable table of the report's assertions.
        """
        pass
