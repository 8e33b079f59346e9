import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

import pandas as pd

from domain.models.report import ScenarioReport
from domain.repositories.report_repository import ReportRepository
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

ASSERTION_COLUMNS = ["description", "expected", "computed", "status", "provenance"]


class JsonReportRepository(ReportRepository):
    """
    Stores scenario reports as JSON files with a fixed key order and renders them as tables.
    """
    def __init__(self, reports_dir: Union[str, Path]):
        self._reports_dir = Path(reports_dir)

    def to_document(self, report: ScenarioReport, include_timing: bool = True) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "scenario": report.scenario,
            "version": report.version,
            "field": report.field,
            "status": report.status.value,
            "assertions": [
                {column: getattr(a, column).value if column == "status" else getattr(a, column) for column in ASSERTION_COLUMNS}
                for a in report.assertions
            ],
        }
        if include_timing:
            document["timing_seconds"] = None if report.timing_seconds is None else round(report.timing_seconds, 3)
        return document

    def dumps(self, report: ScenarioReport, include_timing: bool = True) -> str:
        return json.dumps(self.to_document(report, include_timing), indent=2, ensure_ascii=False) + "\n"

    def save(self, report: ScenarioReport, destination: Optional[Union[str, Path]] = None) -> Path:
        target = Path(destination) if destination is not None else self._reports_dir / f"{report.scenario}.json"
        logger.info(f"Saving report for scenario '{report.scenario}' to {target}")
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(self.dumps(report), encoding="utf-8")
        except OSError as e:
            logger.error(f"Error writing report to {target}: {e}", exc_info=True)
            raise RuntimeError(f"Could not write report to {target}: {e}")
        return target

    def render(self, report: ScenarioReport) -> str:
        frame = pd.DataFrame(
            [[a.description, a.expected, a.computed, a.status.value, a.provenance] for a in report.assertions],
            columns=ASSERTION_COLUMNS,
        )
        header = f"Scenario {report.scenario} over {report.field}: {report.status.value.upper()}"
        if frame.empty:
            return f"{header}\n(no assertions)"
        passed = int((frame["status"] == "pass").sum())
        footer = f"{passed}/{len(frame)} assertions pass"
        if report.timing_seconds is not None:
            footer += f" in {report.timing_seconds:.1f}s"
        with pd.option_context("display.max_colwidth", 60, "display.width", 200):
            table = frame.to_string(index=False)
        return f"{header}\n{table}\n{footer}"
