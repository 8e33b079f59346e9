import time
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Optional, Union

from domain.models.algebra import FieldSpec
from domain.models.document import AlgebraDocument
from domain.models.report import ScenarioReport
from domain.models.verdicts import Verdict
from domain.repositories.algebra_source import AlgebraSource
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


class ScenarioUseCase(ABC):
    """
    Base for the acceptance scenarios: loads fixtures, collects assertions into a
    ScenarioReport and times the run.
    """
    scenario_id: str = ""

    def __init__(
        self,
        algebra_source: AlgebraSource,
        fixtures_dir: Union[str, Path],
        version: str,
        field: Optional[FieldSpec] = None,
        cap: Optional[int] = None,
    ):
        self.algebra_source = algebra_source
        self.fixtures_dir = Path(fixtures_dir)
        self.version = version
        self.field = field
        self.cap = cap

    def execute(self) -> ScenarioReport:
        logger.info(f"Running scenario '{self.scenario_id}' (cap={self.cap}, field={self.field.label if self.field else 'file'})")
        report = ScenarioReport(
            scenario=self.scenario_id,
            version=self.version,
            field=self.field.label if self.field else FieldSpec.rationals().label,
        )
        started = time.perf_counter()
        try:
            self._run(report)
        except ValueError:
            raise
        except Exception as e:
            logger.error(f"Scenario '{self.scenario_id}' aborted: {e}", exc_info=True)
            raise RuntimeError(f"Scenario '{self.scenario_id}' aborted: {e}")
        report.timing_seconds = time.perf_counter() - started
        logger.info(
            f"Scenario '{self.scenario_id}' finished with status {report.status.value} "
            f"({len(report.assertions)} assertions, {report.timing_seconds:.1f}s)"
        )
        return report

    def _load(self, filename: str) -> AlgebraDocument:
        document = self.algebra_source.load(self.fixtures_dir / filename, field=self.field)
        return document

    @staticmethod
    def _verdict(report: ScenarioReport, description: str, expected: Verdict, computed: Verdict, provenance: str) -> None:
        report.record(
            description, expected.value, computed.value, provenance, inconclusive=computed == Verdict.UNKNOWN
        )

    @abstractmethod
    def _run(self, report: ScenarioReport) -> None:
        """Adds the scenario's assertions to `report`."""
        pass
