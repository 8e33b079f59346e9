from functools import lru_cache
from typing import Callable, Dict, Optional, Type

from core.config import get_settings
from domain.models.algebra import FieldSpec

# Infrastructure
from infrastructure.parsing.text_format_source import TextFormatAlgebraSource
from infrastructure.reports.json_report_repository import JsonReportRepository

# Domain (Repositories - Interfaces)
from domain.repositories.algebra_source import AlgebraSource
from domain.repositories.report_repository import ReportRepository

# Domain (Use Cases)
from domain.use_cases.scenario_use_case import ScenarioUseCase
from domain.use_cases.example_nakayama_566_use_case import ExampleNakayama566UseCase
from domain.use_cases.example_dual_numbers_a2_use_case import ExampleDualNumbersA2UseCase
from domain.use_cases.prop_partial_resolution_use_case import PropPartialResolutionUseCase
from domain.use_cases.equ1_suite_use_case import Equ1SuiteUseCase
from domain.use_cases.lemma21_suite_use_case import Lemma21SuiteUseCase

from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

SCENARIOS: Dict[str, Type[ScenarioUseCase]] = {
    use_case.scenario_id: use_case
    for use_case in (
        ExampleNakayama566UseCase,
        ExampleDualNumbersA2UseCase,
        PropPartialResolutionUseCase,
        Equ1SuiteUseCase,
        Lemma21SuiteUseCase,
    )
}

# --- Repository Instantiation ---

@lru_cache()
def get_default_field() -> FieldSpec:
    return FieldSpec.parse(get_settings().DEFAULT_FIELD)


@lru_cache()
def get_algebra_source() -> AlgebraSource:
    return TextFormatAlgebraSource(default_field=get_default_field())


@lru_cache()
def get_report_repository() -> ReportRepository:
    return JsonReportRepository(get_settings().reports_dir())

# --- Use Case Instantiation ---

def get_scenario_use_case(
    scenario_id: str,
    field: Optional[FieldSpec] = None,
    cap: Optional[int] = None,
    algebra_source_factory: Callable[[], AlgebraSource] = get_algebra_source,
) -> ScenarioUseCase:
    use_case = SCENARIOS.get(scenario_id)
    if use_case is None:
        raise ValueError(f"Unknown scenario '{scenario_id}'; choose one of {sorted(SCENARIOS)}")
    settings = get_settings()
    logger.debug(f"Creating use case for scenario '{scenario_id}'")
    return use_case(
        algebra_source=algebra_source_factory(),
        fixtures_dir=settings.fixtures_dir(),
        version=settings.APP_VERSION,
        field=field,
        cap=cap,
    )
