import pytest

from app.dependencies import SCENARIOS, get_report_repository, get_scenario_use_case
from domain.models.report import AssertionStatus


@pytest.mark.parametrize("scenario_id", sorted(SCENARIOS))
def test_scenario_passes(scenario_id):
    report = get_scenario_use_case(scenario_id).execute()
    failing = [a.description for a in report.assertions if a.status != AssertionStatus.PASS]
    assert failing == []
    assert report.status == AssertionStatus.PASS


def test_report_is_reproducible():
    repository = get_report_repository()
    first = repository.dumps(get_scenario_use_case("equ1-suite").execute(), include_timing=False)
    second = repository.dumps(get_scenario_use_case("equ1-suite").execute(), include_timing=False)
    assert first == second


def test_unknown_scenario():
    with pytest.raises(ValueError):
        get_scenario_use_case("example-unknown")
