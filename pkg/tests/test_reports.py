import json

import pytest

from domain.models.report import AssertionStatus, ScenarioReport
from infrastructure.reports.json_report_repository import JsonReportRepository


@pytest.fixture
def report():
    report = ScenarioReport(scenario="sample", version="1.0.0", field="Q")
    report.record("dim A", 17, 17, "stated")
    report.record("classes", 6, 6, "derived")
    report.timing_seconds = 1.23456
    return report


@pytest.fixture
def repository(tmp_path):
    return JsonReportRepository(tmp_path)


def test_document_key_order(repository, report):
    document = repository.to_document(report)
    assert list(document) == ["scenario", "version", "field", "status", "assertions", "timing_seconds"]
    assert list(document["assertions"][0]) == ["description", "expected", "computed", "status", "provenance"]
    assert document["status"] == "pass"
    assert document["timing_seconds"] == 1.235


def test_document_without_timing_is_deterministic(repository, report):
    first = repository.dumps(report, include_timing=False)
    report.timing_seconds = 99.0
    assert repository.dumps(report, include_timing=False) == first
    assert "timing_seconds" not in json.loads(first)


def test_status_precedence(report):
    report.record("maybe", "yes", "unknown", "derived", inconclusive=True)
    assert report.status == AssertionStatus.INCONCLUSIVE
    report.record("wrong", 2, 3, "stated")
    assert report.status == AssertionStatus.FAIL


def test_save_writes_default_location(repository, report, tmp_path):
    path = repository.save(report)
    assert path == tmp_path / "sample.json"
    assert json.loads(path.read_text(encoding="utf-8"))["scenario"] == "sample"


def test_save_reports_unwritable_destination(repository, report, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    with pytest.raises(RuntimeError):
        repository.save(report, blocker / "nested" / "out.json")


def test_render_table(repository, report):
    text = repository.render(report)
    assert text.splitlines()[0] == "Scenario sample over Q: PASS"
    assert "dim A" in text
    assert "2/2 assertions pass" in text
