from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from domain.models.report import AssertionStatus, ScenarioReport
from domain.models.verdicts import GpStatus, PresentationStatus, Verdict


class Outcome(str, Enum):
    OK = "ok"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"


class CommandResult(BaseModel):
    """
    What a subcommand hands back to the dispatcher: text for stdout, an optional
    machine-readable payload for --json, and the outcome that decides the exit code.
    """
    outcome: Outcome = Field(Outcome.OK, description="ok, failed or inconclusive.")
    lines: List[str] = Field(default_factory=list, description="Human-readable output, one entry per line.")
    payload: Dict[str, Any] = Field(default_factory=dict, description="Written to the --json path when given.")
    report: Optional[ScenarioReport] = Field(None, description="Set by `verify`.")

    def text(self) -> str:
        return "\n".join(self.lines)


def outcome_of_verdict(verdict: Verdict, expected: Verdict = Verdict.YES) -> Outcome:
    if verdict == Verdict.UNKNOWN:
        return Outcome.INCONCLUSIVE
    return Outcome.OK if verdict == expected else Outcome.FAILED


def outcome_of_gp(status: GpStatus) -> Outcome:
    return Outcome.INCONCLUSIVE if status == GpStatus.INCONCLUSIVE else Outcome.OK


def outcome_of_presentation(status: PresentationStatus) -> Outcome:
    if status == PresentationStatus.VERIFIED:
        return Outcome.OK
    if status == PresentationStatus.INCONCLUSIVE:
        return Outcome.INCONCLUSIVE
    return Outcome.FAILED


def outcome_of_report(report: ScenarioReport) -> Outcome:
    return {
        AssertionStatus.PASS: Outcome.OK,
        AssertionStatus.FAIL: Outcome.FAILED,
        AssertionStatus.INCONCLUSIVE: Outcome.INCONCLUSIVE,
    }[report.status]


def matrix_lines(rows: List[List[Any]]) -> List[str]:
    return ["  [" + ", ".join(str(x) for x in row) + "]" for row in rows]
