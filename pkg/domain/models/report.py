from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class AssertionStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class AssertionRecord(BaseModel):
    """
    One checked statement of a scenario.
    """
    description: str
    expected: str
    computed: str
    status: AssertionStatus
    provenance: str = Field(..., description="Where the expected value comes from: stated, derived or computed.")


class ScenarioReport(BaseModel):
    scenario: str
    version: str
    field: str
    assertions: List[AssertionRecord] = Field(default_factory=list)
    timing_seconds: Optional[float] = None

    @property
    def status(self) -> AssertionStatus:
        statuses = {a.status for a in self.assertions}
        if AssertionStatus.FAIL in statuses:
            return AssertionStatus.FAIL
        if AssertionStatus.INCONCLUSIVE in statuses:
            return AssertionStatus.INCONCLUSIVE
        return AssertionStatus.PASS

    def record(self, description: str, expected, computed, provenance: str, inconclusive: bool = False) -> AssertionRecord:
        if inconclusive:
            status = AssertionStatus.INCONCLUSIVE
        else:
            status = AssertionStatus.PASS if expected == computed else AssertionStatus.FAIL
        entry = AssertionRecord(
            description=description,
            expected=str(expected),
            computed=str(computed),
            status=status,
            provenance=provenance,
        )
        self.assertions.append(entry)
        return entry
