from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from domain.models.module import FdModule, ModuleMap
from domain.models.verdicts import Verdict


class SgObject(BaseModel):
    """
    The object q(X)[shift] of the singularity category.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    module: FdModule
    shift: int = 0

    def label(self) -> str:
        name = self.module.display_name()
        return name if self.shift == 0 else f"{name}[{self.shift}]"


class StabilizationStatus(str, Enum):
    STABILIZED = "stabilized"
    ZERO_OBJECT = "zero_object"
    INCONCLUSIVE = "inconclusive"


class StabHomResult(BaseModel):
    """
    Hom(x, y) in the singularity category, computed as the colimit of stable Homs between syzygies.
    `basis` is realized as maps Omega^(level+s)(X) -> Omega^level(Y).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: SgObject
    target: SgObject
    status: StabilizationStatus
    dimension: Optional[int] = None
    level: Optional[int] = None
    transition_period: Optional[int] = None
    basis: List[ModuleMap] = Field(default_factory=list)
    reason: str = ""

    @property
    def conclusive(self) -> bool:
        return self.status != StabilizationStatus.INCONCLUSIVE


class SgIsoVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verdict: Verdict
    witness: Optional[Tuple[ModuleMap, ModuleMap]] = Field(None, description="Mutually inverse maps at a common level.")
    reason: str = ""


class SgClassification(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    zero_objects: List[FdModule]
    classes: List[List[FdModule]]
    inconclusive: List[FdModule] = Field(default_factory=list)

    @property
    def representatives(self) -> List[FdModule]:
        return [c[0] for c in self.classes]


class PatternCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    object_count: int
    expected_count: int
    shift_permutation: Optional[List[int]] = None
    failures: List[str] = Field(default_factory=list)


class ThickOrbit(BaseModel):
    """
    Classes (indices into a classification) reached from the summands of q(M) under the
    translation, with the translation period of each summand.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    classes: List[int] = Field(default_factory=list)
    objects: List[SgObject] = Field(default_factory=list, description="q(Z)[k] for each summand Z and k in one period.")
    periods: List[int] = Field(default_factory=list)
    complete: bool = Field(True, description="False when a shift left the candidate classes or a test was inconclusive.")
