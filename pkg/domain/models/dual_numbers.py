from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from domain.models.algebra import AlgebraData
from domain.models.module import FdModule
from domain.models.verdicts import GpStatus, Verdict


class DualPair(BaseModel):
    """
    A = kQ[eps] together with its base kQ. The loop at vertex v is named `eps<v>`; every other
    arrow of A is an arrow of Q under the same name.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: AlgebraData
    algebra: AlgebraData

    @model_validator(mode="after")
    def check_doubling(self) -> "DualPair":
        if self.algebra.dimension != 2 * self.base.dimension:
            raise ValueError(
                f"dim {self.algebra.name} = {self.algebra.dimension}, expected 2 * {self.base.dimension}"
            )
        for v in self.base.vertices:
            if not self.algebra.quiver.has_arrow(self.loop(v)):
                raise ValueError(f"Missing loop {self.loop(v)}")
        return self

    @staticmethod
    def loop(vertex: str) -> str:
        return f"eps{vertex}"


class Equ1Check(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: str
    target: str
    stable_dimension: int = Field(..., description="dim of the stable Hom between the eta images.")
    hom_dimension: int
    ext_dimension: int

    @property
    def holds(self) -> bool:
        return self.stable_dimension == self.hom_dimension + self.ext_dimension


class EtaReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    module: FdModule
    eta: FdModule
    indecomposable: bool
    projective: bool
    status: GpStatus
    verdict: Verdict


class SchofieldReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    exceptional: Verdict
    members: List[FdModule] = Field(default_factory=list)
    simple_objects: List[FdModule] = Field(default_factory=list)
    expected_simple_count: int
    verdict: Verdict
    reason: Optional[str] = None
