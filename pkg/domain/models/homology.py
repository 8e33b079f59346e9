from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy.polys.matrices import DomainMatrix

from domain.models.module import FdModule, ModuleMap


class CertificateKind(str, Enum):
    FINITE = "finite"
    PERIODIC = "periodic"
    INCONCLUSIVE = "inconclusive"


class SyzygyCertificate(BaseModel):
    """
    Outcome of iterating syzygies of a module up to an iteration cap.

    FINITE: Omega^(value + 1)(X) = 0, so pd X = value (the zero module gets 0).
    PERIODIC: Omega^preperiod(X) is isomorphic to Omega^(preperiod + period)(X), witnessed by `witness`,
    so every later syzygy is nonzero and pd X is infinite.
    INCONCLUSIVE: neither was established within `iterations` steps.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    module: FdModule
    kind: CertificateKind
    value: Optional[int] = Field(None, description="Projective dimension when finite.")
    preperiod: Optional[int] = None
    period: Optional[int] = None
    witness: Optional[ModuleMap] = None
    iterations: int = Field(..., ge=0)
    syzygies: Tuple[FdModule, ...] = Field(..., description="Omega^0(X), Omega^1(X), ... as computed.")

    @model_validator(mode="after")
    def check_kind(self) -> "SyzygyCertificate":
        if self.kind == CertificateKind.FINITE and self.value is None:
            raise ValueError("A finite certificate needs a value")
        if self.kind == CertificateKind.PERIODIC:
            if self.preperiod is None or self.period is None or self.witness is None:
                raise ValueError("A periodic certificate needs preperiod, period and an isomorphism witness")
            if self.period < 1:
                raise ValueError("Period must be positive")
        return self

    @property
    def is_finite(self) -> bool:
        return self.kind == CertificateKind.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind == CertificateKind.PERIODIC

    @property
    def is_conclusive(self) -> bool:
        return self.kind != CertificateKind.INCONCLUSIVE

    def summary(self) -> str:
        if self.kind == CertificateKind.FINITE:
            return f"pd = {self.value}"
        if self.kind == CertificateKind.PERIODIC:
            return f"pd = inf (Omega^{self.preperiod} ~ Omega^{self.preperiod + self.period})"
        return f"inconclusive after {self.iterations} syzygies"


class Resolution(BaseModel):
    """
    A minimal projective resolution ... -> P_1 -> P_0 -> X -> 0, truncated.
    differentials[k] is d_{k+1}: P_{k+1} -> P_k.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    target: FdModule
    terms: Tuple[FdModule, ...]
    tops: Tuple[Tuple[str, ...], ...] = Field(..., description="Vertices of the indecomposable summands of each P_k.")
    augmentation: ModuleMap
    differentials: Tuple[ModuleMap, ...]
    syzygies: Tuple[FdModule, ...]

    @property
    def length(self) -> int:
        return len(self.terms) - 1


class DimensionResult(BaseModel):
    """
    Global or injective dimension style result assembled from per-module certificates.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Optional[int] = None
    infinite: bool = False
    certificates: List[SyzygyCertificate] = Field(default_factory=list)

    @property
    def conclusive(self) -> bool:
        return self.infinite or self.value is not None

    def summary(self) -> str:
        if self.infinite:
            return "inf"
        if self.value is not None:
            return str(self.value)
        return "inconclusive"


class ProjectiveCover(BaseModel):
    """
    P = P_{tops[0]} + P_{tops[1]} + ... -> X, inducing an isomorphism on tops.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    module: FdModule
    epimorphism: ModuleMap
    tops: Tuple[str, ...]


class ExtGroup(BaseModel):
    """
    Ext^degree(source, target) as cocycles in Hom(P_degree, target), where P_degree is the
    term of the minimal resolution and Hom(P_{v_1} + ... , Y) is identified with Y_{v_1} + ...
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degree: int = Field(..., ge=0)
    source: FdModule
    target: FdModule
    dimension: int = Field(..., ge=0)
    cocycles: List[DomainMatrix] = Field(default_factory=list, description="Representatives of a basis of classes.")
