from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field
from sympy.polys.matrices import DomainMatrix

from domain.models.algebra import AlgebraData, Quiver, RelationElement, StructureConstants
from domain.models.homology import DimensionResult, SyzygyCertificate
from domain.models.module import FdModule, ModuleMap


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class IsoVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verdict: Verdict
    witness: Optional[ModuleMap] = Field(None, description="An isomorphism when verdict is yes.")
    reason: str = ""


class Decomposition(BaseModel):
    """
    Krull-Schmidt decomposition: summands[k] appears multiplicities[k] times.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    module: FdModule
    summands: Tuple[FdModule, ...]
    multiplicities: Tuple[int, ...]
    inclusions: Tuple[ModuleMap, ...] = Field(..., description="One inclusion per summand occurrence.")
    local_degrees: Tuple[int, ...] = Field(
        (), description="dim_k End(summand)/rad per summand: 1 when split over the base field, else the degree of the extension."
    )

    @property
    def is_indecomposable(self) -> bool:
        return len(self.summands) == 1 and self.multiplicities[0] == 1

    @property
    def split_over_base_field(self) -> bool:
        return all(d == 1 for d in self.local_degrees)


class GpStatus(str, Enum):
    GORENSTEIN_PROJECTIVE = "gorenstein_projective"
    NOT_GORENSTEIN_PROJECTIVE = "not_gorenstein_projective"
    INCONCLUSIVE = "inconclusive"


class GpVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    module: FdModule
    status: GpStatus
    projective: bool = False
    reflexive: Verdict
    evaluation: Optional[ModuleMap] = Field(None, description="The evaluation map X -> X** when computed.")
    ext_module: Dict[int, int] = Field(default_factory=dict, description="i -> dim Ext^i_A(X, A).")
    ext_dual: Dict[int, int] = Field(default_factory=dict, description="i -> dim Ext^i_{A^op}(X*, A).")
    certificates: List[SyzygyCertificate] = Field(default_factory=list)
    reason: str = ""


class GpClassification(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    projective: List[FdModule]
    gorenstein_projective: List[FdModule] = Field(..., description="Non-projective Gorenstein-projective indecomposables.")
    not_gorenstein_projective: List[FdModule]
    inconclusive: List[FdModule]


class ThicknessVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verdict: Verdict
    violations: List[str] = Field(default_factory=list)
    checked_maps: int = 0
    checked_extensions: int = 0


class GabrielQuiver(BaseModel):
    """
    Ext-quiver of a basic algebra given by structure constants, with chosen lifts:
    vertex v <-> primitive idempotent, arrow i -> j <-> element of f_j (rad / rad^2) f_i.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    quiver: Quiver
    idempotents: Dict[str, DomainMatrix]
    arrow_elements: Dict[str, DomainMatrix]


class EndoAlgebraData(BaseModel):
    """
    Gamma = End_A(M)^op for M = M_1 + ... + M_r with pairwise non-isomorphic indecomposable summands.
    Basis element k is a map summands[blocks[k][0]] -> summands[blocks[k][1]].
    Multiplication x *_Gamma y = y o x.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    summands: Tuple[FdModule, ...]
    vertex_names: Tuple[str, ...]
    basis: Tuple[ModuleMap, ...]
    blocks: Tuple[Tuple[int, int], ...]
    structure: StructureConstants
    idempotents: Tuple[DomainMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


class EndoPresentation(BaseModel):
    """
    Discovered presentation of Gamma: a bound quiver algebra with vertices = summands and the
    images in Gamma of its arrows.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    endo: EndoAlgebraData
    algebra: AlgebraData
    vertex_summand: Dict[str, int]
    arrow_elements: Dict[str, DomainMatrix]
    basis_images: Tuple[DomainMatrix, ...] = Field(..., description="Image in Gamma of each basis path.")


class PresentationClaim(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = "claim"
    quiver: Quiver
    relations: Tuple[RelationElement, ...]
    nilpotency: int = Field(..., ge=2)


class PresentationStatus(str, Enum):
    VERIFIED = "verified"
    REFUTED_QUIVER = "refuted_quiver"
    REFUTED_DIMENSION = "refuted_dimension"
    INCONCLUSIVE = "inconclusive"


class PresentationVerdict(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: PresentationStatus
    vertex_map: Dict[str, str] = Field(default_factory=dict, description="Claim vertex -> Gamma vertex.")
    arrow_images: Dict[str, DomainMatrix] = Field(default_factory=dict)
    claim_dimension: Optional[int] = None
    algebra_dimension: int
    attempts: int = 0
    reason: str = ""


class GorensteinVerdict(BaseModel):
    """
    Injective dimension of the regular module on the left (over A) and on the right (over A^op).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verdict: Verdict
    left: DimensionResult
    right: DimensionResult


class CmFiniteReport(BaseModel):
    """
    Whether add M is exactly the Gorenstein-projective indecomposables, together with the
    Gorenstein property of A and, when supplied, the global dimension of End_A(M)^op.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    cm_finite: Verdict
    missing: List[str] = Field(default_factory=list, description="GP indecomposables not in add M.")
    extra: List[str] = Field(default_factory=list, description="Summands of M that are not GP.")
    gorenstein: GorensteinVerdict
    gamma_global_dimension: Optional[DimensionResult] = None
    consistent: Verdict = Verdict.UNKNOWN


class PartialResolutionVerdict(BaseModel):
    """
    Projective dimension over Gamma of every simple Gamma-module killed by M (x)_Gamma -.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verdict: Verdict
    simples: List[str] = Field(default_factory=list, description="Gamma-vertices whose simple lies in the kernel category.")
    certificates: List[SyzygyCertificate] = Field(default_factory=list)


class MResolution(BaseModel):
    """
    Iterated minimal right add M-approximations ... -> M_1 -> M_0 -> X.
    `finite` when the last kernel is zero or lies in add M.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    target: FdModule
    terms: Tuple[FdModule, ...]
    tops: Tuple[Tuple[str, ...], ...]
    kernels: Tuple[FdModule, ...]
    finite: bool
    length: Optional[int] = None
