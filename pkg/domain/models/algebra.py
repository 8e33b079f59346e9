from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator
from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix


class FieldKind(str, Enum):
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"


class FieldSpec(BaseModel):
    """
    The base field k: the rationals or a prime field F_p.
    """
    model_config = ConfigDict(frozen=True)

    kind: FieldKind = Field(FieldKind.RATIONALS, description="Rationals or a prime field.")
    characteristic: int = Field(0, ge=0, description="0 for the rationals, p for F_p.")

    @model_validator(mode="after")
    def check_characteristic(self) -> "FieldSpec":
        if self.kind == FieldKind.RATIONALS and self.characteristic != 0:
            raise ValueError("The rationals have characteristic 0")
        if self.kind == FieldKind.PRIME_FIELD and not isprime(self.characteristic):
            raise ValueError(f"Characteristic {self.characteristic} is not a prime")
        return self

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(kind=FieldKind.RATIONALS, characteristic=0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(kind=FieldKind.PRIME_FIELD, characteristic=p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts 'Q', 'QQ', 'F 5', 'F5', 'GF(5)'."""
        cleaned = text.strip().upper().replace("GF(", "F").replace(")", "").replace(" ", "")
        if cleaned in ("Q", "QQ"):
            return cls.rationals()
        if cleaned.startswith("F") and cleaned[1:].isdigit():
            return cls.prime(int(cleaned[1:]))
        raise ValueError(f"Unknown field specification: '{text}'")

    @property
    def domain(self):
        if self.kind == FieldKind.RATIONALS:
            return QQ
        return GF(self.characteristic)

    @property
    def label(self) -> str:
        return "Q" if self.kind == FieldKind.RATIONALS else f"F_{self.characteristic}"


class Arrow(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    source: str
    target: str


class Quiver(BaseModel):
    """
    A finite quiver. Vertex and arrow labels are unique.
    """
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()

    @model_validator(mode="after")
    def check_labels(self) -> "Quiver":
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"Duplicate vertex labels in {self.vertices}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate arrow labels in {names}")
        declared = set(self.vertices)
        for a in self.arrows:
            if a.source not in declared or a.target not in declared:
                raise ValueError(f"Arrow '{a.name}' references an undeclared vertex ({a.source} -> {a.target})")
        return self

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def has_arrow(self, name: str) -> bool:
        return any(a.name == name for a in self.arrows)

    def arrows_from(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def arrows_into(self, vertex: str) -> List[Arrow]:
        return [a for a in self.arrows if a.target == vertex]

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from((a.source, a.target, a.name) for a in self.arrows)
        return g

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph())

    def opposite(self) -> "Quiver":
        return Quiver(
            vertices=self.vertices,
            arrows=tuple(Arrow(name=a.name, source=a.target, target=a.source) for a in self.arrows),
        )


class PathWord(BaseModel):
    """
    A path written right-to-left: `arrows[0]` is traversed last, `arrows[-1]` first.
    The trivial path e_v has no arrows and source = target = v.
    """
    model_config = ConfigDict(frozen=True)

    source: str
    target: str
    arrows: Tuple[str, ...] = ()

    @model_validator(mode="after")
    def check_trivial(self) -> "PathWord":
        if not self.arrows and self.source != self.target:
            raise ValueError("A trivial path has equal source and target")
        return self

    @classmethod
    def trivial(cls, vertex: str) -> "PathWord":
        return cls(source=vertex, target=vertex, arrows=())

    @classmethod
    def from_arrows(cls, quiver: Quiver, names: Tuple[str, ...]) -> "PathWord":
        if not names:
            raise ValueError("Use PathWord.trivial for paths of length zero")
        for name in names:
            if not quiver.has_arrow(name):
                raise ValueError(f"Unknown arrow '{name}'")
        for left, right in zip(names, names[1:]):
            if quiver.arrow(left).source != quiver.arrow(right).target:
                raise ValueError(f"Arrows '{left}' and '{right}' are not composable (right-to-left)")
        return cls(source=quiver.arrow(names[-1]).source, target=quiver.arrow(names[0]).target, arrows=tuple(names))

    @property
    def length(self) -> int:
        return len(self.arrows)

    def after(self, other: "PathWord") -> "PathWord":
        """self * other: traverse `other` first, then `self`."""
        if other.target != self.source:
            raise ValueError(f"Cannot compose {self.text()} after {other.text()}")
        return PathWord(source=other.source, target=self.target, arrows=self.arrows + other.arrows)

    def reversed(self) -> "PathWord":
        return PathWord(source=self.target, target=self.source, arrows=tuple(reversed(self.arrows)))

    def text(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e_{self.source}"


class RelationElement(BaseModel):
    """
    A formal linear combination of parallel paths of length at least 2.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    terms: Tuple[Tuple[Fraction, PathWord], ...]

    @field_validator("terms")
    @classmethod
    def check_terms(cls, terms):
        if not terms:
            raise ValueError("A relation needs at least one term")
        endpoints = {(p.source, p.target) for _, p in terms}
        if len(endpoints) != 1:
            raise ValueError(f"Relation terms are not parallel: {sorted(endpoints)}")
        for coefficient, path in terms:
            if path.length < 2:
                raise ValueError(f"Relation term '{path.text()}' has length < 2")
            if coefficient == 0:
                raise ValueError("Zero coefficients are not allowed in relations")
        return terms

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    def reversed(self) -> "RelationElement":
        return RelationElement(terms=tuple((c, p.reversed()) for c, p in self.terms))

    def text(self) -> str:
        parts = []
        for i, (c, p) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            body = p.text() if magnitude == 1 else f"{magnitude}*{p.text()}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


class NakayamaOrientation(str, Enum):
    CYCLIC = "cyclic"
    LINEAR = "linear"


class NakayamaSpec(BaseModel):
    """
    Orientation plus admissible sequence c_1..c_n (c_i = length of P_i).
    """
    model_config = ConfigDict(frozen=True)

    orientation: NakayamaOrientation
    sequence: Tuple[int, ...]

    @model_validator(mode="after")
    def check_admissible(self) -> "NakayamaSpec":
        c = self.sequence
        n = len(c)
        if n == 0 or any(ci < 1 for ci in c):
            raise ValueError(f"Admissible sequence must consist of positive integers: {c}")
        if self.orientation == NakayamaOrientation.CYCLIC:
            for i in range(n):
                if c[i] < 2:
                    raise ValueError(f"Cyclic admissible sequence needs c_i >= 2: {c}")
                if c[(i + 1) % n] < c[i] - 1:
                    raise ValueError(f"c_{(i + 1) % n + 1} < c_{i + 1} - 1 in {c}")
        else:
            if c[-1] != 1:
                raise ValueError(f"Linear admissible sequence must end with 1: {c}")
            for i in range(n - 1):
                if c[i] < 2:
                    raise ValueError(f"Linear admissible sequence needs c_i >= 2 before the last vertex: {c}")
                if c[i + 1] < c[i] - 1:
                    raise ValueError(f"c_{i + 2} < c_{i + 1} - 1 in {c}")
        return self


class StructureConstants(BaseModel):
    """
    A finite-dimensional algebra by structure constants.
    left[i] is the matrix of x -> b_i * x; column j of left[i] is b_i * b_j.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    field: FieldSpec
    dimension: int = Field(..., ge=0)
    left: Tuple[DomainMatrix, ...]
    unit: DomainMatrix

    _cache: Dict[Any, Any] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def check_shapes(self) -> "StructureConstants":
        n = self.dimension
        if len(self.left) != n:
            raise ValueError(f"Expected {n} multiplication matrices, got {len(self.left)}")
        for m in self.left:
            if m.shape != (n, n):
                raise ValueError(f"Multiplication matrix of shape {m.shape}, expected {(n, n)}")
        if self.unit.shape != (n, 1):
            raise ValueError("Unit must be a column vector")
        return self


class AlgebraData(BaseModel):
    """
    A bound quiver algebra kQ/(I + J^N) with an explicit path basis and multiplication table.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(..., description="Display name; opposite algebras append '^op'.")
    field: FieldSpec
    quiver: Quiver
    relations: Tuple[RelationElement, ...] = ()
    nilpotency: int = Field(..., ge=2, description="Truncation bound N: paths of length >= N vanish.")
    basis: Tuple[PathWord, ...]
    structure: StructureConstants
    nakayama: Optional[NakayamaSpec] = None

    _cache: Dict[Any, Any] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def check_basis(self) -> "AlgebraData":
        trivial = {p.source for p in self.basis if p.length == 0}
        missing = set(self.quiver.vertices) - trivial
        if missing:
            raise ValueError(f"Basis is missing trivial paths at {sorted(missing)}")
        if any(p.length >= self.nilpotency for p in self.basis):
            raise ValueError("Basis contains a path of length >= nilpotency bound")
        if self.structure.dimension != len(self.basis):
            raise ValueError("Structure constants do not match the basis")
        return self

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.quiver.vertices

    def basis_index(self) -> Dict[PathWord, int]:
        index = self._cache.get("basis_index")
        if index is None:
            index = {p: i for i, p in enumerate(self.basis)}
            self._cache["basis_index"] = index
        return index

    def index_of(self, path: PathWord) -> int:
        return self.basis_index()[path]

    def trivial_index(self, vertex: str) -> int:
        return self.index_of(PathWord.trivial(vertex))

    def arrow_index(self, name: str) -> int:
        a = self.quiver.arrow(name)
        return self.index_of(PathWord(source=a.source, target=a.target, arrows=(name,)))

    def same_as(self, other: "AlgebraData") -> bool:
        """Same presentation: name, field, quiver, relations (in any order), truncation and basis words."""
        if self is other:
            return True
        return (
            self.name == other.name
            and self.field == other.field
            and self.quiver == other.quiver
            and self.nilpotency == other.nilpotency
            and set(self.relations) == set(other.relations)
            and set(self.basis) == set(other.basis)
        )
