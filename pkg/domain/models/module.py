from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator
from sympy.polys.matrices import DomainMatrix

from domain.models.algebra import AlgebraData, PathWord


def _path_matrix(algebra: AlgebraData, dims: Dict[str, int], maps: Dict[str, DomainMatrix], path: PathWord) -> DomainMatrix:
    K = algebra.field.domain
    if path.length == 0:
        n = dims[path.source]
        return DomainMatrix.eye(n, K).to_dense()
    result = maps[path.arrows[-1]]
    for name in reversed(path.arrows[:-1]):
        result = maps[name] * result
    return result


def _span_rank(columns: DomainMatrix) -> int:
    if columns.shape[0] == 0 or columns.shape[1] == 0:
        return 0
    return columns.rank()


class FdModule(BaseModel):
    """
    A finite-dimensional left module given as a representation of the bound quiver:
    a vector space per vertex and, per arrow a: i -> j, a matrix of shape dims[j] x dims[i].
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    algebra: AlgebraData
    dims: Dict[str, int] = Field(..., description="Dimension of the space at each vertex.")
    maps: Dict[str, DomainMatrix] = Field(..., description="Arrow name -> matrix (target x source).")
    label: str = ""

    _cache: Dict[Any, Any] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def check_representation(self) -> "FdModule":
        quiver = self.algebra.quiver
        K = self.algebra.field.domain
        for v in quiver.vertices:
            if v not in self.dims:
                raise ValueError(f"Module is missing the dimension at vertex {v}")
            if self.dims[v] < 0:
                raise ValueError(f"Negative dimension at vertex {v}")
        for a in quiver.arrows:
            m = self.maps.get(a.name)
            if m is None:
                raise ValueError(f"Module is missing the matrix for arrow {a.name}")
            expected = (self.dims[a.target], self.dims[a.source])
            if m.shape != expected:
                raise ValueError(f"Matrix for arrow {a.name} has shape {m.shape}, expected {expected}")
            if m.domain != K:
                raise ValueError(f"Matrix for arrow {a.name} is over {m.domain}, expected {K}")
        for relation in self.algebra.relations:
            total = None
            for coefficient, path in relation.terms:
                c = K.quo(K(coefficient.numerator), K(coefficient.denominator))
                term = _path_matrix(self.algebra, self.dims, self.maps, path) * c
                total = term if total is None else total + term
            if total is not None and not total.is_zero_matrix:
                raise ValueError(f"Relation '{relation.text()}' does not vanish on the module")
        self._check_nilpotent()
        return self

    def _check_nilpotent(self) -> None:
        # rad^N of the module must vanish
        quiver = self.algebra.quiver
        K = self.algebra.field.domain
        layer = {v: DomainMatrix.eye(self.dims[v], K).to_dense() for v in quiver.vertices}
        for _ in range(self.algebra.nilpotency):
            nxt = {}
            for v in quiver.vertices:
                blocks = [self.maps[a.name] * layer[a.source] for a in quiver.arrows_into(v) if layer[a.source].shape[1] > 0]
                nxt[v] = blocks[0].hstack(*blocks[1:]) if blocks else DomainMatrix.zeros((self.dims[v], 0), K).to_dense()
            layer = nxt
            if all(_span_rank(m) == 0 for m in layer.values()):
                return
        raise ValueError(f"The module is not annihilated by J^{self.algebra.nilpotency}")

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    @property
    def dim_vector(self) -> Tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    @property
    def is_zero(self) -> bool:
        return self.dimension == 0

    def path_action(self, path: PathWord) -> DomainMatrix:
        cache = self._cache.setdefault("paths", {})
        if path not in cache:
            cache[path] = _path_matrix(self.algebra, self.dims, self.maps, path)
        return cache[path]

    def display_name(self) -> str:
        return self.label or f"M{list(self.dim_vector)}"


class ModuleMap(BaseModel):
    """
    A homomorphism of representations: per vertex a matrix (target dim x source dim)
    commuting with every arrow.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: FdModule
    target: FdModule
    components: Dict[str, DomainMatrix]

    @model_validator(mode="after")
    def check_homomorphism(self) -> "ModuleMap":
        if not self.source.algebra.same_as(self.target.algebra):
            raise ValueError("Source and target are modules over different algebras")
        quiver = self.source.algebra.quiver
        for v in quiver.vertices:
            f = self.components.get(v)
            if f is None:
                raise ValueError(f"Map is missing the component at vertex {v}")
            if f.shape != (self.target.dims[v], self.source.dims[v]):
                raise ValueError(f"Component at vertex {v} has shape {f.shape}")
        for a in quiver.arrows:
            left = self.target.maps[a.name] * self.components[a.source]
            right = self.components[a.target] * self.source.maps[a.name]
            if not (left - right).is_zero_matrix:
                raise ValueError(f"Map does not commute with arrow {a.name}")
        return self

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero_matrix for m in self.components.values())

    def component_list(self) -> List[DomainMatrix]:
        return [self.components[v] for v in self.source.algebra.vertices]
