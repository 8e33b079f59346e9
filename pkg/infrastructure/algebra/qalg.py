"""
Bound quiver algebras kQ/(I + J^N): path enumeration, ideal closure in the truncated path space,
standard-monomial basis and multiplication table.
"""
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict
from sympy.polys.matrices import DomainMatrix

from core.exceptions import InputError, InvalidAdmissibleSequenceError
from domain.models.algebra import (
    AlgebraData,
    Arrow,
    FieldSpec,
    NakayamaOrientation,
    NakayamaSpec,
    PathWord,
    Quiver,
    RelationElement,
    StructureConstants,
)
from infrastructure.algebra import linalg, structure
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


class NilpotencyCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    stable: bool
    nilpotency: int
    dimension: int
    dimension_next: int
    reason: str = ""


def enumerate_paths(quiver: Quiver, max_length: int) -> List[PathWord]:
    """All paths of length <= max_length, by increasing length."""
    layer = [PathWord.trivial(v) for v in quiver.vertices]
    paths = list(layer)
    for _ in range(max_length):
        nxt = []
        for p in layer:
            for a in quiver.arrows_from(p.target):
                nxt.append(PathWord(source=p.source, target=a.target, arrows=(a.name,) + p.arrows))
        if not nxt:
            break
        paths.extend(nxt)
        layer = nxt
    return paths


class _TruncatedPathSpace:
    """
    Paths of length < N indexed so that longer paths get smaller indices; the echelon form
    then prefers long paths as pivots and standard monomials are the short survivors.
    """

    def __init__(self, quiver: Quiver, nilpotency: int, K):
        self.quiver = quiver
        self.N = nilpotency
        self.K = K
        paths = enumerate_paths(quiver, nilpotency - 1)
        order = sorted(range(len(paths)), key=lambda i: (-paths[i].length, i))
        self.paths = [paths[i] for i in order]
        self.index = {p: i for i, p in enumerate(self.paths)}
        self.ideal = linalg.SparseEchelon(K)

    def vector(self, terms: Sequence[Tuple[object, PathWord]]) -> Dict[int, object]:
        v: Dict[int, object] = {}
        for c, p in terms:
            if p.length >= self.N:
                continue
            i = self.index[p]
            v[i] = v.get(i, self.K.zero) + c
        return v

    def left_times(self, arrow: Arrow, vec: Dict[int, object]) -> Dict[int, object]:
        out: Dict[int, object] = {}
        for i, c in vec.items():
            p = self.paths[i]
            if p.target != arrow.source or p.length + 1 >= self.N:
                continue
            j = self.index[PathWord(source=p.source, target=arrow.target, arrows=(arrow.name,) + p.arrows)]
            out[j] = out.get(j, self.K.zero) + c
        return out

    def right_times(self, vec: Dict[int, object], arrow: Arrow) -> Dict[int, object]:
        out: Dict[int, object] = {}
        for i, c in vec.items():
            p = self.paths[i]
            if p.source != arrow.target or p.length + 1 >= self.N:
                continue
            j = self.index[PathWord(source=arrow.source, target=p.target, arrows=p.arrows + (arrow.name,))]
            out[j] = out.get(j, self.K.zero) + c
        return out

    def close(self, generators: Sequence[Dict[int, object]]) -> None:
        queue = list(generators)
        while queue:
            row = self.ideal.add(queue.pop())
            if row is None:
                continue
            for a in self.quiver.arrows:
                queue.append(self.left_times(a, row))
                queue.append(self.right_times(row, a))


def _relation_terms(relation: RelationElement, K) -> List[Tuple[object, PathWord]]:
    return [(linalg.scalar(K, c), p) for c, p in relation.terms]


def _validate_relations(quiver: Quiver, relations: Sequence[RelationElement]) -> None:
    for r in relations:
        for _, p in r.terms:
            try:
                PathWord.from_arrows(quiver, p.arrows)
            except (ValueError, KeyError) as e:
                raise InputError(f"Relation '{r.text()}' is not a combination of paths of the quiver: {e}")


def build_algebra(
    quiver: Quiver,
    relations: Sequence[RelationElement],
    nilpotency: int,
    field: FieldSpec,
    name: str = "A",
    nakayama: Optional[NakayamaSpec] = None,
) -> AlgebraData:
    """
    kQ/(I + J^N): the ideal generated by the relations is closed under left and right
    multiplication by arrows inside the span of paths of length < N.
    """
    if nilpotency < 2:
        raise InputError(f"Nilpotency bound must be at least 2, got {nilpotency}")
    _validate_relations(quiver, relations)
    K = field.domain
    logger.info(f"Building algebra '{name}' over {field.label}: {len(quiver.vertices)} vertices, "
                f"{len(quiver.arrows)} arrows, {len(relations)} relations, N={nilpotency}")
    space = _TruncatedPathSpace(quiver, nilpotency, K)
    space.close([space.vector(_relation_terms(r, K)) for r in relations])

    standard = [i for i in range(len(space.paths)) if i not in space.ideal.rows]
    vertex_rank = {v: k for k, v in enumerate(quiver.vertices)}
    standard.sort(key=lambda i: (space.paths[i].length, vertex_rank[space.paths[i].source], i))
    basis = [space.paths[i] for i in standard]
    position = {i: k for k, i in enumerate(standard)}
    n = len(basis)
    logger.debug(f"Ideal closure has dimension {len(space.ideal)}; quotient has dimension {n}")

    def coordinates(path: PathWord) -> List:
        column = [K.zero] * n
        if path.length >= nilpotency:
            return column
        remainder = space.ideal.reduce({space.index[path]: K.one})
        for i, c in remainder.items():
            column[position[i]] = c
        return column

    left = []
    for p in basis:
        cols = []
        for q in basis:
            if q.target == p.source:
                cols.append(coordinates(p.after(q)))
            else:
                cols.append([K.zero] * n)
        left.append(DomainMatrix([[cols[j][i] for j in range(n)] for i in range(n)], (n, n), K))
    unit = [K.zero] * n
    for k, p in enumerate(basis):
        if p.length == 0:
            unit[k] = K.one
    structure_constants = StructureConstants(
        field=field,
        dimension=n,
        left=tuple(left),
        unit=DomainMatrix([[u] for u in unit], (n, 1), K),
    )
    algebra = AlgebraData(
        name=name,
        field=field,
        quiver=quiver,
        relations=tuple(relations),
        nilpotency=nilpotency,
        basis=tuple(basis),
        structure=structure_constants,
        nakayama=nakayama,
    )
    logger.info(f"Algebra '{name}' has dimension {n}")
    return algebra


def normal_form(algebra: AlgebraData, path: PathWord) -> DomainMatrix:
    """Coordinates of an arbitrary path of the quiver in the algebra basis."""
    K = algebra.field.domain
    n = algebra.dimension
    if path.length == 0:
        return linalg.unit_vector(n, algebra.trivial_index(path.source), K)
    vec = linalg.unit_vector(n, algebra.arrow_index(path.arrows[-1]), K)
    for name in reversed(path.arrows[:-1]):
        vec = algebra.structure.left[algebra.arrow_index(name)] * vec
    return vec.to_dense()


def multiply(algebra: AlgebraData, x: DomainMatrix, y: DomainMatrix) -> DomainMatrix:
    return structure.multiply(algebra.structure, x, y)


def certify_nilpotency_independence(algebra: AlgebraData) -> NilpotencyCertificate:
    """
    Rebuilds at N+1 and checks that the basis paths still form a basis there and that
    multiplication agrees under the induced inclusion.
    """
    N = algebra.nilpotency
    bigger = build_algebra(algebra.quiver, algebra.relations, N + 1, algebra.field, name=f"{algebra.name}@{N + 1}")
    if bigger.dimension != algebra.dimension:
        return NilpotencyCertificate(
            stable=False, nilpotency=N, dimension=algebra.dimension, dimension_next=bigger.dimension,
            reason=f"dimension changes from {algebra.dimension} to {bigger.dimension}",
        )
    K = algebra.field.domain
    n = algebra.dimension
    images = [normal_form(bigger, p) for p in algebra.basis]
    phi = linalg.hstack(images, n, K)
    if not linalg.is_invertible(phi):
        return NilpotencyCertificate(
            stable=False, nilpotency=N, dimension=n, dimension_next=bigger.dimension,
            reason="basis paths are dependent after raising the bound",
        )
    for i in range(n):
        for j in range(n):
            product = algebra.structure.left[i] * linalg.unit_vector(n, j, K)
            lhs = phi * product
            rhs = structure.multiply(bigger.structure, images[i], images[j])
            if not linalg.equal(lhs, rhs):
                return NilpotencyCertificate(
                    stable=False, nilpotency=N, dimension=n, dimension_next=bigger.dimension,
                    reason=f"product {algebra.basis[i].text()} * {algebra.basis[j].text()} differs",
                )
    return NilpotencyCertificate(stable=True, nilpotency=N, dimension=n, dimension_next=bigger.dimension)


def build_nakayama(spec: NakayamaSpec, field: FieldSpec, name: Optional[str] = None) -> AlgebraData:
    """
    Monomial Nakayama algebra: arrow a_i leaves vertex i and the path of length c_i from i is zero.
    """
    c = spec.sequence
    n = len(c)
    vertices = tuple(str(i + 1) for i in range(n))
    cyclic = spec.orientation == NakayamaOrientation.CYCLIC
    arrows = []
    for i in range(n if cyclic else n - 1):
        arrows.append(Arrow(name=f"a{i + 1}", source=vertices[i], target=vertices[(i + 1) % n]))
    quiver = Quiver(vertices=vertices, arrows=tuple(arrows))
    relations = []
    for i in range(n):
        if not cyclic and i + c[i] > n - 1:
            continue
        if c[(i + 1) % n] == c[i] - 1 and (cyclic or i + 1 < n):
            # implied by the relation starting at the next vertex
            continue
        word = tuple(f"a{(i + k) % n + 1}" for k in reversed(range(c[i])))
        relations.append(RelationElement(terms=((Fraction(1), PathWord.from_arrows(quiver, word)),)))
    label = name or (f"Nakayama{tuple(c)}" if cyclic else f"NakayamaLinear{tuple(c)}")
    return build_algebra(quiver, relations, max(c) + 1, field, name=label, nakayama=spec)


def nakayama(sequence: Sequence[int], field: FieldSpec, cyclic: bool = True, name: Optional[str] = None) -> AlgebraData:
    try:
        spec = NakayamaSpec(
            orientation=NakayamaOrientation.CYCLIC if cyclic else NakayamaOrientation.LINEAR,
            sequence=tuple(sequence),
        )
    except ValueError as e:
        raise InvalidAdmissibleSequenceError(str(e))
    return build_nakayama(spec, field, name=name)


def build_dual_numbers(path_algebra: AlgebraData, name: Optional[str] = None) -> AlgebraData:
    """
    kQ[eps] = kQ (x) k[eps]: one loop eps_i per vertex, eps_i^2 = 0 and eps_j * a = a * eps_i.
    """
    if path_algebra.relations:
        raise InputError("Dual numbers are built over a relation-free path algebra")
    quiver = path_algebra.quiver
    if not quiver.is_acyclic():
        raise InputError("Dual numbers are built over an acyclic quiver")
    loops = {v: f"eps{v}" for v in quiver.vertices}
    taken = {a.name for a in quiver.arrows}
    if taken & set(loops.values()):
        raise InputError(f"Arrow names clash with the loop names {sorted(loops.values())}")
    arrows = tuple(quiver.arrows) + tuple(Arrow(name=loops[v], source=v, target=v) for v in quiver.vertices)
    doubled = Quiver(vertices=quiver.vertices, arrows=arrows)
    relations = [
        RelationElement(terms=((Fraction(1), PathWord.from_arrows(doubled, (loops[v], loops[v]))),))
        for v in quiver.vertices
    ]
    for a in quiver.arrows:
        relations.append(RelationElement(terms=(
            (Fraction(1), PathWord.from_arrows(doubled, (loops[a.target], a.name))),
            (Fraction(-1), PathWord.from_arrows(doubled, (a.name, loops[a.source]))),
        )))
    longest = nx.dag_longest_path_length(quiver.graph()) if quiver.arrows else 0
    return build_algebra(
        doubled, relations, longest + 3, path_algebra.field, name=name or f"{path_algebra.name}[eps]"
    )


def path_algebra(quiver: Quiver, field: FieldSpec, name: str = "kQ") -> AlgebraData:
    if not quiver.is_acyclic():
        raise InputError("A path algebra without relations needs an acyclic quiver")
    longest = nx.dag_longest_path_length(quiver.graph()) if quiver.arrows else 0
    return build_algebra(quiver, [], longest + 2, field, name=name)


def opposite_algebra(algebra: AlgebraData) -> AlgebraData:
    """Arrows reversed, basis paths reversed, b_i *op b_j = b_j * b_i; (A^op)^op is A itself."""
    cached = algebra._cache.get("opposite")
    if cached is not None:
        return cached
    K = algebra.field.domain
    n = algebra.dimension
    columns = [[linalg.column_entries(algebra.structure.left[j] * linalg.unit_vector(n, i, K)) for j in range(n)]
               for i in range(n)]
    left = tuple(
        DomainMatrix([[columns[i][j][r] for j in range(n)] for r in range(n)], (n, n), K) for i in range(n)
    )
    name = algebra.name[:-3] if algebra.name.endswith("^op") else f"{algebra.name}^op"
    opposite = AlgebraData(
        name=name,
        field=algebra.field,
        quiver=algebra.quiver.opposite(),
        relations=tuple(r.reversed() for r in algebra.relations),
        nilpotency=algebra.nilpotency,
        basis=tuple(p.reversed() for p in algebra.basis),
        structure=StructureConstants(field=algebra.field, dimension=n, left=left, unit=algebra.structure.unit),
        nakayama=None,
    )
    algebra._cache["opposite"] = opposite
    opposite._cache["opposite"] = algebra
    return opposite


def cartan_matrix(algebra: AlgebraData) -> List[List[int]]:
    """c[i][j] = dim e_i A e_j = number of basis paths from j to i."""
    vertices = algebra.vertices
    pos = {v: k for k, v in enumerate(vertices)}
    c = [[0] * len(vertices) for _ in vertices]
    for p in algebra.basis:
        c[pos[p.target]][pos[p.source]] += 1
    return c


def loewy_length(algebra: AlgebraData) -> int:
    """Smallest L with J^L = 0: one more than the longest basis path."""
    return max(p.length for p in algebra.basis) + 1


def projective_dimension_vectors(algebra: AlgebraData) -> Dict[str, Tuple[int, ...]]:
    c = cartan_matrix(algebra)
    return {v: tuple(c[i][j] for i in range(len(c))) for j, v in enumerate(algebra.vertices)}


def algebra_summary(algebra: AlgebraData) -> Dict[str, object]:
    return {
        "name": algebra.name,
        "field": algebra.field.label,
        "dimension": algebra.dimension,
        "vertices": len(algebra.vertices),
        "arrows": len(algebra.quiver.arrows),
        "relations": [r.text() for r in algebra.relations],
        "nilpotency": algebra.nilpotency,
        "loewy_length": loewy_length(algebra),
        "projective_dimension_vectors": {v: list(d) for v, d in projective_dimension_vectors(algebra).items()},
        "cartan_matrix": cartan_matrix(algebra),
    }


def is_nakayama(algebra: AlgebraData) -> bool:
    """At most one arrow starts and at most one arrow ends at each vertex."""
    quiver = algebra.quiver
    return all(len(quiver.arrows_from(v)) <= 1 and len(quiver.arrows_into(v)) <= 1 for v in quiver.vertices)
