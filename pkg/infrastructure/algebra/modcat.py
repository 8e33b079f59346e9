"""
Finite-dimensional modules as representations of a bound quiver.
"""
import itertools
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.matrices import DomainMatrix

from core.config import get_settings
from core.exceptions import AlgebraMismatchError, ComputationError, InputError
from domain.models.algebra import AlgebraData, PathWord, StructureConstants
from domain.models.module import FdModule, ModuleMap
from domain.models.verdicts import Decomposition, IsoVerdict, Verdict
from infrastructure.algebra import linalg, qalg, structure
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def _require_same(X: FdModule, Y: FdModule) -> None:
    if not X.algebra.same_as(Y.algebra):
        raise AlgebraMismatchError(f"Modules over different algebras: {X.algebra.name} and {Y.algebra.name}")


def make_module(algebra: AlgebraData, dims: Dict[str, int], entries: Dict[str, Sequence], label: str = "") -> FdModule:
    """Module from per-arrow row-major entry lists; arrows left out act as zero."""
    K = algebra.field.domain
    maps = {}
    for a in algebra.quiver.arrows:
        rows, cols = dims.get(a.target, 0), dims.get(a.source, 0)
        values = entries.get(a.name)
        if values is None:
            maps[a.name] = linalg.zeros(rows, cols, K)
            continue
        if len(values) != rows * cols:
            raise InputError(f"Arrow {a.name} needs {rows * cols} entries, got {len(values)}")
        maps[a.name] = linalg.reshape([linalg.scalar(K, x) for x in values], (rows, cols), K)
    unknown = set(entries) - {a.name for a in algebra.quiver.arrows}
    if unknown:
        raise InputError(f"Unknown arrows in module definition: {sorted(unknown)}")
    full_dims = {v: dims.get(v, 0) for v in algebra.vertices}
    return FdModule(algebra=algebra, dims=full_dims, maps=maps, label=label)


def zero_module(algebra: AlgebraData) -> FdModule:
    return make_module(algebra, {}, {}, label="0")


def simple(algebra: AlgebraData, vertex: str) -> FdModule:
    if vertex not in algebra.vertices:
        raise InputError(f"Unknown vertex {vertex}")
    return make_module(algebra, {vertex: 1}, {}, label=f"S_{vertex}")


def projective_paths(algebra: AlgebraData, vertex: str) -> Dict[str, List[int]]:
    """Basis indices of P_vertex grouped by the vertex where each path ends."""
    key = ("projective_paths", vertex)
    cached = algebra._cache.get(key)
    if cached is None:
        cached = {w: [] for w in algebra.vertices}
        for k, p in enumerate(algebra.basis):
            if p.source == vertex:
                cached[p.target].append(k)
        algebra._cache[key] = cached
    return cached


def projective(algebra: AlgebraData, vertex: str) -> FdModule:
    """P_v = A e_v: paths starting at v, acted on by left multiplication."""
    if vertex not in algebra.vertices:
        raise InputError(f"Unknown vertex {vertex}")
    key = ("projective", vertex)
    cached = algebra._cache.get(key)
    if cached is not None:
        return cached
    K = algebra.field.domain
    groups = projective_paths(algebra, vertex)
    maps = {}
    for a in algebra.quiver.arrows:
        action = algebra.structure.left[algebra.arrow_index(a.name)].to_list()
        rows, cols = groups[a.target], groups[a.source]
        maps[a.name] = DomainMatrix([[action[r][c] for c in cols] for r in rows], (len(rows), len(cols)), K)
    module = FdModule(
        algebra=algebra,
        dims={w: len(groups[w]) for w in algebra.vertices},
        maps=maps,
        label=f"P_{vertex}",
    )
    algebra._cache[key] = module
    return module


def dual(X: FdModule) -> FdModule:
    """D(X) = Hom_k(X, k) over the opposite algebra."""
    opposite = qalg.opposite_algebra(X.algebra)
    name = X.label
    return FdModule(
        algebra=opposite,
        dims=dict(X.dims),
        maps={a: m.transpose().to_dense() for a, m in X.maps.items()},
        label=f"D({name})" if name else "",
    )


def dual_map(f: ModuleMap) -> ModuleMap:
    return ModuleMap(
        source=dual(f.target),
        target=dual(f.source),
        components={v: m.transpose().to_dense() for v, m in f.components.items()},
    )


def injective(algebra: AlgebraData, vertex: str) -> FdModule:
    """I_v = D(P_v over A^op)."""
    opposite = qalg.opposite_algebra(algebra)
    module = dual(projective(opposite, vertex))
    return FdModule(algebra=module.algebra, dims=module.dims, maps=module.maps, label=f"I_{vertex}")


def direct_sum(modules: Sequence[FdModule], label: str = "") -> Tuple[FdModule, List[ModuleMap], List[ModuleMap]]:
    """X_1 + ... + X_r with its canonical inclusions and projections."""
    if not modules:
        raise InputError("direct_sum needs at least one module")
    algebra = modules[0].algebra
    for m in modules[1:]:
        _require_same(modules[0], m)
    K = algebra.field.domain
    dims = {v: sum(m.dims[v] for m in modules) for v in algebra.vertices}
    maps = {a.name: linalg.block_diagonal([m.maps[a.name] for m in modules], K) for a in algebra.quiver.arrows}
    name = label or " + ".join(m.display_name() for m in modules)
    total = FdModule(algebra=algebra, dims=dims, maps=maps, label=name)
    inclusions, projections = [], []
    offsets = {v: 0 for v in algebra.vertices}
    for m in modules:
        inc, proj = {}, {}
        for v in algebra.vertices:
            rows = [[K.one if (r == offsets[v] + c) else K.zero for c in range(m.dims[v])] for r in range(dims[v])]
            inc[v] = DomainMatrix(rows, (dims[v], m.dims[v]), K)
            proj[v] = inc[v].transpose().to_dense()
            offsets[v] += m.dims[v]
        inclusions.append(ModuleMap(source=m, target=total, components=inc))
        projections.append(ModuleMap(source=total, target=m, components=proj))
    return total, inclusions, projections


def regular_module(algebra: AlgebraData) -> FdModule:
    cached = algebra._cache.get("regular_module")
    if cached is None:
        cached = direct_sum([projective(algebra, v) for v in algebra.vertices], label="A")[0]
        algebra._cache["regular_module"] = cached
    return cached


def identity(X: FdModule) -> ModuleMap:
    K = X.algebra.field.domain
    return ModuleMap(source=X, target=X, components={v: linalg.identity(X.dims[v], K) for v in X.algebra.vertices})


def zero_map(X: FdModule, Y: FdModule) -> ModuleMap:
    _require_same(X, Y)
    K = X.algebra.field.domain
    return ModuleMap(
        source=X, target=Y, components={v: linalg.zeros(Y.dims[v], X.dims[v], K) for v in X.algebra.vertices}
    )


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """g o f."""
    if f.target is not g.source and f.target.dim_vector != g.source.dim_vector:
        raise InputError("Maps are not composable")
    return ModuleMap(
        source=f.source,
        target=g.target,
        components={v: (g.components[v] * f.components[v]).to_dense() for v in f.source.algebra.vertices},
    )


def add_maps(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    return ModuleMap(
        source=f.source,
        target=f.target,
        components={v: (f.components[v] + g.components[v]).to_dense() for v in f.source.algebra.vertices},
    )


def scale_map(f: ModuleMap, c) -> ModuleMap:
    K = f.source.algebra.field.domain
    return ModuleMap(
        source=f.source,
        target=f.target,
        components={v: linalg.scale(m, linalg.scalar(K, c)) for v, m in f.components.items()},
    )


def flatten_map(f: ModuleMap) -> DomainMatrix:
    K = f.source.algebra.field.domain
    values = []
    for v in f.source.algebra.vertices:
        values.extend(linalg.flatten(f.components[v]))
    return DomainMatrix([[x] for x in values], (len(values), 1), K)


def unflatten_map(X: FdModule, Y: FdModule, vector: DomainMatrix) -> ModuleMap:
    K = X.algebra.field.domain
    values = linalg.column_entries(vector)
    components, start = {}, 0
    for v in X.algebra.vertices:
        size = Y.dims[v] * X.dims[v]
        components[v] = linalg.reshape(values[start:start + size], (Y.dims[v], X.dims[v]), K)
        start += size
    return ModuleMap(source=X, target=Y, components=components)


def is_mono(f: ModuleMap) -> bool:
    return all(linalg.rank(m) == m.shape[1] for m in f.components.values())


def is_epi(f: ModuleMap) -> bool:
    return all(linalg.rank(m) == m.shape[0] for m in f.components.values())


def is_iso_map(f: ModuleMap) -> bool:
    return all(linalg.is_invertible(m) for m in f.components.values())


def inverse_map(f: ModuleMap) -> ModuleMap:
    if not is_iso_map(f):
        raise ComputationError("Map is not invertible")
    return ModuleMap(
        source=f.target, target=f.source, components={v: linalg.inverse(m) for v, m in f.components.items()}
    )


class HomSpace:
    """
    Hom_A(X, Y) with a fixed basis; maps are handled through their flattened components.
    """

    def __init__(self, source: FdModule, target: FdModule, basis: List[ModuleMap]):
        self.source = source
        self.target = target
        self.basis = basis
        K = source.algebra.field.domain
        size = sum(source.dims[v] * target.dims[v] for v in source.algebra.vertices)
        self.matrix = linalg.hstack([flatten_map(f) for f in basis], size, K)
        self._coordinates = linalg.CoordinateSystem(self.matrix)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, f: ModuleMap, check: bool = False) -> DomainMatrix:
        return self._coordinates.coordinates(flatten_map(f), check=check)

    def coordinates_of(self, components: Dict[str, DomainMatrix]) -> DomainMatrix:
        """Coordinates of raw per-vertex components, checked to lie in the space."""
        K = self.source.algebra.field.domain
        values = []
        for v in self.source.algebra.vertices:
            values.extend(linalg.flatten(components[v]))
        vector = DomainMatrix([[x] for x in values], (len(values), 1), K)
        return self._coordinates.coordinates(vector, check=True)

    def combination(self, coefficients) -> ModuleMap:
        K = self.source.algebra.field.domain
        if isinstance(coefficients, DomainMatrix):
            vector = (self.matrix * coefficients).to_dense()
        else:
            vector = linalg.linear_combination(
                (linalg.select_columns(self.matrix, [i]) for i in range(self.dimension)),
                coefficients, self.matrix.shape[0], K,
            )
        return unflatten_map(self.source, self.target, vector)


def _intertwining_system(X: FdModule, Y: FdModule) -> Tuple[DomainMatrix, int]:
    algebra = X.algebra
    K = algebra.field.domain
    offsets, total = {}, 0
    for v in algebra.vertices:
        offsets[v] = total
        total += Y.dims[v] * X.dims[v]
    rows = []
    for a in algebra.quiver.arrows:
        s, t = a.source, a.target
        ya = Y.maps[a.name].to_list()
        xa = X.maps[a.name].to_list()
        xs, ys, xt, yt = X.dims[s], Y.dims[s], X.dims[t], Y.dims[t]
        for r in range(yt):
            for c in range(xs):
                row = [K.zero] * total
                # (Y_a f_s - f_t X_a)[r, c]
                for k in range(ys):
                    if not K.is_zero(ya[r][k]):
                        row[offsets[s] + k * xs + c] += ya[r][k]
                for k in range(xt):
                    if not K.is_zero(xa[k][c]):
                        row[offsets[t] + r * xt + k] -= xa[k][c]
                rows.append(row)
    return DomainMatrix(rows, (len(rows), total), K), total


def hom_space(X: FdModule, Y: FdModule) -> HomSpace:
    """Basis of Hom_A(X, Y) as the solution space of the intertwining equations."""
    _require_same(X, Y)
    cache = X._cache.setdefault("hom", {})
    hit = cache.get(id(Y))
    if hit is not None and hit[0] is Y:
        return hit[1]
    system, total = _intertwining_system(X, Y)
    if total == 0:
        vectors = []
    elif system.shape[0] == 0:
        vectors = [linalg.unit_vector(total, j, X.algebra.field.domain) for j in range(total)]
    else:
        vectors = linalg.kernel_basis(system)
    space = HomSpace(X, Y, [unflatten_map(X, Y, v) for v in vectors])
    cache[id(Y)] = (Y, space)
    logger.debug(f"dim Hom({X.display_name()}, {Y.display_name()}) = {space.dimension}")
    return space


def submodule(X: FdModule, spaces: Dict[str, DomainMatrix], label: str = "") -> Tuple[FdModule, ModuleMap]:
    """The submodule spanned by the given column spaces, with its inclusion."""
    algebra = X.algebra
    K = algebra.field.domain
    bases = {v: linalg.column_space(spaces[v]) if spaces[v].shape[1] else spaces[v] for v in algebra.vertices}
    maps = {}
    for a in algebra.quiver.arrows:
        image = X.maps[a.name] * bases[a.source]
        action = linalg.solve_matrix(bases[a.target], image)
        if action is None:
            raise ComputationError(f"Subspaces are not closed under arrow {a.name}")
        maps[a.name] = action
    sub = FdModule(algebra=algebra, dims={v: bases[v].shape[1] for v in algebra.vertices}, maps=maps, label=label)
    return sub, ModuleMap(source=sub, target=X, components={v: bases[v].to_dense() for v in algebra.vertices})


def quotient(X: FdModule, spaces: Dict[str, DomainMatrix], label: str = "") -> Tuple[FdModule, ModuleMap]:
    """X modulo the submodule spanned by the given column spaces, with the projection."""
    algebra = X.algebra
    K = algebra.field.domain
    quotients = {v: linalg.QuotientSpace(spaces[v], X.dims[v], K) for v in algebra.vertices}
    maps = {
        a.name: (quotients[a.target].projection * X.maps[a.name] * quotients[a.source].lift).to_dense()
        for a in algebra.quiver.arrows
    }
    Q = FdModule(algebra=algebra, dims={v: quotients[v].dimension for v in algebra.vertices}, maps=maps, label=label)
    return Q, ModuleMap(source=X, target=Q, components={v: quotients[v].projection for v in algebra.vertices})


def kernel(f: ModuleMap) -> Tuple[FdModule, ModuleMap]:
    spaces = {v: linalg.kernel_matrix(m) for v, m in f.components.items()}
    return submodule(f.source, spaces, label=f"ker")


def image(f: ModuleMap) -> Tuple[FdModule, ModuleMap, ModuleMap]:
    """Image with inclusion into the target and the corestriction from the source."""
    spaces = {v: m for v, m in f.components.items()}
    im, inclusion = submodule(f.target, spaces, label="im")
    corestriction = {}
    for v, m in f.components.items():
        c = linalg.solve_matrix(inclusion.components[v], m)
        if c is None:
            raise ComputationError("Map does not factor through its image")
        corestriction[v] = c
    return im, inclusion, ModuleMap(source=f.source, target=im, components=corestriction)


def cokernel(f: ModuleMap) -> Tuple[FdModule, ModuleMap]:
    return quotient(f.target, dict(f.components), label="coker")


def radical_spaces(X: FdModule) -> Dict[str, DomainMatrix]:
    algebra = X.algebra
    K = algebra.field.domain
    return {
        v: linalg.hstack([X.maps[a.name] for a in algebra.quiver.arrows_into(v)], X.dims[v], K)
        for v in algebra.vertices
    }


def radical(X: FdModule) -> Tuple[FdModule, ModuleMap]:
    return submodule(X, radical_spaces(X), label=f"rad {X.display_name()}")


def top(X: FdModule) -> Tuple[FdModule, ModuleMap]:
    return quotient(X, radical_spaces(X), label=f"top {X.display_name()}")


def radical_series(X: FdModule) -> List[FdModule]:
    """X, rad X, rad^2 X, ... ending with the zero module."""
    series = [X]
    while series[-1].dimension > 0:
        series.append(radical(series[-1])[0])
        if len(series) > X.algebra.nilpotency + 1:
            raise ComputationError("Radical series does not terminate")
    return series


def module_loewy_length(X: FdModule) -> int:
    return len(radical_series(X)) - 1


def radical_power_spaces(X: FdModule, power: int) -> Dict[str, DomainMatrix]:
    algebra = X.algebra
    K = algebra.field.domain
    layer = {v: linalg.identity(X.dims[v], K) for v in algebra.vertices}
    for _ in range(power):
        layer = {
            v: linalg.hstack(
                [X.maps[a.name] * layer[a.source] for a in algebra.quiver.arrows_into(v)], X.dims[v], K
            )
            for v in algebra.vertices
        }
    return layer


def _candidate_maps(space: HomSpace):
    settings = get_settings()
    K = space.source.algebra.field.domain
    p = space.source.algebra.field.characteristic
    bound = 97 if p == 0 else p - 1
    rng = np.random.default_rng(settings.RANDOM_SEED)
    for _ in range(settings.ISO_RANDOM_TRIES):
        coefficients = [int(x) for x in rng.integers(-bound, bound + 1, size=space.dimension)]
        yield space.combination(coefficients)
    choices = [0] + settings.search_coefficients()
    width = min(space.dimension, 6)
    for count, combo in enumerate(itertools.product(choices, repeat=width)):
        if count >= 256:
            return
        if all(c == 0 for c in combo):
            continue
        yield space.combination(list(combo) + [0] * (space.dimension - width))


def is_isomorphic(X: FdModule, Y: FdModule) -> IsoVerdict:
    """
    'yes' carries an invertible map; 'no' only from dimension-vector or Hom-dimension obstructions,
    or when Hom(X, Y) is one-dimensional with a non-invertible generator.
    """
    _require_same(X, Y)
    if X.dim_vector != Y.dim_vector:
        return IsoVerdict(verdict=Verdict.NO, reason="dimension vectors differ")
    if X.dimension == 0:
        return IsoVerdict(verdict=Verdict.YES, witness=zero_map(X, Y), reason="both modules are zero")
    forward = hom_space(X, Y)
    if forward.dimension == 0:
        return IsoVerdict(verdict=Verdict.NO, reason="Hom(X, Y) = 0")
    dims = (forward.dimension, hom_space(Y, X).dimension, hom_space(X, X).dimension, hom_space(Y, Y).dimension)
    if len(set(dims)) != 1:
        return IsoVerdict(verdict=Verdict.NO, reason=f"Hom-dimension obstruction {dims}")
    if forward.dimension == 1:
        f = forward.basis[0]
        if is_iso_map(f):
            return IsoVerdict(verdict=Verdict.YES, witness=f, reason="Hom(X, Y) is spanned by an isomorphism")
        return IsoVerdict(verdict=Verdict.NO, reason="Hom(X, Y) is spanned by a non-invertible map")
    for f in _candidate_maps(forward):
        if is_iso_map(f):
            return IsoVerdict(verdict=Verdict.YES, witness=f, reason="invertible element found")
    logger.warning(f"Isomorphism search failed for {X.display_name()} and {Y.display_name()}")
    return IsoVerdict(verdict=Verdict.UNKNOWN, reason="bounded search found no invertible element")


def endomorphism_structure(X: FdModule) -> StructureConstants:
    """End_A(X) with product h_i * h_j = h_i o h_j."""
    cached = X._cache.get("end_structure")
    if cached is not None:
        return cached
    space = hom_space(X, X)
    K = X.algebra.field.domain
    n = space.dimension
    left = []
    for hi in space.basis:
        cols = [space.coordinates(compose(hi, hj)) for hj in space.basis]
        left.append(linalg.hstack(cols, n, K))
    unit = space.coordinates(identity(X), check=True)
    S = StructureConstants(field=X.algebra.field, dimension=n, left=tuple(left), unit=unit)
    X._cache["end_structure"] = S
    return S


def decompose(X: FdModule) -> Decomposition:
    """
    Krull-Schmidt decomposition from a complete set of primitive orthogonal idempotents of End(X).
    """
    if X.dimension == 0:
        return Decomposition(module=X, summands=(), multiplicities=(), inclusions=())
    cached = X._cache.get("decomposition")
    if cached is not None:
        return cached
    space = hom_space(X, X)
    if space.dimension == 1:
        idempotents = [(identity(X), 1)]
    else:
        S = endomorphism_structure(X)
        idempotents = [(space.combination(e), d) for e, d in structure.primitive_idempotents_with_degrees(S)]
    pieces: List[Tuple[FdModule, ModuleMap, int]] = []
    for e, degree in idempotents:
        if len(idempotents) == 1:
            pieces.append((X, identity(X), degree))
            break
        piece, inclusion, _ = image(e)
        pieces.append((piece, inclusion, degree))
    summands: List[FdModule] = []
    multiplicities: List[int] = []
    degrees: List[int] = []
    for piece, _, degree in pieces:
        for k, existing in enumerate(summands):
            if is_isomorphic(existing, piece).verdict == Verdict.YES:
                multiplicities[k] += 1
                break
        else:
            summands.append(piece)
            multiplicities.append(1)
            degrees.append(degree)
    result = Decomposition(
        module=X,
        summands=tuple(summands),
        multiplicities=tuple(multiplicities),
        inclusions=tuple(inc for _, inc, _ in pieces),
        local_degrees=tuple(degrees),
    )
    X._cache["decomposition"] = result
    logger.debug(f"{X.display_name()} decomposes into {sum(multiplicities)} indecomposable summand(s)")
    return result


def is_indecomposable(X: FdModule) -> bool:
    return X.dimension > 0 and decompose(X).is_indecomposable


def _require_nakayama(algebra: AlgebraData) -> None:
    if not qalg.is_nakayama(algebra):
        raise InputError(f"{algebra.name} is not a Nakayama algebra")


def nakayama_indecomposable(algebra: AlgebraData, vertex: str, length: int) -> FdModule:
    """S_v^[l] = P_v / rad^l P_v: uniserial with top S_v and length l."""
    _require_nakayama(algebra)
    P = projective(algebra, vertex)
    if not 1 <= length <= P.dimension:
        raise InputError(f"Length {length} out of range 1..{P.dimension} at vertex {vertex}")
    key = ("nakayama_indecomposable", vertex, length)
    cached = algebra._cache.get(key)
    if cached is not None:
        return cached
    if length == P.dimension:
        module = P
    else:
        label = f"S_{vertex}" if length == 1 else f"S_{vertex}^[{length}]"
        module = quotient(P, radical_power_spaces(P, length), label=label)[0]
    algebra._cache[key] = module
    return module


def enumerate_indecomposables(algebra: AlgebraData) -> List[FdModule]:
    """All S_v^[l], 1 <= l <= c_v, ordered by vertex then length."""
    _require_nakayama(algebra)
    modules = []
    for v in algebra.vertices:
        for length in range(1, projective(algebra, v).dimension + 1):
            modules.append(nakayama_indecomposable(algebra, v, length))
    return modules


def find_isomorphic(X: FdModule, candidates: Sequence[FdModule]) -> Optional[int]:
    for k, Y in enumerate(candidates):
        if is_isomorphic(X, Y).verdict == Verdict.YES:
            return k
    return None
