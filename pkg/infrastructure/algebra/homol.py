"""
Projective covers, syzygies, minimal resolutions and Ext, and projective/injective/global
dimension with periodicity certificates.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from core.config import get_settings
from core.exceptions import ComputationError, InputError
from domain.models.algebra import AlgebraData
from domain.models.homology import (
    CertificateKind,
    DimensionResult,
    ExtGroup,
    ProjectiveCover,
    Resolution,
    SyzygyCertificate,
)
from domain.models.module import FdModule, ModuleMap
from domain.models.verdicts import GorensteinVerdict, Verdict
from infrastructure.algebra import linalg, modcat, qalg
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def _cap(cap: Optional[int]) -> int:
    value = get_settings().ITERATION_CAP if cap is None else cap
    if value < 1:
        raise InputError(f"Iteration cap must be positive, got {value}")
    return value


def projective_sum(algebra: AlgebraData, tops: Sequence[str]) -> FdModule:
    """P_{tops[0]} + P_{tops[1]} + ... in this order; the zero module for an empty list."""
    if not tops:
        return modcat.zero_module(algebra)
    if len(tops) == 1:
        return modcat.projective(algebra, tops[0])
    return modcat.direct_sum([modcat.projective(algebra, v) for v in tops])[0]


def map_from_projective(P: FdModule, tops: Sequence[str], Y: FdModule, images: Sequence[DomainMatrix]) -> ModuleMap:
    """
    The map P -> Y sending the k-th generator e_{tops[k]} to images[k] (a column in Y_{tops[k]}).
    """
    algebra = Y.algebra
    K = algebra.field.domain
    components = {}
    for w in algebra.vertices:
        columns = []
        for v, y in zip(tops, images):
            for k in modcat.projective_paths(algebra, v)[w]:
                columns.append(Y.path_action(algebra.basis[k]) * y)
        components[w] = linalg.hstack(columns, Y.dims[w], K)
    return ModuleMap(source=P, target=Y, components=components)


def generator_position(algebra: AlgebraData, tops: Sequence[str], k: int) -> int:
    """Row of the k-th generator inside (P_{tops[0]} + ...)_{tops[k]}."""
    v = tops[k]
    offset = sum(len(modcat.projective_paths(algebra, tops[j])[v]) for j in range(k))
    return offset + modcat.projective_paths(algebra, v)[v].index(algebra.trivial_index(v))


def projective_cover(X: FdModule) -> ProjectiveCover:
    cached = X._cache.get("cover")
    if cached is not None:
        return cached
    algebra = X.algebra
    K = algebra.field.domain
    radicals = modcat.radical_spaces(X)
    tops: List[str] = []
    images: List[DomainMatrix] = []
    for v in algebra.vertices:
        quotient = linalg.QuotientSpace(radicals[v], X.dims[v], K)
        for j in quotient.complement:
            tops.append(v)
            images.append(linalg.unit_vector(X.dims[v], j, K))
    P = projective_sum(algebra, tops)
    epimorphism = map_from_projective(P, tops, X, images)
    if not modcat.is_epi(epimorphism):
        raise ComputationError(f"Projective cover of {X.display_name()} is not surjective")
    cover = ProjectiveCover(module=P, epimorphism=epimorphism, tops=tuple(tops))
    X._cache["cover"] = cover
    return cover


def is_projective(X: FdModule) -> bool:
    return projective_cover(X).module.dimension == X.dimension


def syzygy_inclusion(X: FdModule) -> Tuple[FdModule, ModuleMap]:
    """Omega(X) together with its inclusion into the projective cover."""
    cached = X._cache.get("syzygy")
    if cached is None:
        K, inclusion = modcat.kernel(projective_cover(X).epimorphism)
        K = FdModule(algebra=K.algebra, dims=K.dims, maps=K.maps, label=f"Omega({X.display_name()})")
        inclusion = ModuleMap(source=K, target=inclusion.target, components=inclusion.components)
        cached = (K, inclusion)
        X._cache["syzygy"] = cached
    return cached


def syzygy(X: FdModule) -> FdModule:
    return syzygy_inclusion(X)[0]


def _in_radical(f: ModuleMap) -> bool:
    radicals = modcat.radical_spaces(f.target)
    K = f.target.algebra.field.domain
    for v, m in f.components.items():
        quotient = linalg.QuotientSpace(radicals[v], f.target.dims[v], K)
        if not (quotient.projection * m).is_zero_matrix:
            return False
    return True


def minimal_resolution(X: FdModule, length: int) -> Resolution:
    """
    P_length -> ... -> P_0 -> X, stopping early when a syzygy vanishes.
    """
    if length < 0:
        raise InputError("Resolution length must be nonnegative")
    cover = projective_cover(X)
    terms = [cover.module]
    tops = [cover.tops]
    differentials: List[ModuleMap] = []
    syzygies = [X]
    current = X
    for _ in range(length):
        kernel, inclusion = syzygy_inclusion(current)
        if kernel.dimension == 0:
            break
        next_cover = projective_cover(kernel)
        d = modcat.compose(inclusion, next_cover.epimorphism)
        if not _in_radical(d):
            raise ComputationError("Resolution differential leaves the radical")
        differentials.append(d)
        terms.append(next_cover.module)
        tops.append(next_cover.tops)
        syzygies.append(kernel)
        current = kernel
    return Resolution(
        target=X,
        terms=tuple(terms),
        tops=tuple(tops),
        augmentation=cover.epimorphism,
        differentials=tuple(differentials),
        syzygies=tuple(syzygies),
    )


def _hom_coordinates(Y: FdModule, tops: Sequence[str]) -> int:
    return sum(Y.dims[v] for v in tops)


def induced_map(d: ModuleMap, source_tops: Sequence[str], target_tops: Sequence[str], Y: FdModule) -> DomainMatrix:
    """
    Hom(d, Y): Hom(P, Y) -> Hom(P', Y) for d: P' -> P, on the coordinates Y_{v_1} + Y_{v_2} + ...
    `source_tops` describe P', `target_tops` describe P.
    """
    algebra = Y.algebra
    K = algebra.field.domain
    blocks: List[List[DomainMatrix]] = []
    for l, u in enumerate(source_tops):
        column = linalg.select_columns(d.components[u], [generator_position(algebra, source_tops, l)])
        values = linalg.column_entries(column)
        row_blocks = []
        offset = 0
        for v in target_tops:
            block = linalg.zeros(Y.dims[u], Y.dims[v], K)
            for k in modcat.projective_paths(algebra, v)[u]:
                c = values[offset]
                offset += 1
                if not K.is_zero(c):
                    block = block + Y.path_action(algebra.basis[k]) * c
            row_blocks.append(block.to_dense())
        blocks.append(row_blocks)
    rows = _hom_coordinates(Y, source_tops)
    cols = _hom_coordinates(Y, target_tops)
    stacked = [linalg.hstack(row_blocks, Y.dims[u], K) for row_blocks, u in zip(blocks, source_tops)]
    return linalg.vstack(stacked, cols, K) if stacked else linalg.zeros(rows, cols, K)


def ext(degree: int, X: FdModule, Y: FdModule) -> ExtGroup:
    """Ext^degree(X, Y) as the cohomology of Hom(minimal resolution of X, Y)."""
    if degree < 0:
        raise InputError("Ext degree must be nonnegative")
    modcat._require_same(X, Y)
    K = X.algebra.field.domain
    resolution = minimal_resolution(X, degree + 1)
    if degree >= len(resolution.terms):
        return ExtGroup(degree=degree, source=X, target=Y, dimension=0)
    tops = resolution.tops
    size = _hom_coordinates(Y, tops[degree])
    if degree + 1 < len(resolution.terms):
        outgoing = induced_map(resolution.differentials[degree], tops[degree + 1], tops[degree], Y)
        cycles = linalg.kernel_matrix(outgoing)
    else:
        cycles = linalg.identity(size, K)
    if degree >= 1:
        incoming = induced_map(resolution.differentials[degree - 1], tops[degree], tops[degree - 1], Y)
    else:
        incoming = linalg.zeros(size, 0, K)
    echelon = linalg.SparseEchelon(K)
    for j in range(incoming.shape[1]):
        echelon.add(linalg.sparse_from_column(linalg.select_columns(incoming, [j])))
    cocycles = []
    for j in range(cycles.shape[1]):
        z = linalg.select_columns(cycles, [j])
        if echelon.add(linalg.sparse_from_column(z)) is not None:
            cocycles.append(z)
    logger.debug(f"dim Ext^{degree}({X.display_name()}, {Y.display_name()}) = {len(cocycles)}")
    return ExtGroup(degree=degree, source=X, target=Y, dimension=len(cocycles), cocycles=cocycles)


def ext1_cocycles(W: FdModule, U: FdModule) -> List[ModuleMap]:
    """
    Maps Omega(W) -> U representing a basis of Ext^1(W, U) = Hom(Omega W, U) / restrictions of Hom(P_0, U).
    """
    omega, inclusion = syzygy_inclusion(W)
    if omega.dimension == 0:
        return []
    K = W.algebra.field.domain
    space = modcat.hom_space(omega, U)
    if space.dimension == 0:
        return []
    restricted = [space.coordinates(modcat.compose(h, inclusion)) for h in modcat.hom_space(inclusion.target, U).basis]
    quotient = linalg.QuotientSpace(linalg.hstack(restricted, space.dimension, K), space.dimension, K)
    return [space.basis[j] for j in quotient.complement]


def lift_to_covers(f: ModuleMap) -> ModuleMap:
    """A map P_X -> P_Y between projective covers lying over f: X -> Y."""
    source_cover = projective_cover(f.source)
    target_cover = projective_cover(f.target)
    algebra = f.source.algebra
    images = []
    for k, v in enumerate(source_cover.tops):
        generator = linalg.select_columns(
            source_cover.epimorphism.components[v], [generator_position(algebra, source_cover.tops, k)]
        )
        preimage = linalg.solve(target_cover.epimorphism.components[v], f.components[v] * generator)
        if preimage is None:
            raise ComputationError("Projective cover does not lift the map")
        images.append(preimage)
    return map_from_projective(source_cover.module, source_cover.tops, target_cover.module, images)


def syzygy_map(f: ModuleMap) -> ModuleMap:
    """Omega(f): Omega X -> Omega Y induced by a lift to projective covers."""
    lifted = lift_to_covers(f)
    source, source_inclusion = syzygy_inclusion(f.source)
    target, target_inclusion = syzygy_inclusion(f.target)
    components = {}
    for v in f.source.algebra.vertices:
        restricted = linalg.solve_matrix(
            target_inclusion.components[v], lifted.components[v] * source_inclusion.components[v]
        )
        if restricted is None:
            raise ComputationError("Lifted map does not preserve syzygies")
        components[v] = restricted
    return ModuleMap(source=source, target=target, components=components)


def proj_dimension(X: FdModule, cap: Optional[int] = None) -> SyzygyCertificate:
    """
    Iterates syzygies: finite when one vanishes, periodic (infinite) when Omega^n X is isomorphic to
    an earlier syzygy, inconclusive after `cap` steps.
    """
    cap = _cap(cap)
    key = ("pd", cap)
    cached = X._cache.get(key)
    if cached is not None:
        return cached
    syzygies = [X]
    current = X
    certificate = None
    for n in range(cap + 1):
        if current.dimension == 0:
            certificate = SyzygyCertificate(
                module=X, kind=CertificateKind.FINITE, value=max(n - 1, 0), iterations=n, syzygies=tuple(syzygies)
            )
            break
        for m in range(n):
            if syzygies[m].dim_vector != current.dim_vector:
                continue
            verdict = modcat.is_isomorphic(syzygies[m], current)
            if verdict.verdict == Verdict.YES:
                certificate = SyzygyCertificate(
                    module=X,
                    kind=CertificateKind.PERIODIC,
                    preperiod=m,
                    period=n - m,
                    witness=verdict.witness,
                    iterations=n,
                    syzygies=tuple(syzygies),
                )
                break
        if certificate is not None or n == cap:
            break
        current = syzygy(current)
        syzygies.append(current)
    if certificate is None:
        logger.warning(f"No projective dimension certificate for {X.display_name()} within {cap} syzygies")
        certificate = SyzygyCertificate(
            module=X, kind=CertificateKind.INCONCLUSIVE, iterations=cap, syzygies=tuple(syzygies)
        )
    X._cache[key] = certificate
    logger.debug(f"pd {X.display_name()}: {certificate.summary()}")
    return certificate


def inj_dimension(X: FdModule, cap: Optional[int] = None) -> SyzygyCertificate:
    """id X = pd D(X) over the opposite algebra."""
    return proj_dimension(modcat.dual(X), cap)


def combine_certificates(certificates: List[SyzygyCertificate]) -> DimensionResult:
    if any(c.is_infinite for c in certificates):
        return DimensionResult(infinite=True, certificates=certificates)
    if all(c.is_finite for c in certificates):
        return DimensionResult(value=max((c.value for c in certificates), default=0), certificates=certificates)
    return DimensionResult(certificates=certificates)


def global_dimension(algebra: AlgebraData, cap: Optional[int] = None) -> DimensionResult:
    """Maximum of pd over the simple modules."""
    logger.info(f"Computing global dimension of {algebra.name}")
    certificates = [proj_dimension(modcat.simple(algebra, v), cap) for v in algebra.vertices]
    result = combine_certificates(certificates)
    logger.info(f"gl.dim {algebra.name} = {result.summary()}")
    return result


def regular_injective_dimension(algebra: AlgebraData, cap: Optional[int] = None) -> DimensionResult:
    """id of the regular left module: max over v of pd D(P_v) over A^op."""
    return combine_certificates([inj_dimension(modcat.projective(algebra, v), cap) for v in algebra.vertices])


def is_gorenstein(algebra: AlgebraData, cap: Optional[int] = None) -> GorensteinVerdict:
    """Finite injective dimension of the regular module on both sides."""
    left = regular_injective_dimension(algebra, cap)
    right = regular_injective_dimension(qalg.opposite_algebra(algebra), cap)
    if left.infinite or right.infinite:
        verdict = Verdict.NO
    elif left.value is not None and right.value is not None:
        verdict = Verdict.YES
    else:
        verdict = Verdict.UNKNOWN
    return GorensteinVerdict(verdict=verdict, left=left, right=right)


def ext_dimensions(X: FdModule, Y: FdModule, degrees: Sequence[int]) -> Dict[int, int]:
    return {i: ext(i, X, Y).dimension for i in degrees}
