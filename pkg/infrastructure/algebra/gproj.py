"""
A-duals, reflexivity and Gorenstein-projective detection; GP enumeration for Nakayama algebras,
thickness of add M and CM-finiteness.
"""
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.config import get_settings
from domain.models.algebra import AlgebraData
from domain.models.homology import DimensionResult, SyzygyCertificate
from domain.models.module import FdModule, ModuleMap
from domain.models.verdicts import (
    CmFiniteReport,
    GpClassification,
    GpStatus,
    GpVerdict,
    ThicknessVerdict,
    Verdict,
)
from infrastructure.algebra import homol, linalg, modcat, qalg, structure
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def right_multiplication(algebra: AlgebraData, arrow: str) -> ModuleMap:
    """x -> x * a as a map P_t -> P_s for a: s -> t."""
    key = ("right_multiplication", arrow)
    cached = algebra._cache.get(key)
    if cached is not None:
        return cached
    a = algebra.quiver.arrow(arrow)
    K = algebra.field.domain
    S = algebra.structure
    table = structure.right_matrix(S, structure.basis_vector(S, algebra.arrow_index(arrow))).to_list()
    components = {}
    for w in algebra.vertices:
        rows = modcat.projective_paths(algebra, a.source)[w]
        cols = modcat.projective_paths(algebra, a.target)[w]
        components[w] = linalg.matrix([[table[r][c] for c in cols] for r in rows], K, (len(rows), len(cols)))
    cached = ModuleMap(
        source=modcat.projective(algebra, a.target),
        target=modcat.projective(algebra, a.source),
        components=components,
    )
    algebra._cache[key] = cached
    return cached


def a_dual(X: FdModule) -> FdModule:
    """X* = Hom_A(X, A): at vertex v the space Hom_A(X, P_v), arrows acting by right multiplication."""
    cached = X._cache.get("a_dual")
    if cached is not None:
        return cached
    algebra = X.algebra
    K = algebra.field.domain
    spaces = {v: modcat.hom_space(X, modcat.projective(algebra, v)) for v in algebra.vertices}
    maps = {}
    for a in algebra.quiver.arrows:
        rho = right_multiplication(algebra, a.name)
        target_space = spaces[a.source]
        columns = [target_space.coordinates(modcat.compose(rho, h)) for h in spaces[a.target].basis]
        maps[a.name] = linalg.hstack(columns, target_space.dimension, K)
    cached = FdModule(
        algebra=qalg.opposite_algebra(algebra),
        dims={v: spaces[v].dimension for v in algebra.vertices},
        maps=maps,
        label=f"{X.display_name()}*",
    )
    X._cache["a_dual"] = cached
    return cached


def a_dual_map(f: ModuleMap) -> ModuleMap:
    """f* : Y* -> X*, h -> h o f."""
    algebra = f.source.algebra
    K = algebra.field.domain
    components = {}
    for v in algebra.vertices:
        P = modcat.projective(algebra, v)
        source_space = modcat.hom_space(f.target, P)
        target_space = modcat.hom_space(f.source, P)
        columns = [target_space.coordinates(modcat.compose(h, f)) for h in source_space.basis]
        components[v] = linalg.hstack(columns, target_space.dimension, K)
    return ModuleMap(source=a_dual(f.target), target=a_dual(f.source), components=components)


def evaluation_map(X: FdModule) -> ModuleMap:
    """The natural map X -> X**, x -> (phi -> phi(x))."""
    cached = X._cache.get("evaluation")
    if cached is not None:
        return cached
    algebra = X.algebra
    opposite = qalg.opposite_algebra(algebra)
    K = algebra.field.domain
    dual = a_dual(X)
    double = a_dual(dual)
    functionals = {w: modcat.hom_space(X, modcat.projective(algebra, w)).basis for w in algebra.vertices}
    components = {}
    for v in algebra.vertices:
        space = modcat.hom_space(dual, modcat.projective(opposite, v))
        columns = []
        for i in range(X.dims[v]):
            x = linalg.unit_vector(X.dims[v], i, K)
            values = {}
            for w in algebra.vertices:
                rows = len(modcat.projective_paths(algebra, w)[v])
                values[w] = linalg.hstack([phi.components[v] * x for phi in functionals[w]], rows, K)
            columns.append(space.coordinates_of(values))
        components[v] = linalg.hstack(columns, double.dims[v], K)
    cached = ModuleMap(source=X, target=double, components=components)
    X._cache["evaluation"] = cached
    return cached


def is_reflexive(X: FdModule) -> Tuple[Verdict, ModuleMap]:
    evaluation = evaluation_map(X)
    return (Verdict.YES if modcat.is_iso_map(evaluation) else Verdict.NO), evaluation


def _ext_against_regular(X: FdModule, cap: Optional[int]) -> Tuple[SyzygyCertificate, Optional[Dict[int, int]]]:
    """
    Ext^i(X, A) over the degrees a pd certificate makes sufficient: 1..pd when finite, one full
    syzygy period past the preperiod when periodic.
    """
    certificate = homol.proj_dimension(X, cap)
    if certificate.is_finite:
        degrees = range(1, certificate.value + 1)
    elif certificate.is_infinite:
        degrees = range(1, certificate.preperiod + certificate.period + 1)
    else:
        return certificate, None
    regular = modcat.regular_module(X.algebra)
    return certificate, {i: homol.ext(i, X, regular).dimension for i in degrees}


def is_gorenstein_projective(X: FdModule, cap: Optional[int] = None) -> GpVerdict:
    """
    Reflexive, Ext^i_A(X, A) = 0 and Ext^i_{A^op}(X*, A) = 0 for every i >= 1, the latter two
    certified through syzygy periodicity.
    """
    cached = X._cache.get(("gp", cap))
    if cached is not None:
        return cached
    if homol.is_projective(X):
        verdict = GpVerdict(
            module=X, status=GpStatus.GORENSTEIN_PROJECTIVE, projective=True, reflexive=Verdict.YES,
            reason="projective",
        )
        X._cache[("gp", cap)] = verdict
        return verdict
    reflexive, evaluation = is_reflexive(X)
    if reflexive == Verdict.NO:
        verdict = GpVerdict(
            module=X, status=GpStatus.NOT_GORENSTEIN_PROJECTIVE, reflexive=reflexive, evaluation=evaluation,
            reason="not reflexive",
        )
        X._cache[("gp", cap)] = verdict
        return verdict
    left_certificate, left = _ext_against_regular(X, cap)
    right_certificate, right = _ext_against_regular(a_dual(X), cap)
    certificates = [left_certificate, right_certificate]
    if (left and any(left.values())) or (right and any(right.values())):
        status, reason = GpStatus.NOT_GORENSTEIN_PROJECTIVE, "Ext against the regular module does not vanish"
    elif left is None or right is None:
        status, reason = GpStatus.INCONCLUSIVE, "no syzygy certificate within the iteration cap"
    else:
        status, reason = GpStatus.GORENSTEIN_PROJECTIVE, "reflexive with certified Ext vanishing on both sides"
    verdict = GpVerdict(
        module=X,
        status=status,
        reflexive=reflexive,
        evaluation=evaluation,
        ext_module=left or {},
        ext_dual=right or {},
        certificates=certificates,
        reason=reason,
    )
    X._cache[("gp", cap)] = verdict
    logger.debug(f"GP test {X.display_name()}: {status.value} ({reason})")
    return verdict


def classify_gp(modules: Sequence[FdModule], cap: Optional[int] = None) -> GpClassification:
    projective, gp, not_gp, inconclusive = [], [], [], []
    for X in modules:
        verdict = is_gorenstein_projective(X, cap)
        if verdict.projective:
            projective.append(X)
        elif verdict.status == GpStatus.GORENSTEIN_PROJECTIVE:
            gp.append(X)
        elif verdict.status == GpStatus.NOT_GORENSTEIN_PROJECTIVE:
            not_gp.append(X)
        else:
            inconclusive.append(X)
    if inconclusive:
        logger.warning(f"{len(inconclusive)} inconclusive GP verdict(s)")
    return GpClassification(
        projective=projective, gorenstein_projective=gp, not_gorenstein_projective=not_gp, inconclusive=inconclusive
    )


def enumerate_gp_nakayama(algebra: AlgebraData, cap: Optional[int] = None) -> GpClassification:
    logger.info(f"Classifying Gorenstein projectives of {algebra.name}")
    result = classify_gp(modcat.enumerate_indecomposables(algebra), cap)
    logger.info(
        f"{algebra.name}: {len(result.projective)} projective, "
        f"{len(result.gorenstein_projective)} non-projective GP, "
        f"{len(result.not_gorenstein_projective)} not GP"
    )
    return result


def extension_module(W: FdModule, U: FdModule, cocycle: ModuleMap) -> FdModule:
    """
    Middle term of 0 -> U -> E -> W -> 0 for the class of cocycle: Omega(W) -> U,
    computed as the cokernel of Omega(W) -> U + P_0, x -> (-cocycle(x), x).
    """
    omega, inclusion = homol.syzygy_inclusion(W)
    total, inclusions, _ = modcat.direct_sum([U, inclusion.target])
    glue = modcat.add_maps(
        modcat.compose(inclusions[1], inclusion),
        modcat.scale_map(modcat.compose(inclusions[0], cocycle), -1),
    )
    middle, _ = modcat.cokernel(glue)
    return FdModule(algebra=middle.algebra, dims=middle.dims, maps=middle.maps, label=f"E({U.display_name()}, {W.display_name()})")


def _indecomposable_pieces(modules: Sequence[FdModule]) -> List[FdModule]:
    pieces: List[FdModule] = []
    for M in modules:
        for summand in modcat.decompose(M).summands:
            if modcat.find_isomorphic(summand, pieces) is None:
                pieces.append(summand)
    return pieces


def _sample_maps(space: modcat.HomSpace) -> List[ModuleMap]:
    maps = list(space.basis)
    if space.dimension > 1:
        rng = np.random.default_rng(get_settings().RANDOM_SEED)
        maps.append(space.combination([int(c) for c in rng.integers(1, 10, size=space.dimension)]))
    return maps


def is_thick_addM(summands: Sequence[FdModule], context: Sequence[FdModule]) -> ThicknessVerdict:
    """
    Checks, inside the supplied GP context, that add M contains the projectives and is closed under
    cokernels of monomorphisms, kernels of epimorphisms and extensions.
    """
    algebra = summands[0].algebra
    pieces = _indecomposable_pieces(summands)
    violations: List[str] = []

    def in_add(Z: FdModule) -> bool:
        return all(modcat.find_isomorphic(s, pieces) is not None for s in modcat.decompose(Z).summands)

    def in_context(Z: FdModule) -> bool:
        return all(
            homol.is_projective(s) or modcat.find_isomorphic(s, context) is not None
            for s in modcat.decompose(Z).summands
        )

    for v in algebra.vertices:
        if modcat.find_isomorphic(modcat.projective(algebra, v), pieces) is None:
            violations.append(f"P_{v} is not in add M")
    checked_maps = 0
    for X in pieces:
        for Y in pieces:
            for f in _sample_maps(modcat.hom_space(X, Y)):
                if modcat.is_iso_map(f):
                    continue
                checked_maps += 1
                if modcat.is_mono(f):
                    C = modcat.cokernel(f)[0]
                    if in_context(C) and not in_add(C):
                        violations.append(f"cokernel of a monomorphism {X.display_name()} -> {Y.display_name()} leaves add M")
                if modcat.is_epi(f):
                    N = modcat.kernel(f)[0]
                    if in_context(N) and not in_add(N):
                        violations.append(f"kernel of an epimorphism {X.display_name()} -> {Y.display_name()} leaves add M")
    checked_extensions = 0
    for W in pieces:
        for U in pieces:
            for cocycle in homol.ext1_cocycles(W, U):
                checked_extensions += 1
                if not in_add(extension_module(W, U, cocycle)):
                    violations.append(f"an extension of {W.display_name()} by {U.display_name()} leaves add M")
    for message in violations:
        logger.info(f"Thickness violation: {message}")
    return ThicknessVerdict(
        verdict=Verdict.NO if violations else Verdict.YES,
        violations=violations,
        checked_maps=checked_maps,
        checked_extensions=checked_extensions,
    )


def cm_finite_report(
    algebra: AlgebraData,
    summands: Sequence[FdModule],
    cap: Optional[int] = None,
    gamma: Optional[AlgebraData] = None,
) -> CmFiniteReport:
    """
    add M against the GP indecomposables of a Nakayama algebra; with `gamma` (a presentation of
    End_A(M)^op) also checks that gl.dim gamma is finite exactly when A is Gorenstein.
    """
    classification = enumerate_gp_nakayama(algebra, cap)
    gp = classification.projective + classification.gorenstein_projective
    pieces = _indecomposable_pieces(summands)
    missing = [X.display_name() for X in gp if modcat.find_isomorphic(X, pieces) is None]
    extra = [X.display_name() for X in pieces if is_gorenstein_projective(X, cap).status != GpStatus.GORENSTEIN_PROJECTIVE]
    if classification.inconclusive:
        cm_finite = Verdict.UNKNOWN
    else:
        cm_finite = Verdict.NO if (missing or extra) else Verdict.YES
    gorenstein = homol.is_gorenstein(algebra, cap)
    gamma_dimension: Optional[DimensionResult] = None
    consistent = Verdict.UNKNOWN
    if gamma is not None:
        gamma_dimension = homol.global_dimension(gamma, cap)
        if gamma_dimension.conclusive and gorenstein.verdict != Verdict.UNKNOWN:
            finite = gamma_dimension.value is not None
            consistent = Verdict.YES if finite == (gorenstein.verdict == Verdict.YES) else Verdict.NO
    return CmFiniteReport(
        cm_finite=cm_finite,
        missing=missing,
        extra=extra,
        gorenstein=gorenstein,
        gamma_global_dimension=gamma_dimension,
        consistent=consistent,
    )
