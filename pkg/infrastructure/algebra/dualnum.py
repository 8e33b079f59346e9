"""
Modules over the dual numbers A = kQ[eps] of an acyclic quiver: restriction to kQ, the cohomology
functor H = Ker eps / Im eps, the eta construction from minimal resolutions, and the
Hom/Ext bookkeeping on the kQ side.
"""
from typing import List, Optional, Sequence, Tuple

from core.exceptions import ComputationError, InputError
from domain.models.algebra import AlgebraData, FieldSpec
from domain.models.dual_numbers import DualPair, Equ1Check, EtaReport, SchofieldReport
from domain.models.module import FdModule, ModuleMap
from domain.models.verdicts import GpStatus, Verdict
from infrastructure.algebra import gproj, homol, linalg, modcat, qalg, sgcat
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def dual_pair(base: AlgebraData, name: Optional[str] = None) -> DualPair:
    cached = base._cache.get("dual_pair")
    if cached is None:
        cached = DualPair(base=base, algebra=qalg.build_dual_numbers(base, name=name))
        base._cache["dual_pair"] = cached
    return cached


def _require_over(pair: DualPair, Y: FdModule) -> None:
    if not Y.algebra.same_as(pair.algebra):
        raise InputError(f"{Y.display_name()} is not a module over {pair.algebra.name}")


def restriction(pair: DualPair, Y: FdModule) -> FdModule:
    """The underlying kQ-module of an A-module."""
    _require_over(pair, Y)
    return FdModule(
        algebra=pair.base,
        dims=dict(Y.dims),
        maps={a.name: Y.maps[a.name] for a in pair.base.quiver.arrows},
        label=f"res {Y.display_name()}",
    )


def epsilon(pair: DualPair, Y: FdModule) -> ModuleMap:
    """eps_Y as a kQ-endomorphism of the restriction; the relations of A make it square-zero and central."""
    R = restriction(pair, Y)
    return ModuleMap(source=R, target=R, components={v: Y.maps[pair.loop(v)] for v in pair.base.vertices})


def cohomology_H(pair: DualPair, Y: FdModule) -> FdModule:
    e = epsilon(pair, Y)
    kernel, inclusion = modcat.kernel(e)
    spaces = {}
    for v in pair.base.vertices:
        inside = linalg.solve_matrix(inclusion.components[v], e.components[v])
        if inside is None:
            raise ComputationError(f"eps does not square to zero on {Y.display_name()}")
        spaces[v] = inside
    H, _ = modcat.quotient(kernel, spaces, label=f"H({Y.display_name()})")
    return H


def eta(pair: DualPair, X: FdModule) -> FdModule:
    """
    eta(X) = P^-1 + P^0 for the minimal resolution 0 -> P^-1 -> P^0 -> X -> 0 over kQ, with eps acting
    by the differential on P^-1 and by zero on P^0.
    """
    if not X.algebra.same_as(pair.base):
        raise InputError(f"{X.display_name()} is not a module over {pair.base.name}")
    cached = X._cache.get("eta")
    if cached is not None:
        return cached
    K = pair.base.field.domain
    resolution = homol.minimal_resolution(X, 1)
    if len(resolution.terms) == 2 and not homol.is_projective(resolution.syzygies[1]):
        raise ComputationError(f"{pair.base.name} is not hereditary: the resolution of {X.display_name()} is longer")
    top = resolution.terms[0]
    if len(resolution.terms) == 2:
        bottom = resolution.terms[1]
        d = resolution.differentials[0]
    else:
        bottom = modcat.zero_module(pair.base)
        d = modcat.zero_map(bottom, top)
    maps = {}
    for a in pair.base.quiver.arrows:
        maps[a.name] = linalg.block_diagonal([bottom.maps[a.name], top.maps[a.name]], K)
    for v in pair.base.vertices:
        lower, upper = bottom.dims[v], top.dims[v]
        blocks = [
            linalg.hstack([linalg.zeros(lower, lower, K), linalg.zeros(lower, upper, K)], lower, K),
            linalg.hstack([d.components[v], linalg.zeros(upper, upper, K)], upper, K),
        ]
        maps[pair.loop(v)] = linalg.vstack(blocks, lower + upper, K)
    module = FdModule(
        algebra=pair.algebra,
        dims={v: bottom.dims[v] + top.dims[v] for v in pair.base.vertices},
        maps=maps,
        label=f"eta({X.display_name()})",
    )
    X._cache["eta"] = module
    logger.debug(f"eta({X.display_name()}) has dimension vector {module.dim_vector}")
    return module


def verify_equ1(pair: DualPair, X: FdModule, Y: FdModule) -> Equ1Check:
    """dim stable Hom_A(eta X, eta Y) against dim Hom_kQ(X, Y) + dim Ext^1_kQ(X, Y)."""
    check = Equ1Check(
        source=X.display_name(),
        target=Y.display_name(),
        stable_dimension=sgcat.stable_hom(eta(pair, X), eta(pair, Y)).dimension,
        hom_dimension=modcat.hom_space(X, Y).dimension,
        ext_dimension=homol.ext(1, X, Y).dimension,
    )
    if not check.holds:
        logger.warning(
            f"Stable Hom formula fails for ({check.source}, {check.target}): "
            f"{check.stable_dimension} != {check.hom_dimension} + {check.ext_dimension}"
        )
    return check


def is_exceptional(E: FdModule) -> Verdict:
    if not modcat.is_indecomposable(E):
        return Verdict.NO
    return Verdict.YES if homol.ext(1, E, E).dimension == 0 else Verdict.NO


def _has_monomorphism(Y: FdModule, X: FdModule) -> bool:
    return any(modcat.is_mono(f) for f in gproj._sample_maps(modcat.hom_space(Y, X)))


def schofield_perp(E: FdModule, corpus: Sequence[FdModule]) -> SchofieldReport:
    """
    Members X of the corpus with Hom(E, X) = 0 = Ext^1(E, X), and the simple objects of that
    perpendicular category: members without a proper subobject among the other members.
    """
    base = E.algebra
    expected = len(base.vertices) - 1
    exceptional = is_exceptional(E)
    members = [
        X for X in corpus
        if modcat.hom_space(E, X).dimension == 0 and homol.ext(1, E, X).dimension == 0
    ]
    simples = []
    for X in members:
        smaller = [Y for Y in members if Y is not X and Y.dimension < X.dimension]
        if not any(_has_monomorphism(Y, X) for Y in smaller):
            simples.append(X)
    if exceptional != Verdict.YES:
        verdict, reason = Verdict.NO, f"{E.display_name()} is not exceptional"
    elif len(simples) != expected:
        verdict, reason = Verdict.NO, f"{len(simples)} simple objects, expected {expected}"
    else:
        verdict, reason = Verdict.YES, None
    logger.info(f"Perpendicular category of {E.display_name()}: {[X.display_name() for X in members]}")
    return SchofieldReport(
        exceptional=exceptional,
        members=members,
        simple_objects=simples,
        expected_simple_count=expected,
        verdict=verdict,
        reason=reason,
    )


def eta_gp_report(pair: DualPair, X: FdModule, cap: Optional[int] = None) -> EtaReport:
    """eta(X) should be Gorenstein projective, indecomposable and non-projective for indecomposable X."""
    Y = eta(pair, X)
    indecomposable = modcat.is_indecomposable(Y)
    projective = homol.is_projective(Y)
    status = gproj.is_gorenstein_projective(Y, cap).status
    if status == GpStatus.INCONCLUSIVE:
        verdict = Verdict.UNKNOWN
    else:
        verdict = Verdict.YES if (indecomposable and not projective and status == GpStatus.GORENSTEIN_PROJECTIVE) else Verdict.NO
    return EtaReport(module=X, eta=Y, indecomposable=indecomposable, projective=projective, status=status, verdict=verdict)


def indecomposables_type_a(n: int, field: Optional[FieldSpec] = None) -> Tuple[AlgebraData, List[FdModule]]:
    """
    The linearly oriented A_n path algebra 1 -> 2 -> ... -> n (as the linear Nakayama algebra with
    sequence n, n-1, ..., 1) and its interval modules.
    """
    if n < 1:
        raise InputError("Type A quivers need at least one vertex")
    algebra = qalg.nakayama(list(range(n, 0, -1)), field or FieldSpec.rationals(), cyclic=False, name=f"kA{n}")
    return algebra, modcat.enumerate_indecomposables(algebra)


def indecomposable_corpus(base: AlgebraData) -> List[FdModule]:
    """All indecomposables of a representation-finite base available through the uniserial enumeration."""
    if base.relations or not qalg.is_nakayama(base):
        raise InputError(f"No indecomposable corpus for {base.name}; supply one explicitly")
    return modcat.enumerate_indecomposables(base)


def euler_form(X: FdModule, Y: FdModule) -> int:
    """dim Hom(X, Y) - dim Ext^1(X, Y) over a hereditary algebra."""
    return modcat.hom_space(X, Y).dimension - homol.ext(1, X, Y).dimension


def euler_bilinear(base: AlgebraData, x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> = sum_i x_i y_i - sum over arrows i -> j of x_i y_j."""
    position = {v: k for k, v in enumerate(base.vertices)}
    total = sum(a * b for a, b in zip(x, y))
    for arrow in base.quiver.arrows:
        total -= x[position[arrow.source]] * y[position[arrow.target]]
    return total
