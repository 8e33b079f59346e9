"""
Hom spaces of the singularity category modelled by stable Homs between syzygies.

Hom(q(X), q(Y)[s]) is the colimit of the stable Homs Hom(Omega^(n+s) X, Omega^n Y) along Omega.
Once both syzygy sequences are certified periodic the transition over a common period is an
endomorphism of one finite-dimensional space and the colimit is its eventual image.
"""
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.matrices import DomainMatrix

from core.config import get_settings
from core.exceptions import ComputationError
from domain.models.algebra import StructureConstants
from domain.models.homology import SyzygyCertificate
from domain.models.module import FdModule, ModuleMap
from domain.models.singularity import (
    PatternCheck,
    SgClassification,
    SgIsoVerdict,
    SgObject,
    StabHomResult,
    StabilizationStatus,
    ThickOrbit,
)
from domain.models.verdicts import Verdict
from infrastructure.algebra import gproj, homol, linalg, modcat, structure
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


class StableHom:
    """Hom(X, Y) modulo the maps factoring through the projective cover of Y."""

    def __init__(self, X: FdModule, Y: FdModule):
        self.source = X
        self.target = Y
        self.space = modcat.hom_space(X, Y)
        K = X.algebra.field.domain
        cover = homol.projective_cover(Y)
        through = modcat.hom_space(X, cover.module)
        columns = [self.space.coordinates(modcat.compose(cover.epimorphism, g)) for g in through.basis]
        self.quotient = linalg.QuotientSpace(
            linalg.hstack(columns, self.space.dimension, K), self.space.dimension, K
        )
        self.basis = [self.representative(linalg.unit_vector(self.dimension, k, K)) for k in range(self.dimension)]

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    def reduce(self, f: ModuleMap) -> DomainMatrix:
        return self.quotient.reduce(self.space.coordinates(f))

    def representative(self, coordinates: DomainMatrix) -> ModuleMap:
        return self.space.combination(self.quotient.lift * coordinates)


def stable_hom(X: FdModule, Y: FdModule) -> StableHom:
    modcat._require_same(X, Y)
    cache = X._cache.setdefault("stable_hom", {})
    hit = cache.get(id(Y))
    if hit is not None and hit[0] is Y:
        return hit[1]
    result = StableHom(X, Y)
    cache[id(Y)] = (Y, result)
    logger.debug(f"dim stable Hom({X.display_name()}, {Y.display_name()}) = {result.dimension}")
    return result


def _omega_power(X: FdModule, k: int) -> FdModule:
    for _ in range(k):
        X = homol.syzygy(X)
    return X


def _omega_map(f: ModuleMap, k: int) -> ModuleMap:
    for _ in range(k):
        f = homol.syzygy_map(f)
    return f


class _Periodic:
    """Omega^level X with an isomorphism onto Omega^(level + span) X built from the certificate witness."""

    def __init__(self, certificate: SyzygyCertificate, level: int, span: int):
        self.level = level
        self.span = span
        self.module = _omega_power(certificate.module, level)
        step = _omega_map(certificate.witness, level - certificate.preperiod)
        forward = step
        for _ in range(span // certificate.period - 1):
            step = _omega_map(step, certificate.period)
            forward = modcat.compose(step, forward)
        if forward.source is not self.module:
            raise ComputationError("Periodicity isomorphism does not start at the requested syzygy")
        self.forward = forward
        self.backward = modcat.inverse_map(forward)


def _periodic(certificate: SyzygyCertificate, level: int, span: int) -> _Periodic:
    cache = certificate.module._cache.setdefault("periodic", {})
    key = (certificate.iterations, level, span)
    if key not in cache:
        cache[key] = _Periodic(certificate, level, span)
    return cache[key]


class _Colimit:
    """
    The eventual image of the period transition on a stable Hom space, presented as the quotient
    by its generalized kernel.
    """

    def __init__(self, source: _Periodic, target: _Periodic):
        self.stable = stable_hom(source.module, target.module)
        K = source.module.algebra.field.domain
        d = self.stable.dimension
        columns = []
        for f in self.stable.basis:
            moved = _omega_map(f, source.span)
            columns.append(self.stable.reduce(modcat.compose(target.backward, modcat.compose(moved, source.forward))))
        self.transition = linalg.hstack(columns, d, K)
        power = linalg.identity(d, K)
        for _ in range(d):
            power = (power * self.transition).to_dense()
        self.quotient = linalg.QuotientSpace(linalg.kernel_matrix(power), d, K)
        self.basis = [
            self.stable.representative(linalg.select_columns(self.quotient.lift, [k])) for k in range(self.dimension)
        ]

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    def coordinates(self, f: ModuleMap) -> DomainMatrix:
        return self.quotient.reduce(self.stable.reduce(f))


def _colimit(source: _Periodic, target: _Periodic) -> _Colimit:
    cache = source.module._cache.setdefault("colimit", {})
    key = (id(target), source.span)
    hit = cache.get(key)
    if hit is not None and hit[0] is target:
        return hit[1]
    result = _Colimit(source, target)
    cache[key] = (target, result)
    return result


class _EndAlgebra:
    """The colimit of stable endomorphisms as an algebra by structure constants."""

    def __init__(self, colimit: _Colimit, module: FdModule):
        self.colimit = colimit
        field = module.algebra.field
        K = field.domain
        n = colimit.dimension
        left = []
        for x in colimit.basis:
            columns = [colimit.coordinates(modcat.compose(x, y)) for y in colimit.basis]
            left.append(linalg.hstack(columns, n, K))
        unit = colimit.coordinates(modcat.identity(module))
        self.structure = StructureConstants(field=field, dimension=n, left=tuple(left), unit=unit.to_dense())
        self._local: Optional[bool] = None

    def is_unit(self, f: ModuleMap) -> bool:
        return linalg.is_invertible(structure.left_matrix(self.structure, self.colimit.coordinates(f)))

    @property
    def is_local(self) -> bool:
        if self._local is None:
            n = self.structure.dimension
            self._local = n > 0 and n - structure.radical(self.structure).shape[1] == 1
        return self._local


def _certificate(x: SgObject, cap: Optional[int]) -> SyzygyCertificate:
    return homol.proj_dimension(x.module, cap)


class _Pair:
    """
    Common realization of x = q(X)[a] and y = q(Y)[b]: A = Omega^(n+s) X and B = Omega^n Y with
    s = b - a, both in the periodic range and sharing one transition span.
    """

    def __init__(self, x: SgObject, y: SgObject, cx: SyzygyCertificate, cy: SyzygyCertificate):
        self.shift = y.shift - x.shift
        s = self.shift
        self.level = max(0, -s, cy.preperiod, cx.preperiod - s)
        self.span = cx.period * cy.period // math.gcd(cx.period, cy.period)
        self.source = _periodic(cx, self.level + s, self.span)
        self.target = _periodic(cy, self.level, self.span)

    def forward(self) -> _Colimit:
        return _colimit(self.source, self.target)

    def backward(self) -> _Colimit:
        return _colimit(self.target, self.source)

    def source_end(self) -> _EndAlgebra:
        return _end_algebra(self.source)

    def target_end(self) -> _EndAlgebra:
        return _end_algebra(self.target)


def _end_algebra(periodic: _Periodic) -> _EndAlgebra:
    cache = periodic.module._cache.setdefault("sg_end", {})
    if periodic.span not in cache:
        cache[periodic.span] = _EndAlgebra(_colimit(periodic, periodic), periodic.module)
    return cache[periodic.span]


def _zero_or_unknown(x: SgObject, y: SgObject, cx: SyzygyCertificate, cy: SyzygyCertificate) -> Optional[StabHomResult]:
    if cx.is_finite or cy.is_finite:
        return StabHomResult(
            source=x, target=y, status=StabilizationStatus.ZERO_OBJECT, dimension=0,
            reason="finite projective dimension",
        )
    if not (cx.is_infinite and cy.is_infinite):
        return StabHomResult(
            source=x, target=y, status=StabilizationStatus.INCONCLUSIVE,
            reason="syzygy periodicity not certified within the cap",
        )
    return None


def stabilized_hom(x: SgObject, y: SgObject, cap: Optional[int] = None) -> StabHomResult:
    modcat._require_same(x.module, y.module)
    cx, cy = _certificate(x, cap), _certificate(y, cap)
    early = _zero_or_unknown(x, y, cx, cy)
    if early is not None:
        return early
    pair = _Pair(x, y, cx, cy)
    colimit = pair.forward()
    logger.debug(
        f"Hom({x.label()}, {y.label()}) stabilizes at level {pair.level} with span {pair.span}: {colimit.dimension}"
    )
    return StabHomResult(
        source=x,
        target=y,
        status=StabilizationStatus.STABILIZED,
        dimension=colimit.dimension,
        level=pair.level,
        transition_period=pair.span,
        basis=colimit.basis,
    )


def sg_is_zero(X: FdModule, cap: Optional[int] = None) -> Verdict:
    """'yes' when q(X) = 0, i.e. X has finite projective dimension."""
    certificate = homol.proj_dimension(X, cap)
    if certificate.is_finite:
        return Verdict.YES
    if certificate.is_infinite:
        return Verdict.NO
    return Verdict.UNKNOWN


def _sample_pairs(forward: _Colimit, backward: _Colimit):
    for f in forward.basis:
        for g in backward.basis:
            yield f, g
    settings = get_settings()
    K = forward.stable.source.algebra.field.domain
    rng = np.random.default_rng(settings.RANDOM_SEED)
    for _ in range(settings.ISO_RANDOM_TRIES):
        a = [int(c) for c in rng.integers(-9, 10, size=forward.dimension)]
        b = [int(c) for c in rng.integers(-9, 10, size=backward.dimension)]
        f = forward.stable.representative(forward.quotient.lift * linalg.column(a, K))
        g = backward.stable.representative(backward.quotient.lift * linalg.column(b, K))
        yield f, g


def sg_is_isomorphic(x: SgObject, y: SgObject, cap: Optional[int] = None) -> SgIsoVerdict:
    """
    'yes' with maps f: A -> B, g: B -> A at a common level whose composites act invertibly on the
    stabilized endomorphism algebras; 'no' from a zero Hom space, a dimension obstruction, or local
    endomorphism algebras where no composite leaves the radical.
    """
    modcat._require_same(x.module, y.module)
    cx, cy = _certificate(x, cap), _certificate(y, cap)
    if not (cx.is_conclusive and cy.is_conclusive):
        return SgIsoVerdict(verdict=Verdict.UNKNOWN, reason="syzygy periodicity not certified")
    if cx.is_finite and cy.is_finite:
        return SgIsoVerdict(verdict=Verdict.YES, reason="both objects are zero")
    if cx.is_finite or cy.is_finite:
        return SgIsoVerdict(verdict=Verdict.NO, reason="exactly one object is zero")
    pair = _Pair(x, y, cx, cy)
    forward, backward = pair.forward(), pair.backward()
    if forward.dimension == 0 or backward.dimension == 0:
        return SgIsoVerdict(verdict=Verdict.NO, reason="a stabilized Hom space is zero")
    source_end, target_end = pair.source_end(), pair.target_end()
    dims = (forward.dimension, backward.dimension, source_end.structure.dimension, target_end.structure.dimension)
    if len(set(dims)) != 1:
        return SgIsoVerdict(verdict=Verdict.NO, reason=f"dimension obstruction {dims}")
    for f, g in _sample_pairs(forward, backward):
        if source_end.is_unit(modcat.compose(g, f)) and target_end.is_unit(modcat.compose(f, g)):
            return SgIsoVerdict(verdict=Verdict.YES, witness=(f, g), reason=f"isomorphic at level {pair.level}")
    if source_end.is_local and target_end.is_local:
        return SgIsoVerdict(verdict=Verdict.NO, reason="every composite lies in the radical of a local endomorphism algebra")
    logger.warning(f"Singularity-category isomorphism search failed for {x.label()} and {y.label()}")
    return SgIsoVerdict(verdict=Verdict.UNKNOWN, reason="bounded search found no invertible composite")


def cosyzygy(X: FdModule) -> FdModule:
    """((Omega_op(X*))*: the cokernel of a left projective approximation of a Gorenstein projective X."""
    dual = gproj.a_dual(X)
    result = gproj.a_dual(homol.syzygy(dual))
    return FdModule(algebra=X.algebra, dims=result.dims, maps=result.maps, label=f"Sigma({X.display_name()})")


def translate(x: SgObject, realize: bool = False, cap: Optional[int] = None) -> SgObject:
    """
    x[1]. With `realize`, the shift is carried by a cosyzygy module instead, checked against x[1].
    """
    shifted = SgObject(module=x.module, shift=x.shift + 1)
    if not realize:
        return shifted
    realized = SgObject(module=cosyzygy(x.module), shift=x.shift)
    verdict = sg_is_isomorphic(realized, shifted, cap)
    if verdict.verdict == Verdict.NO:
        raise ComputationError(f"Cosyzygy of {x.module.display_name()} does not realize the translation")
    if verdict.verdict == Verdict.UNKNOWN:
        logger.warning(f"Could not confirm the cosyzygy realization of {x.label()}")
    return realized


def _as_object(item) -> SgObject:
    return item if isinstance(item, SgObject) else SgObject(module=item)


def classify(candidates: Sequence, cap: Optional[int] = None) -> SgClassification:
    """Partitions candidates (modules or shifted objects) into singularity-category isomorphism classes."""
    zero: List[FdModule] = []
    classes: List[List[FdModule]] = []
    heads: List[SgObject] = []
    inconclusive: List[FdModule] = []
    for item in candidates:
        x = _as_object(item)
        status = sg_is_zero(x.module, cap)
        if status == Verdict.YES:
            zero.append(x.module)
            continue
        if status == Verdict.UNKNOWN:
            inconclusive.append(x.module)
            continue
        placed, unsure = False, False
        for k, head in enumerate(heads):
            verdict = sg_is_isomorphic(head, x, cap).verdict
            if verdict == Verdict.YES:
                classes[k].append(x.module)
                placed = True
                break
            if verdict == Verdict.UNKNOWN:
                unsure = True
        if placed:
            continue
        if unsure:
            inconclusive.append(x.module)
            continue
        heads.append(x)
        classes.append([x.module])
    logger.info(
        f"Singularity classification: {len(classes)} classes, {len(zero)} zero, {len(inconclusive)} inconclusive"
    )
    return SgClassification(zero_objects=zero, classes=classes, inconclusive=inconclusive)


def find_class(x: SgObject, classification: SgClassification, cap: Optional[int] = None) -> Tuple[Optional[int], bool]:
    """Index of the class containing x, and whether every comparison was conclusive."""
    certain = True
    for k, representative in enumerate(classification.representatives):
        verdict = sg_is_isomorphic(SgObject(module=representative), x, cap).verdict
        if verdict == Verdict.YES:
            return k, True
        if verdict == Verdict.UNKNOWN:
            certain = False
    return None, certain


def thick_orbit(
    summands: Sequence[FdModule], classification: SgClassification, cap: Optional[int] = None
) -> ThickOrbit:
    """Classes met by the translates q(Z)[k] of the indecomposable summands Z of M."""
    pieces = [s for M in summands for s in modcat.decompose(M).summands]
    classes: List[int] = []
    objects: List[SgObject] = []
    periods: List[int] = []
    complete = True
    bound = len(classification.classes) + 1
    for Z in pieces:
        status = sg_is_zero(Z, cap)
        if status != Verdict.NO:
            complete = complete and status == Verdict.YES
            continue
        start, _ = find_class(SgObject(module=Z), classification, cap)
        if start is None:
            complete = False
            continue
        period = None
        for k in range(1, bound + 1):
            index, _ = find_class(SgObject(module=Z, shift=k), classification, cap)
            if index is None:
                complete = False
                break
            if index == start:
                period = k
                break
        if period is None:
            complete = False
            period = 1
        for k in range(period):
            obj = SgObject(module=Z, shift=k)
            objects.append(obj)
            index, _ = find_class(obj, classification, cap)
            if index is not None and index not in classes:
                classes.append(index)
        periods.append(period)
    logger.info(f"Thick orbit meets classes {sorted(classes)}")
    return ThickOrbit(classes=sorted(classes), objects=objects, periods=periods, complete=complete)


def perp(
    summands: Sequence[FdModule], classification: SgClassification, cap: Optional[int] = None
) -> SgClassification:
    """Classes X with Hom(q(Z)[k], X) = 0 for every summand Z of M and every k in one translation period."""
    orbit = thick_orbit(summands, classification, cap)
    survivors: List[List[FdModule]] = []
    unsure: List[FdModule] = []
    for members in classification.classes:
        target = SgObject(module=members[0])
        results = [stabilized_hom(obj, target, cap) for obj in orbit.objects]
        if any(not r.conclusive for r in results):
            unsure.append(members[0])
        elif all(r.dimension == 0 for r in results):
            survivors.append(members)
    logger.info(f"Perpendicular category: {len(survivors)} classes")
    return SgClassification(zero_objects=[], classes=survivors, inconclusive=unsure)


def stable_hom_table(objects: Sequence, cap: Optional[int] = None) -> List[List[Optional[int]]]:
    """table[i][j] = dim Hom(objects[i], objects[j]) in the singularity category, None when inconclusive."""
    items = [_as_object(o) for o in objects]
    return [[stabilized_hom(x, y, cap).dimension for y in items] for x in items]


def semisimple_pattern_check(
    classes: Sequence, expected_count: int, permutation: Sequence[int], cap: Optional[int] = None
) -> PatternCheck:
    """
    Checks that the classes look like the simple objects of a semisimple category whose translation
    permutes them by `permutation`: one-dimensional endomorphisms, no cross Homs, and
    Hom(X, X[i]) nonzero exactly when the permutation fixes X after i steps.
    """
    heads = [_as_object(c[0] if isinstance(c, (list, tuple)) else c) for c in classes]
    failures: List[str] = []
    unknown = False
    if len(heads) != expected_count:
        failures.append(f"{len(heads)} classes, expected {expected_count}")
    table = stable_hom_table(heads, cap)
    for i, row in enumerate(table):
        for j, value in enumerate(row):
            if value is None:
                unknown = True
            elif value != (1 if i == j else 0):
                failures.append(f"dim Hom({heads[i].label()}, {heads[j].label()}) = {value}")
    observed: List[int] = []
    for i, x in enumerate(heads):
        image = None
        for j, y in enumerate(heads):
            verdict = sg_is_isomorphic(translate(x), y, cap).verdict
            if verdict == Verdict.YES:
                image = j
                break
            if verdict == Verdict.UNKNOWN:
                unknown = True
        if image is None:
            failures.append(f"translate({x.label()}) is not among the classes")
            observed.append(-1)
        else:
            observed.append(image)
    if len(heads) == expected_count and observed != list(permutation):
        failures.append(f"translation permutes classes as {observed}, expected {list(permutation)}")
    if -1 not in observed:
        for i, x in enumerate(heads):
            order, k = 1, observed[i]
            while k != i and order <= len(heads):
                k, order = observed[k], order + 1
            for shift in range(1, order + 1):
                result = stabilized_hom(x, SgObject(module=x.module, shift=x.shift + shift), cap)
                expected = 1 if shift % order == 0 else 0
                if result.dimension is None:
                    unknown = True
                elif result.dimension != expected:
                    failures.append(f"dim Hom({x.label()}, {x.label()}[{shift}]) = {result.dimension}")
    if failures:
        verdict = Verdict.NO
    elif unknown:
        verdict = Verdict.UNKNOWN
    else:
        verdict = Verdict.YES
    return PatternCheck(
        verdict=verdict,
        object_count=len(heads),
        expected_count=expected_count,
        shift_permutation=observed,
        failures=failures,
    )
