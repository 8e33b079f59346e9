"""
Gamma = End_A(M)^op for M = M_1 + ... + M_r: structure constants, Gabriel quiver, presentations,
the functors Hom_A(M, -) and M (x)_Gamma -, the kernel category and the partial-resolution test.

Conventions: x *_Gamma y = y o x, the vertex of Gamma attached to M_i carries the idempotent id_{M_i},
and f_j Gamma f_i = Hom_A(M_j, M_i), so an arrow i -> j of Gamma is a map M_j -> M_i.
"""
import itertools
from typing import Dict, List, Optional, Sequence, Tuple, Union

from networkx.algorithms.isomorphism import MultiDiGraphMatcher
from sympy.polys.matrices import DomainMatrix

from core.config import get_settings
from core.exceptions import ComputationError, InputError
from domain.models.algebra import AlgebraData, PathWord, RelationElement, StructureConstants
from domain.models.module import FdModule, ModuleMap
from domain.models.verdicts import (
    EndoAlgebraData,
    EndoPresentation,
    GabrielQuiver,
    MResolution,
    PartialResolutionVerdict,
    PresentationClaim,
    PresentationStatus,
    PresentationVerdict,
    Verdict,
)
from domain.models.homology import DimensionResult, SyzygyCertificate
from infrastructure.algebra import homol, linalg, modcat, qalg, structure
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def endo_algebra(summands: Sequence[FdModule], vertex_names: Optional[Sequence[str]] = None) -> EndoAlgebraData:
    """
    Structure constants of End_A(M)^op on the blockwise basis of Hom_A(M_i, M_j).
    The summands are expected to be pairwise non-isomorphic indecomposables.
    """
    if not summands:
        raise InputError("endo_algebra needs at least one summand")
    for M in summands[1:]:
        modcat._require_same(summands[0], M)
    names = tuple(vertex_names) if vertex_names else tuple(str(i + 1) for i in range(len(summands)))
    if len(names) != len(summands) or len(set(names)) != len(names):
        raise InputError("Vertex names must be distinct, one per summand")
    field = summands[0].algebra.field
    K = field.domain
    logger.info(f"Building End(M)^op for M = {' + '.join(M.display_name() for M in summands)}")
    spaces: Dict[Tuple[int, int], modcat.HomSpace] = {}
    offsets: Dict[Tuple[int, int], int] = {}
    basis: List[ModuleMap] = []
    blocks: List[Tuple[int, int]] = []
    r = len(summands)
    for i in range(r):
        for j in range(r):
            space = modcat.hom_space(summands[i], summands[j])
            spaces[(i, j)] = space
            offsets[(i, j)] = len(basis)
            basis.extend(space.basis)
            blocks.extend([(i, j)] * space.dimension)
    n = len(basis)

    def coordinates(f: ModuleMap, i: int, j: int) -> DomainMatrix:
        values = [K.zero] * n
        local = linalg.column_entries(spaces[(i, j)].coordinates(f))
        values[offsets[(i, j)]:offsets[(i, j)] + len(local)] = local
        return DomainMatrix([[x] for x in values], (n, 1), K)

    left = []
    for x, (i, j) in zip(basis, blocks):
        columns = []
        for y, (k, l) in zip(basis, blocks):
            if k == j:
                columns.append(coordinates(modcat.compose(y, x), i, l))
            else:
                columns.append(linalg.zeros(n, 1, K))
        left.append(linalg.hstack(columns, n, K))
    idempotents = tuple(coordinates(modcat.identity(summands[i]), i, i) for i in range(r))
    unit = linalg.zeros(n, 1, K)
    for e in idempotents:
        unit = unit + e
    S = StructureConstants(field=field, dimension=n, left=tuple(left), unit=unit.to_dense())
    if not structure.is_unital(S):
        raise ComputationError("End(M)^op structure constants are not unital")
    endo = EndoAlgebraData(
        summands=tuple(summands),
        vertex_names=names,
        basis=tuple(basis),
        blocks=tuple(blocks),
        structure=S,
        idempotents=idempotents,
    )
    logger.info(f"dim End(M)^op = {n}")
    return endo


def endo_map(endo: EndoAlgebraData, element: DomainMatrix, source: int, target: int) -> ModuleMap:
    """The part of a Gamma element in the block Hom(M_source, M_target) as a module map."""
    K = endo.structure.field.domain
    X, Y = endo.summands[source], endo.summands[target]
    total = modcat.zero_map(X, Y)
    for k, c in enumerate(linalg.column_entries(element)):
        if endo.blocks[k] == (source, target) and not K.is_zero(c):
            total = modcat.add_maps(total, modcat.scale_map(endo.basis[k], c))
    return total


def radical(algebra: Union[AlgebraData, EndoAlgebraData, StructureConstants]) -> DomainMatrix:
    return structure.radical(_structure_of(algebra))


def _structure_of(algebra) -> StructureConstants:
    if isinstance(algebra, StructureConstants):
        return algebra
    return algebra.structure


def _idempotent_data(algebra: Union[AlgebraData, EndoAlgebraData]) -> Tuple[StructureConstants, List[DomainMatrix], List[str]]:
    if isinstance(algebra, EndoAlgebraData):
        return algebra.structure, list(algebra.idempotents), list(algebra.vertex_names)
    K = algebra.field.domain
    idempotents = [linalg.unit_vector(algebra.dimension, algebra.trivial_index(v), K) for v in algebra.vertices]
    return algebra.structure, idempotents, list(algebra.vertices)


def gabriel_quiver(algebra: Union[AlgebraData, EndoAlgebraData]) -> GabrielQuiver:
    S, idempotents, names = _idempotent_data(algebra)
    return structure.gabriel_quiver(S, idempotents, names)


class _PathEvaluator:
    """Images in a structure-constant algebra of paths whose arrows have prescribed images."""

    def __init__(self, S: StructureConstants, idempotents: Dict[str, DomainMatrix], images: Dict[str, DomainMatrix]):
        self.S = S
        self.idempotents = idempotents
        self.lefts = {name: structure.left_matrix(S, v) for name, v in images.items()}
        self.images = images
        self._memo: Dict[Tuple[str, ...], DomainMatrix] = {}

    def __call__(self, path: PathWord) -> DomainMatrix:
        if path.length == 0:
            return self.idempotents[path.source]
        return self._word(path.arrows)

    def _word(self, arrows: Tuple[str, ...]) -> DomainMatrix:
        hit = self._memo.get(arrows)
        if hit is None:
            if len(arrows) == 1:
                hit = self.images[arrows[0]]
            else:
                hit = (self.lefts[arrows[0]] * self._word(arrows[1:])).to_dense()
            self._memo[arrows] = hit
        return hit


def _relation_from_vector(vector: DomainMatrix, paths: Sequence[PathWord], K) -> RelationElement:
    terms = []
    for c, p in zip(linalg.column_entries(vector), paths):
        if not K.is_zero(c):
            terms.append((linalg.to_fraction(K, c), p))
    return RelationElement(terms=tuple(terms))


def present_endo_algebra(endo: EndoAlgebraData, name: str = "Gamma") -> EndoPresentation:
    """
    Discovers a bound quiver presentation of Gamma: Gabriel quiver, arrow lifts, and minimal
    relations chosen from the kernel of kQ -> Gamma modulo J*I + I*J.
    """
    S = endo.structure
    K = S.field.domain
    n = S.dimension
    gabriel = gabriel_quiver(endo)
    quiver = gabriel.quiver
    loewy = structure.loewy_length(S)
    nilpotency = max(loewy, 2)
    evaluate = _PathEvaluator(S, gabriel.idempotents, gabriel.arrow_elements)
    paths = [p for p in qalg.enumerate_paths(quiver, nilpotency - 1) if p.length >= 2]
    by_pair: Dict[Tuple[str, str], List[PathWord]] = {}
    for p in paths:
        by_pair.setdefault((p.source, p.target), []).append(p)
    position = {p: k for k, p in enumerate(paths)}
    kernel_vectors: List[Dict[int, object]] = []
    for (src, tgt), group in by_pair.items():
        images = linalg.hstack([evaluate(p) for p in group], n, K)
        for v in linalg.kernel_basis(images):
            entries = linalg.column_entries(v)
            kernel_vectors.append({position[p]: c for p, c in zip(group, entries) if not K.is_zero(c)})
    kernel_vectors.sort(key=lambda vec: min(paths[i].length for i in vec))

    def shifted(vec: Dict[int, object], arrow) -> List[Dict[int, object]]:
        out = []
        for side in ("left", "right"):
            moved: Dict[int, object] = {}
            for i, c in vec.items():
                p = paths[i]
                if side == "left" and arrow.source == p.target:
                    q = PathWord(source=p.source, target=arrow.target, arrows=(arrow.name,) + p.arrows)
                elif side == "right" and arrow.target == p.source:
                    q = PathWord(source=arrow.source, target=p.target, arrows=p.arrows + (arrow.name,))
                else:
                    continue
                if q.length < nilpotency:
                    moved[position[q]] = c
            if moved:
                out.append(moved)
        return out

    products = linalg.SparseEchelon(K)
    for vec in kernel_vectors:
        for arrow in quiver.arrows:
            for moved in shifted(vec, arrow):
                products.add(moved)
    relations = []
    for vec in kernel_vectors:
        if products.add(vec) is not None:
            members = sorted(vec)
            column = linalg.column_from_sparse({k: vec[i] for k, i in enumerate(members)}, len(members), K)
            relations.append(_relation_from_vector(column, [paths[i] for i in members], K))
    algebra = qalg.build_algebra(quiver, relations, nilpotency, S.field, name=name)
    if algebra.dimension != n:
        raise ComputationError(f"Discovered presentation has dimension {algebra.dimension}, expected {n}")
    basis_images = tuple(evaluate(p) for p in algebra.basis)
    if linalg.rank(linalg.hstack(list(basis_images), n, K)) != n:
        raise ComputationError("Discovered presentation does not map onto Gamma")
    logger.info(f"Presented {name}: {len(quiver.arrows)} arrows, {len(relations)} relations, nilpotency {nilpotency}")
    return EndoPresentation(
        endo=endo,
        algebra=algebra,
        vertex_summand={v: k for k, v in enumerate(endo.vertex_names)},
        arrow_elements=dict(gabriel.arrow_elements),
        basis_images=basis_images,
    )


def build_claim(claim: PresentationClaim, field) -> AlgebraData:
    return qalg.build_algebra(claim.quiver, list(claim.relations), claim.nilpotency, field, name=claim.name)


def _arrow_pairing(claim_quiver, gabriel_quiver_, vertex_map: Dict[str, str]) -> Dict[str, str]:
    """k-th claim arrow i -> j paired with the k-th Gabriel arrow vertex_map[i] -> vertex_map[j]."""
    pairing = {}
    used: Dict[Tuple[str, str], int] = {}
    for a in claim_quiver.arrows:
        key = (vertex_map[a.source], vertex_map[a.target])
        candidates = [g for g in gabriel_quiver_.arrows if (g.source, g.target) == key]
        k = used.get(key, 0)
        pairing[a.name] = candidates[k].name
        used[key] = k + 1
    return pairing


class _RelationSystem:
    """
    The polynomial system 'every claimed relation maps to zero' in the coordinates of the arrow
    images inside the corners f_j rad f_i.
    """

    def __init__(self, S: StructureConstants, claim: PresentationClaim, corners: Dict[str, DomainMatrix]):
        self.S = S
        self.K = S.field.domain
        self.claim = claim
        self.corners = corners
        self.names = [a.name for a in claim.quiver.arrows]
        self.sizes = [corners[name].shape[1] for name in self.names]

    def images(self, x: DomainMatrix) -> Dict[str, DomainMatrix]:
        values = linalg.column_entries(x)
        out, start = {}, 0
        for name, size in zip(self.names, self.sizes):
            coords = DomainMatrix([[c] for c in values[start:start + size]], (size, 1), self.K)
            out[name] = (self.corners[name] * coords).to_dense() if size else linalg.zeros(self.S.dimension, 1, self.K)
            start += size
        return out

    def residual(self, x: DomainMatrix) -> DomainMatrix:
        images = self.images(x)
        lefts = {name: structure.left_matrix(self.S, v) for name, v in images.items()}
        n = self.S.dimension
        blocks = []
        for relation in self.claim.relations:
            total = linalg.zeros(n, 1, self.K)
            for c, p in relation.terms:
                total = total + _word(lefts, images, p.arrows) * linalg.scalar(self.K, c)
            blocks.append(total.to_dense())
        return linalg.vstack(blocks, 1, self.K)

    def jacobian(self, x: DomainMatrix) -> DomainMatrix:
        images = self.images(x)
        lefts = {name: structure.left_matrix(self.S, v) for name, v in images.items()}
        n = self.S.dimension
        columns = []
        for name, size in zip(self.names, self.sizes):
            for t in range(size):
                direction = linalg.select_columns(self.corners[name], [t])
                direction_left = structure.left_matrix(self.S, direction)
                blocks = []
                for relation in self.claim.relations:
                    total = linalg.zeros(n, 1, self.K)
                    for c, p in relation.terms:
                        for k, a in enumerate(p.arrows):
                            if a != name:
                                continue
                            suffix = _word(lefts, images, p.arrows[k + 1:]) if k + 1 < len(p.arrows) else None
                            middle = direction if suffix is None else direction_left * suffix
                            prefix = linalg.identity(n, self.K)
                            for b in p.arrows[:k]:
                                prefix = prefix * lefts[b]
                            total = total + prefix * middle * linalg.scalar(self.K, c)
                    blocks.append(total.to_dense())
                columns.append(linalg.vstack(blocks, 1, self.K))
        rows = n * len(self.claim.relations)
        return linalg.hstack(columns, rows, self.K)


def _word(lefts: Dict[str, DomainMatrix], images: Dict[str, DomainMatrix], arrows: Tuple[str, ...]) -> DomainMatrix:
    vector = images[arrows[-1]]
    for a in reversed(arrows[:-1]):
        vector = lefts[a] * vector
    return vector.to_dense()


def _target(algebra: Union[AlgebraData, EndoAlgebraData]):
    S, idempotents, names = _idempotent_data(algebra)
    return S, dict(zip(names, idempotents)), names


def verify_presentation(algebra: Union[AlgebraData, EndoAlgebraData], claim: PresentationClaim) -> PresentationVerdict:
    """
    Searches for an algebra map kQ/(I + J^N) -> algebra sending vertices to the primitive idempotents
    and arrows into the matching corners of the radical. A map that kills every relation and hits a
    spanning set is an isomorphism once dimensions agree; only then is the claim 'verified'.
    """
    settings = get_settings()
    S, idempotents, names = _target(algebra)
    K = S.field.domain
    n = S.dimension
    gabriel = gabriel_quiver(algebra)
    matcher = MultiDiGraphMatcher(claim.quiver.graph(), gabriel.quiver.graph())
    bijections = list(matcher.isomorphisms_iter())
    if not bijections:
        logger.info(f"Claim {claim.name}: quiver does not match the Gabriel quiver")
        return PresentationVerdict(
            status=PresentationStatus.REFUTED_QUIVER, algebra_dimension=n, reason="no vertex bijection matches the arrow counts"
        )
    claimed = build_claim(claim, S.field)
    if claimed.dimension != n:
        logger.info(f"Claim {claim.name}: dimension {claimed.dimension} against {n}")
        return PresentationVerdict(
            status=PresentationStatus.REFUTED_DIMENSION,
            claim_dimension=claimed.dimension,
            algebra_dimension=n,
            reason=f"claimed algebra has dimension {claimed.dimension}",
        )
    rad = structure.radical(S)
    coefficients = settings.search_coefficients() or [1]
    attempts = 0
    for vertex_map in bijections:
        pairing = _arrow_pairing(claim.quiver, gabriel.quiver, vertex_map)
        corners = {}
        for a in claim.quiver.arrows:
            sandwich = structure.left_matrix(S, idempotents[vertex_map[a.target]]) * structure.right_matrix(
                S, idempotents[vertex_map[a.source]]
            )
            corners[a.name] = linalg.column_space(sandwich * rad)
        system = _RelationSystem(S, claim, corners)
        starts = []
        for a in claim.quiver.arrows:
            coords = linalg.CoordinateSystem(corners[a.name]).coordinates(gabriel.arrow_elements[pairing[a.name]], check=True)
            starts.append(coords)
        scalings = itertools.product(coefficients, repeat=len(starts))
        for scaling in scalings:
            if attempts >= settings.PRESENTATION_MAX_ATTEMPTS:
                break
            attempts += 1
            x = linalg.vstack(
                [linalg.scale(s, c) for s, c in zip(starts, scaling)], 1, K
            ) if starts else linalg.zeros(0, 1, K)
            x = _newton(system, x, settings.PRESENTATION_NEWTON_STEPS)
            if x is None:
                continue
            images = system.images(x)
            evaluate = _PathEvaluator(S, {v: idempotents[vertex_map[v]] for v in claim.quiver.vertices}, images)
            if structure.loewy_length(S) > claim.nilpotency:
                long_paths = [p for p in qalg.enumerate_paths(claim.quiver, claim.nilpotency) if p.length == claim.nilpotency]
                if any(not evaluate(p).is_zero_matrix for p in long_paths):
                    continue
            spanned = linalg.hstack([evaluate(p) for p in claimed.basis], n, K)
            if linalg.rank(spanned) != n:
                continue
            logger.info(f"Claim {claim.name} verified after {attempts} attempt(s)")
            return PresentationVerdict(
                status=PresentationStatus.VERIFIED,
                vertex_map=dict(vertex_map),
                arrow_images=images,
                claim_dimension=claimed.dimension,
                algebra_dimension=n,
                attempts=attempts,
                reason="relations vanish and the images span",
            )
    logger.warning(f"Claim {claim.name}: bounded search exhausted after {attempts} attempt(s)")
    return PresentationVerdict(
        status=PresentationStatus.INCONCLUSIVE,
        claim_dimension=claimed.dimension,
        algebra_dimension=n,
        attempts=attempts,
        reason="no arrow assignment found within the search bound",
    )


def _newton(system: _RelationSystem, x: DomainMatrix, steps: int) -> Optional[DomainMatrix]:
    for _ in range(steps + 1):
        residual = system.residual(x)
        if residual.is_zero_matrix:
            return x
        step = linalg.solve(system.jacobian(x), residual)
        if step is None:
            return None
        x = (x - step).to_dense()
    return None


def hom_functor(presentation: EndoPresentation, X: FdModule) -> FdModule:
    """Hom_A(M, X) as a representation of the presented Gamma; arrows act by precomposition."""
    cache = X._cache.setdefault("hom_functor", {})
    hit = cache.get(id(presentation))
    if hit is not None and hit[0] is presentation:
        return hit[1]
    endo = presentation.endo
    algebra = presentation.algebra
    K = algebra.field.domain
    summand = presentation.vertex_summand
    spaces = {v: modcat.hom_space(endo.summands[summand[v]], X) for v in algebra.vertices}
    maps = {}
    for a in algebra.quiver.arrows:
        g = endo_map(endo, presentation.arrow_elements[a.name], summand[a.target], summand[a.source])
        target = spaces[a.target]
        columns = [target.coordinates(modcat.compose(h, g)) for h in spaces[a.source].basis]
        maps[a.name] = linalg.hstack(columns, target.dimension, K)
    module = FdModule(
        algebra=algebra,
        dims={v: spaces[v].dimension for v in algebra.vertices},
        maps=maps,
        label=f"Hom(M, {X.display_name()})",
    )
    cache[id(presentation)] = (presentation, module)
    return module


def hom_functor_on_maps(presentation: EndoPresentation, f: ModuleMap) -> ModuleMap:
    endo = presentation.endo
    algebra = presentation.algebra
    K = algebra.field.domain
    components = {}
    for v in algebra.vertices:
        M_v = endo.summands[presentation.vertex_summand[v]]
        source = modcat.hom_space(M_v, f.source)
        target = modcat.hom_space(M_v, f.target)
        columns = [target.coordinates(modcat.compose(f, h)) for h in source.basis]
        components[v] = linalg.hstack(columns, target.dimension, K)
    return ModuleMap(
        source=hom_functor(presentation, f.source),
        target=hom_functor(presentation, f.target),
        components=components,
    )


def _add_m_sum(presentation: EndoPresentation, tops: Sequence[str]):
    endo = presentation.endo
    modules = [endo.summands[presentation.vertex_summand[v]] for v in tops]
    if not modules:
        return None
    return modcat.direct_sum(modules)


def tensor_map(presentation: EndoPresentation, d: ModuleMap, source_tops: Sequence[str], target_tops: Sequence[str]):
    """
    M (x)_Gamma d for d between sums of indecomposable projective Gamma-modules, as a map between
    the corresponding sums of summands of M. Returns (source, target, map).
    """
    endo = presentation.endo
    algebra = presentation.algebra
    A = endo.summands[0].algebra
    source = _add_m_sum(presentation, source_tops)
    target = _add_m_sum(presentation, target_tops)
    source_module = source[0] if source else modcat.zero_module(A)
    target_module = target[0] if target else modcat.zero_module(A)
    total = modcat.zero_map(source_module, target_module)
    K = algebra.field.domain
    for l, u in enumerate(source_tops):
        column = linalg.select_columns(d.components[u], [homol.generator_position(algebra, source_tops, l)])
        values = linalg.column_entries(column)
        offset = 0
        for k, v in enumerate(target_tops):
            for index in modcat.projective_paths(algebra, v)[u]:
                c = values[offset]
                offset += 1
                if K.is_zero(c):
                    continue
                piece = endo_map(
                    endo, presentation.basis_images[index], presentation.vertex_summand[u], presentation.vertex_summand[v]
                )
                routed = modcat.compose(target[1][k], modcat.compose(piece, source[2][l]))
                total = modcat.add_maps(total, modcat.scale_map(routed, c))
    return source_module, target_module, total


def tensor_functor(presentation: EndoPresentation, Y: FdModule) -> FdModule:
    """M (x)_Gamma Y as the cokernel of M (x) P_1 -> M (x) P_0 for a projective presentation of Y."""
    resolution = homol.minimal_resolution(Y, 1)
    A = presentation.endo.summands[0].algebra
    tops0 = resolution.tops[0]
    if len(resolution.terms) == 1:
        target = _add_m_sum(presentation, tops0)
        if target is None:
            return modcat.zero_module(A)
        return FdModule(algebra=A, dims=target[0].dims, maps=target[0].maps, label=f"M (x) {Y.display_name()}")
    _, _, image = tensor_map(presentation, resolution.differentials[0], resolution.tops[1], tops0)
    result, _ = modcat.cokernel(image)
    return FdModule(algebra=A, dims=result.dims, maps=result.maps, label=f"M (x) {Y.display_name()}")


def kernel_category_simples(presentation: EndoPresentation) -> List[FdModule]:
    """Simple Gamma-modules S with M (x)_Gamma S = 0."""
    simples = []
    for v in presentation.algebra.vertices:
        S = modcat.simple(presentation.algebra, v)
        if tensor_functor(presentation, S).dimension == 0:
            simples.append(S)
    logger.info(f"Kernel category simples: {[S.display_name() for S in simples]}")
    return simples


def is_partial_resolution(presentation: EndoPresentation, cap: Optional[int] = None) -> PartialResolutionVerdict:
    simples = kernel_category_simples(presentation)
    certificates = [homol.proj_dimension(S, cap) for S in simples]
    if all(c.is_finite for c in certificates):
        verdict = Verdict.YES
    elif any(c.is_infinite for c in certificates):
        verdict = Verdict.NO
    else:
        verdict = Verdict.UNKNOWN
    return PartialResolutionVerdict(
        verdict=verdict,
        simples=[next(v for v, d in S.dims.items() if d) for S in simples],
        certificates=certificates,
    )


def right_module_structure(presentation: EndoPresentation, cap: Optional[int] = None) -> Tuple[FdModule, SyzygyCertificate]:
    """M as a left module over Gamma^op, with its projective dimension."""
    endo = presentation.endo
    algebra = presentation.algebra
    opposite = qalg.opposite_algebra(algebra)
    K = algebra.field.domain
    A = endo.summands[0].algebra
    summand = presentation.vertex_summand
    maps = {}
    for a in algebra.quiver.arrows:
        g = endo_map(endo, presentation.arrow_elements[a.name], summand[a.target], summand[a.source])
        maps[a.name] = linalg.block_diagonal([g.components[w] for w in A.vertices], K)
    module = FdModule(
        algebra=opposite,
        dims={v: endo.summands[summand[v]].dimension for v in algebra.vertices},
        maps=maps,
        label="M_Gamma",
    )
    return module, homol.proj_dimension(module, cap)


def is_generator(summands: Sequence[FdModule]) -> Tuple[Verdict, List[str]]:
    """Every indecomposable projective is isomorphic to a summand of M."""
    algebra = summands[0].algebra
    pieces = [s for M in summands for s in modcat.decompose(M).summands]
    missing = [
        f"P_{v}" for v in algebra.vertices if modcat.find_isomorphic(modcat.projective(algebra, v), pieces) is None
    ]
    return (Verdict.NO if missing else Verdict.YES), missing


def approximation(presentation: EndoPresentation, X: FdModule) -> Tuple[List[str], FdModule, ModuleMap]:
    """
    Minimal right add M-approximation of X: the projective cover of Hom_A(M, X) carried back to add M.
    """
    endo = presentation.endo
    Y = hom_functor(presentation, X)
    cover = homol.projective_cover(Y)
    tops = list(cover.tops)
    A = X.algebra
    if not tops:
        zero = modcat.zero_module(A)
        return tops, zero, modcat.zero_map(zero, X)
    total, _, projections = _add_m_sum(presentation, tops)
    f = modcat.zero_map(total, X)
    for k, v in enumerate(tops):
        generator = linalg.select_columns(
            cover.epimorphism.components[v], [homol.generator_position(presentation.algebra, tops, k)]
        )
        space = modcat.hom_space(endo.summands[presentation.vertex_summand[v]], X)
        h = space.combination(generator)
        f = modcat.add_maps(f, modcat.compose(h, projections[k]))
    return tops, total, f


def _in_add(X: FdModule, summands: Sequence[FdModule]) -> bool:
    return all(modcat.find_isomorphic(s, list(summands)) is not None for s in modcat.decompose(X).summands)


def m_resolution(presentation: EndoPresentation, X: FdModule, cap: Optional[int] = None) -> MResolution:
    """Iterated minimal right add M-approximations; finite once a kernel lies in add M."""
    cap = homol._cap(cap)
    summands = presentation.endo.summands
    terms, tops, kernels = [], [], []
    current = X
    for step in range(cap):
        if current.dimension == 0 or _in_add(current, summands):
            return MResolution(
                target=X, terms=tuple(terms), tops=tuple(tops), kernels=tuple(kernels), finite=True,
                length=step if current.dimension > 0 else max(step - 1, 0),
            )
        chosen, term, f = approximation(presentation, current)
        if not modcat.is_epi(f):
            raise ComputationError("add M-approximation is not surjective; M is not a generator")
        terms.append(term)
        tops.append(tuple(chosen))
        current = modcat.kernel(f)[0]
        kernels.append(current)
    return MResolution(target=X, terms=tuple(terms), tops=tuple(tops), kernels=tuple(kernels), finite=False)


def is_resolution(presentation: EndoPresentation, cap: Optional[int] = None) -> DimensionResult:
    """Global dimension of Gamma; finite means Gamma is a resolution in the strong sense."""
    return homol.global_dimension(presentation.algebra, cap)
