"""
Algebras given by structure constants: products, Jacobson radical, idempotents, Gabriel quiver.
"""
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, Symbol
from sympy.polys.matrices import DomainMatrix

from core.config import get_settings
from core.exceptions import ComputationError, FieldTooSmallError, UnsupportedCharacteristicError
from domain.models.algebra import Arrow, FieldSpec, Quiver, StructureConstants
from domain.models.verdicts import GabrielQuiver
from infrastructure.algebra import linalg
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)

_T = Symbol("t")


def left_matrix(S: StructureConstants, x: DomainMatrix) -> DomainMatrix:
    K = S.field.domain
    total = linalg.zeros(S.dimension, S.dimension, K)
    for i, c in enumerate(linalg.column_entries(x)):
        if not K.is_zero(c):
            total = total + S.left[i] * c
    return total.to_dense()


def right_matrix(S: StructureConstants, y: DomainMatrix) -> DomainMatrix:
    """Matrix of x -> x * y."""
    K = S.field.domain
    cols = [S.left[i] * y for i in range(S.dimension)]
    return linalg.hstack(cols, S.dimension, K)


def multiply(S: StructureConstants, x: DomainMatrix, y: DomainMatrix) -> DomainMatrix:
    K = S.field.domain
    total = linalg.zeros(S.dimension, 1, K)
    for i, c in enumerate(linalg.column_entries(x)):
        if not K.is_zero(c):
            total = total + (S.left[i] * y) * c
    return total.to_dense()


def basis_vector(S: StructureConstants, i: int) -> DomainMatrix:
    return linalg.unit_vector(S.dimension, i, S.field.domain)


def is_associative(S: StructureConstants) -> bool:
    """b_i (b_j x) = (b_i b_j) x for all i, j."""
    K = S.field.domain
    n = S.dimension
    for i in range(n):
        for j in range(n):
            product = S.left[i] * linalg.unit_vector(n, j, K)
            if not linalg.equal(S.left[i] * S.left[j], left_matrix(S, product)):
                return False
    return True


def is_unital(S: StructureConstants) -> bool:
    n = S.dimension
    K = S.field.domain
    identity = linalg.identity(n, K)
    return linalg.equal(left_matrix(S, S.unit), identity) and linalg.equal(right_matrix(S, S.unit), identity)


def _check_characteristic(S: StructureConstants) -> None:
    p = S.field.characteristic
    if p != 0 and p <= 2 * S.dimension:
        raise UnsupportedCharacteristicError(
            f"Trace-form radical needs characteristic 0 or p > {2 * S.dimension}, got p = {p}"
        )


def _trace_form_kernel(S: StructureConstants) -> DomainMatrix:
    K = S.field.domain
    n = S.dimension
    if n == 0:
        return linalg.zeros(0, 0, K)
    traces = [K.zero] * n
    for k in range(n):
        m = S.left[k].to_list()
        traces[k] = sum((m[i][i] for i in range(n)), K.zero)
    t_row = DomainMatrix([traces], (1, n), K)
    form_rows = [(t_row * S.left[i]).to_list()[0] for i in range(n)]
    return linalg.kernel_matrix(DomainMatrix(form_rows, (n, n), K))


def radical(S: StructureConstants) -> DomainMatrix:
    """
    Basis (columns) of the Jacobson radical as the radical of the trace form tr(L_{xy}).
    The quotient by it must have zero radical again.
    """
    cached = S._cache.get("radical")
    if cached is not None:
        return cached
    _check_characteristic(S)
    n = S.dimension
    rad = _trace_form_kernel(S)
    if rad.shape[1] > 0:
        top, _ = quotient_structure(S, rad)
        leftover = _trace_form_kernel(top).shape[1]
        if leftover:
            raise ComputationError(
                f"Quotient by the trace-form radical is not semisimple: its radical has dimension {leftover}"
            )
    S._cache["radical"] = rad
    logger.debug(f"Radical of a {n}-dimensional algebra has dimension {rad.shape[1]}")
    return rad


def products_span(S: StructureConstants, left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    """Independent columns spanning span{x y : x in left, y in right}."""
    K = S.field.domain
    vectors = []
    for a in range(left.shape[1]):
        la = left_matrix(S, linalg.select_columns(left, [a]))
        vectors.append(la * right)
    if not vectors:
        return linalg.zeros(S.dimension, 0, K)
    return linalg.column_space(linalg.hstack(vectors, S.dimension, K))


def radical_powers(S: StructureConstants) -> List[DomainMatrix]:
    """[rad, rad^2, ...] ending with the zero space."""
    cached = S._cache.get("radical_powers")
    if cached is not None:
        return cached
    rad = radical(S)
    powers = [rad]
    cap = S.dimension + 1
    while powers[-1].shape[1] > 0 and len(powers) <= cap:
        powers.append(products_span(S, rad, powers[-1]))
    if powers[-1].shape[1] > 0:
        raise ComputationError("Radical is not nilpotent; the structure constants are inconsistent")
    S._cache["radical_powers"] = powers
    return powers


def loewy_length(S: StructureConstants) -> int:
    """Smallest L with rad^L = 0."""
    if S.dimension == 0:
        return 0
    return len(radical_powers(S))


def quotient_structure(S: StructureConstants, ideal: DomainMatrix) -> Tuple[StructureConstants, linalg.QuotientSpace]:
    """Structure constants of S / ideal in the complement coordinates of the quotient."""
    K = S.field.domain
    q = linalg.QuotientSpace(ideal, S.dimension, K)
    left = []
    for c in range(q.dimension):
        lifted = linalg.select_columns(q.lift, [c])
        left.append((q.projection * left_matrix(S, lifted) * q.lift).to_dense())
    unit = (q.projection * S.unit).to_dense()
    return StructureConstants(field=S.field, dimension=q.dimension, left=tuple(left), unit=unit), q


def minimal_polynomial(S: StructureConstants, z: DomainMatrix, unit: DomainMatrix) -> List:
    """Monic minimal polynomial of z inside the unital algebra with identity `unit`; coefficients high to low."""
    K = S.field.domain
    powers = [unit]
    while True:
        current = multiply(S, z, powers[-1])
        span = linalg.hstack(powers, S.dimension, K)
        x = linalg.solve(span, current)
        if x is not None:
            lower = linalg.column_entries(x)
            return [K.one] + [-c for c in reversed(lower)]
        powers.append(current)
        if len(powers) > S.dimension + 1:
            raise ComputationError("Minimal polynomial search did not terminate")


def evaluate_polynomial(S: StructureConstants, coefficients: Sequence, z: DomainMatrix, unit: DomainMatrix) -> DomainMatrix:
    """Horner evaluation; coefficients high to low."""
    K = S.field.domain
    result = linalg.zeros(S.dimension, 1, K)
    for c in coefficients:
        result = (multiply(S, z, result) + unit * c).to_dense()
    return result


def _poly(coefficients: Sequence, K) -> Poly:
    return Poly([K.to_sympy(c) for c in coefficients], _T, domain=K)


def _coefficients(p: Poly, K) -> List:
    return [K.from_sympy(c) for c in p.all_coeffs()]


def _is_idempotent(S: StructureConstants, e: DomainMatrix) -> bool:
    return linalg.equal(multiply(S, e, e), e)


def _corner_span(S: StructureConstants, e: DomainMatrix) -> DomainMatrix:
    K = S.field.domain
    le = left_matrix(S, e)
    re = right_matrix(S, e)
    return linalg.column_space(le * re)


def _candidates(S: StructureConstants, e: DomainMatrix, corner: DomainMatrix):
    settings = get_settings()
    K = S.field.domain
    for c in range(corner.shape[1]):
        yield linalg.select_columns(corner, [c])
    rng = np.random.default_rng(settings.RANDOM_SEED)
    bound = 7 if S.field.characteristic == 0 else S.field.characteristic - 1
    for _ in range(4 * corner.shape[1] + 8):
        coefficients = [int(x) for x in rng.integers(-bound, bound + 1, size=corner.shape[1])]
        yield linalg.linear_combination(
            (linalg.select_columns(corner, [c]) for c in range(corner.shape[1])), coefficients, S.dimension, K
        )


def _split(S: StructureConstants, e: DomainMatrix) -> List[Tuple[DomainMatrix, int]]:
    """
    Primitive orthogonal idempotents summing to e in a semisimple algebra, each paired with
    dim_k of its corner: 1 when it splits over the base field, the degree of a division algebra otherwise.
    """
    K = S.field.domain
    corner = _corner_span(S, e)
    if corner.shape[1] <= 1:
        return [(e, 1)]
    saw_irreducible = False
    widest = 0
    for z in _candidates(S, e, corner):
        mu = minimal_polynomial(S, z, e)
        if len(mu) <= 2:
            continue
        p = _poly(mu, K)
        _, factors = p.factor_list()
        if len(factors) == 1:
            if factors[0][0].degree() > 1:
                saw_irreducible = True
                widest = max(widest, p.degree())
            continue
        base, multiplicity = factors[0]
        f1 = base ** multiplicity
        g = p.quo(f1)
        s, t, h = f1.gcdex(g)
        eps = evaluate_polynomial(S, _coefficients(t * g, K), z, e)
        if not _is_idempotent(S, eps) or eps.is_zero_matrix or linalg.equal(eps, e):
            continue
        return _split(S, eps) + _split(S, (e - eps).to_dense())
    if saw_irreducible:
        # every sampled element is invertible in the corner: it is a division algebra
        degree = corner.shape[1]
        kind = "field extension" if widest == degree else "division algebra"
        logger.debug(f"Primitive idempotent with a {kind} of degree {degree} over {S.field.label} as corner")
        return [(e, degree)]
    raise ComputationError(f"Could not split an idempotent with corner dimension {corner.shape[1]}")


def _newton(S: StructureConstants, x: DomainMatrix) -> DomainMatrix:
    e = x
    for _ in range(S.dimension + 2):
        if _is_idempotent(S, e):
            return e
        e2 = multiply(S, e, e)
        e3 = multiply(S, e2, e)
        e = (e2 * S.field.domain(3) - e3 * S.field.domain(2)).to_dense()
    if not _is_idempotent(S, e):
        raise ComputationError("Idempotent lifting did not converge")
    return e


def primitive_idempotents_with_degrees(S: StructureConstants) -> List[Tuple[DomainMatrix, int]]:
    """
    A complete set of primitive orthogonal idempotents e with dim_k (eSe / e rad e): split the
    semisimple quotient S / rad S, then lift one idempotent at a time inside the complement
    of those already lifted.
    """
    if S.dimension == 0:
        return []
    rad = radical(S)
    top, q = quotient_structure(S, rad)
    split = _split(top, top.unit)
    bars = [bar for bar, _ in split]
    K = S.field.domain
    lifted: List[DomainMatrix] = []
    u = S.unit
    for bar in bars[:-1]:
        x = (q.lift * bar).to_dense()
        x = multiply(S, multiply(S, u, x), u)
        e = _newton(S, x)
        lifted.append(e)
        u = (u - e).to_dense()
    lifted.append(u)
    logger.debug(f"Found {len(lifted)} primitive idempotents in dimension {S.dimension}")
    return [(e, degree) for e, (_, degree) in zip(lifted, split)]


def primitive_idempotents(S: StructureConstants) -> List[DomainMatrix]:
    return [e for e, _ in primitive_idempotents_with_degrees(S)]


def corner_dimension(S: StructureConstants, e: DomainMatrix, f: DomainMatrix) -> int:
    """dim f S e."""
    return linalg.rank(left_matrix(S, f) * right_matrix(S, e))


def gabriel_quiver(
    S: StructureConstants,
    idempotents: Sequence[DomainMatrix],
    vertex_names: Sequence[str],
) -> GabrielQuiver:
    """
    Arrows i -> j number dim f_j (rad / rad^2) f_i; representatives are chosen among the spanning
    vectors f_j b f_i in basis order.
    """
    K = S.field.domain
    n = S.dimension
    powers = radical_powers(S)
    rad = powers[0]
    rad2 = powers[1] if len(powers) > 1 else linalg.zeros(n, 0, K)
    lefts = [left_matrix(S, f) for f in idempotents]
    rights = [right_matrix(S, f) for f in idempotents]
    for v, left, right in zip(vertex_names, lefts, rights):
        local = linalg.rank(left * right) - linalg.rank(left * right * rad)
        if local != 1:
            raise FieldTooSmallError(
                f"f S f / f rad f at vertex {v} has dimension {local} over {S.field.label}; "
                f"the Gabriel quiver needs a basic algebra split over the base field (try a larger field)"
            )
    arrows: List[Arrow] = []
    elements: Dict[str, DomainMatrix] = {}
    for i, src in enumerate(vertex_names):
        for j, tgt in enumerate(vertex_names):
            sandwich = lefts[j] * rights[i]
            component = linalg.column_space(sandwich * rad)
            deep = linalg.column_space(sandwich * rad2)
            have = deep.shape[1]
            if component.shape[1] == have:
                continue
            chosen = deep
            count = 0
            for c in range(component.shape[1]):
                v = linalg.select_columns(component, [c])
                trial = linalg.hstack([chosen, v], n, K)
                if linalg.rank(trial) > have:
                    chosen = trial
                    have += 1
                    name = f"g{len(arrows) + 1}_{src}_{tgt}"
                    arrows.append(Arrow(name=name, source=src, target=tgt))
                    elements[name] = v
                    count += 1
            logger.debug(f"Gabriel quiver: {count} arrow(s) {src} -> {tgt}")
    quiver = Quiver(vertices=tuple(vertex_names), arrows=tuple(arrows))
    return GabrielQuiver(
        quiver=quiver,
        idempotents={name: f for name, f in zip(vertex_names, idempotents)},
        arrow_elements=elements,
    )


def regular_structure(field: FieldSpec, left: Sequence[DomainMatrix], unit: DomainMatrix) -> StructureConstants:
    return StructureConstants(field=field, dimension=len(left), left=tuple(left), unit=unit)


def element_text(S: StructureConstants, x: DomainMatrix, labels: Optional[Sequence[str]] = None) -> str:
    K = S.field.domain
    parts = []
    for i, c in enumerate(linalg.column_entries(x)):
        if K.is_zero(c):
            continue
        label = labels[i] if labels else f"b{i}"
        parts.append(f"{linalg.to_fraction(K, c)}*{label}")
    return " + ".join(parts) if parts else "0"
