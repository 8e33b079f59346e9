"""
Exact linear algebra over Q and F_p on top of sympy's DomainMatrix.

Every matrix handed out by this module is in dense format so that results can be
mixed freely; vectors are column matrices.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from core.exceptions import DimensionMismatchError, InputError


def scalar(K, value):
    """Converts int, Fraction, str ('3/2') or a domain element into an element of K."""
    if isinstance(value, str):
        value = Fraction(value.strip())
    if isinstance(value, Fraction):
        denominator = K(value.denominator)
        if K.is_zero(denominator):
            raise InputError(f"{value} is undefined over {K}")
        return K.quo(K(value.numerator), denominator)
    if isinstance(value, int):
        return K(value)
    if K.of_type(value):
        return value
    return K.convert(value)


def to_fraction(K, x) -> Fraction:
    if K.is_FiniteField:
        p = K.characteristic()
        return Fraction(int(K.to_int(x)) % p)
    return Fraction(int(K.numer(x)), int(K.denom(x)))


def to_int_list(m: DomainMatrix) -> List[List[str]]:
    """Printable entries (strings of rationals or residues)."""
    K = m.domain
    return [[str(to_fraction(K, x)) for x in row] for row in m.to_list()]


def matrix(rows: Sequence[Sequence], K, shape: Optional[Tuple[int, int]] = None) -> DomainMatrix:
    converted = [[scalar(K, v) for v in row] for row in rows]
    if shape is None:
        shape = (len(converted), len(converted[0]) if converted else 0)
    if len(converted) != shape[0] or any(len(r) != shape[1] for r in converted):
        raise DimensionMismatchError(f"Entries do not fill a {shape[0]}x{shape[1]} matrix")
    return DomainMatrix(converted, shape, K)


def zeros(rows: int, cols: int, K) -> DomainMatrix:
    return DomainMatrix([[K.zero] * cols for _ in range(rows)], (rows, cols), K)


def identity(n: int, K) -> DomainMatrix:
    return DomainMatrix([[K.one if i == j else K.zero for j in range(n)] for i in range(n)], (n, n), K)


def column(values: Sequence, K) -> DomainMatrix:
    return DomainMatrix([[scalar(K, v)] for v in values], (len(values), 1), K)


def unit_vector(n: int, i: int, K) -> DomainMatrix:
    return DomainMatrix([[K.one if r == i else K.zero] for r in range(n)], (n, 1), K)


def entry(m: DomainMatrix, i: int, j: int):
    return m[i, j].element


def dense(m: DomainMatrix) -> DomainMatrix:
    return m.to_dense()


def scale(m: DomainMatrix, c) -> DomainMatrix:
    K = m.domain
    return (m * scalar(K, c)).to_dense()


def is_zero(m: DomainMatrix) -> bool:
    return m.is_zero_matrix


def equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    return a.shape == b.shape and (a - b).is_zero_matrix


def flatten(m: DomainMatrix) -> List:
    """Row-major list of entries."""
    return [x for row in m.to_list() for x in row]


def reshape(values: Sequence, shape: Tuple[int, int], K) -> DomainMatrix:
    rows, cols = shape
    if len(values) != rows * cols:
        raise DimensionMismatchError(f"{len(values)} entries cannot fill shape {shape}")
    return DomainMatrix([list(values[r * cols:(r + 1) * cols]) for r in range(rows)], shape, K)


def column_entries(v: DomainMatrix) -> List:
    return [row[0] for row in v.to_list()]


def hstack(mats: Sequence[DomainMatrix], rows: int, K) -> DomainMatrix:
    mats = [m for m in mats if m.shape[1] > 0]
    if not mats:
        return zeros(rows, 0, K)
    for m in mats:
        if m.shape[0] != rows:
            raise DimensionMismatchError(f"Cannot stack a matrix with {m.shape[0]} rows next to {rows}")
    out = [[] for _ in range(rows)]
    for m in mats:
        for r, row in enumerate(m.to_list()):
            out[r].extend(row)
    return DomainMatrix(out, (rows, sum(m.shape[1] for m in mats)), K)


def vstack(mats: Sequence[DomainMatrix], cols: int, K) -> DomainMatrix:
    mats = [m for m in mats if m.shape[0] > 0]
    if not mats:
        return zeros(0, cols, K)
    out = []
    for m in mats:
        if m.shape[1] != cols:
            raise DimensionMismatchError(f"Cannot stack a matrix with {m.shape[1]} columns under {cols}")
        out.extend(m.to_list())
    return DomainMatrix(out, (len(out), cols), K)


def block_diagonal(blocks: Sequence[DomainMatrix], K) -> DomainMatrix:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = [[K.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b.to_list()):
            out[r0 + i][c0:c0 + b.shape[1]] = row
        r0 += b.shape[0]
        c0 += b.shape[1]
    return DomainMatrix(out, (rows, cols), K)


def select_columns(m: DomainMatrix, cols: Sequence[int]) -> DomainMatrix:
    rows = m.to_list()
    return DomainMatrix([[row[j] for j in cols] for row in rows], (m.shape[0], len(cols)), m.domain)


def select_rows(m: DomainMatrix, rows_idx: Sequence[int]) -> DomainMatrix:
    rows = m.to_list()
    return DomainMatrix([list(rows[i]) for i in rows_idx], (len(rows_idx), m.shape[1]), m.domain)


def rref(m: DomainMatrix) -> Tuple[DomainMatrix, Tuple[int, ...]]:
    r, c = m.shape
    if r == 0 or c == 0:
        return m.to_dense(), ()
    red, pivots = m.rref()
    return red.to_dense(), tuple(pivots)


def rank(m: DomainMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: DomainMatrix) -> List[DomainMatrix]:
    """Basis of {x : m x = 0} as column vectors."""
    r, c = m.shape
    K = m.domain
    if c == 0:
        return []
    if r == 0:
        return [unit_vector(c, j, K) for j in range(c)]
    red, pivots = rref(m)
    rows = red.to_list()
    pivot_set = set(pivots)
    basis = []
    for f in range(c):
        if f in pivot_set:
            continue
        v = [K.zero] * c
        v[f] = K.one
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(DomainMatrix([[x] for x in v], (c, 1), K))
    return basis


def kernel_matrix(m: DomainMatrix) -> DomainMatrix:
    return hstack(kernel_basis(m), m.shape[1], m.domain)


def pivot_columns(m: DomainMatrix) -> Tuple[int, ...]:
    return rref(m)[1]


def column_space(m: DomainMatrix) -> DomainMatrix:
    """Independent columns of m spanning its image."""
    return select_columns(m, pivot_columns(m))


def solve(m: DomainMatrix, b: DomainMatrix) -> Optional[DomainMatrix]:
    """One solution x of m x = b, or None when inconsistent."""
    r, c = m.shape
    if b.shape != (r, 1):
        raise DimensionMismatchError(f"Right-hand side of shape {b.shape} for a {r}x{c} system")
    return solve_matrix(m, b)


def solve_matrix(m: DomainMatrix, b: DomainMatrix) -> Optional[DomainMatrix]:
    """One solution X of m X = b, or None when inconsistent."""
    r, c = m.shape
    K = m.domain
    if b.shape[0] != r:
        raise DimensionMismatchError(f"Right-hand side with {b.shape[0]} rows for a {r}x{c} system")
    k = b.shape[1]
    if k == 0:
        return zeros(c, 0, K)
    if r == 0:
        return zeros(c, k, K)
    if c == 0:
        return zeros(0, k, K) if b.is_zero_matrix else None
    red, pivots = rref(m.to_dense().hstack(b.to_dense()))
    if any(p >= c for p in pivots):
        return None
    rows = red.to_list()
    out = [[K.zero] * k for _ in range(c)]
    for i, p in enumerate(pivots):
        out[p] = list(rows[i][c:])
    return DomainMatrix(out, (c, k), K)


def is_invertible(m: DomainMatrix) -> bool:
    r, c = m.shape
    return r == c and rank(m) == r


def inverse(m: DomainMatrix) -> DomainMatrix:
    if m.shape[0] == 0:
        return m.to_dense()
    return m.to_dense().inv().to_dense()


def complement_indices(sub: DomainMatrix) -> List[int]:
    """Standard basis indices j such that span(sub) + span(e_j) is the whole space, directly."""
    n = sub.shape[0]
    if sub.shape[1] == 0:
        return list(range(n))
    pivots = set(rref(sub.transpose())[1])
    return [j for j in range(n) if j not in pivots]


class QuotientSpace:
    """
    k^n / span(columns of sub), with coordinates relative to standard complement vectors.
    """

    def __init__(self, sub: DomainMatrix, n: int, K):
        self.K = K
        self.ambient = n
        if sub.shape[1] == 0 or n == 0:
            pivots: Tuple[int, ...] = ()
            rows: List[List] = []
        else:
            red, pivots = rref(sub.transpose())
            rows = red.to_list()[:len(pivots)]
        self.pivots = tuple(pivots)
        pivot_set = set(self.pivots)
        self.complement = [j for j in range(n) if j not in pivot_set]
        position = {j: k for k, j in enumerate(self.complement)}
        proj = [[K.zero] * n for _ in self.complement]
        for j in self.complement:
            proj[position[j]][j] = K.one
        for i, p in enumerate(self.pivots):
            for j in self.complement:
                a = rows[i][j]
                if not K.is_zero(a):
                    proj[position[j]][p] = proj[position[j]][p] - a
        self.projection = DomainMatrix(proj, (len(self.complement), n), K)
        self.lift = DomainMatrix(
            [[K.one if self.complement[c] == r else K.zero for c in range(len(self.complement))] for r in range(n)],
            (n, len(self.complement)),
            K,
        )

    @property
    def dimension(self) -> int:
        return len(self.complement)

    @property
    def sub_dimension(self) -> int:
        return len(self.pivots)

    def reduce(self, v: DomainMatrix) -> DomainMatrix:
        return self.projection * v

    def contains(self, v: DomainMatrix) -> bool:
        return (self.projection * v).is_zero_matrix


class CoordinateSystem:
    """
    Coordinates relative to independent columns of a matrix; `coordinates(v)` assumes v lies in the span.
    """

    def __init__(self, basis: DomainMatrix):
        self.basis = basis.to_dense()
        self.K = basis.domain
        n, k = basis.shape
        self.rank = k
        if k == 0:
            self.rows: Tuple[int, ...] = ()
            self.inverse = zeros(0, 0, self.K)
            return
        rows = rref(basis.transpose())[1]
        if len(rows) != k:
            raise DimensionMismatchError("Coordinate basis columns are not independent")
        self.rows = tuple(rows)
        self.inverse = inverse(select_rows(self.basis, self.rows))

    def coordinates(self, v: DomainMatrix, check: bool = False) -> DomainMatrix:
        if self.rank == 0:
            c = zeros(0, v.shape[1], self.K)
        else:
            c = self.inverse * select_rows(v.to_dense(), self.rows)
        if check and not equal(self.basis * c, v.to_dense()):
            raise DimensionMismatchError("Vector does not lie in the span of the basis")
        return c


class SparseEchelon:
    """
    Incremental echelon basis of sparse vectors {index: element}; the pivot of a row is its
    smallest index and rows are stored with pivot coefficient 1.
    """

    def __init__(self, K):
        self.K = K
        self.rows: Dict[int, Dict[int, object]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Dict[int, object]) -> Dict[int, object]:
        K = self.K
        v = {i: a for i, a in vector.items() if not K.is_zero(a)}
        while True:
            candidates = [i for i in v if i in self.rows]
            if not candidates:
                return v
            p = min(candidates)
            c = v[p]
            for j, a in self.rows[p].items():
                value = v.get(j, K.zero) - c * a
                if K.is_zero(value):
                    v.pop(j, None)
                else:
                    v[j] = value

    def add(self, vector: Dict[int, object]) -> Optional[Dict[int, object]]:
        r = self.reduce(vector)
        if not r:
            return None
        p = min(r)
        inv = self.K.quo(self.K.one, r[p])
        row = {j: a * inv for j, a in r.items()}
        self.rows[p] = row
        return row

    def contains(self, vector: Dict[int, object]) -> bool:
        return not self.reduce(vector)


def sparse_from_column(v: DomainMatrix) -> Dict[int, object]:
    K = v.domain
    return {i: x for i, x in enumerate(column_entries(v)) if not K.is_zero(x)}


def column_from_sparse(vector: Dict[int, object], n: int, K) -> DomainMatrix:
    return DomainMatrix([[vector.get(i, K.zero)] for i in range(n)], (n, 1), K)


def linear_combination(vectors: Iterable[DomainMatrix], coefficients: Iterable, rows: int, K) -> DomainMatrix:
    total = zeros(rows, 1, K)
    for v, c in zip(vectors, coefficients):
        c = scalar(K, c)
        if not K.is_zero(c):
            total = total + v * c
    return total.to_dense()
