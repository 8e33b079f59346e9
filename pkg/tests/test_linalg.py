import numpy as np
import pytest
from sympy.polys.matrices import DomainMatrix

from core.exceptions import DimensionMismatchError, InputError
from domain.models.algebra import FieldSpec
from infrastructure.algebra import linalg

QQ = FieldSpec.rationals().domain
F5 = FieldSpec.prime(5).domain


def _random_matrix(rng, K):
    rows, cols = (int(n) for n in rng.integers(1, 7, size=2))
    values = rng.integers(-3, 4, size=(rows, cols))
    return linalg.matrix(values.tolist(), K)


@pytest.mark.parametrize("K", [QQ, F5])
def test_rank_nullity_on_random_matrices(settings, K):
    rng = np.random.default_rng(settings.RANDOM_SEED)
    for _ in range(100):
        m = _random_matrix(rng, K)
        kernel = linalg.kernel_basis(m)
        assert linalg.rank(m) + len(kernel) == m.shape[1]
        for v in kernel:
            assert linalg.is_zero(m * v)


def test_solve_consistent_and_inconsistent():
    m = linalg.matrix([[1, 2], [2, 4]], QQ)
    x = linalg.solve(m, linalg.column([3, 6], QQ))
    assert x is not None
    assert linalg.equal(m * x, linalg.column([3, 6], QQ))
    assert linalg.solve(m, linalg.column([1, 0], QQ)) is None


def test_solve_rejects_wrong_right_hand_side():
    m = linalg.identity(2, QQ)
    with pytest.raises(DimensionMismatchError):
        linalg.solve(m, linalg.column([1, 2, 3], QQ))


def test_hstack_rejects_row_mismatch():
    with pytest.raises(DimensionMismatchError):
        linalg.hstack([linalg.zeros(2, 1, QQ), linalg.zeros(3, 1, QQ)], 2, QQ)


def test_scalar_parses_fractions_in_prime_field():
    half = linalg.scalar(F5, "1/2")
    assert half * F5(2) == F5(1)
    with pytest.raises(InputError):
        linalg.scalar(F5, "1/5")


def test_inverse_of_invertible_matrix():
    m = linalg.matrix([[2, 1], [1, 1]], QQ)
    assert linalg.is_invertible(m)
    assert linalg.equal(m * linalg.inverse(m), linalg.identity(2, QQ))
    assert not linalg.is_invertible(linalg.matrix([[1, 1], [1, 1]], QQ))


def test_quotient_space_dimensions():
    sub = linalg.matrix([[1], [1], [0]], QQ)
    quotient = linalg.QuotientSpace(sub, 3, QQ)
    assert quotient.dimension == 2
    assert quotient.sub_dimension == 1
    assert quotient.contains(linalg.column([2, 2, 0], QQ))
    assert not quotient.contains(linalg.column([1, 0, 0], QQ))


def test_reshape_round_trips_flatten():
    m = linalg.matrix([[1, 2, 3], [4, 5, 6]], QQ)
    assert linalg.equal(linalg.reshape(linalg.flatten(m), (2, 3), QQ), m)
    assert isinstance(m, DomainMatrix)


@pytest.mark.parametrize("K", [QQ, F5])
def test_rref_is_idempotent(settings, K):
    rng = np.random.default_rng(settings.RANDOM_SEED + 1)
    for _ in range(50):
        reduced, pivots = linalg.rref(_random_matrix(rng, K))
        again, pivots_again = linalg.rref(reduced)
        assert linalg.equal(again, reduced)
        assert pivots_again == pivots
