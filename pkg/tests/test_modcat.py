import pytest

from core.exceptions import AlgebraMismatchError, InputError
from domain.models.algebra import FieldSpec
from domain.models.verdicts import Verdict
from infrastructure.algebra import homol, modcat


@pytest.fixture(scope="module")
def indecomposables566(nakayama566):
    return modcat.enumerate_indecomposables(nakayama566.algebra)


def test_enumerates_seventeen_indecomposables(indecomposables566):
    assert len(indecomposables566) == 17
    assert all(modcat.is_indecomposable(X) for X in indecomposables566[:5])


def test_hom_from_projective_is_evaluation_at_vertex(nakayama566, indecomposables566):
    A = nakayama566.algebra
    for v in A.vertices:
        P = modcat.projective(A, v)
        for X in indecomposables566:
            assert modcat.hom_space(P, X).dimension == X.dims[v]


def test_regular_module_decomposes_into_projectives(nakayama566):
    A = nakayama566.algebra
    decomposition = modcat.decompose(modcat.regular_module(A))
    assert decomposition.multiplicities == (1, 1, 1)
    assert sorted(X.dimension for X in decomposition.summands) == [5, 6, 6]


def test_direct_sum_decomposes_back(nakayama44):
    A = nakayama44.algebra
    S1 = modcat.simple(A, "1")
    total, inclusions, projections = modcat.direct_sum([S1, S1, modcat.projective(A, "2")])
    assert total.dimension == 6
    assert len(inclusions) == len(projections) == 3
    decomposition = modcat.decompose(total)
    assert sorted(decomposition.multiplicities) == [1, 2]


def test_isomorphism_verdicts(nakayama566, source):
    A = nakayama566.algebra
    assert modcat.is_isomorphic(modcat.simple(A, "2"), modcat.simple(A, "3")).verdict == Verdict.NO
    S = source.resolve(nakayama566, "S_2^[3]")
    verdict = modcat.is_isomorphic(S, modcat.nakayama_indecomposable(A, "2", 3))
    assert verdict.verdict == Verdict.YES
    assert verdict.witness is not None and modcat.is_iso_map(verdict.witness)


def test_kernel_of_projective_cover(nakayama566):
    A = nakayama566.algebra
    cover = homol.projective_cover(modcat.simple(A, "2"))
    K, inclusion = modcat.kernel(cover.epimorphism)
    assert K.dimension == 5
    assert modcat.is_mono(inclusion)
    assert modcat.cokernel(cover.epimorphism)[0].dimension == 0


def test_radical_and_top(nakayama566):
    P1 = modcat.projective(nakayama566.algebra, "1")
    assert modcat.radical(P1)[0].dimension == 4
    assert modcat.top(P1)[0].dimension == 1
    assert modcat.module_loewy_length(P1) == 5
    assert [X.dimension for X in modcat.radical_series(P1)][:2] == [5, 4]


def test_double_dual_is_isomorphic(nakayama566, source):
    S = source.resolve(nakayama566, "N_2_3")
    assert modcat.is_isomorphic(modcat.dual(modcat.dual(S)), S).verdict == Verdict.YES


def test_injective_is_dual_of_projective(nakayama44):
    A = nakayama44.algebra
    assert modcat.injective(A, "1").dimension == 4


def test_modules_over_different_algebras(nakayama566, nakayama44):
    with pytest.raises(AlgebraMismatchError):
        modcat.hom_space(modcat.simple(nakayama566.algebra, "1"), modcat.simple(nakayama44.algebra, "1"))


def test_make_module_validation(kq):
    A = kq.algebra
    with pytest.raises(InputError):
        modcat.make_module(A, {"1": 1, "2": 1}, {"alpha": [1, 2]})
    with pytest.raises(InputError):
        modcat.make_module(A, {"1": 1, "2": 1}, {"beta": [1]})


def test_nakayama_indecomposable_length_range(nakayama566):
    with pytest.raises(InputError):
        modcat.nakayama_indecomposable(nakayama566.algebra, "1", 6)
    assert modcat.nakayama_indecomposable(nakayama566.algebra, "1", 5).dimension == 5


def test_field_extension_endomorphisms_stay_indecomposable(source, fixtures_dir):
    X = source.load(fixtures_dir / "kronecker_rotation.txt").modules["X"]
    assert modcat.hom_space(X, X).dimension == 2
    decomposition = modcat.decompose(X)
    assert decomposition.is_indecomposable
    assert decomposition.local_degrees == (2,)
    assert not decomposition.split_over_base_field
    assert modcat.is_indecomposable(X)


def test_rotation_module_splits_over_f5(source, fixtures_dir):
    X = source.load(fixtures_dir / "kronecker_rotation.txt", field=FieldSpec.prime(5)).modules["X"]
    decomposition = modcat.decompose(X)
    assert decomposition.multiplicities == (1, 1)
    assert decomposition.local_degrees == (1, 1)
    assert [S.dim_vector for S in decomposition.summands] == [(1, 1), (1, 1)]


SQUARE = """
field Q
name Square
quiver
vertex 1
vertex 2
vertex 3
vertex 4
arrow a 1 2
arrow b 2 4
arrow c 1 3
arrow d 3 4
relations
b*a {sign} d*c
nilpotency 3
"""


def test_same_named_algebras_with_different_relations_differ(source):
    commutative = source.parse(SQUARE.format(sign="-")).algebra
    anticommutative = source.parse(SQUARE.format(sign="+")).algebra
    assert commutative.dimension == anticommutative.dimension == 9
    assert not commutative.same_as(anticommutative)
    assert commutative.same_as(source.parse(SQUARE.format(sign="-")).algebra)
    with pytest.raises(AlgebraMismatchError):
        modcat.hom_space(modcat.simple(commutative, "1"), modcat.simple(anticommutative, "1"))
