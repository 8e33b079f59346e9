import pytest

from core.exceptions import InputError
from domain.models.verdicts import Verdict
from infrastructure.algebra import homol, modcat


def test_projectives_have_projective_dimension_zero(nakayama566):
    A = nakayama566.algebra
    for v in A.vertices:
        certificate = homol.proj_dimension(modcat.projective(A, v))
        assert certificate.is_finite
        assert certificate.value == 0


def test_zero_module_has_projective_dimension_zero(kq):
    certificate = homol.proj_dimension(modcat.zero_module(kq.algebra))
    assert certificate.is_finite and certificate.value == 0


def test_syzygy_of_uniserial_is_periodic(nakayama566, source):
    S = source.resolve(nakayama566, "S_2^[3]")
    assert modcat.is_isomorphic(homol.syzygy(S), S).verdict == Verdict.YES
    certificate = homol.proj_dimension(S)
    assert certificate.is_infinite
    assert certificate.period == 1


def test_nakayama_566_is_not_gorenstein(nakayama566):
    assert homol.is_gorenstein(nakayama566.algebra).verdict == Verdict.NO


def test_self_injective_nakayama_is_gorenstein(nakayama44):
    assert homol.is_gorenstein(nakayama44.algebra).verdict == Verdict.YES


def test_hereditary_global_dimension(kq):
    result = homol.global_dimension(kq.algebra)
    assert result.value == 1
    assert result.summary() == "1"


def test_dual_numbers_global_dimension_is_infinite(dual_point):
    result = homol.global_dimension(dual_point)
    assert result.infinite
    assert result.summary() == "inf"


def test_dual_numbers_are_gorenstein(dual_pair):
    assert homol.is_gorenstein(dual_pair.algebra).verdict == Verdict.YES


@pytest.mark.parametrize("source_vertex, target_vertex, expected", [("1", "2", 1), ("2", "1", 0), ("1", "1", 0)])
def test_ext1_over_a2(kq, source_vertex, target_vertex, expected):
    A = kq.algebra
    X, Y = modcat.simple(A, source_vertex), modcat.simple(A, target_vertex)
    assert homol.ext(1, X, Y).dimension == expected
    assert len(homol.ext1_cocycles(X, Y)) == expected


def test_ext0_is_hom(nakayama566, source):
    S = source.resolve(nakayama566, "S_2^[3]")
    P2 = modcat.projective(nakayama566.algebra, "2")
    assert homol.ext(0, P2, S).dimension == modcat.hom_space(P2, S).dimension


def test_minimal_resolution_of_simple(kq):
    resolution = homol.minimal_resolution(modcat.simple(kq.algebra, "1"), 3)
    assert [P.dimension for P in resolution.terms] == [2, 1]
    assert len(resolution.differentials) == 1


def test_negative_degrees_rejected(kq):
    S = modcat.simple(kq.algebra, "1")
    with pytest.raises(InputError):
        homol.ext(-1, S, S)
    with pytest.raises(InputError):
        homol.minimal_resolution(S, -1)


def test_injective_dimension_over_self_injective(nakayama44):
    S = modcat.simple(nakayama44.algebra, "1")
    assert homol.inj_dimension(S).is_infinite


def test_syzygy_of_identity_is_an_isomorphism(nakayama44):
    A = nakayama44.algebra
    for X in modcat.enumerate_indecomposables(A):
        if homol.is_projective(X):
            continue
        induced = homol.syzygy_map(modcat.identity(X))
        assert induced.source.dimension == induced.target.dimension == homol.syzygy(X).dimension
        assert modcat.is_iso_map(induced)


def test_syzygy_of_projective_cover_starts_at_zero(nakayama566):
    cover = homol.projective_cover(modcat.simple(nakayama566.algebra, "2"))
    induced = homol.syzygy_map(cover.epimorphism)
    assert induced.source.dimension == 0
    assert induced.target.dimension == 5
