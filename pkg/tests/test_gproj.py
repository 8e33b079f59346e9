import pytest

from domain.models.algebra import FieldSpec
from domain.models.verdicts import GpStatus, Verdict
from infrastructure.algebra import gproj, homol, modcat, qalg


def test_gorenstein_projectives_of_nakayama_566(nakayama566):
    classification = gproj.enumerate_gp_nakayama(nakayama566.algebra)
    assert [X.display_name() for X in classification.gorenstein_projective] == ["S_2^[3]"]
    assert len(classification.projective) == 3
    assert len(classification.not_gorenstein_projective) == 13
    assert classification.inconclusive == []


def test_self_injective_everything_is_gorenstein_projective(nakayama44):
    classification = gproj.enumerate_gp_nakayama(nakayama44.algebra)
    assert len(classification.gorenstein_projective) == 6
    assert classification.not_gorenstein_projective == []


def test_simple_is_not_gorenstein_projective(nakayama566):
    verdict = gproj.is_gorenstein_projective(modcat.simple(nakayama566.algebra, "1"))
    assert verdict.status == GpStatus.NOT_GORENSTEIN_PROJECTIVE


def test_projectives_are_reflexive(nakayama566):
    for v in nakayama566.algebra.vertices:
        reflexive, evaluation = gproj.is_reflexive(modcat.projective(nakayama566.algebra, v))
        assert reflexive == Verdict.YES
        assert modcat.is_iso_map(evaluation)


def test_extension_module_of_a2_simples(kq):
    A = kq.algebra
    S1, S2 = modcat.simple(A, "1"), modcat.simple(A, "2")
    (cocycle,) = homol.ext1_cocycles(S1, S2)
    middle = gproj.extension_module(S1, S2, cocycle)
    assert modcat.is_isomorphic(middle, modcat.projective(A, "1")).verdict == Verdict.YES


def test_add_of_projectives_and_a_simple_is_not_thick(source, nakayama44):
    context = modcat.enumerate_indecomposables(nakayama44.algebra)
    verdict = gproj.is_thick_addM(source.generator(nakayama44), context)
    assert verdict.verdict == Verdict.NO
    assert verdict.violations


def test_generator_of_nakayama_566_is_cm_finite(source, nakayama566):
    report = gproj.cm_finite_report(nakayama566.algebra, source.generator(nakayama566))
    assert report.cm_finite == Verdict.YES
    assert report.missing == [] and report.extra == []
    assert report.gorenstein.verdict == Verdict.NO


def test_linear_nakayama_21_has_no_nonprojective_gorenstein_projectives():
    A = qalg.nakayama([2, 1], FieldSpec.rationals(), cyclic=False)
    classification = gproj.enumerate_gp_nakayama(A)
    assert classification.gorenstein_projective == []
    assert len(classification.projective) == 2
    assert [X.dimension for X in classification.not_gorenstein_projective] == [1]


@pytest.mark.parametrize("fixture", ["nakayama566", "nakayama44"])
def test_gorenstein_projectives_are_closed_under_syzygy(request, fixture):
    A = request.getfixturevalue(fixture).algebra
    for X in gproj.enumerate_gp_nakayama(A).gorenstein_projective:
        verdict = gproj.is_gorenstein_projective(homol.syzygy(X))
        assert verdict.projective or verdict.status == GpStatus.GORENSTEIN_PROJECTIVE
