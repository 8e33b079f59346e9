import pytest

from domain.models.singularity import SgObject, StabilizationStatus
from domain.models.verdicts import Verdict
from infrastructure.algebra import homol, modcat, sgcat


@pytest.fixture(scope="module")
def stable44(nakayama44):
    return [X for X in modcat.enumerate_indecomposables(nakayama44.algebra) if not homol.is_projective(X)]


@pytest.fixture(scope="module")
def classification566(nakayama566):
    candidates = [X for X in modcat.enumerate_indecomposables(nakayama566.algebra) if not homol.is_projective(X)]
    return sgcat.classify(candidates)


def test_nakayama_566_has_six_classes(classification566):
    assert len(classification566.classes) == 6
    assert classification566.inconclusive == []


def test_self_injective_classes_match_stable_category(stable44):
    assert len(stable44) == 6
    assert len(sgcat.classify(stable44).classes) == 6


def test_projectives_vanish(nakayama566):
    assert sgcat.sg_is_zero(modcat.projective(nakayama566.algebra, "1")) == Verdict.YES
    result = sgcat.stabilized_hom(
        SgObject(module=modcat.projective(nakayama566.algebra, "1")), SgObject(module=modcat.simple(nakayama566.algebra, "1"))
    )
    assert result.status == StabilizationStatus.ZERO_OBJECT
    assert result.dimension == 0


def test_stabilization_agrees_with_stable_hom_on_gorenstein_projectives(stable44):
    for X in stable44[:3]:
        for Y in stable44[:3]:
            result = sgcat.stabilized_hom(SgObject(module=X), SgObject(module=Y))
            assert result.status == StabilizationStatus.STABILIZED
            assert result.dimension == sgcat.stable_hom(X, Y).dimension


def test_syzygy_matches_negative_shift(nakayama566):
    A = nakayama566.algebra
    X, Y = modcat.simple(A, "1"), modcat.nakayama_indecomposable(A, "3", 2)
    via_syzygy = sgcat.stabilized_hom(SgObject(module=homol.syzygy(X)), SgObject(module=Y))
    via_shift = sgcat.stabilized_hom(SgObject(module=X), SgObject(module=Y, shift=1))
    assert via_syzygy.dimension == via_shift.dimension


def test_translation_fixes_periodic_object(source, nakayama566):
    S = source.resolve(nakayama566, "S_2^[3]")
    assert sgcat.sg_is_zero(S) == Verdict.NO
    assert sgcat.sg_is_isomorphic(SgObject(module=S), SgObject(module=S, shift=1)).verdict == Verdict.YES
    realized = sgcat.translate(SgObject(module=S), realize=True)
    assert realized.shift == 0


def test_perpendicular_category(source, nakayama566, classification566):
    perpendicular = sgcat.perp(source.generator(nakayama566), classification566)
    assert len(perpendicular.classes) == 2
    assert sgcat.semisimple_pattern_check(perpendicular.classes, 2, [1, 0]).verdict == Verdict.YES
    assert sgcat.semisimple_pattern_check(perpendicular.classes, 2, [0, 1]).verdict == Verdict.NO


def test_stable_hom_kills_maps_through_projectives(nakayama44):
    A = nakayama44.algebra
    P = modcat.projective(A, "1")
    assert sgcat.stable_hom(P, P).dimension == 0
    S = modcat.simple(A, "1")
    assert sgcat.stable_hom(S, S).dimension == 1


def test_translation_preserves_stabilized_hom(stable44):
    for X in stable44[:2]:
        for Y in stable44[:2]:
            plain = sgcat.stabilized_hom(SgObject(module=X), SgObject(module=Y))
            shifted = sgcat.stabilized_hom(SgObject(module=X, shift=1), SgObject(module=Y, shift=1))
            assert shifted.dimension == plain.dimension


def test_cosyzygy_inverts_syzygy_on_self_injective_algebra(stable44):
    for X in stable44:
        Sigma = sgcat.cosyzygy(X)
        assert modcat.is_isomorphic(homol.syzygy(Sigma), X).verdict == Verdict.YES
        assert modcat.is_isomorphic(sgcat.cosyzygy(homol.syzygy(X)), X).verdict == Verdict.YES


def test_thick_orbit_of_periodic_summand(source, nakayama566, classification566):
    orbit = sgcat.thick_orbit(source.generator(nakayama566), classification566)
    assert orbit.complete
    assert orbit.periods == [1]
    assert len(orbit.classes) == 1
    assert [(obj.module.dimension, obj.shift) for obj in orbit.objects] == [(3, 0)]


def test_stable_category_of_nakayama_44_is_not_semisimple(stable44):
    classes = sgcat.classify(stable44).classes
    check = sgcat.semisimple_pattern_check(classes, 6, list(range(6)))
    assert check.verdict == Verdict.NO
    assert check.failures
