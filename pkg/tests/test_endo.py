import numpy as np
import pytest

from core.exceptions import FieldTooSmallError
from domain.models.verdicts import PresentationStatus, Verdict
from infrastructure.algebra import endo, homol, modcat


def test_endomorphism_algebra_dimensions(gamma566, gamma_dual):
    assert gamma566.endo.dimension == 24
    assert gamma566.algebra.dimension == 24
    assert gamma_dual.endo.dimension == 14
    assert gamma_dual.algebra.dimension == 14


def test_gabriel_quiver_of_nakayama_566_endomorphisms(gamma566):
    quiver = endo.gabriel_quiver(gamma566.endo).quiver
    assert len(quiver.vertices) == 4
    assert len(quiver.arrows) == 5


def test_presentation_claims(source, fixtures_dir, gamma566):
    claim = source.load(fixtures_dir / "example_nakayama_566_gamma.txt").claim()
    assert endo.verify_presentation(gamma566.endo, claim).status == PresentationStatus.VERIFIED
    wrong = source.load(fixtures_dir / "example_nakayama_566_gamma_wrong.txt").claim()
    assert endo.verify_presentation(gamma566.endo, wrong).status != PresentationStatus.VERIFIED


def test_dual_numbers_presentation_claim(source, fixtures_dir, gamma_dual):
    claim = source.load(fixtures_dir / "example_dualnumbers_a2_gamma.txt").claim()
    verdict = endo.verify_presentation(gamma_dual.endo, claim)
    assert verdict.status == PresentationStatus.VERIFIED
    assert verdict.algebra_dimension == 14


@pytest.mark.parametrize("presentation, killed", [("gamma566", ["2p"]), ("gamma_dual", ["E"])])
def test_partial_resolution(request, presentation, killed):
    presentation = request.getfixturevalue(presentation)
    _, pd = endo.right_module_structure(presentation)
    assert pd.is_finite and pd.value == 0
    verdict = endo.is_partial_resolution(presentation)
    assert verdict.simples == killed
    assert verdict.verdict == Verdict.YES


def test_generator_check(source, nakayama566):
    assert endo.is_generator(source.generator(nakayama566)) == (Verdict.YES, [])
    verdict, missing = endo.is_generator([modcat.simple(nakayama566.algebra, "1")])
    assert verdict == Verdict.NO
    assert missing == ["P_1", "P_2", "P_3"]


def test_hom_functor_sends_summands_to_projectives(gamma566):
    summands = gamma566.endo.summands
    for X in summands:
        image = endo.hom_functor(gamma566, X)
        assert image.dimension == sum(modcat.hom_space(M, X).dimension for M in summands)
        assert homol.is_projective(image)


def test_hom_functor_is_fully_faithful_on_indecomposables(gamma566, nakayama566):
    corpus = modcat.enumerate_indecomposables(nakayama566.algebra)[::3]
    for X in corpus:
        for Y in corpus:
            functor_side = modcat.hom_space(endo.hom_functor(gamma566, X), endo.hom_functor(gamma566, Y))
            assert functor_side.dimension == modcat.hom_space(X, Y).dimension


def test_counit_is_isomorphism(gamma_dual, dual_pair):
    A = dual_pair.algebra
    for X in [modcat.simple(A, v) for v in A.vertices] + [modcat.projective(A, v) for v in A.vertices]:
        back = endo.tensor_functor(gamma_dual, endo.hom_functor(gamma_dual, X))
        assert modcat.is_isomorphic(back, X).verdict == Verdict.YES


def test_tensor_hom_adjunction_on_sampled_pairs(settings, gamma_dual, dual_pair):
    A = dual_pair.algebra
    gamma = gamma_dual.algebra
    left_side = [modcat.simple(gamma, v) for v in gamma.vertices] + [modcat.projective(gamma, v) for v in gamma.vertices]
    corpus = [modcat.simple(A, v) for v in A.vertices] + [modcat.projective(A, v) for v in A.vertices]
    rng = np.random.default_rng(settings.RANDOM_SEED)
    for i, j in rng.integers(0, [len(left_side), len(corpus)], size=(20, 2)):
        Y, X = left_side[int(i)], corpus[int(j)]
        left = modcat.hom_space(Y, endo.hom_functor(gamma_dual, X)).dimension
        right = modcat.hom_space(endo.tensor_functor(gamma_dual, Y), X).dimension
        assert left == right


def test_auslander_algebra_of_dual_numbers(dual_point):
    regular = modcat.projective(dual_point, "1")
    simple = modcat.simple(dual_point, "1")
    auslander = endo.present_endo_algebra(endo.endo_algebra([regular, simple], ["P", "S"]))
    assert auslander.algebra.dimension == 5
    assert endo.is_resolution(auslander).value == 2
    assert endo.m_resolution(auslander, simple).finite


def test_regular_module_gives_no_finite_resolution_of_simple(dual_point, settings):
    regular = modcat.projective(dual_point, "1")
    simple = modcat.simple(dual_point, "1")
    presentation = endo.present_endo_algebra(endo.endo_algebra([regular], ["P"]))
    resolution = endo.m_resolution(presentation, simple, cap=8)
    assert not resolution.finite
    assert len(resolution.kernels) == 8


@pytest.mark.parametrize("fixture", ["nakayama566", "nakayama44", "kq"])
def test_endomorphisms_of_regular_module_recover_the_algebra(request, fixture):
    A = request.getfixturevalue(fixture).algebra
    projectives = [modcat.projective(A, v) for v in A.vertices]
    gamma = endo.endo_algebra(projectives, list(A.vertices))
    assert gamma.dimension == A.dimension
    recovered = endo.gabriel_quiver(gamma).quiver
    assert recovered.vertices == A.vertices
    assert sorted((a.source, a.target) for a in recovered.arrows) == sorted(
        (a.source, a.target) for a in A.quiver.arrows
    )


def test_gabriel_quiver_needs_split_endomorphisms(source, fixtures_dir):
    X = source.load(fixtures_dir / "kronecker_rotation.txt").modules["X"]
    with pytest.raises(FieldTooSmallError):
        endo.gabriel_quiver(endo.endo_algebra([X], ["X"]))
