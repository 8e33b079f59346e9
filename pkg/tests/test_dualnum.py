import pytest

from core.exceptions import InputError
from domain.models.verdicts import Verdict
from infrastructure.algebra import dualnum, modcat


@pytest.fixture(scope="module")
def corpus(kq):
    return dualnum.indecomposable_corpus(kq.algebra)


def test_corpus_labels(corpus):
    assert [X.display_name() for X in corpus] == ["S_1", "P_1", "P_2"]


def test_eta_of_simple(eta_s1):
    assert eta_s1.dim_vector == (1, 2)


def test_eta_images_are_gorenstein_projective(dual_pair, corpus):
    for X in corpus:
        report = dualnum.eta_gp_report(dual_pair, X)
        assert report.verdict == Verdict.YES


def test_epsilon_squares_to_zero(dual_pair, eta_s1):
    e = dualnum.epsilon(dual_pair, eta_s1)
    assert not e.is_zero
    assert modcat.compose(e, e).is_zero
    assert dualnum.restriction(dual_pair, eta_s1).algebra is dual_pair.base


def test_cohomology_recovers_module(dual_pair, corpus):
    for X in corpus:
        H = dualnum.cohomology_H(dual_pair, dualnum.eta(dual_pair, X))
        assert modcat.is_isomorphic(H, X).verdict == Verdict.YES


def test_stable_hom_formula(dual_pair, corpus):
    checks = [dualnum.verify_equ1(dual_pair, X, Y) for X in corpus for Y in corpus]
    assert len(checks) == 9
    assert all(c.holds for c in checks)


@pytest.mark.parametrize("n", [2, 3])
def test_euler_form_matches_dimension_vectors(n):
    algebra, modules = dualnum.indecomposables_type_a(n)
    for X in modules:
        for Y in modules:
            assert dualnum.euler_form(X, Y) == dualnum.euler_bilinear(algebra, X.dim_vector, Y.dim_vector)


def test_perpendicular_category_of_simple(source, kq, corpus):
    report = dualnum.schofield_perp(source.resolve(kq, "S_1"), corpus)
    assert report.exceptional == Verdict.YES
    assert [X.display_name() for X in report.members] == ["P_1"]
    assert len(report.simple_objects) == report.expected_simple_count == 1
    assert report.verdict == Verdict.YES


def test_perpendicular_category_of_projective(source, kq, corpus):
    report = dualnum.schofield_perp(source.resolve(kq, "P_1"), corpus)
    assert [X.dim_vector for X in report.members] == [(0, 1)]
    assert report.verdict == Verdict.YES


def test_eta_needs_base_module(dual_pair):
    with pytest.raises(InputError):
        dualnum.eta(dual_pair, modcat.simple(dual_pair.algebra, "1"))


def test_no_corpus_for_algebras_with_relations(nakayama566):
    with pytest.raises(InputError):
        dualnum.indecomposable_corpus(nakayama566.algebra)
    with pytest.raises(InputError):
        dualnum.indecomposables_type_a(0)


def test_euler_bilinear_of_a2(kq):
    assert dualnum.euler_bilinear(kq.algebra, (1, 0), (0, 1)) == -1
