import pytest

from core.exceptions import InputError, InvalidAdmissibleSequenceError
from domain.models.algebra import Arrow, FieldSpec, Quiver
from infrastructure.algebra import linalg, modcat, qalg, structure

Q = FieldSpec.rationals()


def _a2_quiver() -> Quiver:
    return Quiver(vertices=("1", "2"), arrows=(Arrow(name="alpha", source="1", target="2"),))


def test_nakayama_566_dimension_and_projectives(nakayama566):
    A = nakayama566.algebra
    assert A.dimension == 17
    assert [modcat.projective(A, v).dimension for v in A.vertices] == [5, 6, 6]
    assert qalg.is_nakayama(A)


def test_nakayama_566_nilpotency_bound_is_stable(nakayama566):
    certificate = qalg.certify_nilpotency_independence(nakayama566.algebra)
    assert certificate.stable
    assert certificate.dimension_next == 17


def test_generated_nakayama_matches_presented_one(nakayama566):
    generated = qalg.nakayama([5, 6, 6], Q)
    assert generated.dimension == nakayama566.algebra.dimension
    assert qalg.cartan_matrix(generated) == qalg.cartan_matrix(nakayama566.algebra)


@pytest.mark.parametrize(
    "sequence, cyclic, dimension",
    [
        ([4, 4], True, 8),
        ([2, 2, 2], True, 6),
        ([3, 2, 1], False, 6),
    ],
)
def test_nakayama_dimension_is_sum_of_sequence(sequence, cyclic, dimension):
    assert qalg.nakayama(sequence, Q, cyclic=cyclic).dimension == dimension


@pytest.mark.parametrize("sequence, cyclic", [([2, 5], True), ([1, 3], True), ([3, 1, 2], False), ([2, 2], False)])
def test_rejects_non_admissible_sequences(sequence, cyclic):
    with pytest.raises(InvalidAdmissibleSequenceError):
        qalg.nakayama(sequence, Q, cyclic=cyclic)


def test_path_algebra_of_a2():
    kq = qalg.path_algebra(_a2_quiver(), Q)
    assert kq.dimension == 3
    assert qalg.loewy_length(kq) == 2
    assert qalg.cartan_matrix(kq) == [[1, 0], [1, 1]]


def test_cartan_matrix_sums_to_dimension(nakayama566):
    A = nakayama566.algebra
    assert sum(sum(row) for row in qalg.cartan_matrix(A)) == A.dimension
    assert qalg.loewy_length(A) == 6


def test_dual_numbers_dimensions(kq, dual_point):
    assert qalg.build_dual_numbers(kq.algebra).dimension == 6
    assert dual_point.dimension == 2


def test_dual_numbers_need_relation_free_base(nakayama566):
    with pytest.raises(InputError):
        qalg.build_dual_numbers(nakayama566.algebra)


def test_path_algebra_needs_acyclic_quiver():
    loop = Quiver(vertices=("1",), arrows=(Arrow(name="x", source="1", target="1"),))
    with pytest.raises(InputError):
        qalg.path_algebra(loop, Q)


def test_opposite_of_opposite_is_original(nakayama566):
    A = nakayama566.algebra
    opposite = qalg.opposite_algebra(A)
    assert opposite.dimension == A.dimension
    assert qalg.opposite_algebra(opposite) is A


@pytest.mark.parametrize(
    "vertices, arrows",
    [
        (("1", "1"), ()),
        (("1", "2"), (Arrow(name="a", source="1", target="3"),)),
    ],
)
def test_quiver_rejects_bad_labels(vertices, arrows):
    with pytest.raises(ValueError):
        Quiver(vertices=vertices, arrows=arrows)


def test_algebra_summary_fields(nakayama44):
    summary = qalg.algebra_summary(nakayama44.algebra)
    assert summary["dimension"] == 8
    assert summary["vertices"] == 4
    assert summary["loewy_length"] == 4


@pytest.mark.parametrize("fixture", ["nakayama566", "nakayama44", "kq", "dual_point"])
def test_multiplication_table_is_associative_and_unital(request, fixture):
    document = request.getfixturevalue(fixture)
    A = getattr(document, "algebra", document)
    S = A.structure
    assert structure.is_associative(S)
    assert structure.is_unital(S)
    K = A.field.domain
    trivial = {v: linalg.unit_vector(A.dimension, A.trivial_index(v), K) for v in A.vertices}
    total = linalg.zeros(A.dimension, 1, K)
    for v, e in trivial.items():
        total = (total + e).to_dense()
        for w, f in trivial.items():
            product = structure.multiply(S, e, f)
            assert linalg.equal(product, e) if v == w else linalg.is_zero(product)
    assert linalg.equal(total, S.unit)


def test_radical_of_dual_numbers_is_spanned_by_epsilon(dual_point):
    rad = structure.radical(dual_point.structure)
    assert rad.shape[1] == 1
    (vertex,) = dual_point.vertices
    assert linalg.column_entries(rad)[dual_point.trivial_index(vertex)] == dual_point.field.domain.zero


def test_radical_of_nakayama_566(nakayama566):
    A = nakayama566.algebra
    assert structure.radical(A.structure).shape[1] == A.dimension - len(A.vertices) == 14
