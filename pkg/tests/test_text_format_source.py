from fractions import Fraction

import pytest

from core.exceptions import InputError, ParseError
from domain.models.algebra import FieldSpec
from domain.models.verdicts import Verdict
from infrastructure.algebra import modcat

A2_WITH_MODULE = """
field Q
quiver
vertex 1
vertex 2
arrow alpha 1 2
module M
dim 1 1
dim 2 1
map alpha 1
end
"""


def test_relation_free_quiver_gives_path_algebra(source):
    document = source.parse(A2_WITH_MODULE)
    assert document.algebra.dimension == 3


def test_module_block_is_parsed(source):
    document = source.parse(A2_WITH_MODULE)
    M = document.modules["M"]
    assert M.dim_vector == (1, 1)
    assert modcat.is_isomorphic(M, source.resolve(document, "P_1")).verdict == Verdict.YES


def test_unknown_arrow_reports_line(source, fixtures_dir):
    with pytest.raises(ParseError) as excinfo:
        source.load(fixtures_dir / "bad_unknown_arrow.txt")
    assert excinfo.value.line_number == 11
    assert "bad_unknown_arrow.txt" in str(excinfo.value)


def test_non_prime_characteristic_is_rejected(source):
    with pytest.raises(ParseError) as excinfo:
        source.parse("field F 4\nquiver\nvertex 1\n")
    assert excinfo.value.line_number == 1


def test_missing_file_is_input_error(source, fixtures_dir):
    with pytest.raises(InputError):
        source.load(fixtures_dir / "does_not_exist.txt")


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("quiver\nvertex 1\nvertex 1\n", 3),
        ("quiver\nvertex 1\narrow a 1 2\n", 3),
        ("quiver\nvertex 1\nwhatever\n", 3),
        (A2_WITH_MODULE.replace("map alpha 1", "map alpha 1 2"), 7),
        (A2_WITH_MODULE.replace("end\n", ""), 7),
    ],
)
def test_malformed_files(source, text, line_number):
    with pytest.raises(ParseError) as excinfo:
        source.parse(text)
    assert excinfo.value.line_number == line_number


def test_relation_coefficients(source):
    text = """
quiver
vertex 1
vertex 2
vertex 3
arrow a 1 2
arrow c 1 2
arrow b 2 3
relations
b*a - 2*b*c
nilpotency 3
"""
    document = source.parse(text)
    relation = document.algebra.relations[0]
    assert sorted(c for c, _ in relation.terms) == [Fraction(-2), Fraction(1)]
    assert document.algebra.dimension == 7


def test_field_override(source, fixtures_dir):
    document = source.load(fixtures_dir / "example_dualnumbers_a2.txt", field=FieldSpec.prime(3))
    assert document.algebra.field.characteristic == 3


def test_nakayama_directive(nakayama44):
    assert nakayama44.algebra.dimension == 8
    assert len(nakayama44.generator) == 3


@pytest.mark.parametrize("reference", ["N_2_3", "S_2^[3]"])
def test_nakayama_references(source, nakayama566, reference):
    X = source.resolve(nakayama566, reference)
    assert X.dimension == 3
    assert X.display_name() == "S_2^[3]"


def test_generator_resolves_all_summands(source, nakayama566):
    summands = source.generator(nakayama566)
    assert [X.dimension for X in summands] == [5, 6, 6, 3]


@pytest.mark.parametrize("reference", ["P_9", "X", "N_1_9"])
def test_bad_references(source, nakayama566, reference):
    with pytest.raises(InputError):
        source.resolve(nakayama566, reference)


def test_field_spec_parse():
    assert FieldSpec.parse("GF(5)").characteristic == 5
    assert FieldSpec.parse("QQ") == FieldSpec.rationals()
    with pytest.raises(ValueError):
        FieldSpec.parse("F 4")
