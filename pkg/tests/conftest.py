import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).parent.parent.resolve()
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from core.config import get_settings
from infrastructure.algebra import dualnum, endo, modcat
from infrastructure.parsing.text_format_source import TextFormatAlgebraSource

FIXTURES = PROJECT_ROOT / "fixtures"


@pytest.fixture(scope="session")
def settings():
    return get_settings()


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def source():
    return TextFormatAlgebraSource()


@pytest.fixture(scope="session")
def nakayama566(source):
    return source.load(FIXTURES / "example_nakayama_566.txt")


@pytest.fixture(scope="session")
def nakayama44(source):
    return source.load(FIXTURES / "example_nakayama_44.txt")


@pytest.fixture(scope="session")
def kq(source):
    """The path algebra of 1 -> 2."""
    return source.load(FIXTURES / "example_dualnumbers_a2.txt")


@pytest.fixture(scope="session")
def dual_pair(kq):
    return dualnum.dual_pair(kq.algebra)


@pytest.fixture(scope="session")
def dual_point(source):
    point = source.load(FIXTURES / "dual_numbers_point.txt")
    return dualnum.dual_pair(point.algebra).algebra


@pytest.fixture(scope="session")
def gamma566(source, nakayama566):
    summands = source.generator(nakayama566)
    return endo.present_endo_algebra(endo.endo_algebra(summands, ["1", "2", "3", "2p"]), name="Gamma")


@pytest.fixture(scope="session")
def eta_s1(source, kq, dual_pair):
    return dualnum.eta(dual_pair, source.resolve(kq, "S_1"))


@pytest.fixture(scope="session")
def gamma_dual(dual_pair, eta_s1):
    A = dual_pair.algebra
    summands = [modcat.projective(A, v) for v in A.vertices] + [eta_s1]
    return endo.present_endo_algebra(endo.endo_algebra(summands, list(A.vertices) + ["E"]), name="Gamma")
