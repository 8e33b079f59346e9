import io
import json
import logging

import pytest

from app.main_app import EXIT_FAILED, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, exit_code, run_command
from app.models import CommandResult, Outcome


def _run(*argv):
    out = io.StringIO()
    code = run_command([str(a) for a in argv], stdout=out)
    return code, out.getvalue()


def test_projective_dimension_of_projective(fixtures_dir):
    code, output = _run("mod", "pd", fixtures_dir / "example_nakayama_566.txt", "P_1")
    assert code == EXIT_OK
    assert output.strip() == "0"


def test_infinite_projective_dimension(fixtures_dir):
    code, output = _run("mod", "pd", fixtures_dir / "example_nakayama_566.txt", "S_2^[3]")
    assert code == EXIT_OK
    assert output.strip() == "infinite"


def test_hom_dimension(fixtures_dir):
    code, output = _run("mod", "hom", fixtures_dir / "example_nakayama_566.txt", "P_2", "N_2_3")
    assert code == EXIT_OK
    assert output.strip() == "1"


def test_parse_error_is_usage_error(fixtures_dir, capsys):
    code, _ = _run("alg", "info", fixtures_dir / "bad_unknown_arrow.txt")
    assert code == EXIT_USAGE
    assert ":11:" in capsys.readouterr().err


def test_missing_file_is_usage_error(fixtures_dir):
    code, _ = _run("alg", "info", fixtures_dir / "nowhere.txt")
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv", [["verify", "no-such-scenario"], ["alg"], ["--field", "F 4", "alg", "info", "x"]])
def test_bad_arguments(argv):
    assert run_command(argv, stdout=io.StringIO()) == EXIT_USAGE


def test_wrong_presentation_fails(fixtures_dir):
    code, output = _run(
        "endo", "verify",
        fixtures_dir / "example_nakayama_566.txt",
        fixtures_dir / "example_nakayama_566_gamma_wrong.txt",
        "--names", "1", "2", "3", "2p",
    )
    assert code == EXIT_FAILED
    assert not output.splitlines()[0].endswith(": verified")


def test_json_output(fixtures_dir, tmp_path):
    target = tmp_path / "info.json"
    code, _ = _run("alg", "info", fixtures_dir / "example_nakayama_44.txt", "--json", target)
    assert code == EXIT_OK
    assert json.loads(target.read_text(encoding="utf-8"))["dimension"] == 8


def test_equ1_table(fixtures_dir):
    code, output = _run("dual", "equ1", fixtures_dir / "example_dualnumbers_a2.txt")
    assert code == EXIT_OK
    assert "9/9 pairs satisfy the formula" in output


@pytest.mark.parametrize(
    "outcome, strict, expected",
    [
        (Outcome.OK, True, EXIT_OK),
        (Outcome.FAILED, False, EXIT_FAILED),
        (Outcome.INCONCLUSIVE, False, EXIT_OK),
        (Outcome.INCONCLUSIVE, True, EXIT_INCONCLUSIVE),
    ],
)
def test_exit_codes(outcome, strict, expected):
    assert exit_code(CommandResult(outcome=outcome), strict) == expected


def test_decompose_reports_local_degree(fixtures_dir):
    code, output = _run("mod", "decompose", fixtures_dir / "kronecker_rotation.txt", "X")
    assert code == EXIT_OK
    assert output.strip().endswith("End/rad of degree 2 over the base field")
    code, output = _run("--field", "F 5", "mod", "decompose", fixtures_dir / "kronecker_rotation.txt", "X")
    assert code == EXIT_OK
    assert len(output.strip().splitlines()) == 2
    assert "degree" not in output


def test_log_level_option_sets_root_level(fixtures_dir):
    root = logging.getLogger()
    previous = root.level
    try:
        code, _ = _run("--log-level", "debug", "alg", "info", fixtures_dir / "example_nakayama_44.txt")
        assert code == EXIT_OK
        assert root.level == logging.DEBUG
    finally:
        root.setLevel(previous)


def test_unknown_log_level_is_a_usage_error(fixtures_dir):
    code, _ = _run("--log-level", "chatty", "alg", "info", fixtures_dir / "example_nakayama_44.txt")
    assert code == EXIT_USAGE
