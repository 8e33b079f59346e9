import argparse

from app.commands import common
from app.models import CommandResult, Outcome, matrix_lines
from infrastructure.algebra import qalg, structure
from infrastructure.logging.logger import get_logger

logger = get_logger(__name__)


def register(subparsers, common_options: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("alg", help="Bound quiver algebras")
    actions = parser.add_subparsers(dest="action", required=True)

    info = actions.add_parser("info", parents=[common_options], help="Dimension, Loewy length, Cartan matrix")
    info.add_argument("file")
    info.set_defaults(handler=info_command)

    basis = actions.add_parser("basis", parents=[common_options], help="Path basis of the algebra")
    basis.add_argument("file")
    basis.set_defaults(handler=basis_command)

    check = actions.add_parser("check", parents=[common_options], help="Nilpotency bound and algebra axioms")
    check.add_argument("file")
    check.set_defaults(handler=check_command)


def info_command(args: argparse.Namespace) -> CommandResult:
    algebra = common.load(args).algebra
    summary = qalg.algebra_summary(algebra)
    lines = [f"{key}: {value}" for key, value in summary.items() if key != "cartan_matrix"]
    lines.append("cartan_matrix:")
    lines.extend(matrix_lines(summary["cartan_matrix"]))
    return CommandResult(lines=lines, payload=summary)


def basis_command(args: argparse.Namespace) -> CommandResult:
    algebra = common.load(args).algebra
    paths = [p.text() for p in algebra.basis]
    lines = [f"{k:>3}  {text}" for k, text in enumerate(paths)]
    return CommandResult(lines=lines, payload={"algebra": algebra.name, "basis": paths})


def check_command(args: argparse.Namespace) -> CommandResult:
    algebra = common.load(args).algebra
    certificate = qalg.certify_nilpotency_independence(algebra)
    associative = structure.is_associative(algebra.structure)
    unital = structure.is_unital(algebra.structure)
    lines = [
        f"nilpotency bound {certificate.nilpotency}: "
        f"{'stable' if certificate.stable else 'NOT stable'} "
        f"(dim {certificate.dimension}, with N+1: {certificate.dimension_next})",
        f"associative: {associative}",
        f"unital: {unital}",
    ]
    if certificate.reason:
        lines.append(f"reason: {certificate.reason}")
    ok = certificate.stable and associative and unital
    if not ok:
        logger.warning(f"Algebra check failed for {algebra.name}")
    return CommandResult(
        outcome=Outcome.OK if ok else Outcome.FAILED,
        lines=lines,
        payload={
            "algebra": algebra.name,
            "nilpotency_stable": certificate.stable,
            "associative": associative,
            "unital": unital,
        },
    )
