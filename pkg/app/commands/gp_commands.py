import argparse

from app.commands import common
from app.models import CommandResult, Outcome, outcome_of_gp
from infrastructure.algebra import gproj


def register(subparsers, common_options: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("gp", help="Gorenstein projective modules")
    actions = parser.add_subparsers(dest="action", required=True)

    test = actions.add_parser("test", parents=[common_options], help="Is X Gorenstein projective?")
    test.add_argument("file")
    test.add_argument("module")
    test.set_defaults(handler=test_command)

    listing = actions.add_parser("list", parents=[common_options], help="Classify the indecomposables of a Nakayama algebra")
    listing.add_argument("file")
    listing.set_defaults(handler=list_command)


def test_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    X = common.module(document, args.module)
    verdict = gproj.is_gorenstein_projective(X, args.cap)
    lines = [f"{X.display_name()}: {verdict.status.value}", f"reason: {verdict.reason}"]
    if verdict.ext_module:
        lines.append(f"dim Ext^i(X, A): {verdict.ext_module}")
    return CommandResult(
        outcome=outcome_of_gp(verdict.status),
        lines=lines,
        payload={
            "module": X.display_name(),
            "status": verdict.status.value,
            "projective": verdict.projective,
            "reflexive": verdict.reflexive.value,
            "reason": verdict.reason,
        },
    )


def list_command(args: argparse.Namespace) -> CommandResult:
    algebra = common.load(args).algebra
    classification = gproj.enumerate_gp_nakayama(algebra, args.cap)
    groups = {
        "projective": classification.projective,
        "gorenstein_projective": classification.gorenstein_projective,
        "not_gorenstein_projective": classification.not_gorenstein_projective,
        "inconclusive": classification.inconclusive,
    }
    payload = {key: [X.display_name() for X in modules] for key, modules in groups.items()}
    lines = [f"{key}: {', '.join(names) or '-'}" for key, names in payload.items()]
    return CommandResult(
        outcome=Outcome.INCONCLUSIVE if classification.inconclusive else Outcome.OK,
        lines=lines,
        payload={"algebra": algebra.name, **payload},
    )
