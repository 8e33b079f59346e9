import argparse

import pandas as pd

from app.commands import common
from app.models import CommandResult, Outcome, outcome_of_verdict
from domain.models.verdicts import Verdict
from infrastructure.algebra import dualnum


def register(subparsers, common_options: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("dual", help="Dual numbers kQ[eps] over an acyclic quiver Q")
    actions = parser.add_subparsers(dest="action", required=True)

    eta = actions.add_parser("eta", parents=[common_options], help="eta(X) and its Gorenstein-projective check")
    eta.add_argument("file", help="File declaring kQ")
    eta.add_argument("module", help="A kQ-module")
    eta.set_defaults(handler=eta_command)

    equ1 = actions.add_parser("equ1", parents=[common_options],
                              help="stable Hom(eta X, eta Y) = Hom(X, Y) + Ext^1(X, Y) on all indecomposable pairs")
    equ1.add_argument("file", help="File declaring kQ (a linearly oriented type-A quiver)")
    equ1.set_defaults(handler=equ1_command)

    perp = actions.add_parser("perp", parents=[common_options], help="Perpendicular category of an exceptional kQ-module")
    perp.add_argument("file", help="File declaring kQ (a linearly oriented type-A quiver)")
    perp.add_argument("module", help="The module E")
    perp.set_defaults(handler=perp_command)


def eta_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    pair = dualnum.dual_pair(document.algebra)
    X = common.module(document, args.module)
    report = dualnum.eta_gp_report(pair, X, args.cap)
    lines = [
        f"{report.eta.display_name()}: dimension vector {report.eta.dim_vector}",
        f"indecomposable: {report.indecomposable}",
        f"projective: {report.projective}",
        f"gorenstein projective: {report.status.value}",
    ]
    return CommandResult(
        outcome=outcome_of_verdict(report.verdict),
        lines=lines,
        payload={
            "module": X.display_name(),
            "dim_vector": list(report.eta.dim_vector),
            "indecomposable": report.indecomposable,
            "projective": report.projective,
            "status": report.status.value,
            "verdict": report.verdict.value,
        },
    )


def equ1_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    pair = dualnum.dual_pair(document.algebra)
    corpus = dualnum.indecomposable_corpus(document.algebra)
    checks = [dualnum.verify_equ1(pair, X, Y) for X in corpus for Y in corpus]
    frame = pd.DataFrame(
        [[c.source, c.target, c.stable_dimension, c.hom_dimension, c.ext_dimension, c.holds] for c in checks],
        columns=["X", "Y", "stable_hom", "hom", "ext1", "holds"],
    )
    failed = int((~frame["holds"]).sum())
    lines = frame.to_string(index=False).splitlines()
    lines.append(f"{len(checks) - failed}/{len(checks)} pairs satisfy the formula")
    return CommandResult(
        outcome=Outcome.FAILED if failed else Outcome.OK,
        lines=lines,
        payload={"pairs": [{**c.model_dump(), "holds": c.holds} for c in checks]},
    )


def perp_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    E = common.module(document, args.module)
    report = dualnum.schofield_perp(E, dualnum.indecomposable_corpus(document.algebra))
    lines = [
        f"exceptional: {report.exceptional.value}",
        f"members: {', '.join(X.display_name() for X in report.members) or '-'}",
        f"simple objects: {', '.join(X.display_name() for X in report.simple_objects) or '-'} "
        f"(expected {report.expected_simple_count})",
    ]
    if report.reason:
        lines.append(f"reason: {report.reason}")
    return CommandResult(
        outcome=Outcome.OK if report.verdict == Verdict.YES else Outcome.FAILED,
        lines=lines,
        payload={
            "module": E.display_name(),
            "exceptional": report.exceptional.value,
            "members": [X.display_name() for X in report.members],
            "simple_objects": [X.display_name() for X in report.simple_objects],
            "expected_simple_count": report.expected_simple_count,
            "verdict": report.verdict.value,
        },
    )
