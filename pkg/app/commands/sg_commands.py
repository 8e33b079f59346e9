import argparse
from typing import List, Optional

from app.commands import common
from app.models import CommandResult, Outcome, matrix_lines, outcome_of_verdict
from domain.models.document import AlgebraDocument
from domain.models.module import FdModule
from domain.models.singularity import SgClassification, SgObject, StabilizationStatus
from infrastructure.algebra import homol, modcat, sgcat


def register(subparsers, common_options: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("sg", help="Singularity category")
    actions = parser.add_subparsers(dest="action", required=True)

    stable = actions.add_parser("stablehom", parents=[common_options], help="dim of the stable Hom space")
    stable.add_argument("file")
    stable.add_argument("source")
    stable.add_argument("target")
    stable.set_defaults(handler=stablehom_command)

    stabilized = actions.add_parser("stabhom", parents=[common_options], help="dim Hom(q(X), q(Y)[shift])")
    stabilized.add_argument("file")
    stabilized.add_argument("source")
    stabilized.add_argument("target")
    stabilized.add_argument("--shift", type=int, default=0)
    stabilized.set_defaults(handler=stabhom_command)

    classify = actions.add_parser("classify", parents=[common_options], help="Isomorphism classes of candidates")
    classify.add_argument("file")
    classify.add_argument("--modules", nargs="+", metavar="MODULE",
                          help="Candidates (default: non-projective indecomposables of a Nakayama algebra)")
    classify.set_defaults(handler=classify_command)

    perp = actions.add_parser("perp", parents=[common_options], help="Classes in q(M)^perp")
    perp.add_argument("file")
    perp.add_argument("--modules", nargs="+", metavar="MODULE", help="Candidates, as for classify")
    common.add_summands_option(perp)
    perp.add_argument("--expect-count", type=int, help="Check a semisimple pattern with this many simples")
    perp.add_argument("--permutation", nargs="+", type=int, help="Action of the translation on the simples")
    perp.set_defaults(handler=perp_command)


def _candidates(document: AlgebraDocument, references: Optional[List[str]]) -> List[FdModule]:
    if references:
        return [common.module(document, r) for r in references]
    return [X for X in modcat.enumerate_indecomposables(document.algebra) if not homol.is_projective(X)]


def _classification_lines(classification: SgClassification) -> List[str]:
    lines = [
        f"class {k}: {', '.join(X.display_name() for X in members)}"
        for k, members in enumerate(classification.classes)
    ]
    lines.append(f"zero: {', '.join(X.display_name() for X in classification.zero_objects) or '-'}")
    if classification.inconclusive:
        lines.append(f"inconclusive: {', '.join(X.display_name() for X in classification.inconclusive)}")
    return lines


def _classification_payload(classification: SgClassification) -> dict:
    return {
        "classes": [[X.display_name() for X in members] for members in classification.classes],
        "zero_objects": [X.display_name() for X in classification.zero_objects],
        "inconclusive": [X.display_name() for X in classification.inconclusive],
    }


def stablehom_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    X, Y = common.module(document, args.source), common.module(document, args.target)
    dimension = sgcat.stable_hom(X, Y).dimension
    return CommandResult(lines=[str(dimension)], payload={"source": X.display_name(), "target": Y.display_name(), "dimension": dimension})


def stabhom_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    x = SgObject(module=common.module(document, args.source))
    y = SgObject(module=common.module(document, args.target), shift=args.shift)
    result = sgcat.stabilized_hom(x, y, args.cap)
    value = "unknown" if result.dimension is None else str(result.dimension)
    lines = [value, f"status: {result.status.value}"]
    if result.level is not None:
        lines.append(f"level {result.level}, transition period {result.transition_period}")
    if result.reason:
        lines.append(f"reason: {result.reason}")
    return CommandResult(
        outcome=Outcome.INCONCLUSIVE if result.status == StabilizationStatus.INCONCLUSIVE else Outcome.OK,
        lines=lines,
        payload={
            "source": x.label(),
            "target": y.label(),
            "status": result.status.value,
            "dimension": result.dimension,
            "level": result.level,
        },
    )


def classify_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    classification = sgcat.classify(_candidates(document, args.modules), args.cap)
    table = sgcat.stable_hom_table(classification.representatives, args.cap)
    lines = _classification_lines(classification)
    lines.append("Hom between class representatives:")
    lines.extend(matrix_lines([["?" if v is None else v for v in row] for row in table]))
    return CommandResult(
        outcome=Outcome.INCONCLUSIVE if classification.inconclusive else Outcome.OK,
        lines=lines,
        payload={**_classification_payload(classification), "hom_table": table},
    )


def perp_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    summands = common.summands(document, args.summands)
    classification = sgcat.classify(_candidates(document, args.modules), args.cap)
    perpendicular = sgcat.perp(summands, classification, args.cap)
    lines = _classification_lines(perpendicular)
    payload = _classification_payload(perpendicular)
    outcome = Outcome.INCONCLUSIVE if perpendicular.inconclusive else Outcome.OK
    if args.expect_count is not None:
        permutation = args.permutation or list(range(args.expect_count))
        pattern = sgcat.semisimple_pattern_check(perpendicular.classes, args.expect_count, permutation, args.cap)
        lines.append(f"semisimple pattern ({args.expect_count}, {permutation}): {pattern.verdict.value}")
        lines.extend(f"  {failure}" for failure in pattern.failures)
        payload["pattern"] = {"verdict": pattern.verdict.value, "failures": pattern.failures}
        outcome = outcome_of_verdict(pattern.verdict)
    return CommandResult(outcome=outcome, lines=lines, payload=payload)
