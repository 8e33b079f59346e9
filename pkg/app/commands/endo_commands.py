import argparse
from typing import List, Optional

from app.commands import common
from app.models import CommandResult, outcome_of_presentation
from domain.models.module import FdModule
from domain.models.verdicts import EndoAlgebraData
from infrastructure.algebra import endo


def register(subparsers, common_options: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("endo", help="Gamma = End_A(M)^op")
    actions = parser.add_subparsers(dest="action", required=True)

    quiver = actions.add_parser("quiver", parents=[common_options], help="Gabriel quiver of Gamma")
    quiver.add_argument("file")
    present = actions.add_parser("present", parents=[common_options], help="Quiver and relations of Gamma")
    present.add_argument("file")
    verify = actions.add_parser("verify", parents=[common_options], help="Check a claimed presentation of Gamma")
    verify.add_argument("file")
    verify.add_argument("claim", help="Algebra file holding the claimed quiver and relations")
    for action, handler in ((quiver, quiver_command), (present, present_command), (verify, verify_command)):
        common.add_summands_option(action)
        action.add_argument("--names", nargs="+", metavar="VERTEX", help="Vertex names of Gamma, one per summand")
        action.set_defaults(handler=handler)


def _endo(args: argparse.Namespace) -> EndoAlgebraData:
    document = common.load(args)
    modules: List[FdModule] = common.summands(document, args.summands)
    names: Optional[List[str]] = args.names
    return endo.endo_algebra(modules, names)


def _vertex_lines(endo_data: EndoAlgebraData) -> List[str]:
    return [f"vertex {v}: {M.display_name()}" for v, M in zip(endo_data.vertex_names, endo_data.summands)]


def quiver_command(args: argparse.Namespace) -> CommandResult:
    endo_data = _endo(args)
    gabriel = endo.gabriel_quiver(endo_data)
    arrows = [(a.name, a.source, a.target) for a in gabriel.quiver.arrows]
    lines = [f"dim Gamma = {endo_data.dimension}"] + _vertex_lines(endo_data)
    lines += [f"arrow {name}: {source} -> {target}" for name, source, target in arrows]
    return CommandResult(
        lines=lines,
        payload={
            "dimension": endo_data.dimension,
            "vertices": list(endo_data.vertex_names),
            "arrows": [{"name": n, "source": s, "target": t} for n, s, t in arrows],
        },
    )


def present_command(args: argparse.Namespace) -> CommandResult:
    endo_data = _endo(args)
    presentation = endo.present_endo_algebra(endo_data)
    algebra = presentation.algebra
    relations = [r.text() for r in algebra.relations]
    lines = [f"dim Gamma = {algebra.dimension}"] + _vertex_lines(endo_data)
    lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in algebra.quiver.arrows]
    lines += [f"relation {text}" for text in relations]
    lines.append(f"nilpotency {algebra.nilpotency}")
    return CommandResult(
        lines=lines,
        payload={
            "dimension": algebra.dimension,
            "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in algebra.quiver.arrows],
            "relations": relations,
            "nilpotency": algebra.nilpotency,
        },
    )


def verify_command(args: argparse.Namespace) -> CommandResult:
    endo_data = _endo(args)
    claim = common.load(args, "claim").claim()
    verdict = endo.verify_presentation(endo_data, claim)
    lines = [f"{claim.name}: {verdict.status.value}", f"reason: {verdict.reason}"]
    if verdict.vertex_map:
        lines.append("vertex map: " + ", ".join(f"{k} -> {v}" for k, v in sorted(verdict.vertex_map.items())))
    return CommandResult(
        outcome=outcome_of_presentation(verdict.status),
        lines=lines,
        payload={
            "claim": claim.name,
            "status": verdict.status.value,
            "claim_dimension": verdict.claim_dimension,
            "algebra_dimension": verdict.algebra_dimension,
            "vertex_map": dict(sorted(verdict.vertex_map.items())),
            "reason": verdict.reason,
        },
    )
