import argparse

from app.dependencies import SCENARIOS, get_report_repository, get_scenario_use_case
from app.models import CommandResult, outcome_of_report


def register(subparsers, common_options: argparse.ArgumentParser) -> None:
    verify = subparsers.add_parser("verify", parents=[common_options], help="Run an acceptance scenario")
    verify.add_argument("scenario", choices=list(SCENARIOS))
    verify.set_defaults(handler=verify_command)


def verify_command(args: argparse.Namespace) -> CommandResult:
    use_case = get_scenario_use_case(args.scenario, field=args.field, cap=args.cap)
    report = use_case.execute()
    repository = get_report_repository()
    return CommandResult(
        outcome=outcome_of_report(report),
        lines=repository.render(report).splitlines(),
        payload=repository.to_document(report),
        report=report,
    )
