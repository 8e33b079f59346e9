import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from core.config import get_settings
from domain.models.algebra import FieldSpec
from infrastructure.logging.logger import LEVEL_NAMES, get_logger, setup_logging

from app.commands import (
    algebra_commands,
    dual_commands,
    endo_commands,
    gp_commands,
    module_commands,
    sg_commands,
    verify_commands,
)
from app.dependencies import get_report_repository
from app.models import CommandResult, Outcome

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

COMMAND_GROUPS = (
    algebra_commands,
    module_commands,
    gp_commands,
    endo_commands,
    sg_commands,
    dual_commands,
    verify_commands,
)


def _add_common_options(parser: argparse.ArgumentParser, defaults: bool) -> None:
    """Registered on the top-level parser with real defaults and on each subcommand with SUPPRESS."""
    settings = get_settings()
    suppress = argparse.SUPPRESS
    parser.add_argument(
        "--field",
        type=FieldSpec.parse,
        default=None if defaults else suppress,
        help="Base field, 'Q' or 'F <p>' (default: the file's field directive, else DEFAULT_FIELD)",
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=settings.ITERATION_CAP if defaults else suppress,
        help=f"Iteration cap for syzygy and stabilization searches (default: {settings.ITERATION_CAP})",
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        default=settings.STRICT if defaults else suppress,
        help="Exit with code 3 when results are inconclusive",
    )
    parser.add_argument(
        "--json",
        metavar="PATH",
        default=None if defaults else suppress,
        help="Also write the machine-readable result to PATH",
    )


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="quiver-toolkit",
        description=f"{settings.APP_NAME} {settings.APP_VERSION}",
    )
    _add_common_options(parser, defaults=True)
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LEVEL_NAMES,
        default=None,
        help=f"Override LOG_LEVEL for this run (default: {settings.LOG_LEVEL})",
    )
    common_options = argparse.ArgumentParser(add_help=False)
    _add_common_options(common_options, defaults=False)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for group in COMMAND_GROUPS:
        group.register(subparsers, common_options)
    return parser


def exit_code(result: CommandResult, strict: bool) -> int:
    if result.outcome == Outcome.FAILED:
        return EXIT_FAILED
    if result.outcome == Outcome.INCONCLUSIVE and strict:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _write_json(result: CommandResult, path: str) -> None:
    if result.report is not None:
        get_report_repository().save(result.report, path)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(result.payload, indent=2, default=str) + "\n", encoding="utf-8")
    logger.info(f"Wrote {target}")


def run_command(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """
    Parses argv, runs the subcommand and returns the exit code:
    0 success, 1 a verification failed, 2 input or usage error, 3 inconclusive with --strict.
    """
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    if args.log_level:
        setup_logging(args.log_level)
    logger.info(f"Running command: {args.command} {getattr(args, 'action', '')}".strip())
    try:
        result: CommandResult = args.handler(args)
    except ValueError as e:
        logger.error(f"Input error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as e:
        logger.error(f"Computation failed: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED

    print(result.text(), file=out)
    if args.json:
        try:
            _write_json(result, args.json)
        except (OSError, RuntimeError) as e:
            logger.error(f"Could not write {args.json}: {e}", exc_info=True)
            return EXIT_FAILED
    code = exit_code(result, args.strict)
    logger.info(f"Exit code {code} ({result.outcome.value})")
    return code
