import argparse
from typing import List, Optional

from core.exceptions import InputError
from domain.models.document import AlgebraDocument
from domain.models.module import FdModule
from app.dependencies import get_algebra_source


def load(args: argparse.Namespace, attribute: str = "file") -> AlgebraDocument:
    return get_algebra_source().load(getattr(args, attribute), field=args.field)


def module(document: AlgebraDocument, reference: str) -> FdModule:
    return get_algebra_source().resolve(document, reference)


def summands(document: AlgebraDocument, references: Optional[List[str]]) -> List[FdModule]:
    """Modules given with --summands, otherwise the file's `generator` line."""
    chosen = references or list(document.generator)
    if not chosen:
        raise InputError(f"{document.source} has no 'generator' line; pass --summands")
    return [module(document, reference) for reference in chosen]


def add_summands_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--summands",
        nargs="+",
        metavar="MODULE",
        help="Indecomposable summands of M (default: the file's generator line)",
    )
