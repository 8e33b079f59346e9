import argparse

from app.commands import common
from app.models import CommandResult, Outcome
from infrastructure.algebra import homol, modcat


def register(subparsers, common_options: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("mod", help="Modules: Hom, Ext, projective dimension, decomposition")
    actions = parser.add_subparsers(dest="action", required=True)

    hom = actions.add_parser("hom", parents=[common_options], help="dim Hom_A(X, Y)")
    hom.add_argument("file")
    hom.add_argument("source")
    hom.add_argument("target")
    hom.set_defaults(handler=hom_command)

    ext = actions.add_parser("ext", parents=[common_options], help="dim Ext^n_A(X, Y)")
    ext.add_argument("file")
    ext.add_argument("source")
    ext.add_argument("target")
    ext.add_argument("--degree", type=int, default=1)
    ext.set_defaults(handler=ext_command)

    pd = actions.add_parser("pd", parents=[common_options], help="Projective (or injective) dimension")
    pd.add_argument("file")
    pd.add_argument("module")
    pd.add_argument("--injective", action="store_true", help="Injective dimension instead")
    pd.set_defaults(handler=pd_command)

    decompose = actions.add_parser("decompose", parents=[common_options], help="Indecomposable summands")
    decompose.add_argument("file")
    decompose.add_argument("module")
    decompose.set_defaults(handler=decompose_command)


def hom_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    X, Y = common.module(document, args.source), common.module(document, args.target)
    dimension = modcat.hom_space(X, Y).dimension
    return CommandResult(
        lines=[str(dimension)],
        payload={"source": X.display_name(), "target": Y.display_name(), "dimension": dimension},
    )


def ext_command(args: argparse.Namespace) -> CommandResult:
    if args.degree < 0:
        raise ValueError("--degree must be nonnegative")
    document = common.load(args)
    X, Y = common.module(document, args.source), common.module(document, args.target)
    group = homol.ext(args.degree, X, Y)
    return CommandResult(
        lines=[str(group.dimension)],
        payload={"source": X.display_name(), "target": Y.display_name(), "degree": args.degree, "dimension": group.dimension},
    )


def pd_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    X = common.module(document, args.module)
    certificate = homol.inj_dimension(X, args.cap) if args.injective else homol.proj_dimension(X, args.cap)
    if certificate.is_finite:
        value, outcome = str(certificate.value), Outcome.OK
    elif certificate.is_infinite:
        value, outcome = "infinite", Outcome.OK
    else:
        value, outcome = "unknown", Outcome.INCONCLUSIVE
    return CommandResult(
        outcome=outcome,
        lines=[value],
        payload={"module": X.display_name(), "injective": args.injective, "value": value, "certificate": certificate.summary()},
    )


def decompose_command(args: argparse.Namespace) -> CommandResult:
    document = common.load(args)
    X = common.module(document, args.module)
    decomposition = modcat.decompose(X)
    rows = [
        {"summand": S.display_name(), "dim_vector": list(S.dim_vector), "multiplicity": m, "local_degree": d}
        for S, m, d in zip(decomposition.summands, decomposition.multiplicities, decomposition.local_degrees)
    ]
    lines = [
        f"{r['multiplicity']} x {r['summand']}  {tuple(r['dim_vector'])}"
        + (f"  End/rad of degree {r['local_degree']} over the base field" if r["local_degree"] > 1 else "")
        for r in rows
    ]
    return CommandResult(lines=lines, payload={"module": X.display_name(), "summands": rows})
