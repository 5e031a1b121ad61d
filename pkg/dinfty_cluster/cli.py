"""Command-line front end: ``dinfty-cluster <verb> ...``."""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Iterable

import networkx as nx

from . import __version__
from .ar_translate import (
    LabelPredicate,
    Window,
    backward_rectangle,
    boundary_predecessors,
    boundary_successors,
    forward_rectangle,
    pseudo_rectangle,
    rep_quiver_graph,
    sectional_successors,
    successors,
    tau_cluster,
    tau_derived,
    tau_rep_power,
    to_fundamental,
    wing,
)
from .cluster_check import (
    SUITES,
    Report,
    check_no_two_cycles,
    forbidden_region,
    forward_backward_forbidden,
    format_set,
    rigid_completion,
    run_suite,
)
from .config import DEFAULT_WINDOW, Config, configure_logging
from .exceptions import InvalidLabelError, LabelParseError, NotRigidError, WindowUnderflowError
from .hom_engine import ext1_cluster, ext1_rep, hom_cluster, hom_derived, hom_rep_dim
from .label_core import DerivedObject, classify_component, labels_up_to, parse_derived, parse_label, parse_object
from .matrix_oracle import ExactField


logger = logging.getLogger(__name__)

CATEGORIES = ("rep", "derived", "cluster")
REGION_KINDS = ("H", "H+", "H-", "successors", "sectional", "wing", "forward", "backward", "pseudo", "boundary")
HEATMAP_COLORS = {0: "white", 1: "lightskyblue", 2: "royalblue"}


def _common_flags(*, after_verb: bool = False) -> argparse.ArgumentParser:
    """
    Options shared by every verb, accepted both before and after the verb.

    The copy attached after the verb defaults to ``SUPPRESS`` so that it leaves an
    option given before the verb untouched.
    """

    def default(value: object) -> object:
        return argparse.SUPPRESS if after_verb else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--window",
        type=int,
        default=default(DEFAULT_WINDOW),
        help=f"largest vertex of the window (default: {DEFAULT_WINDOW})",
    )
    common.add_argument(
        "--prime", type=int, action="append", default=default(None), help="prime for GF(p); repeat for cross checks"
    )
    common.add_argument("--field", choices=("gfp", "rational"), default=default("gfp"))
    common.add_argument("--seed", type=int, default=default(0), help="seed for randomized completion order")
    common.add_argument("--format", choices=("tsv", "json", "dot"), default=default("tsv"))
    common.add_argument("--order", choices=("random", "sorted"), default=default("random"))
    common.add_argument(
        "-v", "--verbose", action="count", default=default(0), help="-v for INFO, -vv for DEBUG on stderr"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the ``dinfty-cluster`` parser with one subparser per verb."""
    common = _common_flags(after_verb=True)
    parser = argparse.ArgumentParser(
        prog="dinfty-cluster",
        description="Hom/Ext dimensions and structure checks in the cluster category of the D-infinity zigzag quiver",
        parents=[_common_flags()],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    for verb, what in (("hom", "dimension of Hom(X, Y)"), ("ext", "dimension of Ext^1(X, Y)")):
        sub = verbs.add_parser(verb, parents=[common], help=what)
        sub.add_argument("source")
        sub.add_argument("target")
        sub.add_argument("--category", choices=CATEGORIES, default="rep")
        sub.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")

    sub = verbs.add_parser("tau", parents=[common], help="AR translate of an object")
    sub.add_argument("object")
    sub.add_argument("--power", type=int, default=1)
    sub.add_argument("--category", choices=CATEGORIES, default="rep")

    sub = verbs.add_parser("region", parents=[common], help="objects of a region of X inside the window")
    sub.add_argument("object")
    sub.add_argument("--kind", choices=REGION_KINDS, default="H")

    sub = verbs.add_parser("heatmap", parents=[common], help="dim Hom(X, -) over the window")
    sub.add_argument("object")

    sub = verbs.add_parser("verify", parents=[common], help="run a verification suite")
    sub.add_argument("suite", choices=sorted(SUITES))
    sub.add_argument("--count", type=int, default=100, help="number of rigid completions (no-two-cycles)")

    sub = verbs.add_parser("enumerate-tilting", parents=[common], help="window-maximal rigid sets")
    sub.add_argument("--seed-set", action="append", default=[], metavar="OBJECT", help="rigid seed member")
    sub.add_argument("--count", type=int, default=1)
    sub.add_argument("--check", action="store_true", help="also run the no-two-cycles obligations")
    return parser


def _parse_pair(args: argparse.Namespace) -> tuple[DerivedObject, DerivedObject]:
    if args.category == "rep":
        return DerivedObject(parse_label(args.source)), DerivedObject(parse_label(args.target))
    if args.category == "derived":
        return parse_derived(args.source), parse_derived(args.target)
    return parse_object(args.source), parse_object(args.target)


def _dimension(args: argparse.Namespace, exact_field: ExactField, *, oracle: bool) -> int:
    source, target = _parse_pair(args)
    if args.verb == "hom":
        if args.category == "rep":
            return hom_rep_dim(source.label, target.label, exact_field, oracle=oracle)
        if args.category == "derived":
            return hom_derived(source, target, exact_field, oracle=oracle)
        return hom_cluster(source, target, exact_field, oracle=oracle)
    if args.category == "rep":
        return ext1_rep(source.label, target.label, exact_field, oracle=oracle)
    if args.category == "derived":
        return hom_derived(source, target.shifted(1), exact_field, oracle=oracle)
    return ext1_cluster(source, target, exact_field, oracle=oracle)


def cmd_dimension(args: argparse.Namespace, config: Config) -> int:
    """Print a Hom or Ext dimension; with ``--method both`` compare formula and oracle, exiting 1 on mismatch."""
    exact_field = config.exact_field()
    if args.method != "both":
        print(_dimension(args, exact_field, oracle=args.method == "oracle"))
        return 0
    formula = _dimension(args, exact_field, oracle=False)
    oracle = _dimension(args, exact_field, oracle=True)
    verdict = "MATCH" if formula == oracle else "MISMATCH"
    print(f"{formula} {oracle} {verdict}")
    return 0 if formula == oracle else 1


def cmd_tau(args: argparse.Namespace, config: Config) -> int:
    """Print the translate of an object, or NONE when the rep(Q) translate is undefined."""
    if args.category == "rep":
        translate = tau_rep_power(parse_label(args.object), args.power)
        print(translate if translate is not None else "NONE")
    elif args.category == "derived":
        print(tau_derived(parse_derived(args.object), args.power))
    else:
        print(tau_cluster(to_fundamental(parse_object(args.object)), args.power))
    return 0


def _matching(window: Window, member: LabelPredicate) -> set[DerivedObject]:
    return {y for y in window.objects if member(y.label)}


def _region(kind: str, obj: DerivedObject, window: Window, exact_field: ExactField) -> set[DerivedObject]:
    if kind == "H":
        return forbidden_region(obj, window, exact_field)
    if kind == "H+":
        return forward_backward_forbidden(obj, window).forward
    if kind == "H-":
        return forward_backward_forbidden(obj, window).backward
    if kind == "successors":
        return successors(obj, window)
    if kind == "sectional":
        return sectional_successors(obj, window)
    if kind == "boundary":
        return boundary_predecessors(obj, window) | boundary_successors(obj, window)
    window.require(obj)
    if kind == "wing":
        return _matching(window, wing(obj.label))
    if kind == "forward":
        return _matching(window, forward_rectangle(obj.label))
    if kind == "backward":
        return _matching(window, backward_rectangle(obj.label))
    return _matching(window, pseudo_rectangle(obj.label))


def _print_objects(objects: Iterable[DerivedObject], config: Config) -> None:
    ordered = [str(obj) for obj in sorted(objects)]
    if config.format == "json":
        print(json.dumps(ordered, indent=2))
    else:
        for line in ordered:
            print(line)


def cmd_region(args: argparse.Namespace, config: Config) -> int:
    """Print the members of a region of an object inside the window, in label order."""
    obj = to_fundamental(parse_object(args.object))
    window = Window(config.window)
    _print_objects(_region(args.kind, obj, window, config.exact_field()), config)
    return 0


def heatmap_dot(dims: dict, bound: int) -> str:
    """DOT source of the AR quiver of rep(Q) on the window, nodes filled by Hom dimension."""
    graph = nx.relabel_nodes(rep_quiver_graph(bound), str)
    for label, dim in dims.items():
        graph.nodes[str(label)].update(style="filled", fillcolor=HEATMAP_COLORS[min(dim, 2)], xlabel=str(dim))
    return nx.drawing.nx_pydot.to_pydot(graph).to_string()


def cmd_heatmap(args: argparse.Namespace, config: Config) -> int:
    """
    Print ``dim Hom(X, -)`` for every label in the window.

    Raises:
        WindowUnderflowError: If ``X`` itself does not fit in the window.
    """
    source = parse_label(args.object)
    window = Window(config.window)
    exact_field = config.exact_field()
    labels = labels_up_to(window.bound)
    if source.m > window.bound:
        raise WindowUnderflowError(f"{source} does not fit in window {window.bound}")
    dims = {label: hom_rep_dim(source, label, exact_field) for label in labels}
    if config.format == "dot":
        print(heatmap_dot(dims, window.bound), end="")
    elif config.format == "json":
        rows = {str(label): dim for label, dim in dims.items()}
        print(json.dumps({"source": str(source), "window": window.bound, "dims": rows}, indent=2))
    else:
        for label, dim in dims.items():
            print(f"{label}\t{classify_component(label).value}\t{dim}")
    return 0


def _emit(report: Report, config: Config) -> int:
    print(report.to_json() if config.format == "json" else report.to_tsv())
    return 1 if report.failed else 0


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    """Run one suite and print its report; exit 1 if any assertion failed."""
    return _emit(run_suite(args.suite, config, count=args.count), config)


def cmd_enumerate(args: argparse.Namespace, config: Config) -> int:
    """Print ``--count`` rigid completions of the seed set, one per consecutive rng seed."""
    window = Window(config.window)
    exact_field = config.exact_field()
    seed = [to_fundamental(parse_object(text)) for text in args.seed_set]
    report = Report()
    completions = []
    for k in range(args.count):
        rng_seed = config.seed + k
        members = rigid_completion(seed, window, rng_seed, order=config.order, exact_field=exact_field)
        completions.append((rng_seed, members))
        if args.check:
            report.extend(check_no_two_cycles(members, window, exact_field, name=f"seed={rng_seed}"))
    if config.format == "json":
        rows = [{"seed": s, "members": [str(obj) for obj in sorted(m)]} for s, m in completions]
        print(json.dumps(rows, indent=2))
    else:
        for rng_seed, members in completions:
            print(f"seed={rng_seed}\t{len(members)}\t{format_set(members)}")
    if args.check:
        return _emit(report, config)
    return 0


COMMANDS: dict[str, Callable[[argparse.Namespace, Config], int]] = {
    "hom": cmd_dimension,
    "ext": cmd_dimension,
    "tau": cmd_tau,
    "region": cmd_region,
    "heatmap": cmd_heatmap,
    "verify": cmd_verify,
    "enumerate-tilting": cmd_enumerate,
}


def main(argv: list[str] | None = None) -> int:
    """
    Entry point of the ``dinfty-cluster`` script.

    Returns:
        0 on success, 1 when a check fails and 2 on invalid input.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = Config.from_namespace(args)
        return COMMANDS[args.verb](args, config)
    except (LabelParseError, InvalidLabelError, WindowUnderflowError, NotRigidError, ValueError) as exc:
        print(f"dinfty-cluster: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
