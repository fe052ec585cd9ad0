"""Command-line interface.

Subcommands: analyze, bounds, certify, label, verify, exact, gen, demo.
Machine output is the JSON report (stable key order, no timestamps); text
output is a human-readable table.  Exit codes: 0 success / verified /
certified, 1 not verified / not certified, 2 usage error, 3 input error,
4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .bounds import (
    bound_report,
    certify_tightness,
    liu_bound_even,
    liu_bound_odd,
)
from .errors import (
    CertificationFailure,
    ExhaustedAttempts,
    InvalidProofOrder,
    OrderTooLarge,
    RadioTreeError,
    UnsupportedParams,
)
from .orders import a_sequence
from .labelling import (
    RadioLabelling,
    format_labels_text,
    greedy_label_from_order,
    label_from_order,
    parse_labels_text,
    verify_labelling,
)
from .solver import DEFAULT_MAX_ORDER, DEFAULT_TIMEOUT_S, exact_rn
from .tree import Tree, format_tree_text, metrics, parse_tree_text

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_RESOURCE = 4


def _read_tree(path: str) -> Tree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree_text(fh.read())


def _read_order(path: str) -> tuple:
    """Order file: whitespace-separated vertex ids; '#' starts a comment."""
    ids = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                ids.extend(int(tok) for tok in line.split())
    return tuple(ids)


def _base_report(m) -> dict:
    rep = bound_report(m)
    return {
        "p": rep.p,
        "diameter": rep.diameter,
        "weight_centers": sorted(m.weight_centers),
        "epsilon": rep.epsilon,
        "total_level": rep.total_level,
        "remote_count": rep.remote_count,
        "xi": rep.xi,
        "two_branch": m.two_branch,
        "bound_basic": rep.basic,
        "bound_improved": rep.improved,
        "strict_gap": rep.strict_gap,
    }


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{key}:")
            for k2, v2 in value.items():
                print(f"  {k2}: {v2}")
        else:
            print(f"{key}: {value}")


def _dot(tree: Tree, names: dict | None = None,
         labelling: RadioLabelling | None = None) -> str:
    id_to_name = {v: k for k, v in names.items()} if names else {}
    lines = ["graph tree {"]
    for v in range(tree.p):
        parts = [id_to_name.get(v, str(v))]
        if labelling is not None and v in labelling.labels:
            parts.append(f"f={labelling.labels[v]}")
        lines.append(f'  {v} [label="{" / ".join(parts)}"];')
    for u, v in sorted(tree.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- subcommands -----------------------------------------------------------

def cmd_analyze(args) -> int:
    tree = _read_tree(args.tree)
    report = _base_report(metrics(tree))
    _emit(report, args.json)
    return EXIT_OK


def cmd_bounds(args) -> int:
    tree = _read_tree(args.tree)
    m = metrics(tree)
    report = _base_report(m)
    if args.compare:
        if args.center is not None:
            x = args.center
        else:
            cands = [v for v in sorted(m.weight_centers)
                     if len(tree.adjacency[v]) == 2]
            if not cands:
                print("no degree-2 weight center for --compare", file=sys.stderr)
                return EXIT_INPUT
            x = cands[0]
        if m.diameter % 2 == 0:
            value, line = liu_bound_even(tree, x), "even"
        else:
            value, line = liu_bound_odd(tree, x), "odd"
        report["comparison"] = {"x": x, "value": value, "line": line}
    _emit(report, args.json)
    return EXIT_OK


def cmd_certify(args) -> int:
    tree = _read_tree(args.tree)
    m = metrics(tree)
    order = _read_order(args.order)
    report = _base_report(m)
    try:
        lab = certify_tightness(m, order)
        report["certification"] = {"certified": True, "stage": None, "span": lab.span}
        code = EXIT_OK
    except CertificationFailure as exc:
        report["certification"] = {"certified": False, "stage": exc.stage, "span": None}
        print(f"not certified at stage {exc.stage}: {exc.detail}", file=sys.stderr)
        code = EXIT_FAIL
    _emit(report, args.json)
    return code


def cmd_label(args) -> int:
    tree = _read_tree(args.tree)
    m = metrics(tree)
    order = _read_order(args.order)
    if args.greedy:
        lab = greedy_label_from_order(m, order)
    else:
        lab = label_from_order(m, order, a_sequence(m, order))
    if args.dot:
        sys.stdout.write(_dot(tree, labelling=lab))
    else:
        sys.stdout.write(format_labels_text(lab))
    return EXIT_OK


def cmd_verify(args) -> int:
    tree = _read_tree(args.tree)
    with open(args.labels, encoding="utf-8") as fh:
        lab = parse_labels_text(fh.read())
    ok, pair = verify_labelling(tree, lab)
    if ok:
        print("valid")
        return EXIT_OK
    print(f"violation at pair {pair}")
    return EXIT_FAIL


def cmd_exact(args) -> int:
    tree = _read_tree(args.tree)
    m = metrics(tree)
    report = _base_report(m)
    try:
        res = exact_rn(tree, max_order=args.max_order, timeout_s=args.timeout_s)
    except OrderTooLarge as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RESOURCE
    exact = {"rn": res.rn, "completed": res.stats.completed, "nodes": res.stats.nodes}
    if args.stats:
        exact["elapsed_s"] = res.stats.elapsed_s
    report["exact"] = exact
    if args.labels:
        report["labels"] = {str(v): res.witness.labels[v]
                            for v in sorted(res.witness.labels)}
    _emit(report, args.json)
    return EXIT_OK if res.stats.completed else EXIT_RESOURCE


def _gen_instance(args) -> families.FamilyInstance:
    fam = args.family
    if fam == "path":
        return families.gen_path(args.n)
    if fam == "caterpillar":
        return families.gen_caterpillar(args.n, args.k)
    if fam == "levelwise":
        degs = [int(tok) for tok in args.degrees.split(",")]
        return families.gen_levelwise(args.z, degs)
    if fam == "lmh":
        return families.gen_lmh(args.z, args.m, args.height)
    if fam == "random":
        return families.gen_random_two_branch(args.n, args.seed)
    raise AssertionError(fam)


def _proof_order(inst: families.FamilyInstance, fam: str) -> tuple:
    if fam == "caterpillar":
        return families.proof_order_caterpillar(inst)
    if fam == "levelwise":
        return families.proof_order_levelwise(inst)
    if fam == "lmh":
        return families.proof_order_lmh(inst)
    raise UnsupportedParams(f"no certifying-order constructor for family {fam!r}")


def cmd_gen(args) -> int:
    inst = _gen_instance(args)
    if args.dot:
        text = _dot(inst.tree, names=inst.vertex_names)
    else:
        text = format_tree_text(inst.tree)
        if args.names:
            name_lines = "".join(
                f"# {name} {vid}\n" for name, vid in sorted(
                    inst.vertex_names.items(), key=lambda kv: kv[1])
            )
            text += "# vertex names\n" + name_lines
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.with_order:
        if not args.output:
            print("--with-order requires -o", file=sys.stderr)
            return EXIT_USAGE
        order = _proof_order(inst, args.family)
        with open(args.output + ".order", "w", encoding="utf-8") as fh:
            fh.write(" ".join(str(v) for v in order) + "\n")
    return EXIT_OK


def cmd_demo(args) -> int:
    inst = _gen_instance(args)
    m = metrics(inst.tree)
    report = {"family": inst.name, **_base_report(m)}
    try:
        order = _proof_order(inst, args.family)
        lab = certify_tightness(m, order)
        report["certification"] = {"certified": True, "stage": None, "span": lab.span}
        code = EXIT_OK
    except (InvalidProofOrder, CertificationFailure) as exc:
        report["certification"] = {"certified": False, "stage": exc.stage, "span": None}
        print(f"not certified at stage {exc.stage}: {exc.detail}", file=sys.stderr)
        code = EXIT_FAIL
    _emit(report, args.json)
    return code


# --- argument parsing ------------------------------------------------------

def _add_family_arguments(sub) -> None:
    sub.add_argument("family",
                     choices=["path", "caterpillar", "levelwise", "lmh", "random"])
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--k", type=int, default=None)
    sub.add_argument("--z", type=int, default=1)
    sub.add_argument("--m", type=int, default=None)
    sub.add_argument("--h", dest="height", type=int, default=None)
    sub.add_argument("--degrees", type=str, default=None,
                     help="comma-separated per-level degrees, e.g. 2,3,3")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radiotree",
        description="Radio-number bounds, certificates, and exact solving for trees.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("analyze", help="structural metrics and bounds")
    s.add_argument("tree")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = subs.add_parser("bounds", help="lower bounds, optionally compared")
    s.add_argument("tree")
    s.add_argument("--compare", action="store_true")
    s.add_argument("--center", type=int, default=None)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = subs.add_parser("certify", help="certify an order attains the improved bound")
    s.add_argument("tree")
    s.add_argument("--order", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_certify)

    s = subs.add_parser("label", help="build a labelling from an order")
    s.add_argument("tree")
    s.add_argument("--order", required=True)
    s.add_argument("--greedy", action="store_true")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_label)

    s = subs.add_parser("verify", help="check a labelling file")
    s.add_argument("tree")
    s.add_argument("--labels", required=True)
    s.set_defaults(func=cmd_verify)

    s = subs.add_parser("exact", help="exact radio number by exhaustive search")
    s.add_argument("tree")
    s.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    s.add_argument("--timeout-s", type=float, default=DEFAULT_TIMEOUT_S)
    s.add_argument("--labels", action="store_true",
                   help="include a witness labelling in the report")
    s.add_argument("--stats", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_exact)

    s = subs.add_parser("gen", help="generate a family instance")
    _add_family_arguments(s)
    s.add_argument("-o", "--output", default=None)
    s.add_argument("--names", action="store_true")
    s.add_argument("--with-order", action="store_true")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_gen)

    s = subs.add_parser("demo", help="generate, certify, and report in one shot")
    _add_family_arguments(s)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return EXIT_INPUT
    except (OrderTooLarge, ExhaustedAttempts) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_RESOURCE
    except RadioTreeError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
