"""Command-line interface: ``failset {solve,verify,oracle,map,gen,props}``.

Exit codes: 0 ok/valid, 1 invalid candidate or failed check, 2 parse/input
error, 3 structural error (not a tree/forest), 4 oracle refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys

from . import testkit
from .exceptions import InputError, OracleRefusal, StructureError
from .graph import (
    Instance,
    check_params,
    closed_neighborhood,
    connected_components,
    first_large_component,
    format_edge_list,
    parse_edge_list,
    parse_label_list,
    surviving_components,
    validate_tree,
)
from .propositions import run_suite
from .solver import solve_forest, solve_rooted
from .verification import DEFAULT_CAP, brute_force_minimum, build_mapping, check_mapping_lemmas

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_STRUCTURE, EXIT_REFUSED = 0, 1, 2, 3, 4


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    g = parse_edge_list(_read(args.input))
    check_params(g.n, args.k, args.ell)
    return g


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text_lines))


def _warn(message):
    print(f"warning: {message}", file=sys.stderr)


def _root_id(g, args):
    return 0 if args.root is None else g.id_of(args.root)


def cmd_solve(args):
    g = _load(args)
    n_comp = len(connected_components(g))
    if g.m != g.n - n_comp:
        raise StructureError(f"not a forest: {g.m} edges on {g.n} vertices in {n_comp} components implies a cycle")
    if n_comp == 1:
        root = _root_id(g, args)
        failed = solve_rooted(validate_tree(g, root), args.k, args.ell).failure_set
        root_label = g.labels[root]
    else:
        if args.root is not None:
            _warn(f"--root ignored: input is a forest with {n_comp} components")
        failed = solve_forest(g, args.k, args.ell)
        root_label = None
    labels = g.label_set(failed)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(g, failed, args.ell))
    _emit(
        args,
        [f"lambda: {len(failed)}", "failure_set: " + " ".join(labels), f"root: {root_label}"],
        {"lambda": len(failed), "failure_set": labels, "root": root_label, "k": args.k, "ell": args.ell},
    )
    return EXIT_OK


def to_dot(g, failed, ell) -> str:
    """Graphviz description with failed, covered, and surviving vertices marked."""
    covered = closed_neighborhood(g, failed, ell)
    comp_of = {}
    for i, (comp, order) in enumerate(surviving_components(g, failed, ell)):
        for v in comp:
            comp_of[v] = (i, order)
    lines = ["graph failset {", "  node [style=filled];"]
    for v, label in enumerate(g.labels):
        if v in failed:
            attrs = 'fillcolor=black, fontcolor=white, status="failed"'
        elif v in covered:
            attrs = 'fillcolor=gray, status="covered"'
        else:
            i, order = comp_of[v]
            attrs = f'fillcolor=white, status="surviving", component={i}, order={order}'
        lines.append(f'  "{label}" [{attrs}];')
    for u, v in g.edges():
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    g = _load(args)
    f = g.ids_of(parse_label_list(_read(args.candidates)))
    bad = first_large_component(Instance(g, args.k, args.ell), f)
    if bad is None:
        _emit(args, ["VALID"], {"valid": True})
        return EXIT_OK
    labels = g.label_set(bad)
    _emit(
        args,
        [f"INVALID: component {{{', '.join(labels)}}} order {len(bad)}"],
        {"valid": False, "component": labels, "order": len(bad)},
    )
    return EXIT_INVALID


def cmd_oracle(args):
    g = _load(args)
    cap = args.cap
    if g.n > cap:
        if not args.force:
            raise OracleRefusal(g.n, cap)
        _warn(f"n={g.n} exceeds the oracle cap {cap}; enumerating anyway")
        cap = None
    res = brute_force_minimum(Instance(g, args.k, args.ell), cap=cap)
    witness = g.label_set(res.witness)
    _emit(
        args,
        [f"minimum: {res.minimum}", "witness: " + " ".join(witness), f"subsets_examined: {res.subsets_examined}"],
        {"minimum": res.minimum, "witness": witness, "subsets_examined": res.subsets_examined,
         "k": args.k, "ell": args.ell},
    )
    return EXIT_OK


def cmd_map(args):
    g = _load(args)
    tree = validate_tree(g, _root_id(g, args))
    inst = Instance(g, args.k, args.ell)
    w = g.ids_of(parse_label_list(_read(args.candidates))) if args.candidates else frozenset(range(g.n))
    mapping = build_mapping(tree, inst, w)
    f = solve_rooted(tree, args.k, args.ell).failure_set
    labels = g.labels
    table = {labels[x]: labels[mapping.m[x]] for x in sorted(w, key=lambda x: labels[x])}
    lines = [f"{src} -> {dst}" for src, dst in table.items()]
    lines.append("image: " + " ".join(g.label_set(mapping.image)))
    lines.append("F: " + " ".join(g.label_set(f)))
    payload = {"mapping": table, "image": g.label_set(mapping.image), "F": g.label_set(f),
               "root": labels[tree.root]}
    status = EXIT_OK
    if first_large_component(inst, w) is not None:
        lines.append("W is not a failure set; lemma checks skipped")
        payload["checked"] = False
    else:
        report = check_mapping_lemmas(tree, inst, w, f)
        lines += [
            f"image is failure set: {report.image_is_failure_set}",
            f"F <= image: {report.contains_f}",
            f"image <= F + root: {report.within_f_and_root}",
            f"|F| <= |W|: {report.cardinality_ok}",
        ]
        lines += [f"violation: {v}" for v in report.violations]
        payload.update(checked=True, ok=report.ok, violations=report.violations)
        status = EXIT_OK if report.ok else EXIT_INVALID
    _emit(args, lines, payload)
    return status


def cmd_gen(args):
    spec = testkit.GenSpec(n=args.n, seed=args.seed, family=args.family)
    graphs = spec.graphs()
    if args.family == "complete-enumeration":
        for i, g in enumerate(graphs):
            sys.stdout.write(f"# tree {i}\n" + format_edge_list(g))
    else:
        sys.stdout.write(format_edge_list(next(graphs)))
    return EXIT_OK


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise InputError(f"bad range {text!r}; expected N or LO..HI") from None


def _props_corpus(args):
    if args.family:
        lo, hi = _parse_range(args.n or "1..15")
        for n in range(lo, hi + 1):
            if args.family == "random-tree":
                yield testkit.random_tree(n, args.seed + n)
            else:
                yield testkit.family(args.family, n)
    elif args.exhaustive:
        for n in range(1, args.n_max + 1):
            yield from testkit.enumerate_trees(n)
    else:
        rng = random.Random(args.seed)
        for _ in range(args.count):
            yield testkit.random_tree(rng.randint(1, args.n_max), rng.getrandbits(64))


def cmd_props(args):
    report = run_suite(_props_corpus(args), ell_max=args.ell_max, seed=args.seed)
    lines = [f"instances: {report.instances}", f"checks: {report.checks}",
             f"violations: {len(report.violations)}"]
    if report.violations:
        lines.append(f"first counterexample: {report.violations[0]}")
    lines.append("PASS" if report.ok and report.instances else "FAIL")
    _emit(args, lines, {"instances": report.instances, "checks": report.checks,
                        "violations": report.violations, "ok": report.ok})
    return EXIT_OK if report.ok and report.instances else EXIT_INVALID


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    problem = argparse.ArgumentParser(add_help=False)
    problem.add_argument("input", help="edge-list file, or - for stdin")
    problem.add_argument("--k", type=int, required=True, help="component threshold")
    problem.add_argument("--ell", type=int, required=True, help="failure distance")

    parser = argparse.ArgumentParser(prog="failset", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[problem, common], help="minimum failure set of a tree or forest")
    p.add_argument("--root", help="root label (default: first vertex)")
    p.add_argument("--dot", help="write a Graphviz file annotating the solution")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[problem, common], help="check a candidate failure set")
    p.add_argument("candidates", help="file with one label per line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[problem, common], help="exhaustive minimum on any graph")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n enumerated without --force")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("map", parents=[problem, common], help="show the fail mapping of a candidate set")
    p.add_argument("--root", help="root label (default: first vertex)")
    p.add_argument("--candidates", help="candidate set file (default: every vertex)")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("gen", help="generate a tree or forest edge list")
    p.add_argument("--family", choices=testkit.FAMILIES, default="random-tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("props", parents=[common], help="check structural properties on generated trees")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100, help="random trees to draw")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--exhaustive", action="store_true", help="every labelled tree up to --n-max")
    p.add_argument("--family", choices=("path", "star", "caterpillar", "random-tree"))
    p.add_argument("--n", help="size or range LO..HI for --family (default 1..15)")
    p.add_argument("--ell-max", type=int, default=3)
    p.set_defaults(func=cmd_props)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except OracleRefusal as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
