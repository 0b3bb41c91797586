"""Command-line front end.

Subcommands: solve, verify, family, orient, perturb, reduce, table,
conjecture.  Exit codes: 0 success, 1 invariant or equivalence violation,
2 parse/usage error, 3 enumeration cap exceeded.  The MODF_MAX_N environment
variable lowers the oracle cap (it can never raise it past 26).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .conjectures import scan_conjecture_bipartite, scan_conjecture_regular
from .core import (
    CapExceededError,
    Digraph,
    Graph,
    SignFunction,
    is_majority_dominating,
    is_minimal_modf,
    is_modf,
    satisfied_set,
)
from .families import FAMILIES, FamilySpec
from .graphio import ParseError, dumps, parse_any, to_dot
from .orientations import orientation_bounds
from .reduction import build_gadget, equivalence_check
from .solver import (
    ORACLE_CAP,
    gamma_maj_undirected,
    gamma_minus,
    solve_gamma_maj_out,
)
from .tables import table_rows
from .transforms import delete_arc, delete_vertex, reverse_arc


def oracle_cap() -> int:
    env = os.environ.get("MODF_MAX_N")
    if env is None:
        return ORACLE_CAP
    return min(ORACLE_CAP, int(env))


def _check_cap(n: int) -> None:
    if n > oracle_cap():
        raise CapExceededError(f"n = {n} exceeds the oracle cap {oracle_cap()}")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _family_from_args(args) -> FamilySpec:
    if args.params is not None:
        params = tuple(int(tok) for tok in args.params.replace(",", " ").split())
    elif args.n is not None:
        params = (args.n,)
    else:
        params = ()
    return FamilySpec(args.family, params)


def _load_graph_or_digraph(args):
    if getattr(args, "family", None):
        return _family_from_args(args).build()
    if not args.input:
        raise ParseError("no input file and no --family given")
    return parse_any(_read_input(args.input))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _parse_positives(args, n: int) -> SignFunction:
    if args.signs is not None:
        if len(args.signs) != n or set(args.signs) - {"+", "-"}:
            raise ParseError(f"--signs must be {n} characters of '+'/'-'")
        return SignFunction(n, [v for v, ch in enumerate(args.signs) if ch == "+"])
    if args.positives is None:
        raise ParseError("need --positives or --signs")
    toks = args.positives.replace(",", " ").split()
    return SignFunction(n, [int(t) for t in toks])


def _cmd_solve(args) -> int:
    g = _load_graph_or_digraph(args)
    if isinstance(g, Digraph):
        problem = args.problem or "modf"
    else:
        problem = args.problem or "majority"

    if problem == "modf":
        if not isinstance(g, Digraph):
            raise ParseError("majority out-domination needs a digraph input")
        if args.method in ("auto", "oracle"):
            _check_cap(g.n)
        res = solve_gamma_maj_out(g, args.method, threads=args.threads)
        name = "gamma_maj_out"
        witness = sorted(res.witness.positives)
    elif problem == "majority":
        if not isinstance(g, Graph):
            raise ParseError("majority domination needs a graph input")
        _check_cap(g.n)
        res = gamma_maj_undirected(g, threads=args.threads)
        name = "gamma_maj"
        witness = sorted(res.witness.positives)
    elif problem == "indom":
        if not isinstance(g, Digraph):
            raise ParseError("in-domination needs a digraph input")
        _check_cap(g.n)
        res = gamma_minus(g)
        name = "gamma_minus"
        witness = list(res.witness)
    else:
        raise ParseError(f"unknown problem {problem!r}")

    payload = {
        "problem": name,
        "n": g.n,
        "optimum": res.optimum,
        "witness_positives": witness,
        "method": res.method,
        "nodes": res.nodes_explored,
    }
    _emit(
        args,
        payload,
        [
            f"problem {name}",
            f"n {g.n}",
            f"optimum {res.optimum}",
            f"witness {' '.join(map(str, witness))}",
            f"method {res.method}",
            f"nodes {res.nodes_explored}",
        ],
    )
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph_or_digraph(args)
    f = _parse_positives(args, g.n)
    if isinstance(g, Digraph):
        ok = is_modf(g, f)
        label = "MODF" if ok else "not a MODF"
        payload = {"is_modf": ok, "weight": f.weight}
        lines = [f"MODF, weight {f.weight}" if ok else "not a MODF"]
        if args.minimal and ok:
            minimal = is_minimal_modf(g, f)
            payload["minimal"] = minimal
            lines.append("minimal" if minimal else "not minimal")
        if args.show_satisfied:
            sat = sorted(satisfied_set(g, f))
            payload["satisfied"] = sat
            lines.append(f"satisfied {' '.join(map(str, sat))}")
    else:
        ok = is_majority_dominating(g, f)
        payload = {"is_majority_dominating": ok, "weight": f.weight}
        lines = [
            f"majority dominating, weight {f.weight}"
            if ok
            else "not majority dominating"
        ]
    _emit(args, payload, lines)
    return 0


def _cmd_family(args) -> int:
    built = _family_from_args(args).build()
    text = to_dot(built) if args.dot else dumps(built)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_orient(args) -> int:
    g = _load_graph_or_digraph(args)
    if not isinstance(g, Graph):
        raise ParseError("orient needs an undirected graph input")
    bounds = orientation_bounds(g, method=args.method, symmetry=args.symmetry)
    payload = {
        "n": g.n,
        "edges": g.edge_count,
        "dom_plus": bounds.dom_plus,
        "DOM_plus": bounds.DOM_plus,
        "orientations": bounds.orientations_enumerated,
        "dom_witness_arcs": bounds.dom_orientation.arcs(),
        "dom_witness_positives": sorted(bounds.dom_function.positives),
        "max_witness_arcs": bounds.max_orientation.arcs(),
    }
    _emit(
        args,
        payload,
        [
            f"dom_plus {bounds.dom_plus}",
            f"DOM_plus {bounds.DOM_plus}",
            f"orientations {bounds.orientations_enumerated}",
            f"dom_witness_arcs {bounds.dom_orientation.arcs()}",
            f"dom_witness_positives {sorted(bounds.dom_function.positives)}",
            f"max_witness_arcs {bounds.max_orientation.arcs()}",
        ],
    )
    return 0


def _cmd_perturb(args) -> int:
    g = _load_graph_or_digraph(args)
    if not isinstance(g, Digraph):
        raise ParseError("perturb needs a digraph input")
    violations = 0
    entries = []
    lines = []
    for edit in args.edit or []:
        toks = edit.replace(",", " ").split()
        before = solve_gamma_maj_out(g, args.method).optimum
        if toks[0] == "reverse" and len(toks) == 3:
            u, v = int(toks[1]), int(toks[2])
            sink = None
            g2 = reverse_arc(g, u, v)
        elif toks[0] == "delete" and len(toks) == 3:
            u, v = int(toks[1]), int(toks[2])
            sink = None
            g2 = delete_arc(g, u, v)
        elif toks[0] == "drop" and len(toks) == 2:
            v = int(toks[1])
            sink = g.out_degree(v) == 0
            g2 = delete_vertex(g, v)
        else:
            raise ParseError(f"bad edit {edit!r}: use 'reverse u v', 'delete u v', 'drop v'")
        after = solve_gamma_maj_out(g2, args.method).optimum
        delta = after - before
        if toks[0] in ("reverse", "delete"):
            ok = abs(delta) <= 2
            bound = "|delta|<=2 " + ("ok" if ok else "VIOLATED")
        elif sink:
            ok = after >= before - 1
            bound = "sink bound " + ("ok" if ok else "VIOLATED")
        else:
            ok = True
            bound = "no bound (positive out-degree)"
        if not ok:
            violations += 1
        entries.append(
            {"edit": edit, "before": before, "after": after, "delta": delta, "bound_ok": ok}
        )
        lines.append(f"{edit}: gamma {before} -> {after} (delta {delta:+d}) {bound}")
        g = g2
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(dumps(g))
    _emit(args, {"edits": entries, "violations": violations}, lines)
    return 1 if violations else 0


def _cmd_reduce(args) -> int:
    g = _load_graph_or_digraph(args)
    if not isinstance(g, Digraph):
        raise ParseError("reduce needs a digraph input")
    inst = build_gadget(g, args.k)
    lines = [
        f"gadget order {inst.gadget.n}",
        f"d {inst.d}",
        f"x_set {list(inst.x_set)}",
        f"threshold {inst.weight_threshold}",
    ]
    payload = {
        "order": inst.gadget.n,
        "d": inst.d,
        "x_set": list(inst.x_set),
        "threshold": inst.weight_threshold,
    }
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(dumps(inst.gadget))
    status = 0
    if args.check:
        if inst.gadget.n > oracle_cap():
            raise CapExceededError(
                f"gadget order {inst.gadget.n} exceeds the oracle cap {oracle_cap()}"
            )
        report = equivalence_check(g, args.k)
        payload.update(
            {
                "gamma_minus": report.gamma_minus_value,
                "in_domination_holds": report.in_domination_holds,
                "gamma_gadget": report.gamma_gadget,
                "modf_holds": report.modf_holds,
                "agree": report.agree,
                "structural_ok": report.structural_ok,
            }
        )
        lines += [
            f"gamma_minus {report.gamma_minus_value} (<= k: {report.in_domination_holds})",
            f"gamma_gadget {report.gamma_gadget} (<= threshold: {report.modf_holds})",
            f"agree {report.agree}",
            f"structural_ok {report.structural_ok}",
        ]
        if not report.agree or not report.structural_ok:
            status = 1
    _emit(args, payload, lines)
    return status


def _cmd_table(args) -> int:
    rows = table_rows(args.max_n)
    mismatches = 0
    lines = []
    entries = []
    for row in rows:
        mark = "MATCH" if row.match else "MISMATCH"
        if not row.match:
            mismatches += 1
        lines.append(
            f"{row.family:32s} {row.quantity:12s} formula={row.predicted:3d}"
            f" computed={row.computed:3d} {mark}"
        )
        entries.append(
            {
                "family": row.family,
                "quantity": row.quantity,
                "predicted": row.predicted,
                "computed": row.computed,
                "match": row.match,
            }
        )
    lines.append(f"rows {len(rows)}, mismatches {mismatches}")
    _emit(args, {"rows": entries, "mismatches": mismatches}, lines)
    return 1 if mismatches else 0


def _cmd_conjecture(args) -> int:
    if args.which == "regular":
        report = scan_conjecture_regular(
            args.max_n, source=args.source, seed=args.seed, instances=args.count
        )
    else:
        report = scan_conjecture_bipartite(args.max_rs, max_product=args.max_product)
    payload = {
        "conjecture": report.conjecture_id,
        "instances_checked": report.instances_checked,
        "status": report.status,
        "counterexample": report.counterexample,
    }
    lines = [
        f"conjecture {report.conjecture_id}",
        f"instances_checked {report.instances_checked}",
        f"status {report.status}",
    ]
    if report.counterexample is not None:
        lines.append(f"counterexample {report.counterexample}")
    _emit(args, payload, lines)
    return 0


def _add_io_flags(p: argparse.ArgumentParser, with_family: bool = True) -> None:
    p.add_argument("input", nargs="?", help="edge-list file, or - for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")
    if with_family:
        p.add_argument("--family", choices=sorted(FAMILIES), help="build a family instead of reading a file")
        p.add_argument("--n", type=int, help="single integer family parameter")
        p.add_argument("--params", help="comma-separated family parameters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majdom",
        description="Exact majority out-domination computations on small digraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="optimise gamma_maj_out / gamma_maj / gamma_minus")
    _add_io_flags(p)
    p.add_argument("--problem", choices=("modf", "majority", "indom"))
    p.add_argument("--method", choices=("auto", "oracle", "bb"), default="auto")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a sign function against a graph")
    _add_io_flags(p)
    p.add_argument("--positives", help="comma-separated +1 vertices")
    p.add_argument("--signs", help="sign vector such as +-++-")
    p.add_argument("--minimal", action="store_true", help="also test minimality")
    p.add_argument("--show-satisfied", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("family", help="emit a generated family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--params")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of edge list")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("orient", help="dom_plus / DOM_plus over all orientations")
    _add_io_flags(p)
    p.add_argument("--symmetry", choices=("none", "stars"), default="none")
    p.add_argument("--method", choices=("auto", "oracle", "bb"), default="auto")
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("perturb", help="apply edits and report gamma shifts")
    _add_io_flags(p)
    p.add_argument("--edit", action="append", help="'reverse u v', 'delete u v', or 'drop v'")
    p.add_argument("--method", choices=("auto", "oracle", "bb"), default="auto")
    p.add_argument("--emit", help="write the final digraph to a file")
    p.set_defaults(func=_cmd_perturb)

    p = sub.add_parser("reduce", help="build the hardness gadget, optionally verify it")
    _add_io_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit", help="write the gadget edge list to a file")
    p.add_argument("--check", action="store_true", help="run the equivalence check")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("table", help="formula vs solver across all families")
    p.add_argument("--max-n", type=int, default=12, dest="max_n")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("conjecture", help="run an evidence scanner")
    p.add_argument("which", choices=("regular", "bipartite"))
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--source", choices=("all_tournaments", "random_regular_underlying"),
                   default="all_tournaments")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--max-rs", type=int, default=4, dest="max_rs")
    p.add_argument("--max-product", type=int, default=12, dest="max_product")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
