"""Command-line front end.

Exit codes: 0/1/2 carry the outcome of each command (see ``--help``);
10 = unreadable or malformed input file, 11 = bad flags, 12 = colouring does
not match the graph, 13 = certificate schema mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .avoidance import (
    ARROWS,
    NOT_ARROWS,
    REGISTRY_NAMES,
    STRATEGIES,
    Target,
    decide_arrows,
    encode_arrowing_cnf,
    known_colouring,
    write_cnf_files,
)
from .avoidance.search import avoid_with_stats
from .certificate import (
    SchemaError,
    arrows_document,
    avoid_document,
    dumps,
    sha256_bytes,
    theorem_document,
    verify_document,
)
from .detect import BudgetExhausted, SearchBudget
from .equivalence import MONO_PAIR_FOUND, RAMSEY_REFUTED, theorem_check
from .graph import EdgeColouring, Graph, GraphError, ProblemSpec
from .graphio import GraphFileError, format_graph, parse_graph_text

EXIT_IO = 10
EXIT_USAGE = 11
EXIT_MISMATCH = 12
EXIT_SCHEMA = 13

SOLVER_ENV = "RAMSEY_EQUIV_SOLVER_OUTPUT"


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load(path: str) -> tuple[Graph, EdgeColouring | None, bytes]:
    try:
        data = Path(path).read_bytes()
        G, c = parse_graph_text(data.decode())
    except (OSError, UnicodeDecodeError, GraphFileError, GraphError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    return G, c, data


def _budget(args) -> SearchBudget:
    if args.budget < 1:
        raise UsageError("--budget must be >= 1")
    return SearchBudget(args.budget, args.seed)


def _inputs(G: Graph, data: bytes, **extra) -> dict:
    out = {"graph_file_sha256": sha256_bytes(data), "graph_sha256": G.digest()}
    out.update(extra)
    return out


def cmd_arrows(args) -> int:
    if args.r < 1 or args.n < 2:
        raise UsageError("need r >= 1 and n >= 2")
    G, _, data = _load(args.graph)
    strategy = "external_sat" if args.strategy == "external" else args.strategy
    solver_text = None
    if strategy == "external_sat":
        path = args.solver_output or os.environ.get(SOLVER_ENV)
        if not path:
            raise UsageError(f"--strategy external needs --solver-output or ${SOLVER_ENV}")
        try:
            solver_text = Path(path).read_text()
        except OSError as exc:
            raise InputError(f"{path}: {exc}") from exc
    cert = decide_arrows(G, args.r, args.n, strategy, _budget(args), solver_text)
    params = {"r": args.r, "n": args.n, "strategy": strategy, "max_nodes": args.budget, "seed": args.seed}
    print(dumps(arrows_document(cert, _inputs(G, data), params)), end="")
    return {ARROWS: 0, NOT_ARROWS: 1}.get(cert.outcome, 2)


def cmd_theorem_check(args) -> int:
    try:
        spec = ProblemSpec(args.n, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if spec.r < 3:
        raise UsageError("theorem-check needs r >= 3")
    G, c, data = _load(args.graph)
    extra = {}
    if args.colouring:
        G2, c, cdata = _load(args.colouring)
        extra["colouring_file_sha256"] = sha256_bytes(cdata)
        if G2 != G:
            print("colouring file does not match the graph's edges", file=sys.stderr)
            return EXIT_MISMATCH
    if c is None:
        print("no colouring given: the graph file is uncoloured", file=sys.stderr)
        return EXIT_MISMATCH
    if c.r > spec.r:
        print(f"colouring uses {c.r} colours, expected {spec.r}", file=sys.stderr)
        return EXIT_MISMATCH
    c = c.with_colours(spec.r)
    out = theorem_check(G, c, spec, _budget(args))
    params = {"r": spec.r, "n": spec.n, "max_nodes": args.budget, "seed": args.seed}
    print(dumps(theorem_document(out, c, spec.n, _inputs(G, data, **extra), params)), end="")
    return {MONO_PAIR_FOUND: 0, RAMSEY_REFUTED: 1}.get(out.kind, 2)


def cmd_known(args) -> int:
    try:
        kc = known_colouring(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    text = format_graph(kc.graph, kc.colouring)
    if args.output:
        Path(args.output).write_text(text)
    else:
        print(text, end="")
    return 0


def cmd_verify(args) -> int:
    try:
        doc = json.loads(Path(args.certificate).read_text())
    except OSError as exc:
        raise InputError(f"{args.certificate}: {exc}") from exc
    except json.JSONDecodeError as exc:
        print(f"certificate is not JSON: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    G, _, _ = _load(args.graph)
    try:
        failures = verify_document(doc, G)
    except SchemaError as exc:
        print(f"schema mismatch: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    for f in failures:
        print(f"FAIL {f}", file=sys.stderr)
    if failures:
        return 1
    print(f"OK {len(doc['witnesses'])} witness(es) replayed")
    return 0


def cmd_avoid(args) -> int:
    if args.r < 1:
        raise UsageError("need r >= 1")
    try:
        target = Target.clique(args.clique) if args.clique is not None else Target.pair(args.pair)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    G, _, data = _load(args.graph)
    try:
        col, used = avoid_with_stats(G, args.r, target, _budget(args))
        kind = "found" if col is not None else "absent"
    except BudgetExhausted as exc:
        col, used, kind = None, exc.nodes, "inconclusive"
    params = {"r": args.r, "target": {"kind": target.kind, "n": target.n},
              "max_nodes": args.budget, "seed": args.seed}
    print(dumps(avoid_document(col, kind, target, used, _inputs(G, data), params)), end="")
    return {"found": 0, "absent": 1}.get(kind, 2)


def cmd_encode_cnf(args) -> int:
    if args.r < 1 or args.n < 2:
        raise UsageError("need r >= 1 and n >= 2")
    G, _, _ = _load(args.graph)
    cnf = encode_arrowing_cnf(G, args.r, args.n, args.symmetry_breaking)
    cnf_path, map_path = write_cnf_files(cnf, args.output)
    print(f"wrote {cnf_path} ({cnf.num_vars} vars, {len(cnf.clauses)} clauses) and {map_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ramsey-equiv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def budget_flags(sp):
        sp.add_argument("--budget", type=int, default=1_000_000, help="search node limit")
        sp.add_argument("--seed", type=int, default=0, help="recorded in the certificate")

    a = sub.add_parser("arrows", help="decide G -> (K_n)_r; exit 0 arrows, 1 not, 2 inconclusive")
    a.add_argument("graph")
    a.add_argument("--r", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--strategy", choices=[s for s in STRATEGIES if s != "external_sat"] + ["external"],
                   default="auto")
    a.add_argument("--solver-output", help=f"SAT solver output file (or ${SOLVER_ENV})")
    budget_flags(a)
    a.set_defaults(func=cmd_arrows)

    t = sub.add_parser("theorem-check",
                       help="find a mono K_n+K_(n-1) or refute Ramseyness; exit 0 pair, 1 refuted, 2 inconclusive")
    t.add_argument("graph", help="graph file, coloured unless --colouring is given")
    t.add_argument("--colouring", help="separate coloured file over the same edges")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--r", type=int, required=True)
    budget_flags(t)
    t.set_defaults(func=cmd_theorem_check)

    k = sub.add_parser("known", help="write a registry colouring as a graph file")
    k.add_argument("name", help=", ".join(REGISTRY_NAMES))
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_known)

    v = sub.add_parser("verify", help="replay a certificate; exit 0 iff every witness checks out")
    v.add_argument("certificate")
    v.add_argument("graph")
    v.set_defaults(func=cmd_verify)

    av = sub.add_parser("avoid", help="search a colouring with no mono target; exit 0 found, 1 absent, 2 inconclusive")
    av.add_argument("graph")
    av.add_argument("--r", type=int, required=True)
    grp = av.add_mutually_exclusive_group(required=True)
    grp.add_argument("--clique", type=int, metavar="N")
    grp.add_argument("--pair", type=int, metavar="N", help="avoid K_N + K_(N-1)")
    budget_flags(av)
    av.set_defaults(func=cmd_avoid)

    e = sub.add_parser("encode-cnf", help="write DIMACS CNF and a variable map")
    e.add_argument("graph")
    e.add_argument("--r", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("-o", "--output", required=True)
    e.add_argument("--symmetry-breaking", action="store_true")
    e.set_defaults(func=cmd_encode_cnf)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help exits 0, bad flags exit EXIT_USAGE
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
