"""Command-line front end.

Subcommands: analyze (one graph6 line to a JSON record), survey (bulk
graph6 stream to streaming JSON + TSV summary), verify (theorem suites),
construct (family graphs with chain certificates), enumerate (in-tree
oracle for n <= 7).

Exit codes: 0 success, 1 input error, 2 domain error, 3 internal assertion
(a structural identity or theorem check failed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import DomainError, InputError, StructureError
from .families import (
    FAMILY_NAMES,
    FIXTURE_NAMES,
    GluingSpec,
    bipartite_base_family,
    f5_example,
    family_chain,
    fixture,
    glue,
    glue_preserves_chain,
    k44_plus_k1,
)
from .graphs import Graph, encode_graph6, parse_graph6
from .survey import (
    DEFAULT_SEED,
    analysis_record,
    rows_to_tsv,
    run_survey,
)
from .verify import SUITES, run_suite

_NAMED_GRAPHS = {
    "K1": (1, []),
    "K2": (2, [(1, 2)]),
    "P3": (3, [(1, 2), (2, 3)]),
    "K3": (3, [(1, 2), (2, 3), (1, 3)]),
    "C3": (3, [(1, 2), (2, 3), (1, 3)]),
    "C4": (4, [(1, 2), (2, 3), (3, 4), (1, 4)]),
    "P4": (4, [(1, 2), (2, 3), (3, 4)]),
    "K4": (4, [(i, j) for i in range(1, 5) for j in range(i + 1, 5)]),
    "C5": (5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
    "C6": (6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]),
    "K44": (8, [(i, j) for i in range(1, 5) for j in range(5, 9)]),
}


def named_graph(name: str) -> Graph:
    if name in _NAMED_GRAPHS:
        n, edges = _NAMED_GRAPHS[name]
        return Graph.from_edges(n, edges)
    if name.startswith("graph6:"):
        return parse_graph6(name[len("graph6:"):])
    if name in FIXTURE_NAMES:
        return fixture(name)
    raise InputError(
        f"unknown graph {name!r}; use one of {sorted(_NAMED_GRAPHS)}, a "
        f"fixture name, or graph6:<line>"
    )


def _read_lines(path: str):
    if path == "-":
        return [ln.rstrip("\n") for ln in sys.stdin]
    with open(path, "r", encoding="ascii") as fh:
        return [ln.rstrip("\n") for ln in fh]


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SEED")
    return int(env) if env else DEFAULT_SEED


def cmd_analyze(args) -> int:
    lines = [s for s in _read_lines(args.input) if s.strip()]
    if not lines:
        raise InputError("no graph6 input")
    for line in lines:
        g = parse_graph6(line)
        if not g.is_connected():
            raise DomainError(f"graph {line.strip()!r} is not connected")
        record = analysis_record(
            g,
            matrices=args.matrix,
            with_chains=args.chains,
            dump_matrices=args.dump_matrices,
        )
        print(json.dumps(record, sort_keys=True))
    return 0


def cmd_survey(args) -> int:
    lines = [s for s in _read_lines(args.input) if s.strip()]
    sink = None
    if not args.no_stream:
        sink = lambda rec: print(json.dumps(rec, sort_keys=True))  # noqa: E731
    rows, malformed = run_survey(
        lines,
        certify=args.certify,
        jobs=args.jobs,
        seed=_seed(args),
        sink=sink,
    )
    sys.stdout.write(rows_to_tsv(rows))
    print(json.dumps({n: row.to_json() for n, row in sorted(rows.items())},
                     sort_keys=True))
    if malformed:
        print(f"{malformed} malformed line(s) skipped", file=sys.stderr)
        return 1
    return 0


def cmd_enumerate(args) -> int:
    from .smallgraphs import enumerate_small

    for line in enumerate_small(args.n):
        print(line)
    return 0


def cmd_verify(args) -> int:
    ok, checks = run_suite(args.suite, seed=_seed(args), samples=args.samples)
    for name, passed, detail in checks:
        status = "pass" if passed else "FAIL"
        suffix = f"  ({detail})" if detail else ""
        print(f"{status}  {name}{suffix}")
    print(f"{'pass' if ok else 'FAIL'}  suite={args.suite}")
    return 0 if ok else 3


def cmd_construct(args) -> int:
    if args.what == "fixture":
        g = fixture(args.name)
        record = {"name": args.name, "graph6": encode_graph6(g)}
        if args.name in FAMILY_NAMES:
            fam = family_chain(args.name)
            cert = fam.to_json()
            cert["graph6"] = record["graph6"]
            record["certificate"] = cert
        elif args.name == "fig5b":
            from .jordan import extract_chain
            from .nbmatrices import build_K

            chain = extract_chain(build_K(g), (2, 1, 1), 3, "K")
            if chain is None:
                raise StructureError("expected a length-3 chain on fig5b")
            record["certificate"] = {"chain": chain.to_json()}
        print(json.dumps(record, sort_keys=True))
        return 0
    if args.what == "bipartite":
        g4 = named_graph(args.g)
        h = named_graph(args.h)
        if args.attach:
            attach = [
                (int(p) - 1, int(q) - 1)
                for p, q in (pair.split(":") for pair in args.attach.split(","))
            ]
        elif h.n == 1:
            attach = [(i, 0) for i in range(g4.n)]
        else:
            raise InputError("--attach is required when H has several vertices")
        glued, fam = bipartite_base_family(g4, h, attach)
        cert = fam.to_json()
        cert["graph6"] = encode_graph6(glued)
        print(json.dumps({"graph6": encode_graph6(glued), "certificate": cert},
                         sort_keys=True))
        return 0
    if args.what == "glue":
        base = family_chain(args.base)
        h = named_graph(args.h)
        xs = [int(t) for t in args.at.split(",")]
        x_list = []
        for t in xs:
            if not 1 <= t <= len(base.zero_support):
                raise InputError(
                    f"--at index {t} out of range; {args.base} has "
                    f"{len(base.zero_support)} gluing vertices"
                )
            x_list.append(base.zero_support[t - 1])
        if args.h_at:
            y_list = [int(t) - 1 for t in args.h_at.split(",")]
        else:
            y_list = list(range(len(x_list)))
        glued, chain = glue_preserves_chain(base, x_list, h, y_list)
        record = {
            "graph6": encode_graph6(glued),
            "base": args.base,
            "certificate": {"chain": chain.to_json()},
        }
        print(json.dumps(record, sort_keys=True))
        return 0
    raise InputError(f"unknown construct mode {args.what!r}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="nbjordan",
        description="Exact Jordan-structure analysis of the non-backtracking "
        "matrix and its companions",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze graph6 line(s) to JSON")
    p.add_argument("input", nargs="?", default="-", help="file or - for stdin")
    p.add_argument("--matrix", choices=("K", "B", "M", "all"), default="K")
    p.add_argument("--chains", action="store_true",
                   help="attach chain certificates for defective factors")
    p.add_argument("--dump-matrices", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("survey", help="bulk survey over a graph6 stream")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--certify", choices=("always", "defects"), default="defects")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--no-stream", action="store_true",
                   help="suppress per-graph JSON lines")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("enumerate",
                       help="connected min-degree-2 graphs on n <= 7 vertices")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a theorem verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=25)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit family graphs + certificates")
    psub = p.add_subparsers(dest="what", required=True)
    pf = psub.add_parser("fixture", help="named example graph")
    pf.add_argument("name", choices=FIXTURE_NAMES)
    pb = psub.add_parser("bipartite", help="4-regular bipartite base family")
    pb.add_argument("--g", required=True, help="base graph (e.g. K44)")
    pb.add_argument("--h", required=True, help="attachment graph (e.g. K1)")
    pb.add_argument("--attach", default=None,
                    help="comma list of base:target vertex pairs (1-based)")
    pg = psub.add_parser("glue", help="glue H onto a family base")
    pg.add_argument("--base", required=True, choices=FAMILY_NAMES)
    pg.add_argument("--h", required=True)
    pg.add_argument("--at", required=True,
                    help="comma list of 1-based indices into the gluing set")
    pg.add_argument("--h-at", dest="h_at", default=None,
                    help="comma list of 1-based H vertices (default 1..k)")
    p.set_defaults(func=cmd_construct)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except StructureError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
