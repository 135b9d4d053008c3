"""``normgraphs`` command line.

Every command prints a short human summary followed by one JSON document on
standard output. Exit codes: 0 pass, 1 verification failure, 2 usage or parse
error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from sympy import factorint

from . import group_core as gc
from . import paper_example as pe
from .frobenius import detect_frobenius, disconnection_criterion
from .graph_engine import (
    INF,
    GraphKind,
    ResourceBudgetExceeded,
    CheckpointError,
    build_collapsed_graph,
    component_diameters,
    connected_components,
    diameter,
    export_edge_list,
)
from .cyclic_collapse import build_table, orbits
from .representations import SpecError, build, parse_group_spec
from .verifier import (
    CORPUS_BOUND,
    SUITES,
    CorpusEntry,
    all_passed,
    default_corpus,
    load_corpus,
    run_corpus,
    summary_table,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
THREADS_ENV = "NORMGRAPHS_THREADS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV}={raw!r} is not an integer") from None
    if n < 1:
        raise UsageError(f"{THREADS_ENV} must be positive")
    return n


def _num(d: float):
    return "inf" if d == INF else int(d)


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    spec = parse_group_spec(text)
    return spec, build(spec)


# ---------------------------------------------------------------------------
# commands


def cmd_build_info(args) -> tuple[int, dict, str]:
    spec, G = _load(args.spec)
    soluble = gc.is_soluble(G)
    F = gc.fitting_subgroup(G)
    minimal = [] if G.order == 1 else sorted(M.order for M in gc.minimal_normal_subgroups(G))
    doc: dict[str, Any] = {
        "command": "build-info",
        "status": "pass",
        "spec": args.spec,
        "name": spec.name or G.name,
        "order": G.order,
        "factorisation": {str(p): e for p, e in sorted(factorint(G.order).items())},
        "soluble": soluble,
        "nilpotent": gc.is_nilpotent(G),
        "fitting_order": F.order,
        "minimal_normal_orders": minimal,
    }
    if G.order > 1:
        fs = detect_frobenius(G, fitting=F)
        frob = fs.to_dict()
        if fs.is_frobenius:
            frob["disconnection_criterion"] = disconnection_criterion(fs)
        doc["frobenius"] = frob
    else:
        doc["frobenius"] = {"is_frobenius": False}
    fac = " * ".join(f"{p}^{e}" if e > 1 else p for p, e in doc["factorisation"].items()) or "1"
    lines = [
        f"{doc['name'] or args.spec}: order {G.order} = {fac}",
        f"  soluble {soluble}, nilpotent {doc['nilpotent']}, |F(G)| = {F.order}",
        f"  minimal normal subgroup orders: {minimal}",
        f"  Frobenius: {doc['frobenius']}",
    ]
    return EXIT_OK, doc, "\n".join(lines)


def cmd_graph(args) -> tuple[int, dict, str]:
    kind = GraphKind.parse(args.kind)
    spec, G = _load(args.spec)
    doc: dict[str, Any] = {"command": "graph", "status": "pass", "spec": args.spec, "kind": kind.value, "order": G.order}
    if G.order < 2:
        doc.update(vertices=0, edges=0)
        return EXIT_OK, doc, f"{kind.value} graph of the trivial group is empty"
    table = build_table(G)
    od = orbits(table, G)
    try:
        g = build_collapsed_graph(kind, G, table, od, threads=args.threads, max_edges=args.max_edges)
    except ResourceBudgetExceeded as exc:
        doc.update(status="budget", partial=True, message=str(exc), progress=exc.partial)
        return EXIT_BUDGET, doc, f"budget exceeded: {exc}"
    doc.update(vertices=table.count, orbits=od.count, edges=g.edge_count)
    lines = [f"{kind.value} graph on {G.order - 1} elements: {table.count} cyclic subgroups, {g.edge_count} collapsed edges"]
    if args.diameter:
        d = diameter(g, od)
        doc["diameter"] = _num(d)
        lines.append(f"  diameter: {doc['diameter']}")
    if args.components:
        comps = connected_components(g)
        sizes = [int(g.multiplicity[c].sum()) for c in comps]
        doc["components"] = {
            "count": len(comps),
            "element_counts": sizes,
            "diameters": [_num(d) for d in component_diameters(g, od)],
        }
        lines.append(f"  components: {len(comps)} (element counts {sizes})")
    if args.export:
        export_edge_list(g, args.export)
        doc["export"] = args.export
        lines.append(f"  edge list written to {args.export}")
    return EXIT_OK, doc, "\n".join(lines)


def _suites(raw: list[str] | None) -> list[str]:
    if raw is None:
        return list(SUITES)
    names = [s.strip() for chunk in raw for s in chunk.split(",") if s.strip()]
    if not names:
        raise UsageError("--suite needs at least one suite name")
    if "all" in names:
        return list(SUITES)
    bad = [s for s in names if s not in SUITES]
    if bad:
        raise UsageError(f"unknown suite(s) {bad}; choose from {', '.join(SUITES)}")
    return list(dict.fromkeys(names))


def cmd_verify(args) -> tuple[int, dict, str]:
    suites = _suites(args.suite)
    corpus: list[CorpusEntry] = []
    if args.spec:
        for path in args.spec:
            try:
                spec, _ = _load(path)
                corpus.append(CorpusEntry(spec, spec.name or os.path.basename(path), spec.tags))
            except SpecError as exc:
                corpus.append(CorpusEntry(None, os.path.basename(path), error=str(exc)))
    if args.corpus or not args.spec:
        src = args.corpus or "default"
        if src == "default":
            corpus.extend(default_corpus())
        else:
            try:
                with open(src, encoding="utf-8") as fh:
                    corpus.extend(load_corpus(fh.read()))
            except OSError as exc:
                raise SpecError(f"cannot read corpus {src}: {exc.strerror}") from None
    if args.group:
        wanted = set(args.group)
        corpus = [e for e in corpus if e.name in wanted]
        if not corpus:
            raise UsageError(f"no corpus group named {sorted(wanted)}")
    reports = run_corpus(corpus, suites, threads=args.threads, bound=args.bound)
    ok = all_passed(reports)
    doc = {
        "command": "verify",
        "status": "pass" if ok else "fail",
        "suites": suites,
        "groups": len(corpus),
        "passed": ok,
        "reports": [r.to_dict() for r in reports],
    }
    return (EXIT_OK if ok else EXIT_FAIL), doc, summary_table(reports)


def cmd_paper_example(args) -> tuple[int, dict, str]:
    progress = None
    if args.progress:
        progress = lambda done, total: print(f"  edge blocks {done}/{total}", file=sys.stderr, flush=True)  # noqa: E731
    doc: dict[str, Any] = {"command": "paper-example", "phase": args.phase}
    try:
        r = pe.run(args.phase, threads=args.threads, checkpoint=args.checkpoint, progress=progress)
    except ResourceBudgetExceeded as exc:
        doc.update(status="budget", partial=True, message=str(exc), progress=exc.partial)
        return EXIT_BUDGET, doc, f"budget exceeded: {exc}"
    ok = True
    if args.phase in ("local", "all"):
        ok &= r.local_ok()
    if args.phase in ("diameters", "all"):
        ok &= r.diameters_ok() and all(w["distance"] == 6 and w["path_valid"] for w in r.witness.values())
    doc.update(status="pass" if ok else "fail", result=r.to_dict(timings=args.timings))
    return (EXIT_OK if ok else EXIT_FAIL), doc, pe.summary(r)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="normgraphs", description="Normalising, permuting and related graphs of finite soluble groups.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build-info", help="structural summary of a group spec")
    p.add_argument("spec")
    p.set_defaults(func=cmd_build_info)

    p = sub.add_parser("graph", help="build one graph and report on it")
    p.add_argument("spec")
    p.add_argument("--kind", required=True, choices=[k.value for k in GraphKind])
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--components", action="store_true")
    p.add_argument("--export", metavar="PATH")
    p.add_argument("--threads", type=int)
    p.add_argument("--max-edges", type=int, default=400_000_000)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run verification suites over a corpus")
    p.add_argument("--corpus", metavar="PATH|default")
    p.add_argument("--spec", action="append", metavar="PATH", help="verify a single spec file (repeatable)")
    p.add_argument("--group", action="append", metavar="NAME", help="restrict to named corpus groups")
    p.add_argument("--suite", action="append", metavar="NAMES", help=f"comma-separated; any of {', '.join(SUITES)} or 'all'")
    p.add_argument("--threads", type=int)
    p.add_argument("--bound", type=int, default=CORPUS_BOUND, help="skip groups above this order")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-example", help="reproduce the diameter-6 example of order 562500")
    p.add_argument("--phase", choices=["local", "diameters", "all"], default="all")
    p.add_argument("--threads", type=int)
    p.add_argument("--checkpoint", metavar="PATH")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings in the JSON")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_paper_example)

    for sp in sub.choices.values():
        sp.add_argument("--json", metavar="PATH", dest="json_out", help="also write the JSON document to PATH")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if getattr(args, "threads", 0) is None:
            args.threads = default_threads()
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be positive")
        code, doc, text = args.func(args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"normgraphs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckpointError as exc:
        print(f"normgraphs: checkpoint: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SpecError, ValueError) as exc:
        print(f"normgraphs: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError:
        print("normgraphs: out of memory", file=sys.stderr)
        return EXIT_BUDGET
    out = json.dumps(doc, indent=2, ensure_ascii=False)
    print(text)
    print(out)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
