"""Command line interface: ``classes``, ``graph``, ``verify`` and ``suite``.

Exit status is 0 when no check failed, 1 when some check failed and 2 on a
usage error (bad arguments, unparsable spec, unreadable file).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .cache import ProfileCache
from .classes import conjugacy_classes
from .constructors import SpecError, build_group, parse_spec
from .corpus import load_corpus
from .graphs import bipartite_divisor, delta_p, gamma, gamma_p, metrics, to_dot
from .report import dump_json, results_csv, suite_document
from .verify import ALL_CHECKS, SuiteConfig, run_suite

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _prime_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(t) for t in text.split(",") if t.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated primes, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for the randomized subgroup searches")
    common.add_argument("--no-cache", action="store_true", help="bypass the profile cache")

    ap = argparse.ArgumentParser(prog="cdgraph", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classes", parents=[common], help="print cs(G) and the classes")
    c.add_argument("spec")

    g = sub.add_parser("graph", parents=[common], help="build a divisor graph")
    g.add_argument("spec")
    g.add_argument("--kind", choices=["gamma", "gamma_p", "delta_p", "bipartite"], default="gamma")
    g.add_argument("--p", type=int)
    g.add_argument("--dot", help="write Graphviz text to this file ('-' for stdout)")

    v = sub.add_parser("verify", parents=[common], help="run checks on one group")
    v.add_argument("spec")
    v.add_argument("--check", action="append", choices=ALL_CHECKS,
                   help="check id (repeatable; default: all)")
    v.add_argument("--p", type=int, help="prime for the graph checks (default: sweep)")
    v.add_argument("--pi", type=_prime_list, help="prime set for theorem_D, e.g. 2,3 (default: sweep)")
    v.add_argument("--budget", type=int, help="subgroup search budget")
    v.add_argument("--json", help="write the report document to this file")

    s = sub.add_parser("suite", parents=[common], help="run every check over a corpus")
    s.add_argument("--corpus", required=True, help="builtin corpus name (builtin, T1, T2, ...) or file")
    s.add_argument("--report", required=True, help="JSON report path")
    s.add_argument("--csv", help="also write a CSV summary")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (parallel across groups)")
    s.add_argument("--check", action="append", choices=ALL_CHECKS)
    s.add_argument("--no-timing", action="store_true", help="omit the timing section")
    return ap


def _cache(args) -> ProfileCache:
    return ProfileCache(enabled=not args.no_cache)


def _build(spec: str):
    try:
        return build_group(parse_spec(spec))
    except (SpecError, FileNotFoundError) as exc:
        raise UsageError(str(exc)) from None


def cmd_classes(args) -> int:
    G = _build(args.spec)
    summ = _cache(args).summary(G, str(parse_spec(args.spec)))
    sizes = summ["class_sizes"]
    print(f"group {summ['spec']}  order {summ['order']}  degree {summ['degree']}")
    print("cs(G) = {" + ", ".join(map(str, sorted(set(sizes)))) + "}")
    print("class sizes: " + ",".join(map(str, sizes)))
    for i, (size, order, rep, word) in enumerate(zip(
            sizes, summ["element_orders"], summ["representatives"], summ["representative_words"])):
        print(f"  {i:3d}  size {size:6d}  order {order:4d}  {rep}  [{word}]")
    return EXIT_OK


def cmd_graph(args) -> int:
    G = _build(args.spec)
    prof = conjugacy_classes(G)
    if args.kind != "gamma" and args.p is None:
        raise UsageError(f"--kind {args.kind} needs --p")
    graph = {"gamma": lambda: gamma(prof), "gamma_p": lambda: gamma_p(prof, args.p),
             "delta_p": lambda: delta_p(prof, args.p),
             "bipartite": lambda: bipartite_divisor(prof, args.p)}[args.kind]()
    m = metrics(graph)
    label = args.kind if args.kind == "gamma" else f"{args.kind} p={args.p}"
    print(f"{label} of {G.name}")
    if args.kind == "bipartite":
        print(f"  primes: {graph.prime_side}  sizes: {graph.size_side}")
        print(f"  edges: {graph.edges}")
    else:
        print(f"  vertices: {graph.vertices}")
        print(f"  edges: {sorted((graph.vertices[i], graph.vertices[j]) for i, j in graph.edges)}")
    print(f"  components: {m.component_count}  {m.components}")
    print(f"  diameters: {m.diameters}  complete: {m.is_complete}  regular degree: {m.regular_degree}")
    if args.dot:
        text = to_dot(graph, name=G.name or "G")
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            Path(args.dot).write_text(text)
    return EXIT_OK


def _config(args, checks=None) -> SuiteConfig:
    cfg = SuiteConfig(checks=checks, seed=args.seed)
    if getattr(args, "budget", None):
        cfg.search_budget = args.budget
    return cfg


def cmd_verify(args) -> int:
    G = _build(args.spec)
    checks = args.check or ALL_CHECKS
    cfg = _config(args, checks)
    if args.p is not None:
        cfg.primes = [args.p]
    if args.pi is not None:
        cfg.pi_sets = [args.pi]
    reports = run_suite(G, cfg)
    for r in reports:
        where = "" if r.p is None else f" p={r.p}"
        where += "" if r.pi is None else " pi={" + ",".join(map(str, r.pi)) + "}"
        note = f"  ({r.hypothesis})" if r.hypothesis else ""
        print(f"{r.check_id}{where}: {r.status}{note}")
        for w in r.witnesses:
            print(f"    witness: {w}")
    if args.json:
        summ = _cache(args).summary(G, str(parse_spec(args.spec)))
        dump_json(suite_document(args.spec, [summ], reports, args.seed), args.json)
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


def _suite_one(spec: str, cfg: SuiteConfig, use_cache: bool):
    G = build_group(spec)
    summ = ProfileCache(enabled=use_cache).summary(G, spec)
    return summ, run_suite(G, cfg)


def cmd_suite(args) -> int:
    try:
        specs = load_corpus(args.corpus)
    except (FileNotFoundError, SpecError) as exc:
        raise UsageError(str(exc)) from None
    for s in specs:
        parse_spec(s)
    cfg = _config(args, args.check)
    use_cache = not args.no_cache
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_suite_one, specs, [cfg] * len(specs), [use_cache] * len(specs)))
    else:
        results = [_suite_one(s, cfg, use_cache) for s in specs]
    groups = [summ for summ, _ in results]
    reports = [r for _, reps in results for r in reps]
    doc = suite_document(args.corpus, groups, reports, args.seed, timing=not args.no_timing)
    dump_json(doc, args.report)
    if args.csv:
        results_csv(reports, args.csv)
    counts = doc["summary"]["by_status"]
    print(f"{len(groups)} groups, {len(reports)} reports: "
          + ", ".join(f"{k} {v}" for k, v in counts.items()))
    for r in reports:
        if r.status == "fail":
            print(f"FAIL {r.group_name} {r.check_id} p={r.p} pi={r.pi}: {r.witnesses[:1]}")
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handler = {"classes": cmd_classes, "graph": cmd_graph, "verify": cmd_verify, "suite": cmd_suite}
    try:
        return handler[args.command](args)
    except UsageError as exc:
        print(f"cdgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
