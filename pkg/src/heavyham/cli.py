"""``heavyham`` command line.

Exit codes: 0 clean run, 1 counterexample found, 2 usage or input error.
Graph inputs are file paths (edge list, or graph6 for ``.g6``) or
``construct:F(5)`` / ``construct:Gprime(15)`` pseudo-paths.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import composed, harness, ore
from .constructions import build_family
from .cycles import DEFAULT_BUDGET, find_hamiltonian_cycle, verify_cycle
from .graph import Graph, GraphError, heavy_rows, is_two_connected
from .io import encode_graph6, format_edgelist, read_graph, read_graphs
from .patterns import CLI_PATTERN_NAMES, find_light_embedding, is_free, parse_pattern_list

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_CONSTRUCT = re.compile(r"construct:\s*([A-Za-z']+)\s*\(\s*(\d+)\s*\)")


def load_graph(spec: str, fmt: str | None = None) -> Graph:
    m = _CONSTRUCT.fullmatch(spec.strip())
    if m:
        return build_family(m.group(1), int(m.group(2))).graph
    if spec.startswith("construct:"):
        raise UsageError(f"bad construction {spec!r}; use construct:F(r) or construct:Gprime(r)")
    return read_graph(spec, fmt)


def load_graphs(spec: str) -> list[Graph]:
    if spec.startswith("construct:"):
        return [load_graph(spec)]
    return read_graphs(spec)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in re.split(r"[,\s]+", text.strip()) if t]
    except ValueError:
        raise UsageError(f"expected a comma-separated vertex list, got {text!r}") from None


def _span(text: str, cast):
    parts = text.split("-") if cast is int else re.split(r"(?<=\d)-", text)
    try:
        vals = [cast(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if len(vals) == 1:
        return (vals[0], vals[0])
    if len(vals) != 2 or vals[0] > vals[1]:
        raise UsageError(f"bad range {text!r}")
    return tuple(vals)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- commands -------------------------------------------------------------------


def cmd_check(args) -> int:
    g = load_graph(args.input, args.input_format)
    pats = parse_pattern_list(args.patterns) if args.patterns else []
    hr = heavy_rows(g)
    rows = []
    for p in pats:
        light = find_light_embedding(g, p, hr)
        entry = {"pattern": str(p), "free": is_free(g, p), "heavy": light is None}
        if light is not None:
            entry["light_copy"] = list(light.subset)
        rows.append(entry)
    payload = {"n": g.n, "m": g.num_edges(), "two_connected": is_two_connected(g), "patterns": rows}
    lines = [f"n={g.n} m={g.num_edges()} 2-connected={payload['two_connected']}"]
    for e in rows:
        extra = f" light copy on {e['light_copy']}" if "light_copy" in e else ""
        lines.append(f"  {e['pattern']}: free={e['free']} heavy={e['heavy']}{extra}")
    if args.hamiltonian:
        if g.n < 3:
            ham = {"status": "too_small"}
        else:
            res = find_hamiltonian_cycle(g, args.budget)
            ham = {"status": res.status.value, "expansions": res.expansions}
            if res.found:
                ham["cycle"] = list(res.cycle)
        payload["hamiltonicity"] = ham
        desc = ham["status"]
        if "cycle" in ham:
            desc += " " + " ".join(map(str, ham["cycle"]))
        elif ham["status"] == "not_hamiltonian":
            desc += f" (search exhausted after {ham['expansions']} expansions)"
        lines.append(f"  hamiltonicity: {desc}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _spec_from(args) -> harness.ImplicationSpec:
    spec = harness.ImplicationSpec.parse(args.heavy or "", args.free or "", not args.allow_cut_vertices)
    if not spec.heavy and not spec.free and not spec.require_two_connected:
        raise UsageError("give at least one hypothesis (--heavy, --free or 2-connectivity)")
    return spec


def _source_from(args):
    chosen = [x is not None for x in (args.exhaustive, args.random, args.from_path)]
    if sum(chosen) != 1:
        raise UsageError("choose exactly one source: --exhaustive N, --random COUNT or --from PATH")
    if args.exhaustive is not None:
        return harness.Exhaustive(args.exhaustive, dedup=args.dedup)
    if args.random is not None:
        if args.n is None:
            raise UsageError("--random needs --n (a size or a range such as 8-12)")
        n = _span(args.n, int)
        if n[0] < 3:
            raise UsageError("--n must be at least 3")
        return harness.RandomSource(args.random, n, _span(args.p, float), args.seed)
    return harness.Ingest(tuple(load_graphs(args.from_path)), args.from_path)


def _report(args, report: harness.SurveyReport) -> int:
    lines = [report.summary()]
    for rec in report.counterexamples:
        edges = " ".join(f"{a}-{b}" for a, b in rec.graph.edges())
        lines.append(f"  counterexample #{rec.index}: n={rec.graph.n} edges {edges}")
    _emit(args, report.to_json(), "\n".join(lines))
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def cmd_survey(args) -> int:
    spec = _spec_from(args)
    source = _source_from(args)
    report = harness.survey(spec, source, args.budget, args.jobs)
    return _report(args, report)


def cmd_search_problem2(args) -> int:
    lo, hi = _span(args.n, int)
    try:
        report = harness.search_problem2(
            range(lo, hi + 1), args.count, args.seed, args.budget, _span(args.p, float), args.jobs
        )
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    return _report(args, report)


def cmd_construct(args) -> int:
    inst = build_family(args.family, args.r)
    g = inst.graph
    if args.format == "g6":
        print(encode_graph6(g))
    elif args.format == "json":
        payload = {"n": g.n, "edges": [list(e) for e in g.edges()], "labels": inst.labels}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(format_edgelist(g, f"{args.family}({args.r})"), end="")
    return EXIT_OK


def cmd_repair(args) -> int:
    g = load_graph(args.input, args.input_format)
    seq = _ints(args.cycle)
    steps: list[tuple[list[int], int]] = []
    try:
        cycle = ore.repair(g, seq, trace=lambda s, d: steps.append((s, d)))
    except ore.NotOreSequence as exc:
        _emit(args, {"ok": False, "error": str(exc)}, f"not an o-cycle: {exc}")
        return EXIT_USAGE
    payload = {
        "ok": True,
        "input": seq,
        "cycle": list(cycle),
        "deficits": [d for _, d in steps],
    }
    text = "deficits " + " -> ".join(str(d) for _, d in steps) + "\ncycle " + " ".join(map(str, cycle))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_compose(args) -> int:
    g = load_graph(args.input, args.input_format)
    triple = _ints(args.triple)
    if len(triple) != 3:
        raise UsageError("--triple takes exactly three vertices u,v,w")
    u, v, w = triple
    try:
        seq = composed.recognize_composed(g, u, v, w)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if seq is None:
        _emit(args, {"composed": False}, f"not ({u},{v},{w})-composed")
        return EXIT_OK
    payload = {
        "composed": True,
        "k": seq.k,
        "l": seq.ell,
        "steps": [str(s) for s in seq.steps],
        "ordering": seq.ordering(),
        "hamilton_path_left": list(composed.hamilton_path_left(seq)),
    }
    lines = [f"({u},{v},{w})-composed: k={seq.k} l={seq.ell}", "  start: triangle v-1 v0 v1"]
    lines += [f"  {i + 1}. {s}" for i, s in enumerate(seq.steps)]
    lines.append("  ordering v-k..vl: " + " ".join(map(str, seq.ordering())))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_merge(args) -> int:
    try:
        with open(args.fixture) as fh:
            data = json.load(fh)
        g = Graph.from_edges(data["n"], [tuple(e) for e in data["edges"]])
        c, r = data["cycle"], data["ear"]
        x1, x2 = data["x_pair"]
        y1, y2 = data["y_pair"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad merge fixture: {exc}") from None
    wx = composed.find_good_pair(g, c, r[0], x1, x2)
    wy = composed.find_good_pair(g, c, r[-1], y1, y2)
    if wx is None or wy is None:
        raise UsageError("fixture pairs are not good on the cycle")
    rep = composed.merge_via_good_pairs(g, c, r, wx, wy, report=True)
    ok = verify_cycle(g, rep.cycle) and set(rep.cycle) >= set(c) | set(r)
    payload = {"case": rep.case, "cycle": list(rep.cycle), "closing_path": list(rep.closing_path), "verified": ok}
    text = f"case {rep.case}\ncycle " + " ".join(map(str, rep.cycle)) + f"\nverified {ok}"
    _emit(args, payload, text)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _common(p, formats=("text", "json"), default="text"):
    p.add_argument("--format", choices=formats, default=default)


def _graph_input(p):
    p.add_argument("input", help="graph file or construct:F(5) / construct:Gprime(15)")
    p.add_argument("--input-format", choices=("edgelist", "g6"), help="override suffix detection")


def _survey_flags(p):
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node expansions per Hamiltonicity search")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heavyham", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="2-connectivity, pattern heaviness and Hamiltonicity of one graph")
    _graph_input(p)
    p.add_argument("--patterns", help="comma list from: " + " ".join(CLI_PATTERN_NAMES))
    p.add_argument("--hamiltonian", action="store_true", help="run the exact Hamiltonicity search")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="test a heavy/free => Hamiltonian implication over a graph stream")
    p.add_argument("--heavy", help="patterns required to be heavy, e.g. K1,3,W")
    p.add_argument("--free", help="patterns required to be absent")
    p.add_argument("--allow-cut-vertices", action="store_true", help="drop the 2-connectivity hypothesis")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all labeled graphs with n <= N (N <= 7)")
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class in exhaustive mode")
    p.add_argument("--random", type=int, metavar="COUNT", help="COUNT random 2-connected graphs")
    p.add_argument("--n", help="vertex count or range for --random, e.g. 8-12")
    p.add_argument("--p", default="0.3-0.9", help="edge probability or range for --random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--from", dest="from_path", metavar="PATH", help="graph6 file (one graph per line) or edge list")
    _survey_flags(p)
    _common(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("search-problem2", help="random search for a {K1,3,Z3}-heavy non-Hamiltonian graph, n >= 10")
    p.add_argument("--count", type=int, default=100_000)
    p.add_argument("--n", default="10-12")
    p.add_argument("--p", default="0.3-0.9")
    p.add_argument("--seed", type=int, default=0)
    _survey_flags(p)
    _common(p)
    p.set_defaults(func=cmd_search_problem2)

    p = sub.add_parser("construct", help="emit F(r) or G'(r)")
    p.add_argument("family", help="F or Gprime")
    p.add_argument("r", type=int)
    _common(p, ("edgelist", "g6", "json"), "edgelist")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("repair", help="turn an o-cycle into a genuine cycle")
    _graph_input(p)
    p.add_argument("--cycle", required=True, help="cyclic vertex sequence, e.g. 0,1,2,3")
    _common(p)
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("compose", help="find a canonical sequence for a (u,v,w) triple")
    _graph_input(p)
    p.add_argument("--triple", required=True, help="u,v,w")
    _common(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("merge", help="run a good-pair cycle merge from a JSON fixture")
    p.add_argument("fixture")
    _common(p)
    p.set_defaults(func=cmd_merge)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"heavyham {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
