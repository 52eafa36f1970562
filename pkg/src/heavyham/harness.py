"""Survey harness: stream graphs, test heavy/free => Hamiltonian implications,
collect re-checkable counterexamples.

Graph sources are index-addressable so a stream can be cut into contiguous
shards for worker processes; reports fold back in index order, so the
result does not depend on the number of workers.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator, Sequence

from .cycles import DEFAULT_BUDGET, Status, find_hamiltonian_cycle
from .graph import Graph, GraphError, heavy_rows, is_two_connected
from .patterns import PatternId, as_graph, find_light_embedding, is_free, parse_pattern_list

LABELED_CAP = 7


class SamplingError(RuntimeError):
    pass


# -- specs and outcomes ------------------------------------------------------


@dataclass(frozen=True)
class ImplicationSpec:
    """Hypotheses of a ``... => Hamiltonian`` statement."""

    heavy: tuple[PatternId, ...] = ()
    free: tuple[PatternId, ...] = ()
    require_two_connected: bool = True

    @classmethod
    def parse(cls, heavy: str = "", free: str = "", two_connected: bool = True) -> "ImplicationSpec":
        return cls(tuple(parse_pattern_list(heavy)), tuple(parse_pattern_list(free)), two_connected)

    def label(self) -> str:
        parts = []
        if self.require_two_connected:
            parts.append("2-connected")
        if self.heavy:
            parts.append("{" + ",".join(map(str, self.heavy)) + "}-heavy")
        if self.free:
            parts.append("{" + ",".join(map(str, self.free)) + "}-free")
        return " ".join(parts or ["any"]) + " => Hamiltonian"

    def to_dict(self) -> dict:
        return {
            "heavy": [str(p) for p in self.heavy],
            "free": [str(p) for p in self.free],
            "require_two_connected": self.require_two_connected,
            "conclusion": "hamiltonian",
        }

    def checks(self) -> tuple[tuple[str, PatternId], ...]:
        """Pattern checks, cheapest (smallest pattern) first."""
        return _ordered_checks(self)


@lru_cache(maxsize=None)
def _ordered_checks(spec: ImplicationSpec) -> tuple[tuple[str, PatternId], ...]:
    items = [("free", p) for p in spec.free] + [("heavy", p) for p in spec.heavy]
    return tuple(sorted(items, key=lambda kp: (as_graph(kp[1]).n, kp[0], str(kp[1]))))


@dataclass(frozen=True)
class Pass:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class HypothesisFailed:
    reason: str
    witness: tuple[int, ...] = ()


@dataclass(frozen=True)
class Counterexample:
    certificate: dict


@dataclass(frozen=True)
class Inconclusive:
    expansions: int


Outcome = Pass | HypothesisFailed | Counterexample | Inconclusive


class _Context:
    """Per-graph cache shared by every spec tested on the same graph."""

    __slots__ = ("g", "budget", "_two", "_heavy_rows", "_light", "_free", "_ham")

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self._two = None
        self._heavy_rows = None
        self._light: dict = {}
        self._free: dict = {}
        self._ham = None

    def two_connected(self) -> bool:
        if self._two is None:
            self._two = is_two_connected(self.g)
        return self._two

    def light(self, p: PatternId):
        """A non-heavy induced copy of ``p``, or None."""
        if p not in self._light:
            if self._heavy_rows is None:
                self._heavy_rows = heavy_rows(self.g)
            self._light[p] = find_light_embedding(self.g, p, self._heavy_rows)
        return self._light[p]

    def free(self, p: PatternId) -> bool:
        if p not in self._free:
            self._free[p] = is_free(self.g, p)
        return self._free[p]

    def ham(self):
        if self._ham is None:
            self._ham = find_hamiltonian_cycle(self.g, self.budget) if self.g.n >= 3 else None
        return self._ham


def _evaluate(ctx: _Context, spec: ImplicationSpec) -> Outcome:
    g = ctx.g
    if spec.require_two_connected and not ctx.two_connected():
        return HypothesisFailed("not 2-connected")
    for kind, p in spec.checks():
        if kind == "free":
            if not ctx.free(p):
                return HypothesisFailed(f"contains induced {p}")
        else:
            e = ctx.light(p)
            if e is not None:
                return HypothesisFailed(f"not {p}-heavy", e.subset)
    res = ctx.ham()
    if res is None:
        return Counterexample(_certificate(g, spec, "too_small", 0))
    if res.status is Status.FOUND:
        return Pass(res.cycle)
    if res.status is Status.BUDGET_EXCEEDED:
        return Inconclusive(res.expansions)
    return Counterexample(_certificate(g, spec, res.status.value, res.expansions))


def _certificate(g: Graph, spec: ImplicationSpec, ham: str, expansions: int) -> dict:
    return {
        "n": g.n,
        "two_connected": is_two_connected(g),
        "heavy": {str(p): True for p in spec.heavy},
        "free": {str(p): True for p in spec.free},
        "hamiltonicity": ham,
        "expansions": expansions,
    }


def test_implication(g: Graph, spec: ImplicationSpec, budget: int = DEFAULT_BUDGET) -> Outcome:
    """Pass, HypothesisFailed, Counterexample (with certificate) or Inconclusive."""
    return _evaluate(_Context(g, budget), spec)


test_implication.__test__ = False  # keep pytest from collecting it


def verify_certificate(g: Graph, spec: ImplicationSpec, cert: dict, budget: int = DEFAULT_BUDGET) -> bool:
    """Re-derive every claim of a counterexample certificate from scratch."""
    if cert.get("n") != g.n:
        return False
    if spec.require_two_connected and not is_two_connected(g):
        return False
    hr = heavy_rows(g)
    for p in spec.heavy:
        if find_light_embedding(g, p, hr) is not None:
            return False
    for p in spec.free:
        if not is_free(g, p):
            return False
    if g.n < 3:
        return cert.get("hamiltonicity") == "too_small"
    res = find_hamiltonian_cycle(g, budget)
    return res.status is Status.NOT_HAMILTONIAN and cert.get("hamiltonicity") == "not_hamiltonian"


# -- graph sources -------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def labeled_graph(n: int, code: int) -> Graph:
    """Graph whose edge set is bit ``b`` of ``code`` over pairs in lex order."""
    rows = [0] * n
    for b, (i, j) in enumerate(_pairs(n)):
        if code >> b & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, rows)


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` labeled graphs on ``n`` vertices, by edge code."""
    if n > LABELED_CAP:
        raise GraphError(
            f"labeled enumeration is capped at n <= {LABELED_CAP}; "
            "feed larger graphs through graph6 ingestion instead"
        )
    if n < 1:
        raise GraphError("n must be at least 1")
    pairs = _pairs(n)
    for code in range(1 << len(pairs)):
        rows = [0] * n
        c = code
        while c:
            low = c & -c
            i, j = pairs[low.bit_length() - 1]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            c ^= low
        yield Graph(n, rows)


def random_two_connected(
    n: int, edge_prob: float, seed=None, max_tries: int = 10_000
) -> Graph:
    """Rejection-sample ``G(n, p)`` until the sample is 2-connected."""
    if n < 3:
        raise GraphError("2-connected graphs need n >= 3")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pairs = _pairs(n)
    for _ in range(max_tries):
        rows = [0] * n
        for i, j in pairs:
            if rng.random() < edge_prob:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph(n, rows)
        if is_two_connected(g):
            return g
    raise SamplingError(
        f"no 2-connected sample of G({n}, {edge_prob}) in {max_tries} tries; raise edge_prob"
    )


@dataclass(frozen=True)
class Exhaustive:
    """Every labeled graph with ``min_n <= n <= max_n``, or one per
    isomorphism class (from the networkx atlas) when ``dedup`` is set."""

    max_n: int
    min_n: int = 1
    dedup: bool = False

    def __post_init__(self):
        if self.max_n > LABELED_CAP:
            raise GraphError(
                f"exhaustive enumeration is capped at n <= {LABELED_CAP}; use graph6 ingestion"
            )

    def _offsets(self) -> list[tuple[int, int]]:
        out, start = [], 0
        for n in range(self.min_n, self.max_n + 1):
            out.append((start, n))
            start += 1 << (n * (n - 1) // 2)
        return out

    def __len__(self) -> int:
        if self.dedup:
            return len(_atlas(self.min_n, self.max_n))
        return sum(1 << (n * (n - 1) // 2) for n in range(self.min_n, self.max_n + 1))

    def items(self, start: int, stop: int) -> Iterator[tuple[int, Graph]]:
        if self.dedup:
            graphs = _atlas(self.min_n, self.max_n)
            for i in range(start, stop):
                yield i, graphs[i]
            return
        for base, n in self._offsets():
            size = 1 << (n * (n - 1) // 2)
            lo, hi = max(start, base), min(stop, base + size)
            if lo >= hi:
                continue
            pairs = _pairs(n)
            for code in range(lo - base, hi - base):
                rows = [0] * n
                c = code
                while c:
                    low = c & -c
                    i, j = pairs[low.bit_length() - 1]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    c ^= low
                yield base + code, Graph(n, rows)

    def describe(self) -> dict:
        return {"kind": "exhaustive", "min_n": self.min_n, "max_n": self.max_n, "dedup": self.dedup}


_ATLAS: dict = {}


def _atlas(min_n: int, max_n: int) -> list[Graph]:
    key = (min_n, max_n)
    if key not in _ATLAS:
        import networkx as nx

        out = []
        for h in nx.graph_atlas_g():
            n = h.number_of_nodes()
            if min_n <= n <= max_n:
                rows = [0] * n
                for a, b in h.edges():
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
                out.append(Graph(n, rows))
        _ATLAS[key] = out
    return _ATLAS[key]


def _span(value) -> tuple:
    if isinstance(value, (tuple, list)):
        lo, hi = value
        return (lo, hi)
    return (value, value)


@dataclass(frozen=True)
class RandomSource:
    """``count`` 2-connected samples; sample ``i`` draws ``n`` and ``p``
    uniformly from their ranges using its own seed ``"{seed}/{i}"``."""

    count: int
    n: tuple[int, int]
    p: tuple[float, float] = (0.3, 0.9)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "n", _span(self.n))
        object.__setattr__(self, "p", _span(self.p))

    def __len__(self) -> int:
        return self.count

    def sample(self, i: int) -> Graph:
        rng = random.Random(f"{self.seed}/{i}")
        n = rng.randint(*self.n)
        p = rng.uniform(*self.p)
        return random_two_connected(n, p, rng)

    def items(self, start: int, stop: int) -> Iterator[tuple[int, Graph]]:
        for i in range(start, stop):
            yield i, self.sample(i)

    def describe(self) -> dict:
        return {"kind": "random", "count": self.count, "n": list(self.n), "p": list(self.p)}


@dataclass(frozen=True)
class Ingest:
    graphs: tuple[Graph, ...]
    name: str = "<stream>"

    def __len__(self) -> int:
        return len(self.graphs)

    def items(self, start: int, stop: int) -> Iterator[tuple[int, Graph]]:
        for i in range(start, stop):
            yield i, self.graphs[i]

    def describe(self) -> dict:
        return {"kind": "ingest", "name": self.name, "count": len(self.graphs)}


def ingest(lines: Iterable[str], name: str = "<stream>") -> Ingest:
    from .io import ingest_graph6

    return Ingest(tuple(ingest_graph6(lines)), name)


# -- reports -------------------------------------------------------------------


@dataclass
class CounterexampleRecord:
    index: int
    graph: Graph
    certificate: dict

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "certificate": self.certificate,
        }


@dataclass
class SurveyReport:
    spec: ImplicationSpec
    source: dict
    graphs_tested: int = 0
    hypothesis_matches: int = 0
    counterexamples: list[CounterexampleRecord] = field(default_factory=list)
    budget_exceeded: int = 0
    seed: int | None = None

    def merge(self, other: "SurveyReport") -> None:
        self.graphs_tested += other.graphs_tested
        self.hypothesis_matches += other.hypothesis_matches
        self.budget_exceeded += other.budget_exceeded
        self.counterexamples.extend(other.counterexamples)
        self.counterexamples.sort(key=lambda r: r.index)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "source": self.source,
            "graphs_tested": self.graphs_tested,
            "hypothesis_matches": self.hypothesis_matches,
            "counterexamples": [r.to_dict() for r in self.counterexamples],
            "budget_exceeded": self.budget_exceeded,
            "seed": self.seed,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def summary(self) -> str:
        return (
            f"{self.spec.label()}: tested {self.graphs_tested}, "
            f"hypotheses held {self.hypothesis_matches}, "
            f"counterexamples {len(self.counterexamples)}, "
            f"inconclusive {self.budget_exceeded}"
        )


def report_schema() -> dict:
    text = resources.files("heavyham").joinpath("survey_report.schema.json").read_text()
    return json.loads(text)


def _run_shard(args) -> list[tuple[int, int, int, list]]:
    specs, source, start, stop, budget = args
    tallies = [[0, 0, 0, []] for _ in specs]
    for index, g in source.items(start, stop):
        ctx = _Context(g, budget)
        for t, spec in zip(tallies, specs):
            t[0] += 1
            out = _evaluate(ctx, spec)
            if isinstance(out, HypothesisFailed):
                continue
            t[1] += 1
            if isinstance(out, Inconclusive):
                t[2] += 1
            elif isinstance(out, Counterexample):
                t[3].append(CounterexampleRecord(index, g, out.certificate))
    return [tuple(t) for t in tallies]


def _shards(size: int, jobs: int) -> list[tuple[int, int]]:
    parts = max(1, jobs * 4) if jobs > 1 else 1
    step = -(-size // parts) if size else 0
    return [(a, min(size, a + step)) for a in range(0, size, step)] if size else []


def survey_many(
    specs: Sequence[ImplicationSpec],
    source,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> list[SurveyReport]:
    """Survey several specs in one pass over ``source`` (graph checks are shared)."""
    specs = list(specs)
    seed = getattr(source, "seed", None)
    reports = [SurveyReport(s, source.describe(), seed=seed) for s in specs]
    tasks = [(specs, source, a, b, budget) for a, b in _shards(len(source), jobs)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_shard, tasks))
    else:
        results = [_run_shard(t) for t in tasks]
    for shard in results:
        for rep, (tested, matches, exceeded, cex) in zip(reports, shard):
            rep.merge(SurveyReport(rep.spec, rep.source, tested, matches, list(cex), exceeded))
    return reports


def survey(spec: ImplicationSpec, source, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> SurveyReport:
    return survey_many([spec], source, budget, jobs)[0]


# -- the {K1,3, Z3}-heavy question -----------------------------------------------

CLAW_Z3 = ImplicationSpec.parse("K1,3,Z3")


def search_problem2(
    n_range: Sequence[int] = range(10, 13),
    sample_count: int = 100_000,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    p_range: tuple[float, float] = (0.3, 0.9),
    jobs: int = 1,
) -> SurveyReport:
    """Random search for a 2-connected {K1,3, Z3}-heavy non-Hamiltonian graph
    on at least 10 vertices.  Any hit is re-verified from scratch."""
    ns = sorted(n_range)
    if not ns:
        return SurveyReport(CLAW_Z3, {"kind": "random", "count": 0, "n": []}, seed=seed)
    if ns[0] < 10:
        raise GraphError("the question concerns n >= 10; n_range must start at 10 or above")
    if ns != list(range(ns[0], ns[-1] + 1)):
        raise GraphError("n_range must be a contiguous range")
    source = RandomSource(sample_count, (ns[0], ns[-1]), p_range, seed)
    report = survey(CLAW_Z3, source, budget, jobs)
    for rec in report.counterexamples:
        if not verify_certificate(rec.graph, CLAW_Z3, rec.certificate, budget):
            raise AssertionError(f"hit at index {rec.index} failed re-verification")
    return report
