"""Exhaustive corpus of small connected subcubic graphs and the end-to-end
theorem check run over it."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .distinguishing import SearchBudget, distinguishing_number
from .families import FAMILY_KINDS, NAMED_GRAPHS, family, named_graph
from .graph import Graph, emit_graph6, parse_graph6
from .symmetry import canonical_form

log = logging.getLogger(__name__)

MAX_CORPUS_N = 8


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[str, ...]:
    if n == 1:
        return (emit_graph6(Graph.from_edges(1, [])),)
    found: dict[str, None] = {}
    for code in _classes(n - 1):
        g = parse_graph6(code)
        open_slots = [v for v in range(g.n) if g.degree(v) < 3]
        # every connected graph has a non-cut vertex whose removal leaves a
        # connected graph, so adding one vertex reaches every class
        for size in (1, 2, 3):
            for nbrs in combinations(open_slots, size):
                h = Graph.from_edges(n, g.edges() + [(v, n - 1) for v in nbrs])
                found.setdefault(emit_graph6(canonical_form(h)), None)
    return tuple(sorted(found))


def enumerate_subcubic(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n
    vertices with maximum degree at most 3, in canonical form, sorted by
    graph6."""
    if not 1 <= n <= MAX_CORPUS_N:
        raise ValueError(f"corpus is defined for 1 <= n <= {MAX_CORPUS_N}")
    return [parse_graph6(code) for code in _classes(n)]


@dataclass
class CorpusRecord:
    name: str
    graph6: str
    n: int
    D: int = 0
    label: str = ""
    agrees: bool = False
    strategy: str | None = None
    verified: bool | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        if self.error is not None or not self.agrees:
            return False
        return self.label != "TwoDistinguishable" or bool(self.verified)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "graph6": self.graph6,
            "n": self.n,
            "D": self.D,
            "label": self.label,
            "agrees": self.agrees,
            "strategy": self.strategy,
            "verified": self.verified,
            "ok": self.ok,
        }
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class CorpusReport:
    n_max: int
    counts: dict[int, int] = field(default_factory=dict)
    records: list[CorpusRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[CorpusRecord]:
        return [r for r in self.records if not r.ok]

    def by_strategy(self, strategy: str) -> list[CorpusRecord]:
        return [r for r in self.records if r.strategy == strategy]

    def json_lines(self) -> list[str]:
        return [json.dumps(r.to_json(), sort_keys=True) for r in self.records]

    def summary(self) -> dict:
        return {
            "n_max": self.n_max,
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "checked": len(self.records),
            "failures": len(self.failures),
            "repairs": len(self.by_strategy("repair")),
            "fallbacks": len(self.by_strategy("fallback-search")),
        }


def check_graph(g: Graph, name: str, budget: SearchBudget = SearchBudget()) -> CorpusRecord:
    """Compare the exact D(g) with the classifier and, for TwoDistinguishable
    graphs, run the prover and verify its coloring independently."""
    from .prover import prove_two_distinguishable
    from .structure import classify
    from .symmetry import is_distinguishing

    rec = CorpusRecord(name, emit_graph6(g), g.n)
    try:
        rec.D = distinguishing_number(g, budget)
        label = classify(g)
        rec.label, rec.agrees = str(label), label.agrees(rec.D)
        if label.kind == "two":
            trace = prove_two_distinguishable(g, check=False)
            rec.strategy = trace.strategy
            rec.verified = is_distinguishing(g, trace.coloring)
    except Exception as exc:  # recorded per graph, reported as a failure
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec


def family_instances() -> list[tuple[str, Graph]]:
    out = [("T2", family("T", 2)), ("T3", family("T", 3))]
    out += [(f"{kind}2", family(kind, 2)) for kind in FAMILY_KINDS if kind != "T"]
    out += [(name, named_graph(name)) for name in NAMED_GRAPHS if named_graph(name).max_degree() == 3]
    return out


def _check_item(item: tuple[str, str]) -> CorpusRecord:
    name, code = item
    return check_graph(parse_graph6(code), name)


def verify_theorem(n_max: int = 7, include_families: bool = True, jobs: int = 1) -> CorpusReport:
    """Check every connected graph with maximum degree exactly 3 and n <= n_max
    (plus, optionally, the family members and named graphs) against the
    classification. D is always computed by exhaustive search."""
    if not 1 <= n_max <= MAX_CORPUS_N:
        raise ValueError(f"n_max must be between 1 and {MAX_CORPUS_N}")
    report = CorpusReport(n_max)
    items = []
    for n in range(1, n_max + 1):
        graphs = enumerate_subcubic(n)
        report.counts[n] = len(graphs)
        for i, g in enumerate(graphs):
            if g.max_degree() == 3:
                items.append((f"n{n}-{i}", emit_graph6(g)))
    if include_families:
        items += [(name, emit_graph6(g)) for name, g in family_instances()]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as pool:
            report.records = list(pool.map(_check_item, items, chunksize=8))
    else:
        report.records = [_check_item(it) for it in items]
    for rec in report.records:
        if rec.strategy == "fallback-search":
            log.warning("%s (%s) needed the fallback search", rec.name, rec.graph6)
    report.records.sort(key=lambda r: (r.graph6, r.name))
    return report
