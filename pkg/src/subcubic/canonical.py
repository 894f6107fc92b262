"""Canonical 2-colorings rooted at a vertex set K, and audits of the
structural properties such colorings are known to satisfy.

Colors: 0 = white, 1 = black, 2 = red (only in 3-colorings).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import Graph, PreconditionError, SphereDecomposition, sphere_decomposition
from .symmetry import automorphisms, find_automorphism, CapacityError

WHITE, BLACK, RED = 0, 1, 2
UNCOLORED = -1


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int = 2

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")
        bad = [c for c in self.colors if not 0 <= c < self.k]
        if bad:
            raise ValueError(f"color {bad[0]} outside 0..{self.k - 1}")

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def with_color(self, v: int, c: int) -> "Coloring":
        cols = list(self.colors)
        cols[v] = c
        return Coloring(tuple(cols), max(self.k, c + 1))

    def vertices_of(self, c: int) -> list[int]:
        return [v for v, x in enumerate(self.colors) if x == c]

    def histogram(self) -> list[int]:
        return [self.colors.count(c) for c in range(self.k)]

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}


@dataclass
class PairDecision:
    pair: tuple[int, int]
    component: str
    black: int | None


@dataclass
class SphereLog:
    level: int
    twins: list[tuple[int, int]] = field(default_factory=list)
    lone_triples: list[int] = field(default_factory=list)
    components: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    pairs: list[PairDecision] = field(default_factory=list)

    def vertices(self) -> list[int]:
        out = [v for p in self.twins for v in p] + list(self.lone_triples)
        for _, comp in self.components:
            out.extend(comp)
        return out


@dataclass
class CanonicalAudit:
    root: tuple[int, ...]
    decomposition: SphereDecomposition
    spheres: list[SphereLog]
    kiwi: list[int]
    preset: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "root": list(self.root),
            "kiwi": self.kiwi,
            "spheres": [
                {
                    "level": s.level,
                    "twins": [list(p) for p in s.twins],
                    "lone_triples": s.lone_triples,
                    "components": [{"kind": k, "U": list(c)} for k, c in s.components],
                    "pairs": [
                        {"pair": list(d.pair), "component": d.component, "black": d.black}
                        for d in s.pairs
                    ],
                }
                for s in self.spheres
            ],
        }


def _hprime_components(U: list[int], down: Sequence[Sequence[int]]) -> list[tuple[list[int], list[int], int]]:
    """Components of the bipartite up-edge graph between the given U vertices
    and their down neighbors, as (U part, V part, edge count)."""
    parent: dict[object, object] = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in U:
        parent.setdefault(("u", x), ("u", x))
        for m in down[x]:
            parent.setdefault(("v", m), ("v", m))
            ra, rb = find(("u", x)), find(("v", m))
            if ra != rb:
                parent[rb] = ra
    groups: dict[object, tuple[list[int], list[int]]] = {}
    for node in parent:
        us, vs = groups.setdefault(find(node), ([], []))
        (us if node[0] == "u" else vs).append(node[1])
    out = []
    for us, vs in groups.values():
        us.sort()
        vs.sort()
        edges = sum(len(down[x]) for x in us)
        out.append((us, vs, edges))
    out.sort(key=lambda t: t[0][0])
    return out


def canonical_coloring(
    g: Graph,
    k: Sequence[int],
    preset: Mapping[int, int] | None = None,
) -> tuple[Coloring, CanonicalAudit]:
    """Extend an all-black K sphere by sphere to a 2-coloring whose only
    color-preserving automorphism fixing K pointwise is the identity.

    ``preset`` pins colors of vertices outside K; those are honored as given
    and take part in every symmetry test.
    """
    if g.max_degree() > 3:
        raise PreconditionError("maximum degree exceeds 3")
    dec = sphere_decomposition(g, k)
    if not dec.internal:
        raise PreconditionError("root set has no internal vertex")
    preset = dict(preset or {})
    colors = [UNCOLORED] * g.n
    for v in dec.root:
        colors[v] = BLACK
    for v, c in preset.items():
        if v not in dec.root:
            colors[v] = c
    logs = []
    for lev in range(len(dec.spheres) - 1):
        U = list(dec.spheres[lev + 1])
        log = SphereLog(lev + 1)
        triples = [x for x in U if len(dec.down[x]) == 3]
        done: set[int] = set()
        for x in triples:
            if x in done:
                continue
            twin = next((y for y in triples if y != x and y not in done and dec.down[y] == dec.down[x]), None)
            if twin is None:
                done.add(x)
                log.lone_triples.append(x)
                if x not in preset:
                    colors[x] = WHITE
            else:
                done.update((x, twin))
                log.twins.append((x, twin))
                if x not in preset:
                    colors[x] = BLACK
                if twin not in preset:
                    colors[twin] = WHITE
        rest = [x for x in U if x not in done]
        pending = []
        for us, vs, edges in _hprime_components(rest, dec.down):
            if len(us) == 2 and len(vs) == 1:
                kind = "2-path"
            elif len(us) == 2 and len(vs) == 2 and edges == 4:
                kind = "quadrilateral"
            else:
                kind = "rigid"
            log.components.append((kind, tuple(us)))
            for x in us:
                if x not in preset:
                    colors[x] = WHITE
            if kind != "rigid":
                pending.append((tuple(us), kind))
        ball = dec.ball(lev)
        for (x, y), kind in pending:
            if x in preset or y in preset:
                log.pairs.append(PairDecision((x, y), kind, None))
                continue
            swap = find_automorphism(g, colors, fixed=ball, mapping={x: y, y: x})
            if swap is not None:
                colors[x] = BLACK
                log.pairs.append(PairDecision((x, y), kind, x))
            else:
                log.pairs.append(PairDecision((x, y), kind, None))
        logs.append(log)
    coloring = Coloring(tuple(colors), 2)
    audit = CanonicalAudit(tuple(sorted(dec.root)), dec, logs, kiwi_vertices(g, coloring), preset)
    return coloring, audit


def kiwi_vertices(g: Graph, c: Sequence[int]) -> list[int]:
    """Black vertices all of whose neighbors are black."""
    return [v for v in range(g.n) if c[v] == BLACK and all(c[w] == BLACK for w in g.adj[v])]


# ---------------------------------------------------------------------------
# audits
# ---------------------------------------------------------------------------

@dataclass
class PropositionResult:
    name: str
    passed: bool
    witnesses: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    skipped: str | None = None

    def to_json(self) -> dict:
        out = {"passed": self.passed, "witnesses": self.witnesses, "failures": self.failures}
        if self.skipped:
            out["skipped"] = self.skipped
        return out


def _goal(g, dec, c) -> PropositionResult:
    bad = find_automorphism(g, c, fixed=sorted(dec.root), nontrivial=True)
    return PropositionResult("goal", bad is None, failures=[list(bad)] if bad else [])


def _white_up(g, dec, c) -> PropositionResult:
    res = PropositionResult("white_up", True)
    for v in range(g.n):
        ups = dec.up[v]
        if ups and not any(c[w] == WHITE for w in ups):
            res.passed = False
            res.failures.append(v)
    return res


def _sibling_swaps(g, dec, c, name: str, strict: bool) -> PropositionResult:
    """Every black vertex outside K needs a white sibling and an automorphism
    (ignoring colors) swapping the two. ``strict`` fixes the rest of the
    ball through the pair's sphere; otherwise only the ball below it."""
    res = PropositionResult(name, True)
    for v in range(g.n):
        lev = dec.level[v]
        if lev == 0 or c[v] != BLACK:
            continue
        found = None
        for u in dec.siblings(v):
            if c[u] != WHITE:
                continue
            ball = dec.ball(lev) if strict else dec.ball(lev - 1)
            fixed = [w for w in ball if w not in (u, v)]
            if find_automorphism(g, None, fixed=fixed, mapping={v: u, u: v}) is not None:
                found = u
                break
        if found is None:
            res.passed = False
            res.failures.append(v)
        else:
            res.witnesses.append([v, found])
    return res


def _black_white_siblings(g, dec, c) -> PropositionResult:
    return _sibling_swaps(g, dec, c, "black_white_siblings", strict=True)


def _black_white_siblings_below(g, dec, c) -> PropositionResult:
    return _sibling_swaps(g, dec, c, "black_white_siblings_below", strict=False)


def _black_cross(g, dec, c) -> PropositionResult:
    res = PropositionResult("black_cross", True)
    for u in range(g.n):
        for v in dec.cross[u]:
            if u > v or dec.level[u] == 0 or c[u] != BLACK or c[v] != BLACK:
                continue
            quad = None
            for x in dec.siblings(u):
                if c[x] != WHITE or not g.has_edge(v, x):
                    continue
                for y in dec.siblings(v):
                    if c[y] == WHITE and y != x and g.has_edge(y, u) and g.has_edge(x, y):
                        quad = [u, v, x, y]
                        break
                if quad:
                    break
            if quad is None:
                res.passed = False
                res.failures.append([u, v])
            else:
                res.witnesses.append(quad)
    return res


def _all_black(g, dec, c) -> PropositionResult:
    # leaves are exempt: a black leaf under a black parent is harmless here
    bad = [v for v in kiwi_vertices(g, c) if dec.level[v] > 1 and len(g.adj[v]) >= 2]
    return PropositionResult("all_black", not bad, failures=bad)


def _internal(g, dec, c, limit) -> PropositionResult:
    kiwi = set(kiwi_vertices(g, c))
    allowed = set(dec.internal) | {v for v in kiwi if dec.level[v] == 1}
    try:
        auts = automorphisms(g, c, limit=limit)
    except CapacityError:
        return PropositionResult("internal", True, skipped=f"more than {limit} automorphisms")
    res = PropositionResult("internal", True)
    for perm in auts:
        if all(perm[i] == i for i in range(g.n)):
            continue
        hits = [w for w in dec.internal if perm[w] in allowed]
        if hits:
            res.witnesses.append({"moves": [w for w in range(g.n) if perm[w] != w], "internal": hits[0]})
        else:
            res.passed = False
            res.failures.append(list(perm))
    return res


@dataclass
class AuditReport:
    results: dict[str, PropositionResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failed(self) -> list[str]:
        return [name for name, r in self.results.items() if not r.passed]

    def to_json(self) -> dict:
        return {name: r.to_json() for name, r in self.results.items()}


def audit_propositions(
    g: Graph,
    k: Sequence[int],
    c: Sequence[int],
    audit: CanonicalAudit | None = None,
    *,
    limit: int = 5000,
) -> AuditReport:
    """Check a canonical coloring against the properties it must satisfy.

    Failures are reported, never raised: a failure indicts the coloring.
    ``black_white_siblings`` is the strong sibling-swap form (the swap fixes
    everything else up to the pair's sphere); it is known to fail on some
    inputs, e.g. the Petersen graph rooted at a closed neighborhood, whose
    pointwise stabilizer swaps three pairs at once. ``black_white_siblings_below``
    is the form the construction guarantees.
    """
    dec = audit.decomposition if audit is not None else sphere_decomposition(g, k)
    checks = [
        _goal(g, dec, c),
        _white_up(g, dec, c),
        _black_white_siblings(g, dec, c),
        _black_white_siblings_below(g, dec, c),
        _black_cross(g, dec, c),
        _all_black(g, dec, c),
        _internal(g, dec, c, limit),
    ]
    return AuditReport({r.name: r for r in checks})
