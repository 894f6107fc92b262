"""Structural detectors (gadgets, K_{2,3} copies, sibling-leaf pruning) and
the structural classifier for connected graphs of maximum degree 3."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .families import named_graph
from .graph import Graph, PreconditionError, bfs_distances, common_neighbors, is_connected
from .symmetry import is_isomorphic


@dataclass(frozen=True)
class GadgetOccurrence:
    kind: int
    labels: tuple[tuple[str, int], ...]
    sibling: bool

    @property
    def label(self) -> dict[str, int]:
        return dict(self.labels)

    @property
    def ends(self) -> tuple[int, int]:
        lab = self.label
        return lab["u"], lab["v"]

    @property
    def interior(self) -> tuple[int, ...]:
        return tuple(v for k, v in self.labels if k not in ("u", "v"))

    def to_json(self) -> dict:
        return {"kind": self.kind, "labels": self.label, "sibling": self.sibling}


def _occurrence(g: Graph, kind: int, labels: dict[str, int]) -> GadgetOccurrence:
    inner = {v for k, v in labels.items() if k not in ("u", "v")}
    outside = [w for w in common_neighbors(g, labels["u"], labels["v"]) if w not in inner]
    order = ["u", "v", "x", "y", "z", "w"]
    lab = tuple((k, labels[k]) for k in order if k in labels)
    return GadgetOccurrence(kind, lab, bool(outside))


def detect_gadgets(g: Graph) -> list[GadgetOccurrence]:
    """Every occurrence of the three gadgets, sorted by kind then labels.

    kind 1: x, y of degree 2 with N(x) = N(y) = {u, v}, u and v non-adjacent;
    kind 2: adjacent x, y of degree 3 with N(x) - y = N(y) - x = {u, v};
    kind 3: a 4-cycle on degree-3 vertices split into parts {x, w} (third
    neighbor u) and {z, y} (third neighbor v), u != v.
    """
    found: list[GadgetOccurrence] = []
    deg = [len(r) for r in g.adj]
    for x, y in combinations(range(g.n), 2):
        if deg[x] == 2 and g.adj[x] == g.adj[y]:
            u, v = g.adj[x]
            if not g.has_edge(u, v):
                found.append(_occurrence(g, 1, {"u": u, "v": v, "x": x, "y": y}))
        if deg[x] == 3 and deg[y] == 3 and g.has_edge(x, y):
            rx = tuple(w for w in g.adj[x] if w != y)
            ry = tuple(w for w in g.adj[y] if w != x)
            if rx == ry and not g.has_edge(*rx):
                u, v = rx
                found.append(_occurrence(g, 2, {"u": u, "v": v, "x": x, "y": y}))
    seen = set()
    for a in range(g.n):
        if deg[a] != 3:
            continue
        for b, d in combinations(g.adj[a], 2):
            # a 4-cycle a-b-c-d with a, c in one part and b, d in the other
            for c in common_neighbors(g, b, d):
                if c == a or g.has_edge(a, c) or g.has_edge(b, d):
                    continue
                quad = frozenset((a, b, c, d))
                if quad in seen or any(deg[t] != 3 for t in quad):
                    continue
                p1, p2 = sorted((a, c)), sorted((b, d))
                t1 = [w for w in common_neighbors(g, *p1) if w not in quad]
                t2 = [w for w in common_neighbors(g, *p2) if w not in quad]
                if len(t1) != 1 or len(t2) != 1 or t1[0] == t2[0] or t1[0] in quad or t2[0] in quad:
                    continue
                seen.add(quad)
                # orient so that u < v
                if t1[0] > t2[0]:
                    p1, p2, t1, t2 = p2, p1, t2, t1
                found.append(
                    _occurrence(
                        g, 3, {"u": t1[0], "v": t2[0], "x": p1[0], "w": p1[1], "z": p2[0], "y": p2[1]}
                    )
                )
    found.sort(key=lambda o: (o.kind, o.labels))
    return found


def adjacent_degree2_pairs(g: Graph) -> list[tuple[int, int, bool]]:
    """Adjacent pairs of degree-2 vertices with a sibling flag (common
    neighbor)."""
    out = []
    for u, v in g.edges():
        if len(g.adj[u]) == 2 and len(g.adj[v]) == 2:
            out.append((u, v, bool(common_neighbors(g, u, v))))
    return out


@dataclass(frozen=True)
class K23:
    two: tuple[int, int]
    three: tuple[int, int, int]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.two + self.three))


def find_k23(g: Graph) -> list[K23]:
    """Every K_{2,3} subgraph (not necessarily induced), reported once per
    choice of 2-part and 3-part."""
    out = []
    for a, b in combinations(range(g.n), 2):
        common = common_neighbors(g, a, b)
        for three in combinations(common, 3):
            out.append(K23((a, b), three))
    return out


@dataclass
class PruneResult:
    graph: Graph
    vertices: list[int]
    rounds: list[list[tuple[int, ...]]]
    previous: list[int] | None = None

    @property
    def reason(self) -> str:
        if self.graph.n == 1:
            return "single-vertex"
        if any(len(r) == 1 for r in self.graph.adj):
            return "only-child"
        return "no-leaves"


def _leaf_groups(g: Graph, alive: set[int]) -> tuple[dict[int, list[int]], bool]:
    groups: dict[int, list[int]] = {}
    for v in sorted(alive):
        nb = [w for w in g.adj[v] if w in alive]
        if len(nb) == 1:
            groups.setdefault(nb[0], []).append(v)
    only_child = any(len(ls) == 1 for ls in groups.values())
    return groups, only_child


def prune_sibling_leaves(g: Graph) -> PruneResult:
    """Remove all leaves, round by round, while every leaf has a sibling leaf.

    Stops at a single vertex, at a graph without leaves, or as soon as some
    leaf is an only child. ``rounds`` lists the removed sibling groups.
    """
    alive = set(range(g.n))
    rounds: list[list[tuple[int, ...]]] = []
    previous = None
    while len(alive) > 1:
        groups, only_child = _leaf_groups(g, alive)
        if not groups or only_child:
            break
        # two adjacent leaves form K2; each is the other's only child
        if any(p in groups and len(alive) == 2 for p in groups):
            break
        previous = sorted(alive)
        removed = [tuple(ls) for _, ls in sorted(groups.items())]
        rounds.append(removed)
        for ls in removed:
            alive.difference_update(ls)
    sub, keep = g.induced(alive)
    return PruneResult(sub, keep, rounds, previous)


# ---------------------------------------------------------------------------
# classifier
# ---------------------------------------------------------------------------

EXCEPTIONAL = ("K1_3", "K2_3", "Cube", "Petersen")
FOUR = ("K4", "K3_3")


@dataclass(frozen=True)
class ClassLabel:
    kind: str
    name: str | None = None
    n: int | None = None

    @property
    def D(self) -> int:
        return {"exceptional": 3, "family": 3, "four": 4, "two": 2}[self.kind]

    def agrees(self, d: int) -> bool:
        """Whether an exact distinguishing number matches this label
        (asymmetric graphs have D = 1 and are TwoDistinguishable)."""
        return d <= 2 if self.kind == "two" else d == self.D

    def __str__(self) -> str:
        if self.kind == "exceptional":
            return f"Exceptional({self.name})"
        if self.kind == "family":
            return f"Family({self.name},{self.n})"
        if self.kind == "four":
            return f"FourDistinguishable({self.name})"
        return "TwoDistinguishable"

    def to_json(self) -> dict:
        params = {}
        if self.name is not None:
            params["name"] = self.name
        if self.n is not None:
            params["n"] = self.n
        return {"label": str(self), "parameters": params, "D": self.D}


@dataclass
class FamilyWitness:
    """Where a family member's tree sits inside the graph."""

    kind: str
    n: int
    root: int
    parent: dict[int, int]
    levels: list[list[int]]
    gadgets: list[GadgetOccurrence] = field(default_factory=list)
    tip_edges: list[tuple[int, int]] = field(default_factory=list)

    def children(self, v: int) -> list[int]:
        return sorted(c for c, p in self.parent.items() if p == v)


def _tree_depth(g: Graph) -> tuple[int, int] | None:
    """(n, root) if g is T_n for some n >= 1, else None."""
    if not is_connected(g) or g.m != g.n - 1 or g.n < 4:
        return None
    pr = prune_sibling_leaves(g)
    if pr.graph.n != 1 or pr.previous is None or len(pr.previous) != 4:
        return None
    depth = len(pr.rounds)
    if g.n != 1 + 3 * (2 ** depth - 1):
        return None
    root = pr.vertices[0]
    dist = bfs_distances(g, [root])
    deg_ok = all(
        len(g.adj[v]) == (1 if dist[v] == depth else 3) for v in range(g.n)
    )
    return (depth, root) if deg_ok else None


def _witness(g: Graph, tree_vertices: list[int], kind: str) -> FamilyWitness | None:
    sub, keep = g.induced(tree_vertices)
    t = _tree_depth(sub)
    if t is None:
        return None
    depth, r = t
    root = keep[r]
    alive = set(tree_vertices)
    parent: dict[int, int] = {}
    levels = [[root]]
    while len(levels) <= depth:
        nxt = []
        for p in levels[-1]:
            for c in g.adj[p]:
                if c in alive and c != parent.get(p) and c not in parent and c != root:
                    parent[c] = p
                    nxt.append(c)
        levels.append(sorted(nxt))
    return FamilyWitness(kind, depth, root, parent, levels)


def _leaf_pairs(w: FamilyWitness) -> set[frozenset[int]]:
    return {frozenset(w.children(p)) for p in w.levels[-2]}


def _recognize_stripped(g: Graph, kind: str) -> FamilyWitness | None:
    if any(len(r) == 1 for r in g.adj):
        return None
    if kind == "S":
        tips = [(u, v) for u, v, sib in adjacent_degree2_pairs(g) if sib]
        if not tips:
            return None
        cut = {frozenset(e) for e in tips}
        h = Graph.from_edges(g.n, [e for e in g.edges() if frozenset(e) not in cut])
        w = _witness(h, list(range(g.n)), "S")
        if w is None or w.n < 2 or _leaf_pairs(w) != cut:
            return None
        w.tip_edges = sorted(tips)
        return w
    k = int(kind[1])
    occ = [o for o in detect_gadgets(g) if o.kind == k]
    if not occ or not all(o.sibling for o in occ):
        return None
    inner = [v for o in occ for v in o.interior]
    if len(inner) != len(set(inner)):
        return None
    ends = [v for o in occ for v in o.ends]
    if len(ends) != len(set(ends)) or set(ends) & set(inner):
        return None
    tree = [v for v in range(g.n) if v not in set(inner)]
    if not is_connected(g.induced(tree)[0]):
        return None
    w = _witness(g, tree, kind)
    if w is None or w.n < 2 or _leaf_pairs(w) != {frozenset(o.ends) for o in occ}:
        return None
    w.gadgets = occ
    return w


def recognize(g: Graph) -> tuple[ClassLabel, FamilyWitness | None]:
    """Classify g and, for family members, return where the tree sits."""
    connected = is_connected(g)
    if not connected or g.max_degree() != 3:
        raise PreconditionError("classification needs a connected graph of maximum degree 3")
    for name in EXCEPTIONAL + FOUR:
        if is_isomorphic(g, named_graph(name)):
            kind = "exceptional" if name in EXCEPTIONAL else "four"
            return ClassLabel(kind, name), None
    t = _tree_depth(g)
    if t is not None:
        return ClassLabel("family", "T", t[0]), _witness(g, list(range(g.n)), "T")
    for kind in ("S", "R1", "R2", "R3"):
        w = _recognize_stripped(g, kind)
        if w is not None:
            return ClassLabel("family", kind, w.n), w
    return ClassLabel("two"), None


def classify(g: Graph) -> ClassLabel:
    return recognize(g)[0]
