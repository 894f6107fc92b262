"""Constructive distinguishing colorings with a trace of the argument used.

The dispatcher tries the constructions in a fixed order and keeps the first
whose coloring passes ``is_distinguishing``. Reductions (removing gadgets,
identifying K_{2,3} parts, pruning sibling leaves, smoothing degree-2
vertices) recurse on a smaller graph and extend its coloring back.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .canonical import BLACK, RED, UNCOLORED, WHITE, Coloring, canonical_coloring
from .distinguishing import SearchBudget, find_distinguishing_coloring
from .families import PETERSEN_VERTICES, heawood_vertex, named_graph
from .graph import (
    Graph,
    PreconditionError,
    all_cycles_of_length,
    girth,
    identify_vertices,
    is_connected,
    smooth_degree2,
    sphere_decomposition,
)
from .structure import (
    adjacent_degree2_pairs,
    classify,
    detect_gadgets,
    find_k23,
    prune_sibling_leaves,
    recognize,
)
from .symmetry import find_automorphism, find_isomorphism, is_distinguishing, vertex_types

log = logging.getLogger(__name__)

# constructions with gaps on small graphs get a bounded local repair
REPAIR_RADIUS = 2

HEAWOOD_BLACK = ("1", "2", "3", "4", "5", "6", "1'", "2'", "7")


@dataclass
class ProofTrace:
    strategy: str
    parameters: dict
    coloring: Coloring
    verified: bool = False
    sub: "ProofTrace | None" = None
    attempts: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "strategy": self.strategy,
            "parameters": self.parameters,
            "coloring": self.coloring.to_json(),
            "verified": self.verified,
        }
        if self.sub is not None:
            out["reduced"] = self.sub.to_json()
        if self.attempts:
            out["attempts"] = self.attempts
        return out


def _two_distinguishable(g: Graph) -> bool:
    """Whether the prover may recurse on g: D(g) <= 2 is known structurally."""
    if not is_connected(g):
        return False
    d = g.max_degree()
    if d == 3:
        return classify(g).kind == "two"
    if d <= 1:
        return True
    if all(len(r) == 2 for r in g.adj):
        return g.n >= 6
    return True


def _canonical(g: Graph, k, preset=None) -> Coloring:
    return canonical_coloring(g, sorted(k), preset)[0]


# ---------------------------------------------------------------------------
# degree at most 2 (only reached through reductions)
# ---------------------------------------------------------------------------

def _color_low_degree(g: Graph) -> Coloring:
    cols = [WHITE] * g.n
    if g.n == 2:
        cols[0] = BLACK
    elif any(len(r) == 1 for r in g.adj):
        cols[min(v for v in range(g.n) if len(g.adj[v]) == 1)] = BLACK
    elif g.n > 1:
        # walk the cycle from 0 and blacken positions 0, 1, 3
        order, prev = [0], None
        while len(order) < g.n:
            cur = order[-1]
            nxt = g.adj[cur][0] if g.adj[cur][0] != prev else g.adj[cur][1]
            prev = cur
            order.append(nxt)
        for i in (0, 1, 3):
            cols[order[i]] = BLACK
    return Coloring(tuple(cols))


# ---------------------------------------------------------------------------
# leaves
# ---------------------------------------------------------------------------

def _only_child(g: Graph) -> tuple[int, int] | None:
    for v in range(g.n):
        if len(g.adj[v]) == 1:
            u = g.adj[v][0]
            if sum(1 for w in g.adj[u] if len(g.adj[w]) == 1) == 1:
                return u, v
    return None


def _leaf_candidates(g: Graph):
    oc = _only_child(g)
    if oc is not None and g.n > 2:
        u, v = oc
        yield "Thm4.1-onlychild", {"K": [u, v]}, lambda: (_canonical(g, (u, v)), None)
        return
    pr = prune_sibling_leaves(g)
    if not pr.rounds:
        return

    def build():
        sub_trace = None
        if pr.graph.n == 1:
            base = Coloring((WHITE,))
        else:
            if not _two_distinguishable(pr.graph):
                return None, None
            sub_trace = _prove(pr.graph)
            base = sub_trace.coloring
        cols = [UNCOLORED] * g.n
        for i, v in enumerate(pr.vertices):
            cols[v] = base[i]
        for rnd in pr.rounds:
            for group in rnd:
                for j, v in enumerate(group):
                    cols[v] = BLACK if j == 0 else WHITE
        return Coloring(tuple(cols)), sub_trace

    params = {
        "rounds": len(pr.rounds),
        "stopped": pr.reason,
        "pruned_pairs": [[list(p) for p in r] for r in pr.rounds],
    }
    yield "Thm4.1-prune", params, build


# ---------------------------------------------------------------------------
# reductions
# ---------------------------------------------------------------------------

def _extend(g: Graph, keep: list[int], base: Coloring, extra: dict[int, int]) -> Coloring:
    cols = [UNCOLORED] * g.n
    for i, v in enumerate(keep):
        cols[v] = base[i]
    for v, c in extra.items():
        cols[v] = c
    return Coloring(tuple(cols))


def _gadget_extension(occ) -> dict[int, int]:
    lab = occ.label
    out = {lab["x"]: BLACK, lab["y"]: WHITE}
    if occ.kind == 3:
        # twin pairs are {x, w} and {z, y}
        out.update({lab["z"]: BLACK, lab["w"]: WHITE})
    return out


def _gadget_reduction(g: Graph, kind: int, sibling: bool):
    """Remove every gadget of one kind and sibling status; non-sibling
    gadgets are replaced by the edge uv. Returns a builder or None."""
    occ = [o for o in detect_gadgets(g) if o.kind == kind and o.sibling == sibling]
    if not occ:
        return None
    inner = [v for o in occ for v in o.interior]
    ends = [v for o in occ for v in o.ends]
    if len(set(inner)) != len(inner) or len(set(ends)) != len(ends) or set(inner) & set(ends):
        return None
    drop = set(inner)
    keep = [v for v in range(g.n) if v not in drop]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges() if a not in drop and b not in drop]
    if not sibling:
        edges += [(index[o.ends[0]], index[o.ends[1]]) for o in occ]
    h = Graph.from_edges(len(keep), edges)
    if not _two_distinguishable(h):
        return None

    def build():
        sub = _prove(h)
        extra: dict[int, int] = {}
        for o in occ:
            extra.update(_gadget_extension(o))
        return _extend(g, keep, sub.coloring, extra), sub

    params = {"gadget": kind, "sibling": sibling, "gadgets": [o.to_json() for o in occ]}
    return params, build


def _sibling_edge_reduction(g: Graph):
    """Delete the edge of every adjacent sibling pair of degree-2 vertices.

    The deleted edges form an invariant set, so every automorphism of g is
    one of the reduced graph and its coloring carries over unchanged."""
    tips = [(u, v) for u, v, sib in adjacent_degree2_pairs(g) if sib]
    if not tips:
        return None
    cut = set(tips)
    h = Graph.from_edges(g.n, [e for e in g.edges() if e not in cut])
    if not _two_distinguishable(h):
        return None

    def build():
        sub = _prove(h)
        return sub.coloring, sub

    return {"removed_edges": [list(e) for e in tips]}, build


def _k23_reduction(g: Graph):
    copies = find_k23(g)
    if not copies:
        return None
    used = [v for c in copies for v in c.vertices]
    if len(set(used)) != len(used):
        return None
    pairs = [c.two for c in copies]
    h, mapping = identify_vertices(g, pairs)
    if not _two_distinguishable(h):
        return None

    def build():
        sub = _prove(h)
        cols = [sub.coloring[mapping[v]] for v in range(g.n)]
        for a, b in pairs:
            cols[a], cols[b] = BLACK, WHITE
        return Coloring(tuple(cols)), sub

    return {"identified": [list(p) for p in pairs]}, build


def _gadget_candidates(g: Graph, strategy: str, kinds=(1, 2, 3)):
    """Sibling gadgets reduce under ``strategy``; non-sibling gadgets under
    the non-sibling reduction."""
    for kind in kinds:
        for sibling in (True, False):
            red = _gadget_reduction(g, kind, sibling)
            if red is not None:
                params, build = red
                name = strategy if sibling else "Cor5.2-reduction"
                yield name, dict(params, reduction="gadget"), build


# ---------------------------------------------------------------------------
# vertex types
# ---------------------------------------------------------------------------

def _type1_deg2_candidates(g: Graph, types: list[int]):
    for v in range(g.n):
        if len(g.adj[v]) == 2 and types[v] == 1:
            u, w = g.adj[v]
            k = (u, v, w)
            yield "Thm5.1", {"v": v, "K": sorted(k)}, lambda k=k: (_canonical(g, k), None)
    red = _sibling_edge_reduction(g)
    if red is not None:
        params, build = red
        yield "Thm5.1", dict(params, reduction="sibling-edges"), build
    yield from _gadget_candidates(g, "Thm5.1")


def _type1_deg3_candidates(g: Graph, types: list[int]):
    for v in range(g.n):
        if len(g.adj[v]) == 3 and types[v] == 1:
            k = (v,) + g.adj[v]
            yield "Thm5.3", {"v": v, "K": sorted(k)}, lambda k=k: (_canonical(g, k), None)
    yield from _gadget_candidates(g, "Thm5.3", kinds=(2,))


def _smoothing_candidates(g: Graph, types: list[int]):
    deg2 = [v for v in range(g.n) if len(g.adj[v]) == 2]
    if not deg2 or any(len(r) < 2 for r in g.adj) or g.max_degree() != 3:
        return
    yield from _gadget_candidates(g, "Thm5.4", kinds=(1,))
    rep = smooth_degree2(g)
    if rep.parallel_pairs or rep.loops:
        return
    h = rep.result
    if _two_distinguishable(h):
        def build():
            sub = _prove(h)
            cols = [WHITE] * g.n
            for i, v in enumerate(rep.vertex_map):
                cols[v] = sub.coloring[i]
            return Coloring(tuple(cols)), sub

        yield "Thm5.4", {"smoothed": True, "reduction": "smoothing"}, build
        return
    label, wit = recognize(h) if h.max_degree() == 3 and is_connected(h) else (None, None)
    # the black seed: lowest-indexed degree-2 vertex on a gadget edge
    seed = deg2[0]
    if wit is not None and wit.gadgets:
        inside = set()
        for o in wit.gadgets:
            inside.update(rep.vertex_map[i] for i in o.interior + o.ends)
        on_gadget = [
            s for s in deg2
            if all(w in inside for w in g.adj[s])
        ]
        if on_gadget:
            seed = on_gadget[0]
    preset = {v: WHITE for v in deg2}
    preset[seed] = BLACK
    if wit is not None:
        root = rep.vertex_map[wit.root]
        kids = [rep.vertex_map[c] for c in wit.children(wit.root)]
        # the branch holding the seed gets a white root neighbor
        branch = _branch_of(g, root, kids, seed)

        def build_tree():
            cols = list(_canonical(g, (root,) + g.adj[root], preset))
            others = sorted(c for c in kids if c != branch)
            cols[branch] = WHITE
            cols[others[0]], cols[others[1]] = BLACK, WHITE
            return Coloring(tuple(cols)), None

        yield "Thm5.4", {"seed": seed, "root": root, "branch": branch, "family": str(label)}, build_tree
    # smoothed graph is K4, K3,3, the cube or Petersen: root at the seed
    for s in deg2:
        pre = {v: WHITE for v in deg2}
        pre[s] = BLACK
        for k in ((s,) + g.adj[s], (g.adj[s][0],) + g.adj[g.adj[s][0]]):
            yield (
                "Thm5.4",
                {"seed": s, "K": sorted(set(k))},
                lambda k=k, pre=pre: (_canonical(g, set(k), pre), None),
            )


def _branch_of(g: Graph, root: int, kids: list[int], target: int) -> int:
    for c in kids:
        seen, stack = {root, c}, [c]
        while stack:
            x = stack.pop()
            if x == target:
                return c
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return kids[0]


def ladder_coloring(g: Graph, v: int, u1: int, v1: int) -> tuple[str, dict[int, int], list]:
    """Climb from the neighbors u1, v1 of v, pre-coloring up-neighbors so
    that automorphisms fixing v cannot exchange the current pair.

    Returns (outcome, preset, steps) where outcome is "done", "gadget2" or
    "k23"; the preset is meant for a canonical coloring rooted at N[v].
    """
    k = (v,) + g.adj[v]
    dec = sphere_decomposition(g, k)
    preset: dict[int, int] = {}
    partial = [UNCOLORED] * g.n
    for x in k:
        partial[x] = BLACK
    steps = []
    a, b = u1, v1
    for _ in range(g.n):
        ua = sorted(dec.up[a])
        ub = sorted(dec.up[b])
        shared = sorted(set(ua) & set(ub))
        if g.has_edge(a, b):
            if len(ua) == 1 and len(ub) == 1:
                if ua == ub:
                    return "gadget2", preset, steps
                preset[ua[0]], preset[ub[0]] = WHITE, BLACK
                steps.append({"pair": [a, b], "case": "adjacent"})
            break
        if len(ua) != 2 or len(ub) != 2:
            break
        if len(shared) == 2:
            return "k23", preset, steps
        if len(shared) == 1:
            (ea,) = set(ua) - set(shared)
            (eb,) = set(ub) - set(shared)
            preset[shared[0]] = WHITE
            preset[ea], preset[eb] = BLACK, WHITE
            steps.append({"pair": [a, b], "case": "one-common"})
            break
        preset[ua[0]], preset[ua[1]] = BLACK, WHITE
        preset[ub[0]] = preset[ub[1]] = WHITE
        steps.append({"pair": [a, b], "case": "distinct"})
        for x, c in preset.items():
            partial[x] = c
        a, b = ub
        if find_automorphism(g, partial, fixed=[v], mapping={a: b, b: a}) is None:
            break
    return "done", preset, steps


def _type23_candidates(g: Graph, types: list[int]):
    for v in range(g.n):
        if len(g.adj[v]) != 3 or types[v] not in (2, 3):
            continue
        for u1, v1 in permutations(g.adj[v], 2):
            if types[v] == 2 and u1 > v1:
                continue
            mapping = {u1: v1, v1: u1} if types[v] == 2 else {u1: v1}
            if find_automorphism(g, fixed=[v], mapping=mapping) is None:
                continue
            outcome, preset, steps = ladder_coloring(g, v, u1, v1)
            if outcome != "done":
                continue
            k = (v,) + g.adj[v]
            params = {"v": v, "pair": [u1, v1], "K": sorted(k), "ladder": steps}
            yield "Thm5.6", params, lambda k=k, preset=preset: (_canonical(g, k, preset), None)
    # the ladder met a gadget 2 or a K_{2,3}; reduce instead
    yield from _gadget_candidates(g, "Thm5.6", kinds=(2,))
    yield from _gadget_candidates(g, "Lem5.5-reduction", kinds=(3,))
    red = _k23_reduction(g)
    if red is not None:
        params, build = red
        yield "Lem5.5-reduction", params, build


# ---------------------------------------------------------------------------
# girth
# ---------------------------------------------------------------------------

def _oriented(cycle: tuple[int, ...]):
    s = len(cycle)
    for r in range(s):
        yield tuple(cycle[(r + i) % s] for i in range(s))
        yield tuple(cycle[(r - i) % s] for i in range(s))


def _whisker(g: Graph, seq: tuple[int, ...], i: int) -> int:
    """Neighbor of position i (1-based) off the cycle."""
    s = len(seq)
    on = {seq[(i - 2) % s], seq[i % s]}
    return next(w for w in g.adj[seq[i - 1]] if w not in on)


def _whisker_root(g: Graph, seq: tuple[int, ...]) -> list[int]:
    s = len(seq)
    positions = [1, 4] + list(range(6, s + 1))
    return sorted(set(seq) | {_whisker(g, seq, i) for i in positions})


def _girth_candidates(g: Graph):
    s = girth(g)
    if s is None or s < 6:
        raise PreconditionError("girth-based colorings need girth at least 6")
    cycles = all_cycles_of_length(g, s)
    if s > 6:
        seq = cycles[0]
        k = _whisker_root(g, seq)
        yield "Lem6.1", {"cycle": list(seq), "K": k}, lambda: (_canonical(g, k), None)
        return
    for cyc in cycles:
        for seq in _oriented(cyc):
            if g.has_edge(_whisker(g, seq, 1), _whisker(g, seq, 4)):
                continue
            k = _whisker_root(g, seq)
            yield (
                "Lem6.2-whisker",
                {"cycle": list(seq), "K": k},
                lambda k=k: (_canonical(g, k), None),
            )
    iso = find_isomorphism(named_graph("Heawood"), g)
    if iso is None:
        raise PreconditionError("every 6-cycle has chords 1'4' yet the graph is not Heawood")

    def build():
        cols = [WHITE] * g.n
        for lab in HEAWOOD_BLACK:
            cols[iso[heawood_vertex(lab)]] = BLACK
        return Coloring(tuple(cols)), None

    yield "Lem6.2-Heawood", {"black": list(HEAWOOD_BLACK)}, build


def color_girth_high(g: Graph) -> ProofTrace:
    """Colorings for connected cubic graphs of girth at least 6."""
    if not is_connected(g) or any(len(r) != 3 for r in g.adj):
        raise PreconditionError("needs a connected cubic graph")
    trace = _first_verified(g, _girth_candidates(g))
    if trace is None:
        raise AssertionError("no girth construction produced a distinguishing coloring")
    return trace


def _dodecahedron_candidates(g: Graph):
    if find_isomorphism(named_graph("Dodecahedron"), g) is None:
        return
    v = 0
    x, y, z = g.adj[v]
    w = min(t for t in g.adj[x] if t != v)

    def build():
        cols = [WHITE] * g.n
        for t in (v, x, y, z, w):
            cols[t] = BLACK
        return Coloring(tuple(cols)), None

    yield "Dodecahedron", {"v": v, "neighbors": [x, y, z], "w": w}, build


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def _first_verified(g: Graph, candidates, failed: list | None = None) -> ProofTrace | None:
    attempts = []
    for strategy, params, build in candidates:
        coloring, sub = build()
        if coloring is None:
            attempts.append(f"{strategy}: not applicable")
            continue
        if is_distinguishing(g, coloring):
            return ProofTrace(strategy, params, coloring, True, sub, attempts)
        attempts.append(f"{strategy}: not distinguishing")
        if failed is not None:
            failed.append((strategy, params, coloring))
    return None


def _repair(g: Graph, failed: list, radius: int = REPAIR_RADIUS) -> ProofTrace | None:
    """Flip at most ``radius`` vertices of a construction's coloring, fewest
    flips first, and keep the first distinguishing result."""
    for r in range(1, radius + 1):
        for strategy, params, coloring in failed:
            for flips in combinations(range(g.n), r):
                cols = list(coloring)
                for v in flips:
                    cols[v] = 1 - cols[v]
                c = Coloring(tuple(cols))
                if is_distinguishing(g, c):
                    p = {"base": strategy, "base_parameters": params, "flipped": list(flips)}
                    return ProofTrace("repair", p, c, True)
    return None


def _candidates(g: Graph):
    if any(len(r) == 1 for r in g.adj):
        yield from _leaf_candidates(g)
    if all(len(r) == 3 for r in g.adj) and (girth(g) or 0) >= 6:
        yield from _girth_candidates(g)
        return
    types = vertex_types(g)
    deg = [len(r) for r in g.adj]
    if any(deg[v] == 2 and types[v] == 1 for v in range(g.n)):
        yield from _type1_deg2_candidates(g, types)
    if any(deg[v] == 3 and types[v] == 1 for v in range(g.n)):
        yield from _type1_deg3_candidates(g, types)
    if any(deg[v] == 2 and types[v] == 2 for v in range(g.n)):
        yield from _smoothing_candidates(g, types)
    if any(deg[v] == 3 and types[v] in (2, 3) for v in range(g.n)):
        yield from _type23_candidates(g, types)
    if all(t == 6 for t in types) and girth(g) == 5:
        yield from _dodecahedron_candidates(g)


def _prove(g: Graph, budget: SearchBudget = SearchBudget()) -> ProofTrace:
    if g.max_degree() <= 2:
        c = _color_low_degree(g)
        return ProofTrace("path-or-cycle", {"n": g.n}, c, is_distinguishing(g, c))
    failed: list = []
    trace = _first_verified(g, _candidates(g), failed)
    if trace is not None:
        return trace
    trace = _repair(g, failed)
    if trace is not None:
        log.info("constructions failed on a graph on %d vertices; repaired %s", g.n, trace.parameters["flipped"])
        return trace
    log.warning("no construction applied to a graph on %d vertices; using search", g.n)
    c = find_distinguishing_coloring(g, 2, budget)
    if c is None:
        raise AssertionError("graph has no distinguishing 2-coloring")
    return ProofTrace("fallback-search", {}, c, True, attempts=[f"{s}: not distinguishing" for s, _, _ in failed])


def prove_two_distinguishable(
    g: Graph, *, check: bool = True, budget: SearchBudget = SearchBudget()
) -> ProofTrace:
    """A verified distinguishing 2-coloring of g and the construction that
    produced it."""
    if check:
        label = classify(g)
        if label.kind != "two":
            raise PreconditionError(f"graph is {label}, not 2-distinguishable")
    return _prove(g, budget)


# ---------------------------------------------------------------------------
# graphs with D = 3
# ---------------------------------------------------------------------------

def petersen_3coloring() -> Coloring:
    """3-coloring of the Petersen graph (vertices = edges of K5) from the
    path 0-1-2-3-4 of K5: the end edge 01 red, the rest of the path black."""
    black = {(1, 2), (2, 3), (3, 4)}
    cols = []
    for e in PETERSEN_VERTICES:
        cols.append(RED if e == (0, 1) else BLACK if e in black else WHITE)
    return Coloring(tuple(cols), 3)


def fix_all_but_siblings(g: Graph) -> tuple[Coloring, tuple[int, int]]:
    """A 2-coloring whose only nontrivial color-preserving automorphism
    swaps one sibling pair, for K_{1,3}, K_{2,3} and the five families."""
    label, wit = recognize(g)
    cols = [WHITE] * g.n
    if label.kind == "exceptional" and label.name == "K1_3":
        center = next(v for v in range(g.n) if len(g.adj[v]) == 3)
        leaves = list(g.adj[center])
        cols[center] = cols[leaves[0]] = BLACK
        return Coloring(tuple(cols)), (leaves[1], leaves[2])
    if label.kind == "exceptional" and label.name == "K2_3":
        two = sorted(v for v in range(g.n) if len(g.adj[v]) == 3)
        three = sorted(v for v in range(g.n) if len(g.adj[v]) == 2)
        cols[two[0]] = cols[three[0]] = BLACK
        return Coloring(tuple(cols)), (three[1], three[2])
    if label.kind != "family" or wit is None:
        raise PreconditionError(f"{label} has no sibling-fixing 2-coloring")
    root = wit.root
    kids = wit.children(root)
    cols[root] = BLACK
    white_branch = kids[0]
    # kids[0] and kids[1] white, kids[2] black
    cols[kids[2]] = BLACK
    for level in wit.levels[2:]:
        for p in sorted({wit.parent[c] for c in level}):
            a, b = wit.children(p)
            cols[a], cols[b] = BLACK, WHITE
    # the first bottom pair in the white branch keeps both white
    bottom = [p for p in wit.levels[-2] if _branch_of_tree(wit, p) == white_branch]
    exc_parent = min(bottom)
    tree_pair = tuple(wit.children(exc_parent))
    if wit.kind in ("T", "S"):
        cols[tree_pair[0]] = cols[tree_pair[1]] = WHITE
        return Coloring(tuple(cols)), tree_pair
    pair = None
    for o in wit.gadgets:
        ext = _gadget_extension(o)
        for v, c in ext.items():
            cols[v] = c
        if set(o.ends) == set(tree_pair):
            lab = o.label
            # x, y share the ends' symmetry; for gadget 3 the pair is {x, w}
            pair = (lab["x"], lab["w"]) if o.kind == 3 else (lab["x"], lab["y"])
    cols[pair[0]] = cols[pair[1]] = WHITE
    return Coloring(tuple(cols)), tuple(sorted(pair))


def _branch_of_tree(wit, v: int) -> int:
    while wit.parent.get(v) != wit.root:
        v = wit.parent[v]
    return v

