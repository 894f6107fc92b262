"""Color-preserving automorphisms and isomorphisms by individualization and
refinement, plus the quantities derived from them.

The search is exhaustive: along the first graph the individualized vertex
sequence is fixed, and every isomorphism corresponds to exactly one leaf of
the tree, so enumerating leaves enumerates the whole set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Mapping, Sequence

from .graph import Graph, girth, is_connected

Permutation = tuple[int, ...]


class CapacityError(RuntimeError):
    """The requested enumeration exceeds the configured size guard."""


DEFAULT_MAX_VERTICES = 64


@dataclass(frozen=True)
class AutSet:
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _refine_pair(g: Graph, h: Graph, cg: list, ch: list):
    """Jointly refine two colorings to their coarsest equitable refinement.

    Colors are renamed to ranks of their signatures, so the result does not
    depend on vertex labels. Returns None when the two color histograms
    disagree (no isomorphism can respect the colorings).
    """
    shared = h is g and cg is ch
    ncls = -1
    while True:
        sg = [(cg[v], tuple(sorted([cg[w] for w in g.adj[v]]))) for v in range(g.n)]
        if shared:
            sh = sg
        else:
            sh = [(ch[v], tuple(sorted([ch[w] for w in h.adj[v]]))) for v in range(h.n)]
            if sorted(sg) != sorted(sh):
                return None
        keys = sorted(set(sg))
        rank = {k: i for i, k in enumerate(keys)}
        cg = [rank[s] for s in sg]
        ch = cg if shared else [rank[s] for s in sh]
        if len(keys) == ncls:
            return cg, ch
        ncls = len(keys)


def _initial_colors(n: int, coloring, fixed, extra=()) -> list:
    base = [0] * n if coloring is None else [int(c) for c in coloring]
    special = [0] * n
    tag = 1
    for v in sorted(set(fixed)):
        special[v] = tag
        tag += 1
    for v in extra:
        special[v] = tag
        tag += 1
    return [(b, s) for b, s in zip(base, special)]


def _search(
    g: Graph,
    h: Graph,
    cg: list,
    ch: list,
) -> Iterator[Permutation]:
    """Yield every isomorphism g -> h respecting the initial colorings."""
    def rec(cg, ch):
        res = _refine_pair(g, h, cg, ch)
        if res is None:
            return
        cg, ch = res
        counts: dict[int, int] = {}
        for c in cg:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            where = {c: v for v, c in enumerate(ch)}
            image = tuple(where[c] for c in cg)
            if all(image[w] in h.adj[image[u]] for u in range(g.n) for w in g.adj[u] if u < w):
                yield image
            return
        v = min(u for u in range(g.n) if cg[u] == target)
        fresh = len(counts)
        for w in [u for u in range(h.n) if ch[u] == target]:
            ng = list(cg)
            nh = list(ch)
            ng[v] = fresh
            nh[w] = fresh
            yield from rec(ng, nh)

    yield from rec(cg, ch)


def _check_size(g: Graph, max_vertices: int) -> None:
    if g.n > max_vertices:
        raise CapacityError(f"graph has {g.n} vertices, guard is {max_vertices}")


def automorphisms(
    g: Graph,
    coloring: Sequence[int] | None = None,
    pointwise_fixed: Sequence[int] = (),
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    limit: int | None = None,
) -> AutSet:
    """All automorphisms of g preserving ``coloring`` and fixing every vertex
    of ``pointwise_fixed``.

    ``limit`` caps the number of elements; exceeding it raises CapacityError
    rather than truncating.
    """
    _check_size(g, max_vertices)
    c0 = _initial_colors(g.n, coloring, pointwise_fixed)
    out = []
    for perm in _search(g, g, c0, c0):
        out.append(perm)
        if limit is not None and len(out) > limit:
            raise CapacityError(f"automorphism count exceeds limit {limit}")
    out.sort()
    return AutSet(tuple(out))


def find_automorphism(
    g: Graph,
    coloring: Sequence[int] | None = None,
    fixed: Sequence[int] = (),
    mapping: Mapping[int, int] | None = None,
    *,
    nontrivial: bool = False,
) -> Permutation | None:
    """First automorphism (in search order) that preserves ``coloring``, fixes
    ``fixed`` pointwise and extends ``mapping``; None if there is none.

    With ``nontrivial`` the identity is skipped.
    """
    mapping = dict(mapping or {})
    src = list(mapping)
    cg = _initial_colors(g.n, coloring, fixed, src)
    ch = _initial_colors(g.n, coloring, fixed, [mapping[a] for a in src])
    for perm in _search(g, g, cg, ch):
        if nontrivial and all(perm[i] == i for i in range(g.n)):
            continue
        return perm
    return None


def find_isomorphism(
    g: Graph,
    h: Graph,
    coloring_g: Sequence[int] | None = None,
    coloring_h: Sequence[int] | None = None,
) -> Permutation | None:
    """An isomorphism g -> h (as ``image[v]``), or None."""
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return None
    cg = _initial_colors(g.n, coloring_g, ())
    ch = _initial_colors(h.n, coloring_h, ())
    return next(_search(g, h, cg, ch), None)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return False
    if girth(g) != girth(h):
        return False
    return find_isomorphism(g, h) is not None


def canonical_form(g: Graph) -> Graph:
    """Isomorphism-invariant relabelling of g.

    Explores every leaf of the refinement tree (no pruning by automorphisms)
    and keeps the relabelling with the lexicographically largest edge set.
    Intended for small graphs.
    """
    best = None
    c0 = _initial_colors(g.n, None, ())

    def rec(colors):
        nonlocal best
        res = _refine_pair(g, g, colors, colors)
        colors = res[0]
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            cert = tuple(sorted(tuple(sorted((colors[u], colors[v]))) for u, v in g.edges()))
            if best is None or cert > best:
                best = cert
            return
        fresh = len(counts)
        for v in [u for u in range(g.n) if colors[u] == target]:
            nc = list(colors)
            nc[v] = fresh
            rec(nc)

    rec(c0)
    return Graph.from_edges(g.n, best or ())


def is_distinguishing(g: Graph, coloring: Sequence[int]) -> bool:
    """True iff the identity is the only automorphism preserving ``coloring``."""
    if len(coloring) != g.n:
        raise ValueError("coloring must assign a color to every vertex")
    return find_automorphism(g, coloring, nontrivial=True) is None


def vertex_type(g: Graph, v: int) -> int:
    """Order of the group induced on the neighbors of v by its stabilizer."""
    nb = g.adj[v]
    if len(nb) <= 1:
        return 1
    count = 0
    for perm in permutations(range(len(nb))):
        mapping = {nb[i]: nb[perm[i]] for i in range(len(nb))}
        if find_automorphism(g, fixed=[v], mapping=mapping) is not None:
            count += 1
    return count


def vertex_types(g: Graph) -> list[int]:
    return [vertex_type(g, v) for v in range(g.n)]


def moved_points(perm: Permutation) -> list[int]:
    return [i for i, j in enumerate(perm) if i != j]


def motion(g: Graph, *, max_vertices: int = DEFAULT_MAX_VERTICES) -> int | None:
    """Least number of vertices moved by a non-identity automorphism; None
    when g is rigid."""
    best = None
    for perm in automorphisms(g, max_vertices=max_vertices):
        k = len(moved_points(perm))
        if k and (best is None or k < best):
            best = k
    return best


def vertex_orbits(g: Graph, coloring: Sequence[int] | None = None) -> list[list[int]]:
    orbit_of = [-1] * g.n
    orbits: list[list[int]] = []
    for v in range(g.n):
        if orbit_of[v] >= 0:
            continue
        orbit_of[v] = len(orbits)
        orb = [v]
        for w in range(v + 1, g.n):
            if orbit_of[w] < 0 and find_automorphism(g, coloring, mapping={v: w}) is not None:
                orbit_of[w] = orbit_of[v]
                orb.append(w)
        orbits.append(orb)
    return orbits


def edge_orbits(g: Graph) -> list[list[tuple[int, int]]]:
    edges = g.edges()
    assigned: dict[tuple[int, int], int] = {}
    orbits: list[list[tuple[int, int]]] = []
    for e in edges:
        if e in assigned:
            continue
        assigned[e] = len(orbits)
        orb = [e]
        a, b = e
        for f in edges:
            if f in assigned:
                continue
            c, d = f
            if (
                find_automorphism(g, mapping={a: c, b: d}) is not None
                or find_automorphism(g, mapping={a: d, b: c}) is not None
            ):
                assigned[f] = assigned[e]
                orb.append(f)
        orbits.append(orb)
    return orbits


@dataclass(frozen=True)
class Transitivity:
    vertex_transitive: bool
    edge_transitive: bool
    vertex_orbits: list[list[int]]
    edge_orbits: list[list[tuple[int, int]]]


def transitivity(g: Graph) -> Transitivity:
    if not is_connected(g):
        raise ValueError("graph is not connected")
    vo = vertex_orbits(g)
    eo = edge_orbits(g)
    return Transitivity(len(vo) == 1, len(eo) <= 1, vo, eo)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation ``v -> p[q[v]]``."""
    return tuple(p[i] for i in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)
