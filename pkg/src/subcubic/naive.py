"""Unpruned reference implementations used to cross-check the fast paths.

Nothing here shares code with the refinement engine or the pruned searches:
automorphisms are found by filtering all n! permutations and colorings by
enumerating all k^n words.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .graph import Graph, is_connected


def naive_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    edges = {frozenset(e) for e in g.edges()}
    out = []
    for p in permutations(range(g.n)):
        if all(frozenset((p[u], p[v])) in edges for u, v in g.edges()):
            out.append(p)
    return out


def naive_distinguishing_number(g: Graph) -> int:
    auts = [p for p in naive_automorphisms(g) if any(p[i] != i for i in range(g.n))]
    for k in range(1, g.n + 1):
        for word in product(range(k), repeat=g.n):
            if not any(all(word[p[v]] == word[v] for v in range(g.n)) for p in auts):
                return k
    return max(g.n, 1)


def naive_cost2(g: Graph) -> int | None:
    auts = [p for p in naive_automorphisms(g) if any(p[i] != i for i in range(g.n))]
    best = None
    for word in product(range(2), repeat=g.n):
        if not any(all(word[p[v]] == word[v] for v in range(g.n)) for p in auts):
            b = sum(word)
            if best is None or b < best:
                best = b
    return best


def naive_girth(g: Graph) -> int | None:
    """Shortest cycle by trying every vertex sequence (small graphs only)."""
    for length in range(3, g.n + 1):
        for seq in permutations(range(g.n), length):
            if seq[0] != min(seq):
                continue
            if all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                return length
    return None


def naive_subcubic_classes(n: int, max_degree: int = 3) -> list[Graph]:
    """Connected graphs on n vertices with bounded degree, one per
    isomorphism class, found by brute force over all edge subsets of K_n.

    Whenever a new class appears, all n! relabellings of it are marked seen.
    """
    all_edges = list(combinations(range(n), 2))
    bit = {e: i for i, e in enumerate(all_edges)}
    perms = list(permutations(range(n)))
    seen: set[int] = set()
    out = []
    for mask in range(1 << len(all_edges)):
        if mask in seen:
            continue
        edges = [all_edges[i] for i in range(len(all_edges)) if mask >> i & 1]
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if max(deg, default=0) > max_degree:
            continue
        g = Graph.from_edges(n, edges)
        if not is_connected(g):
            continue
        out.append(g)
        for p in perms:
            seen.add(sum(1 << bit[tuple(sorted((p[u], p[v])))] for u, v in edges))
    return out


def naive_connected_classes(n: int) -> list[Graph]:
    return naive_subcubic_classes(n, max_degree=n)
