"""Exhaustive searches for distinguishing colorings.

Colorings are enumerated depth-first as words over ``0..k-1`` along a
leaves-first vertex order (base-k integers, ascending). Two prunings keep the
search exhaustive up to symmetry:

* support pruning: once every vertex moved by an automorphism has a color,
  the subtree is dropped if that automorphism preserves the partial coloring;
* orbit pruning: the subtree is dropped when some automorphism maps every
  completion to a lexicographically smaller word, which the search reaches
  (or refutes) on its own.

Non-existence is only reported after the whole space has been covered.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import Coloring
from .graph import Graph, bfs_distances
from .symmetry import CapacityError, automorphisms


class BudgetExceeded(RuntimeError):
    """The search could not be completed within its budget."""


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 24
    max_colorings: int = 20_000_000
    max_automorphisms: int = 100_000
    orbit_pruning_elements: int = 512

    def __post_init__(self) -> None:
        for name in ("max_vertices", "max_colorings", "max_automorphisms"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def _search_order(g: Graph) -> list[int]:
    # reversed BFS from a center: siblings end up adjacent, leaves first
    ecc = []
    for v in range(g.n):
        d = bfs_distances(g, [v])
        ecc.append(max(d) if min(d) >= 0 else g.n)
    center = min(range(g.n), key=lambda v: (ecc[v], v))
    order = [center]
    seen = {center}
    i = 0
    while i < len(order):
        for w in g.adj[order[i]]:
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    order += [v for v in range(g.n) if v not in seen]
    return order[::-1]


class _Search:
    def __init__(self, g: Graph, k: int, budget: SearchBudget, black_limit: int | None = None):
        if g.n > budget.max_vertices:
            raise BudgetExceeded(f"{g.n} vertices exceeds max_vertices={budget.max_vertices}")
        self.g = g
        self.k = k
        self.budget = budget
        self.black_limit = black_limit
        try:
            auts = automorphisms(g, max_vertices=max(g.n, 1), limit=budget.max_automorphisms)
        except CapacityError as exc:
            raise BudgetExceeded(str(exc)) from None
        n = g.n
        self.order = _search_order(g)
        pos = [0] * n
        for i, v in enumerate(self.order):
            pos[v] = i
        self.nontrivial = [p for p in auts if any(p[i] != i for i in range(n))]
        # support checks, keyed by the position completing the support
        self.checks: list[list[list[tuple[int, int]]]] = [[] for _ in range(n)]
        for p in self.nontrivial:
            pairs = [(pos[v], pos[p[v]]) for v in range(n) if p[v] != v]
            self.checks[max(a for a, _ in pairs)].append(pairs)
        # orbit pruning: word'[i] = word[pre[i]] with pre = pos . p^-1 . order
        self.lex: list[list[int]] = []
        for p in self.nontrivial[: budget.orbit_pruning_elements]:
            inv = [0] * n
            for a, b in enumerate(p):
                inv[b] = a
            self.lex.append([pos[inv[self.order[i]]] for i in range(n)])
        self.nodes = 0

    def _lex_pruned(self, word: list[int], d: int) -> bool:
        for pre in self.lex:
            for i in range(d):
                j = pre[i]
                if j >= d:
                    break
                if word[j] != word[i]:
                    if word[j] < word[i]:
                        return True
                    break
        return False

    def run(self) -> Coloring | None:
        n, k = self.g.n, self.k
        word = [0] * n

        def rec(d: int, blacks: int) -> bool:
            self.nodes += 1
            if self.nodes > self.budget.max_colorings:
                raise BudgetExceeded(f"search exceeded {self.budget.max_colorings} nodes")
            if d == n:
                return True
            for c in range(k):
                nb = blacks + (c != 0)
                if self.black_limit is not None and nb > self.black_limit:
                    break
                word[d] = c
                if any(all(word[a] == word[b] for a, b in pairs) for pairs in self.checks[d]):
                    continue
                if self.lex and self._lex_pruned(word, d + 1):
                    continue
                if rec(d + 1, nb):
                    return True
            return False

        if n == 0:
            return Coloring((), k)
        if not rec(0, 0):
            return None
        colors = [0] * n
        for i, v in enumerate(self.order):
            colors[v] = word[i]
        return Coloring(tuple(colors), k)


def find_distinguishing_coloring(
    g: Graph, k: int, budget: SearchBudget = SearchBudget()
) -> Coloring | None:
    """A distinguishing k-coloring of g, or None if provably none exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return _Search(g, k, budget).run()


def distinguishing_number(g: Graph, budget: SearchBudget = SearchBudget()) -> int:
    for k in range(1, max(g.n, 1) + 1):
        if find_distinguishing_coloring(g, k, budget) is not None:
            return k
    raise AssertionError("n colors always distinguish")


def cost2(g: Graph, budget: SearchBudget = SearchBudget()) -> int | None:
    """Least number of black vertices in a distinguishing 2-coloring; None
    when g has no distinguishing 2-coloring."""
    for blacks in range(g.n + 1):
        if _Search(g, 2, budget, black_limit=blacks).run() is not None:
            return blacks
    return None
