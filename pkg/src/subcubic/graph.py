"""Finite simple graphs on vertices ``0..n-1`` and the structural primitives
the rest of the package builds on.

Graphs are immutable; every neighbor list is kept sorted so that all
downstream tie-breaking (pair choices, cycle choices) is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when a textual graph encoding cannot be parsed."""


class PreconditionError(ValueError):
    """Raised when an operation is called on an input outside its domain."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, row in enumerate(self.adj):
            if list(row) != sorted(set(row)):
                raise ValueError(f"neighbor list of {u} is not sorted and duplicate-free")
            for v in row:
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if u not in self.adj[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def max_degree(self) -> int:
        return max((len(r) for r in self.adj), default=0)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled ``0..k-1`` in ascending order of the
        original labels; also returns the list of original labels."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges), keep

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _graph6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _graph6_size(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(">>graph6<<"):
        s = s[10:]
        offset = 10
    if not s:
        raise GraphFormatError("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {offset + i}: character {ch!r} outside graph6 range")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise GraphFormatError(f"byte {offset}: malformed size header")
    if n < 1:
        raise GraphFormatError(f"byte {offset}: graph6 encodes n={n}, need n >= 1")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise GraphFormatError(
            f"byte {offset + pos + len(body)}: truncated edge field ({len(body)} of {need} bytes)"
        )
    if len(body) > need:
        raise GraphFormatError(f"byte {offset + pos + need}: trailing data after edge field")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError(f"byte {offset + pos + need - 1}: nonzero padding bits")
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    seen: set[tuple[int, int]] = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("line 1: missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()])


# ---------------------------------------------------------------------------
# metric and structural primitives
# ---------------------------------------------------------------------------

def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Distance from the source set to every vertex (-1 if unreachable)."""
    dist = [-1] * g.n
    queue = deque()
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n == 0 or min(bfs_distances(g, [0])) >= 0


def graph_stats(g: Graph) -> tuple[bool, int, int]:
    degs = [len(r) for r in g.adj]
    return is_connected(g), max(degs, default=0), min(degs, default=0)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def induces_connected(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    start = min(vs)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


@dataclass(frozen=True)
class SphereDecomposition:
    """Distance levels around a connected vertex set ``root``.

    ``up``/``cross``/``down`` hold, per vertex, the neighbors one level
    further out, on the same level, and one level closer in.
    """

    root: frozenset[int]
    level: tuple[int, ...]
    spheres: tuple[tuple[int, ...], ...]
    up: tuple[tuple[int, ...], ...]
    cross: tuple[tuple[int, ...], ...]
    down: tuple[tuple[int, ...], ...]
    internal: tuple[int, ...]

    def ball(self, radius: int) -> list[int]:
        return [v for v, lv in enumerate(self.level) if lv <= radius]

    def siblings(self, v: int) -> list[int]:
        """Vertices on v's level sharing a down neighbor with v."""
        out = set()
        for d in self.down[v]:
            out.update(w for w in self.up[d] if w != v)
        return sorted(out)


def sphere_decomposition(g: Graph, k: Iterable[int]) -> SphereDecomposition:
    root = frozenset(k)
    if not root:
        raise PreconditionError("root set is empty")
    if not induces_connected(g, root):
        raise PreconditionError("root set does not induce a connected subgraph")
    level = bfs_distances(g, sorted(root))
    if min(level) < 0:
        raise PreconditionError("graph is not connected")
    depth = max(level)
    spheres = tuple(tuple(v for v in range(g.n) if level[v] == i) for i in range(depth + 1))
    up = tuple(tuple(w for w in g.adj[v] if level[w] == level[v] + 1) for v in range(g.n))
    cross = tuple(tuple(w for w in g.adj[v] if level[w] == level[v]) for v in range(g.n))
    down = tuple(tuple(w for w in g.adj[v] if level[w] == level[v] - 1) for v in range(g.n))
    internal = tuple(v for v in sorted(root) if all(w in root for w in g.adj[v]))
    return SphereDecomposition(root, tuple(level), spheres, up, cross, down, internal)


@dataclass(frozen=True)
class SmoothingReport:
    """Result of suppressing every degree-2 vertex.

    ``result`` is simple: multi-edges are merged and loops dropped, and the
    multigraph features are listed in ``parallel_pairs`` and ``loops``.
    ``origin`` maps each result edge to the suppressed paths it stands for
    (one path per parallel copy; an original edge is the empty path).
    Result vertex ``i`` is input vertex ``vertex_map[i]``.
    """

    result: Graph
    vertex_map: tuple[int, ...]
    parallel_pairs: tuple[tuple[int, int], ...]
    loops: tuple[tuple[int, tuple[int, ...]], ...]
    origin: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = field(default_factory=dict)


def smooth_degree2(g: Graph) -> SmoothingReport:
    degs = [len(r) for r in g.adj]
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if 1 in degs or 0 in degs:
        raise PreconditionError("graph has vertices of degree < 2")
    if max(degs) != 3:
        raise PreconditionError("smoothing needs maximum degree 3 (cycles degenerate)")
    branch = [v for v in range(g.n) if degs[v] == 3]
    index = {v: i for i, v in enumerate(branch)}
    paths: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    loops: list[tuple[int, tuple[int, ...]]] = []
    for a in branch:
        for first in g.adj[a]:
            prev, cur, inner = a, first, []
            while degs[cur] == 2:
                inner.append(cur)
                prev, cur = cur, g.adj[cur][0] if g.adj[cur][1] == prev else g.adj[cur][1]
            b = cur
            # walk each path once, from its smaller end (or smaller first step for loops)
            if a == b:
                if inner and inner[0] < inner[-1]:
                    loops.append((index[a], tuple(inner)))
                continue
            if a < b:
                key = (index[a], index[b])
                paths.setdefault(key, []).append(tuple(inner))
    result = Graph.from_edges(len(branch), paths.keys())
    parallel = tuple(sorted(k for k, v in paths.items() if len(v) > 1))
    origin = {k: tuple(sorted(v)) for k, v in sorted(paths.items())}
    return SmoothingReport(result, tuple(branch), parallel, tuple(sorted(loops)), origin)


def identify_vertices(g: Graph, pairs: Sequence[tuple[int, int]]) -> tuple[Graph, list[int]]:
    """Quotient of g identifying each pair; parallel edges are merged.

    Returns the quotient and ``mapping[v]`` = quotient vertex of v.
    """
    used: set[int] = set()
    for a, b in pairs:
        if a == b or a in used or b in used:
            raise PreconditionError(f"pairs are not disjoint at ({a}, {b})")
        if g.has_edge(a, b):
            raise PreconditionError(f"identifying adjacent {a},{b} creates a self-loop")
        used.update((a, b))
    rep = list(range(g.n))
    for a, b in pairs:
        rep[max(a, b)] = min(a, b)
    classes = sorted(set(rep))
    index = {r: i for i, r in enumerate(classes)}
    mapping = [index[rep[v]] for v in range(g.n)]
    edges = {tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges()}
    return Graph.from_edges(len(classes), edges), mapping


def all_cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """Every cycle of the given length, each once, as the lexicographically
    least of its rotations/reflections; returned sorted."""
    out = []
    for start in range(g.n):
        stack = [(start, [start])]
        while stack:
            u, path = stack.pop()
            if len(path) == length:
                if start in g.adj[u] and path[1] < path[-1]:
                    out.append(tuple(path))
                continue
            for w in reversed(g.adj[u]):
                if w > start and w not in path:
                    stack.append((w, path + [w]))
    return sorted(out)


def common_neighbors(g: Graph, u: int, v: int) -> list[int]:
    return sorted(set(g.adj[u]) & set(g.adj[v]))


def pairs_of(items: Sequence[int]) -> list[tuple[int, int]]:
    return list(combinations(items, 2))
