"""Constructors for the rooted tree families, the three gadgets and the named
graphs used throughout the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph

FAMILY_KINDS = ("T", "S", "R1", "R2", "R3")

# u, v are the attachment vertices; the remaining labels are the fresh vertices
GADGET_LABELS = {1: ("x", "y"), 2: ("x", "y"), 3: ("x", "z", "y", "w")}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    d: int = 3

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}")
        if self.d < 3:
            raise ValueError("degree d must be at least 3")
        if self.kind != "T" and self.d != 3:
            raise ValueError(f"family {self.kind} is only defined for d = 3")
        if self.n < 1:
            raise ValueError("depth n must be at least 1")
        if self.kind != "T" and self.n < 2:
            raise ValueError(f"family {self.kind} is only built for n >= 2")


@dataclass
class FamilyMember:
    spec: FamilySpec
    graph: Graph
    root: int
    sibling_pairs: list[tuple[int, ...]]
    levels: list[list[int]]
    gadgets: list[dict[str, int]] = field(default_factory=list)

    def annotations(self) -> dict:
        return {
            "family": self.spec.kind,
            "n": self.spec.n,
            "d": self.spec.d,
            "root": self.root,
            "sibling_pairs": [list(p) for p in self.sibling_pairs],
            "gadgets": self.gadgets,
        }


def _tree_edges(n: int, d: int) -> tuple[int, list[tuple[int, int]], list[list[int]]]:
    levels = [[0]]
    edges = []
    count = 1
    for depth in range(n):
        nxt = []
        for p in levels[-1]:
            for _ in range(d if depth == 0 else d - 1):
                edges.append((p, count))
                nxt.append(count)
                count += 1
        levels.append(nxt)
    return count, edges, levels


def _add_gadget(edges: list, u: int, v: int, kind: int, start: int) -> dict[str, int]:
    if kind in (1, 2):
        x, y = start, start + 1
        edges += [(u, x), (x, v), (v, y), (y, u)]
        if kind == 2:
            edges.append((x, y))
        return {"u": u, "v": v, "x": x, "y": y}
    if kind == 3:
        x, z, y, w = start, start + 1, start + 2, start + 3
        # hexagon u x z v y w with chords xy and zw
        edges += [(u, x), (x, z), (z, v), (v, y), (y, w), (w, u), (x, y), (z, w)]
        return {"u": u, "v": v, "x": x, "z": z, "y": y, "w": w}
    raise ValueError(f"unknown gadget kind {kind}")


def generate_family(spec: FamilySpec) -> FamilyMember:
    """Build a family member, numbered breadth-first from the root (vertex 0);
    gadget vertices follow the tree, gadget by gadget."""
    total, edges, levels = _tree_edges(spec.n, spec.d)
    leaves = levels[-1]
    size = spec.d - 1
    groups = [tuple(leaves[i:i + size]) for i in range(0, len(leaves), size)]
    if spec.n == 1:
        # the root's leaf children are pairwise siblings
        groups = [tuple(leaves)]
    gadgets: list[dict[str, int]] = []
    if spec.kind == "S":
        for a, b in groups:
            edges.append((a, b))
    elif spec.kind in ("R1", "R2", "R3"):
        kind = int(spec.kind[1])
        for a, b in groups:
            lab = _add_gadget(edges, a, b, kind, total)
            total += len(lab) - 2
            gadgets.append(lab)
    graph = Graph.from_edges(total, edges)
    return FamilyMember(spec, graph, 0, groups, levels, gadgets)


def family(kind: str, n: int, d: int = 3) -> Graph:
    return generate_family(FamilySpec(kind, n, d)).graph


def attach_gadget(g: Graph, u: int, v: int, kind: int) -> tuple[Graph, dict[str, int]]:
    """Join u and v by a fresh gadget of the given kind (1, 2 or 3)."""
    if u == v:
        raise ValueError("gadget endpoints must differ")
    if kind not in GADGET_LABELS:
        raise ValueError(f"unknown gadget kind {kind}")
    for a in (u, v):
        if g.degree(a) + 2 > 3:
            raise ValueError(f"vertex {a} has degree {g.degree(a)}; the gadget would exceed 3")
    edges = g.edges()
    labels = _add_gadget(edges, u, v, kind, g.n)
    return Graph.from_edges(g.n + len(labels) - 2, edges), labels


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def lcf(n: int, jumps: list[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation ``[jumps]^repeats``."""
    edges = {(i, (i + 1) % n) for i in range(n)}
    seq = jumps * repeats
    for i in range(n):
        edges.add((i, (i + seq[i]) % n))
    return Graph.from_edges(n, {tuple(sorted(e)) for e in edges})


PETERSEN_VERTICES = list(combinations(range(5), 2))

HEAWOOD_LABELS = (
    ["1", "2", "3", "4", "5", "6"]
    + ["1'", "2'", "3'", "4'", "5'", "6'"]
    + ["7", "8"]
)


def _petersen() -> Graph:
    # complement of the line graph of K5: 2-subsets adjacent iff disjoint
    edges = [
        (i, j)
        for i, a in enumerate(PETERSEN_VERTICES)
        for j, b in enumerate(PETERSEN_VERTICES)
        if i < j and not set(a) & set(b)
    ]
    return Graph.from_edges(10, edges)


def _heawood() -> Graph:
    # 6-cycle 1..6, whiskers i', chords 1'4' 2'5' 3'6', apexes 7 ~ {1',3',5'}, 8 ~ {2',4',6'}
    idx = {lab: i for i, lab in enumerate(HEAWOOD_LABELS)}
    edges = [(idx[str(i)], idx[str(i % 6 + 1)]) for i in range(1, 7)]
    edges += [(idx[str(i)], idx[f"{i}'"]) for i in range(1, 7)]
    edges += [(idx["1'"], idx["4'"]), (idx["2'"], idx["5'"]), (idx["3'"], idx["6'"])]
    edges += [(idx["7"], idx[f"{i}'"]) for i in (1, 3, 5)]
    edges += [(idx["8"], idx[f"{i}'"]) for i in (2, 4, 6)]
    return Graph.from_edges(14, edges)


def _cube() -> Graph:
    return Graph.from_edges(8, [(a, a ^ (1 << b)) for a in range(8) for b in range(3) if a < a ^ (1 << b)])


def _complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def heawood_vertex(label: str) -> int:
    return HEAWOOD_LABELS.index(label)


NAMED_GRAPHS = {
    "K1_3": lambda: _complete_bipartite(1, 3),
    "K2_3": lambda: _complete_bipartite(2, 3),
    "K4": lambda: Graph.from_edges(4, combinations(range(4), 2)),
    "K3_3": lambda: _complete_bipartite(3, 3),
    "C5": lambda: Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]),
    "Cube": _cube,
    "Petersen": _petersen,
    "Heawood": _heawood,
    "Dodecahedron": lambda: lcf(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2),
    "McGee": lambda: lcf(24, [12, 7, -7], 8),
    "Pappus": lambda: lcf(18, [5, 7, -7, 7, -7, -5], 3),
    "Desargues": lambda: lcf(20, [5, -5, 9, -9], 5),
}


def named_graph(name: str) -> Graph:
    try:
        return NAMED_GRAPHS[name]()
    except KeyError:
        raise ValueError(f"unknown graph {name!r}; known: {', '.join(NAMED_GRAPHS)}") from None
