from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from subcubic.graph import Graph

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# filled in by tests/test_acceptance.py, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@st.composite
def subcubic_graphs(draw, min_n: int = 1, max_n: int = 10, connected: bool = True) -> Graph:
    """Random graphs with maximum degree at most 3 (connected by default)."""
    n = draw(st.integers(min_n, max_n))
    deg = [0] * n
    edges: set[tuple[int, int]] = set()
    if connected:
        # random tree: attach each new vertex to an earlier one with room
        for v in range(1, n):
            room = [u for u in range(v) if deg[u] < 3]
            u = draw(st.sampled_from(room))
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    for a, b in extra:
        e = (min(a, b), max(a, b))
        if a != b and e not in edges and deg[a] < 3 and deg[b] < 3:
            edges.add(e)
            deg[a] += 1
            deg[b] += 1
    return Graph.from_edges(n, edges)


@st.composite
def relabelings(draw, g: Graph) -> Graph:
    perm = draw(st.permutations(range(g.n)))
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@pytest.fixture(scope="session")
def corpus_report():
    from subcubic.corpus import verify_theorem

    # every connected max-degree-3 graph with n <= 8, plus family members and named graphs
    return verify_theorem(8, include_families=True)
