import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from priority_advice.graphs import Graph  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@st.composite
def max3_graphs(draw, min_n=0, max_n=12):
    """Graphs with max degree 3, built from a drawn list of candidate edges."""
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Graph.from_edges(n, [])
    cand = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    deg = [0] * n
    edges = set()
    for u, v in cand:
        e = (min(u, v), max(u, v))
        if u == v or e in edges or deg[u] == 3 or deg[v] == 3:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    return Graph.from_edges(n, sorted(edges))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
