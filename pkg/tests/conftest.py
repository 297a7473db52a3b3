from fractions import Fraction as F

import pytest

from pdtest import _backend
from pdtest.bigraph import GramBigraph, InputMatrix

# the uti matrix of the worked example, with its irrational (1,3)/(3,1) pair
# replaced by 2 and -1 (same sum 1)
EXAMPLE_A = InputMatrix([
    [1, F(-1, 2), 2, 1],
    [F(-3, 2), 1, 0, 0],
    [-1, 1, 1, 7],
    [-2, 0, -5, 1],
])
EXAMPLE_UPPER = [[-2, 1, -1], [1, 0], [2]]


@pytest.fixture(params=_backend.available())
def kernels(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    mod = _backend.get(request.param)
    monkeypatch.setattr(_backend, "kernels", mod)
    return mod


def path_bigraph(n):
    return GramBigraph.from_edges(n, {(i, i + 1): -1 for i in range(1, n)})


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::" in nodeid and rep.when == "call":
                lines.append((nodeid.split("::", 1)[1], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
