import numpy as np
import pytest

from netwalk.graph import from_edges

_ACCEPTANCE = []


class Acceptance:
    def record(self, name, passed, detail=""):
        _ACCEPTANCE.append((name, "PASS" if passed else "FAIL", detail))
        return passed

    def skip(self, name, detail=""):
        _ACCEPTANCE.append((name, "SKIP", detail))


@pytest.fixture
def acceptance():
    return Acceptance()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {name}  {detail}")


@pytest.fixture
def k3():
    return from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def path4():
    return from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star5():
    return from_edges(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def cycle5_directed():
    return from_edges(5, [(i, (i + 1) % 5) for i in range(5)], directed=True)


def random_simple_graph(rng, n, p, directed=False):
    a = rng.random((n, n)) < p
    edges = np.argwhere(a)
    return from_edges(n, edges, directed=directed)
