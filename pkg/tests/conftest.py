from itertools import combinations

import pytest

from hypermatch.core import D, EliminationOrder, Hypergraph

EXAMPLE1_ROLES = "DDDDIDIIIDIIDID"
EXAMPLE1_MATCHING = {(1, 2, 3), (4, 5, 6), (7, 8, 10), (9, 11, 13), (12, 14, 15)}
EXAMPLE1_R_BACKWARD = (2, 1, 3, 2, 1, 3, 2, 1, 0, 2, 1, 3, 5, 7, 9)


def hypergraph_from_roles(roles: str, k: int) -> Hypergraph:
    """Edge iff the highest-numbered vertex of the k-set is dominating."""
    n = len(roles)
    return Hypergraph(k, n, frozenset(
        E for E in combinations(range(1, n + 1), k) if roles[max(E) - 1] == "D"))


def all_hypergraphs(n: int, k: int):
    ksets = list(combinations(range(1, n + 1), k))
    for mask in range(1 << len(ksets)):
        yield Hypergraph(k, n, frozenset(E for j, E in enumerate(ksets) if mask >> j & 1))


@pytest.fixture
def example1_order():
    return EliminationOrder.from_roles(EXAMPLE1_ROLES)


@pytest.fixture
def example1():
    return hypergraph_from_roles(EXAMPLE1_ROLES, 3)


@pytest.fixture
def prop2_hypergraph():
    return Hypergraph(3, 4, frozenset({(1, 2, 3), (2, 3, 4)}))


@pytest.fixture
def p4():
    return Hypergraph(2, 4, frozenset({(1, 2), (2, 3), (3, 4)}))


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS):
        terminalreporter.write_line(line)
