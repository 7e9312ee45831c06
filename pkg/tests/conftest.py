import random

import networkx as nx
import pytest

from ecctree import from_edge_list, path, star
from ecctree.enumeration import random_tree

# Edge lists written out by hand so the fixtures do not depend on the
# constructors under test.
CAT13_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
              (1, 8), (1, 9), (2, 10), (3, 11), (3, 12)]
PAIR11_T1_EDGES = [(i, i + 1) for i in range(7)] + [(3, 8), (3, 9), (3, 10)]
PAIR11_T2_EDGES = [(i, i + 1) for i in range(7)] + [(3, 8), (3, 9), (4, 10)]
SPIDER222_EDGES = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
SPIDER333_EDGES = [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (7, 8), (8, 9)]


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def k13():
    return star(4)


@pytest.fixture
def cat13():
    return from_edge_list(13, CAT13_EDGES)


@pytest.fixture
def pair11():
    return from_edge_list(11, PAIR11_T1_EDGES), from_edge_list(11, PAIR11_T2_EDGES)


@pytest.fixture
def spider222():
    return from_edge_list(7, SPIDER222_EDGES)


@pytest.fixture
def spider333():
    return from_edge_list(10, SPIDER333_EDGES)


def to_nx(t):
    g = nx.Graph()
    g.add_nodes_from(range(t.n))
    g.add_edges_from(t.edges)
    return g


def random_trees(count, lo, hi, seed):
    rng = random.Random(seed)
    return [random_tree(rng.randint(lo, hi), rng) for _ in range(count)]


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {line}")
