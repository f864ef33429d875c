import random

import pytest

from circalt import graph_core as gc


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running exhaustive or annealing runs")


@pytest.fixture
def rng():
    return random.Random(12345)


def brute_force_max_cycle(g: gc.Graph, perm) -> int:
    """Longest monotonic cycle by trying every vertex subset in circular position order.

    A subset in position order, read cyclically from its first element, is a
    monotonic cycle exactly when consecutive members (and last -> first) are
    adjacent; two-element subsets count when they form an edge.
    """
    n = len(perm)
    best = 1
    for mask in range(1, 1 << n):
        members = [perm[i] for i in range(n) if mask >> i & 1]
        k = len(members)
        if k < 2 or k <= best:
            continue
        if k == 2:
            ok = g.has_edge(*members)
        else:
            ok = all(g.has_edge(members[i], members[(i + 1) % k]) for i in range(k))
        if ok:
            best = k
    return best
