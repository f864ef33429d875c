"""Linear and circular vertex orderings, induced colourings and monotonic paths/cycles.

Positions are 0-based. A cycle ``(c_1, ..., c_k)`` is monotonic for a circular
ordering when walking clockwise from c_1 meets c_2, ..., c_k in turn and gets
back to c_1 after exactly one revolution, i.e. the clockwise gaps between
consecutive cycle vertices sum to n. Edges count as monotonic 2-cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph_core import Graph, popcount


def _check_perm(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {list(perm)}")


@dataclass(frozen=True)
class LinearOrdering:
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", tuple(self.perm))
        _check_perm(self.perm)

    def positions(self) -> list[int]:
        pos = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            pos[v] = k
        return pos

    def closed(self) -> "CircularOrdering":
        """Read the linear sequence clockwise, first element at position 0."""
        return CircularOrdering(self.perm)


@dataclass(frozen=True)
class CircularOrdering:
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", tuple(self.perm))
        _check_perm(self.perm)

    @property
    def n(self) -> int:
        return len(self.perm)

    def positions(self) -> list[int]:
        pos = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            pos[v] = k
        return pos

    def canonical(self) -> "CircularOrdering":
        """Rotation putting vertex 0 at position 0."""
        if not self.perm:
            return self
        k = self.perm.index(0)
        return CircularOrdering(self.perm[k:] + self.perm[:k])

    def reversed(self) -> "CircularOrdering":
        return CircularOrdering(self.perm[::-1])

    def rotated(self, k: int) -> "CircularOrdering":
        k %= max(len(self.perm), 1)
        return CircularOrdering(self.perm[k:] + self.perm[:k])


def linearize(o: CircularOrdering, start: int, clockwise: bool = True) -> LinearOrdering:
    k = o.perm.index(start)
    if clockwise:
        return LinearOrdering(o.perm[k:] + o.perm[:k])
    back = o.perm[k::-1] + o.perm[:k:-1]
    return LinearOrdering(back)


def induced_colouring(g: Graph, o: LinearOrdering) -> list[int]:
    """Colour of v = number of vertices on a longest monotonic path ending at v."""
    colour = [0] * g.n
    placed = 0
    for v in o.perm:
        best = 0
        for u in g.neighbours(v):
            if placed >> u & 1 and colour[u] > best:
                best = colour[u]
        colour[v] = best + 1
        placed |= 1 << v
    return colour


def longest_monotonic_path(g: Graph, o: LinearOrdering) -> tuple[int, list[int]]:
    if g.n == 0:
        return 0, []
    colour = [0] * g.n
    parent = [-1] * g.n
    placed = 0
    for v in o.perm:
        best, arg = 0, -1
        for u in g.neighbours(v):  # ascending index, so ties keep the smallest
            if placed >> u & 1 and colour[u] > best:
                best, arg = colour[u], u
        colour[v] = best + 1
        parent[v] = arg
        placed |= 1 << v
    top = max(colour)
    end = min(v for v in range(g.n) if colour[v] == top)
    path = [end]
    while parent[path[-1]] >= 0:
        path.append(parent[path[-1]])
    return top, path[::-1]


def _anchored_scan(
    g: Graph, perm: Sequence[int], pos: Sequence[int], a: int
) -> tuple[int, list[int]]:
    """Longest monotonic cycle whose earliest vertex (in ``perm``) sits at position a.

    Returns (0, []) when the anchor has no later neighbour.
    """
    n = len(perm)
    s = perm[a]
    f = [0] * n  # f[j]: vertices on a longest increasing path s .. perm[j]; 0 = unreachable
    parent = [-1] * n
    f[a] = 1
    for j in range(a + 1, n):
        best, arg = 0, -1
        for u in g.neighbours(perm[j]):
            p = pos[u]
            if a <= p < j and f[p] > best:
                best, arg = f[p], u
        if best:
            f[j] = best + 1
            parent[j] = arg
    top, end = 0, -1
    for u in g.neighbours(s):
        p = pos[u]
        if p > a and f[p] > top:
            top, end = f[p], u
    if not top:
        return 0, []
    cycle = [end]
    while cycle[-1] != s:
        cycle.append(parent[pos[cycle[-1]]])
    return top, cycle[::-1]


def longest_monotonic_cycle(g: Graph, o: CircularOrdering) -> tuple[int, list[int]]:
    """Longest monotonic cycle and a witness (listed from its earliest position).

    Every monotonic cycle has a unique vertex nearest position 0, so anchoring
    a path DP at each position and only looking forward covers each cycle
    exactly once; total cost O(n * m). Edgeless graphs score 1.
    """
    if g.n == 0:
        return 0, []
    perm = o.perm
    pos = o.positions()
    best, witness = 1, [perm[0]]
    for a in range(g.n):
        value, cycle = _anchored_scan(g, perm, pos, a)
        if value > best:
            best, witness = value, cycle
    return best, witness


def verify_monotonic_cycle(g: Graph, o: CircularOrdering, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    n = o.n
    if k < 2 or len(set(cycle)) != k or any(not 0 <= v < g.n for v in cycle):
        return False
    if any(not g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)):
        return False
    pos = o.positions()
    gaps = sum((pos[cycle[(i + 1) % k]] - pos[cycle[i]]) % n for i in range(k))
    return gaps == n


def colour_sorted_ordering(colouring: Sequence[int]) -> LinearOrdering:
    """Vertices by colour class, ties by index."""
    return LinearOrdering(sorted(range(len(colouring)), key=lambda v: (colouring[v], v)))


def monotonic_cycles(g: Graph, o: CircularOrdering) -> list[list[int]]:
    """Every monotonic cycle with >= 3 vertices, each listed from its earliest position.

    A vertex set forms a monotonic cycle iff, read in position order, consecutive
    members and last -> first are adjacent; so walk all subsets. Exponential in n,
    meant for small graphs.
    """
    if g.n > 16:
        raise ValueError("subset enumeration is limited to 16 vertices")
    perm = o.perm
    out = []
    for mask in range(1, 1 << g.n):
        if popcount(mask) < 3:
            continue
        members = [perm[i] for i in range(g.n) if mask >> i & 1]
        k = len(members)
        if all(g.has_edge(members[i], members[(i + 1) % k]) for i in range(k)):
            out.append(members)
    return out
