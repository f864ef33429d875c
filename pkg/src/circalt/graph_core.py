"""Simple undirected graphs as adjacency bitsets, graph6 I/O and classical invariants.

Vertices are ``0..n-1``; ``adj[i]`` is an int whose bit ``j`` is set when ``i ~ j``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INF = math.inf
G6_MAX_N = 62


class Graph6Error(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} mentions vertices outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("one label per vertex required")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be unique")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``; vertex ``vertices[k]`` becomes ``k``."""
        index = {v: k for k, v in enumerate(vertices)}
        edges = [(index[a], index[b]) for a, b in self.edges() if a in index and b in index]
        labels = None if self.labels is None else [self.labels[v] for v in vertices]
        return Graph.from_edges(len(vertices), edges, labels)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``i -> mapping[i]`` is an isomorphism from g onto h."""
    if g.n != h.n or sorted(mapping) != list(range(h.n)):
        return False
    return all(
        g.has_edge(i, j) == h.has_edge(mapping[i], mapping[j])
        for i in range(g.n)
        for j in range(i + 1, g.n)
    )


# --- graph6 ---------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        raise Graph6Error("graph6 header is not accepted")
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"malformed character {ch!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if n == 0:
        raise Graph6Error("the empty graph (n = 0) is rejected")
    nbits = n * (n - 1) // 2
    body = s[1:]
    need = -(-nbits // 6)
    if len(body) != need:
        raise Graph6Error(f"expected {need} data characters for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        x = ord(ch) - 63
        bits.extend((x >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    if not 1 <= g.n <= G6_MAX_N:
        raise Graph6Error(f"short-form graph6 needs 1 <= n <= {G6_MAX_N}, got {g.n}")
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


# --- structure ------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)), g.labels)


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def _bfs_dist(g: Graph, root: int) -> list[int]:
    dist = [-1] * g.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in _bits(g.adj[x]):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def girth(g: Graph) -> float:
    best = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in _bits(g.adj[x]):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def odd_girth(g: Graph) -> float:
    # an edge joining two vertices at equal BFS depth closes an odd walk of
    # length 2d+1; minimising over all roots gives the shortest odd cycle
    best = INF
    for root in range(g.n):
        dist = _bfs_dist(g, root)
        for x, y in g.edges():
            if dist[x] >= 0 and dist[x] == dist[y]:
                best = min(best, 2 * dist[x] + 1)
    return best


# --- clique number --------------------------------------------------------


def _degree_order(g: Graph, mask: int | None = None) -> list[int]:
    vs = range(g.n) if mask is None else _bits(mask)
    return sorted(vs, key=lambda v: (-g.degree(v), v))


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, found by branch and bound with a greedy-colouring bound."""
    if g.n == 0:
        return []
    best: list[int] = []
    rank = {v: k for k, v in enumerate(_degree_order(g))}

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring of the candidates; returns (vertex, colour) in
        # ascending colour so the last entries are the most promising
        verts = sorted(_bits(cand), key=rank.__getitem__)
        classes: list[int] = []
        out = []
        for v in verts:
            for k, cls in enumerate(classes):
                if not cls & g.adj[v]:
                    classes[k] |= 1 << v
                    break
            else:
                classes.append(1 << v)
        for k, cls in enumerate(classes, start=1):
            out.extend((v, k) for v in sorted(_bits(cls), key=rank.__getitem__))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        for v, bound in reversed(colour_bound(cand)):
            if len(clique) + bound <= len(best):
                return
            clique.append(v)
            nxt = cand & g.adj[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


# --- chromatic number -----------------------------------------------------


def is_proper_colouring(g: Graph, colouring: Sequence[int]) -> bool:
    return len(colouring) == g.n and all(colouring[a] != colouring[b] for a, b in g.edges())


def dsatur_colouring(g: Graph) -> list[int]:
    """Greedy DSATUR colouring with colours ``1..k``."""
    colour = [0] * g.n
    seen = [0] * g.n  # bitmask of neighbouring colours
    deg = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not colour[u]),
            key=lambda u: (popcount(seen[u]), deg[u], -u),
        )
        c = 1
        while seen[v] >> c & 1:
            c += 1
        colour[v] = c
        for u in _bits(g.adj[v]):
            seen[u] |= 1 << c
    return colour


def k_colouring(g: Graph, k: int) -> list[int] | None:
    """Exact DSATUR backtracking: a proper colouring with colours ``1..k`` or None."""
    if g.n == 0:
        return []
    if k <= 0:
        return None
    colour = [0] * g.n
    forbidden = [0] * g.n
    deg = [g.degree(v) for v in range(g.n)]

    def pick() -> int:
        best, key = -1, None
        for v in range(g.n):
            if not colour[v]:
                kv = (popcount(forbidden[v]), deg[v], -v)
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def rec(used: int, left: int) -> bool:
        if not left:
            return True
        v = pick()
        for c in range(1, min(used + 1, k) + 1):
            if forbidden[v] >> c & 1:
                continue
            colour[v] = c
            touched = []
            dead = False
            for u in _bits(g.adj[v]):
                if not colour[u] and not forbidden[u] >> c & 1:
                    forbidden[u] |= 1 << c
                    touched.append(u)
                    if popcount(forbidden[u]) == k:
                        dead = True
            if not dead and rec(max(used, c), left - 1):
                return True
            for u in touched:
                forbidden[u] &= ~(1 << c)
            colour[v] = 0
        return False

    return list(colour) if rec(0, g.n) else None


def optimal_colouring(g: Graph) -> tuple[int, list[int]]:
    """Exact chromatic number with one optimal colouring (colours ``1..chi``).

    Seeded by DSATUR for the upper bound and the clique number for the lower
    bound; each smaller palette is then refuted or realised by backtracking.
    """
    if g.n == 0:
        return 0, []
    best = dsatur_colouring(g)
    upper = max(best)
    lower = clique_number(g)
    k = upper - 1
    while k >= lower:
        found = k_colouring(g, k)
        if found is None:
            break
        best, upper = found, max(found)
        k = upper - 1
    return upper, best


def chromatic_number(g: Graph) -> int:
    return optimal_colouring(g)[0]


# --- named graphs ---------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between them."""
    edges = list(g.edges()) + [(g.n + a, g.n + b) for a, b in h.edges()]
    edges += [(i, g.n + j) for i in range(g.n) for j in range(h.n)]
    return Graph.from_edges(g.n + h.n, edges)


def wheel_graph(rim: int) -> Graph:
    """W_rim: the cycle C_rim joined with a hub, which is vertex ``rim``."""
    return join(cycle_graph(rim), complete_graph(1))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def grotzsch_graph() -> Graph:
    """The 11-vertex Grötzsch graph from its usual drawing.

    0..4 is the outer pentagon, 5..9 the inner star points (5+i joined to the
    two outer neighbours of i) and 10 the centre joined to every star point.
    """
    outer = [(i, (i + 1) % 5) for i in range(5)]
    star = [(5 + i, (i + d) % 5) for i in range(5) for d in (1, 4)]
    centre = [(10, 5 + i) for i in range(5)]
    return Graph.from_edges(11, outer + star + centre)
