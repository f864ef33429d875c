"""(p, q)-colourings, the circular chromatic number, zig-zag witnesses and Zhu's hypothesis.

Colours are 1..p. A (p, q)-colouring needs q <= |c(u) - c(v)| <= p - q on every
edge, i.e. circular distance at least q on the p-cycle of colours.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph_core import Graph, _bits, components, is_proper_colouring, optimal_colouring, popcount


class TheoremViolation(AssertionError):
    """A computation contradicted a proved theorem."""


@dataclass(frozen=True)
class PQColouring:
    p: int
    q: int
    colour: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "colouring": list(self.colour)}


def is_pq_colouring(g: Graph, colouring: Sequence[int], p: int, q: int) -> bool:
    if len(colouring) != g.n:
        raise ValueError(f"expected {g.n} colours, got {len(colouring)}")
    for c in colouring:
        if not 1 <= c <= p:
            raise ValueError(f"colour {c} outside 1..{p}")
    return all(q <= abs(colouring[a] - colouring[b]) <= p - q for a, b in g.edges())


def find_pq_colouring(g: Graph, p: int, q: int) -> PQColouring | None:
    """Complete backtracking search for a (p, q)-colouring.

    Picks the uncoloured vertex with the fewest remaining colours (ties: higher
    degree, then lower index). Rotating all colours of one
    component keeps a (p, q)-colouring valid, so the first vertex of each
    component is pinned to colour 1.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    if g.num_edges and 2 * q > p:
        return None
    full = (1 << p) - 1
    # compatible[c]: colours (as bit index c' - 1) at circular distance >= q from c
    compatible = [0] * (p + 1)
    for c in range(1, p + 1):
        for d in range(1, p + 1):
            if min(abs(c - d), p - abs(c - d)) >= q:
                compatible[c] |= 1 << (d - 1)
    colour = [0] * g.n
    domain = [full] * g.n
    deg = [g.degree(v) for v in range(g.n)]

    def rec(pending: int) -> bool:
        if not pending:
            return True
        v, key = -1, None
        for u in _bits(pending):
            ku = (popcount(domain[u]), -deg[u], u)
            if key is None or ku < key:
                v, key = u, ku
        for c in range(1, p + 1):
            if not domain[v] >> (c - 1) & 1:
                continue
            colour[v] = c
            saved = []
            dead = False
            for u in _bits(g.adj[v] & pending):
                new = domain[u] & compatible[c]
                if new != domain[u]:
                    saved.append((u, domain[u]))
                    domain[u] = new
                    if not new:
                        dead = True
                        break
            if not dead and rec(pending & ~(1 << v)):
                return True
            for u, old in saved:
                domain[u] = old
            colour[v] = 0
        return False

    for comp in components(g):
        first = comp[0]
        domain[first] = 1
        if not rec(sum(1 << v for v in comp)):
            return None
    return PQColouring(p, q, tuple(colour))


def candidate_fractions(chi: int, n: int) -> list[Fraction]:
    """Reduced p/q with chi - 1 < p/q <= chi and p <= n, ascending."""
    top = max(n, chi)
    found = {Fraction(p, q) for p in range(1, top + 1) for q in range(1, p + 1)}
    return sorted(f for f in found if chi - 1 < f <= chi and f.numerator <= top)


def circular_colouring_optimum(g: Graph) -> tuple[Fraction, PQColouring]:
    """chi_c(g) with a witnessing (p, q)-colouring.

    Relies on chi_c being attained by some p/q with p <= n, and on
    chi - 1 < chi_c <= chi, so the first feasible candidate is the answer.
    """
    chi, colouring = optimal_colouring(g)
    if chi <= 1:
        return Fraction(max(chi, 1)), PQColouring(1, 1, tuple([1] * g.n))
    for frac in candidate_fractions(chi, g.n):
        found = find_pq_colouring(g, frac.numerator, frac.denominator)
        if found is not None:
            return frac, found
    raise TheoremViolation(f"no (p, q)-colouring up to p/q = {chi} although chi = {chi}")


def circular_chromatic_number(g: Graph) -> Fraction:
    return circular_colouring_optimum(g)[0]


# --- zig-zag witnesses ----------------------------------------------------


@dataclass(frozen=True)
class ZigzagWitness:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    colours: tuple[int, ...]  # increasing; odd places on side A, even on side B

    @property
    def vertices(self) -> list[int]:
        """The t vertices in increasing colour order (alternating A, B, A, ...)."""
        out = []
        for k in range(len(self.colours)):
            side = self.side_a if k % 2 == 0 else self.side_b
            out.append(side[k // 2])
        return out

    def to_dict(self) -> dict:
        return {"side_a": list(self.side_a), "side_b": list(self.side_b), "colours": list(self.colours)}


def check_zigzag(g: Graph, colouring: Sequence[int], t: int, w: ZigzagWitness) -> bool:
    a, b = w.side_a, w.side_b
    if len(a) != (t + 1) // 2 or len(b) != t // 2 or len(w.colours) != t:
        return False
    verts = w.vertices
    if len(set(verts)) != t:
        return False
    if any(colouring[v] != c for v, c in zip(verts, w.colours)):
        return False
    if any(x >= y for x, y in zip(w.colours, w.colours[1:])):
        return False
    return all(g.has_edge(x, y) for x in a for y in b)


def zigzag_witness(g, colouring: Sequence[int], t: int) -> ZigzagWitness:
    """Complete bipartite K_{ceil(t/2), floor(t/2)} with t colours alternating between sides.

    Backtracks over vertices in (colour, index) order, so the first witness
    found is the lexicographically least. Raises TheoremViolation if none
    exists, which the zig-zag corollary rules out for M^r(G) with t = chi.
    """
    g = getattr(g, "graph", g)
    if not is_proper_colouring(g, colouring):
        raise ValueError("colouring is not proper")
    if t < 1:
        raise ValueError("t must be positive")
    order = sorted(range(g.n), key=lambda v: (colouring[v], v))
    chosen: list[int] = []

    def rec(k: int, start: int, need_a: int, need_b: int) -> bool:
        # need_a / need_b: bitsets a new vertex on side A / B must be adjacent to
        if k == t:
            return True
        on_a = k % 2 == 0
        mask = need_a if on_a else need_b
        last = colouring[chosen[-1]] if chosen else None
        for idx in range(start, g.n):
            v = order[idx]
            if last is not None and colouring[v] <= last:
                continue
            if (mask >> v & 1) == 0:
                continue
            chosen.append(v)
            if on_a:
                ok = rec(k + 1, idx + 1, need_a, need_b & g.adj[v])
            else:
                ok = rec(k + 1, idx + 1, need_a & g.adj[v], need_b)
            if ok:
                return True
            chosen.pop()
        return False

    everyone = (1 << g.n) - 1
    if not rec(0, 0, everyone, everyone):
        raise TheoremViolation(f"no alternating K_{{{(t + 1) // 2},{t // 2}}} for this colouring")
    side_a = tuple(chosen[0::2])
    side_b = tuple(chosen[1::2])
    return ZigzagWitness(side_a, side_b, tuple(colouring[v] for v in chosen))


# --- Zhu's class-separation hypothesis ------------------------------------


def enumerate_colourings(g: Graph, m: int, limit: int = 1_000_000) -> list[tuple[int, ...]]:
    """All partitions of V(g) into at most m independent sets, as restricted-growth colourings.

    Classes are numbered by their smallest vertex, so every colouring up to a
    renaming of colours appears exactly once. Raises RuntimeError past ``limit``.
    """
    out: list[tuple[int, ...]] = []
    colour = [0] * g.n
    class_masks = [0] * (m + 1)

    def rec(v: int, used: int) -> None:
        if v == g.n:
            out.append(tuple(colour))
            if len(out) > limit:
                raise RuntimeError(f"more than {limit} colourings")
            return
        for c in range(1, min(used + 1, m) + 1):
            if class_masks[c] & g.adj[v]:
                continue
            colour[v] = c
            class_masks[c] |= 1 << v
            rec(v + 1, max(used, c))
            class_masks[c] &= ~(1 << v)
        colour[v] = 0

    rec(0, 0)
    return out


@dataclass
class ZhuCheck:
    holds: bool
    witness_a: list[int] | None
    refuting: list[tuple[int, ...]]  # colourings that merged classes; together they link everything
    colourings: int
    m: int


def zhu_hypothesis_check(g: Graph, m: int | None = None, limit: int = 1_000_000) -> ZhuCheck:
    """Is there a proper nonempty A that every m-colouring class either lies in or avoids?

    Vertices sharing a class in some m-colouring must fall on the same side of
    A, so such A exists iff that relation has at least two components.
    """
    if m is None:
        m = optimal_colouring(g)[0]
    colourings = [c for c in enumerate_colourings(g, m, limit) if max(c, default=0) == m]
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    refuting = []
    groups = g.n
    for col in colourings:
        merged = False
        first_of: dict[int, int] = {}
        for v, c in enumerate(col):
            if c in first_of:
                x, y = find(first_of[c]), find(v)
                if x != y:
                    parent[x] = y
                    groups -= 1
                    merged = True
            else:
                first_of[c] = v
        if merged:
            refuting.append(col)
    if groups >= 2:
        root = find(0)
        return ZhuCheck(True, [v for v in range(g.n) if find(v) == root], [], len(colourings), m)
    return ZhuCheck(False, None, refuting, len(colourings), m)


def classes_link_all(n: int, colourings: Sequence[Sequence[int]]) -> bool:
    """Do the colour classes of the given colourings connect all n vertices?"""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for col in colourings:
        first_of: dict[int, int] = {}
        for v, c in enumerate(col):
            if c in first_of:
                parent[find(first_of[c])] = find(v)
            else:
                first_of[c] = v
    return len({find(v) for v in range(n)}) == 1
