"""Circular altitude: exhaustive search, bounds, and linear altitude.

The exhaustive search walks canonical circular orderings (vertex 0 at position
0, and perm[1] < perm[-1] to drop mirror images) as a prefix tree. A monotonic
cycle among already placed vertices stays monotonic however the ordering is
completed, so a prefix whose best cycle already reaches the incumbent value
cannot improve it and is cut.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .graph_core import (
    Graph,
    complement,
    girth,
    is_connected,
    max_clique,
    optimal_colouring,
)
from .orderings import (
    CircularOrdering,
    LinearOrdering,
    colour_sorted_ordering,
    longest_monotonic_cycle,
    longest_monotonic_path,
)

MAX_EXACT_N = 12
MAX_ENUM_N = 12
DEFAULT_BUDGET = 50_000_000

EXHAUSTIVE = "exhaustive"
COMPLEMENT = "complement-disconnected"
BOUNDS = "bounds-only"
ENUMERATION = "enumeration"


@dataclass
class AltitudeResult:
    lower: int
    upper: int
    method: str
    witness_ordering: CircularOrdering | None = None
    witness_cycle: list[int] = field(default_factory=list)
    termination: str = ""
    nodes: int = 0
    certificates: list[Any] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "method": self.method,
            "exact": self.exact,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "termination": self.termination,
            "nodes": self.nodes,
        }
        if self.witness_ordering is not None:
            out["witness_ordering"] = list(self.witness_ordering.perm)
            out["witness_cycle"] = list(self.witness_cycle)
        if self.notes:
            out["notes"] = list(self.notes)
        if self.certificates:
            out["certificates"] = [c.to_dict() for c in self.certificates]
        return out


class BudgetExceeded(Exception):
    pass


class _PrefixSearch:
    """Depth-first enumeration of canonical circular orderings of g.

    ``layers[a][l]`` holds (as a bitset) the placed vertices whose longest
    increasing path from the vertex at position a has l vertices. Placing a new
    vertex v extends every anchor's table by one column; v closes a cycle of
    length l+1 with anchor a when a ~ v.
    """

    def __init__(self, g: Graph, bound: int, lower: int, budget: int, stop_first: bool):
        self.g = g
        self.n = g.n
        self.bound = bound  # look for orderings strictly below this
        self.lower = lower
        self.budget = budget
        self.stop_first = stop_first
        self.nodes = 0
        self.best: list[int] | None = None
        self.perm: list[int] = []
        self.layers: list[list[int]] = []
        self.tops: list[int] = []

    def _place(self, v: int) -> tuple[int, list[tuple[int, int]]]:
        """Append v; returns (longest cycle closed at v, undo log)."""
        adj_v = self.g.adj[v]
        bit = 1 << v
        closed = 0
        log = []
        perm = self.perm
        for a in range(len(perm)):
            layer = self.layers[a]
            level = self.tops[a]
            while level and not layer[level] & adj_v:
                level -= 1
            if not level:
                continue
            level += 1
            layer[level] |= bit
            log.append((a, level))
            if level > self.tops[a]:
                self.tops[a] = level
            if adj_v >> perm[a] & 1 and level > closed:
                closed = level
        fresh = [0] * (self.n + 1)
        fresh[1] = bit
        self.layers.append(fresh)
        self.tops.append(1)
        perm.append(v)
        return closed, log

    def _unplace(self, v: int, log: list[tuple[int, int]], saved_tops: list[int]) -> None:
        self.perm.pop()
        self.layers.pop()
        self.tops.pop()
        mask = ~(1 << v)
        for a, level in log:
            self.layers[a][level] &= mask
        self.tops[:] = saved_tops

    def run(self, first: int | None = None) -> None:
        """Search all orderings (or those with ``first`` at position 1)."""
        self._place(0)
        if self.n == 1:
            self._leaf(1)
            return
        seconds = range(1, self.n) if first is None else [first]
        for p1 in seconds:
            saved = list(self.tops)
            closed, log = self._place(p1)
            rest = ((1 << self.n) - 1) & ~1 & ~(1 << p1)
            if closed < self.bound:
                self._extend(rest, max(closed, 1), p1)
            self._unplace(p1, log, saved)
            if self._done():
                return

    def _done(self) -> bool:
        return self.best is not None and (self.stop_first or self.bound <= self.lower)

    def _leaf(self, value: int) -> None:
        self.best = list(self.perm)
        self.bound = value

    def _extend(self, rest: int, current: int, p1: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded
        if not rest:
            if self.n < 3 or self.perm[-1] > p1:
                self._leaf(current)
            return
        if not rest >> (p1 + 1):
            return  # the last vertex could no longer exceed perm[1]
        saved = list(self.tops)
        m = rest
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            closed, log = self._place(v)
            value = max(current, closed)
            if value < self.bound:
                self._extend(rest & ~low, value, p1)
            self._unplace(v, log, saved)
            if self._done():
                return


def _lower_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(max_clique(g)), 2 if g.num_edges else 1)


def _partition_job(args) -> tuple[int, list[int] | None, int, bool]:
    g, first, bound, lower, budget = args
    search = _PrefixSearch(g, bound, lower, budget, stop_first=False)
    try:
        search.run(first)
    except BudgetExceeded:
        return search.bound, search.best, search.nodes, False
    return search.bound, search.best, search.nodes, True


def circular_altitude_exact(
    g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> AltitudeResult:
    """Exact circular altitude by exhaustive branch and bound over canonical orderings.

    ``budget`` caps the number of search nodes (partial orderings). When it runs
    out, or g has more than ``MAX_EXACT_N`` vertices, the result is an interval
    with method ``bounds-only``.
    """
    if g.n == 0:
        raise ValueError("the empty graph has no circular orderings")
    lower = _lower_bound(g)
    chi, colouring = optimal_colouring(g)
    start = colour_sorted_ordering(colouring).closed().canonical()
    upper, cycle = longest_monotonic_cycle(g, start)
    if upper == lower or g.n <= 2:
        return AltitudeResult(lower, lower, EXHAUSTIVE, start, cycle, "lower-bound-reached")
    if g.n > MAX_EXACT_N:
        return AltitudeResult(lower, upper, BOUNDS, start, cycle, "too-large")

    best_value, best_perm = upper, None
    nodes = 0
    complete = True
    if jobs <= 1:
        search = _PrefixSearch(g, upper, lower, budget, stop_first=False)
        try:
            search.run()
        except BudgetExceeded:
            complete = False
        best_value, best_perm, nodes = search.bound, search.best, search.nodes
    else:
        # partitions by the vertex at position 1; each uses the same static
        # starting bound so the reduction does not depend on timing
        tasks = [(g, p1, upper, lower, budget) for p1 in range(1, g.n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for value, perm, count, done in pool.map(_partition_job, tasks):
                nodes += count
                complete &= done
                if perm is not None and value < best_value:
                    best_value, best_perm = value, perm
                if done and value == lower and perm is not None:
                    break

    witness = start if best_perm is None else CircularOrdering(best_perm)
    value, cycle = longest_monotonic_cycle(g, witness)
    assert value == best_value
    if not complete:
        return AltitudeResult(lower, best_value, BOUNDS, witness, cycle, "budget-exceeded", nodes)
    reason = "lower-bound-reached" if best_value == lower else "exhausted"
    return AltitudeResult(best_value, best_value, EXHAUSTIVE, witness, cycle, reason, nodes)


def circular_altitude_enumerate(g: Graph) -> tuple[AltitudeResult, list[int]]:
    """Exact circular altitude by scoring every canonical ordering, with no pruning.

    A literal cross-check for :func:`circular_altitude_exact`: (n-1)!/2 orderings
    for n >= 3. Also returns the histogram of longest-cycle values (index = value).
    """
    from .search import csr, enumerate_canonical

    if not 1 <= g.n <= MAX_ENUM_N:
        raise ValueError(f"enumeration is limited to 1..{MAX_ENUM_N} vertices")
    indptr, indices = csr(g)
    value, perm, seen, hist = enumerate_canonical(g.n, indptr, indices)
    witness = CircularOrdering(perm.tolist())
    checked, cycle = longest_monotonic_cycle(g, witness)
    assert checked == value
    res = AltitudeResult(value, value, ENUMERATION, witness, cycle, "enumerated", int(seen))
    return res, hist.tolist()


def ordering_below(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> CircularOrdering | None:
    """A circular ordering whose longest monotonic cycle is < k, or None if none exists.

    Raises BudgetExceeded when the search is cut short.
    """
    search = _PrefixSearch(g, k, 0, budget, stop_first=True)
    search.run()
    return None if search.best is None else CircularOrdering(search.best)


def altitude_via_complement(g: Graph) -> AltitudeResult | None:
    """Exact value chi(g) when the complement of g is disconnected, else None."""
    comp = complement(g)
    if g.n < 2 or is_connected(comp):
        return None
    chi, colouring = optimal_colouring(g)
    ordering = colour_sorted_ordering(colouring).closed().canonical()
    value, cycle = longest_monotonic_cycle(g, ordering)
    return AltitudeResult(chi, chi, COMPLEMENT, ordering, cycle, "complement-disconnected")


def linear_altitude(g: Graph) -> int:
    return optimal_colouring(g)[0]


def linear_altitude_brute_force(g: Graph) -> int:
    """min over all n! linear orderings of the longest monotonic path."""
    if g.n > 8:
        raise ValueError("brute force is limited to 8 vertices")
    return min(
        longest_monotonic_path(g, LinearOrdering(p))[0] for p in itertools.permutations(range(g.n))
    )


def zigzag_lower_bound(base: Graph, r: int) -> int | None:
    """2 * floor(t / 2) for M^r(base), t = chi(base) + r, when the zig-zag corollary applies.

    Only base graphs whose topological lower bound on chi is known to be tight
    are accepted: complete graphs and odd cycles.
    """
    n, m = base.n, base.num_edges
    complete = n >= 2 and m == n * (n - 1) // 2
    odd_cycle = n >= 3 and n % 2 == 1 and m == n and all(base.degree(v) == 2 for v in range(n))
    if odd_cycle and not is_connected(base):
        odd_cycle = False
    if not (complete or odd_cycle):
        return None
    t = (n if complete else 3) + r
    return 2 * (t // 2)


def circular_altitude_bounds(
    g: Graph,
    budget: int = 1_000_000,
    *,
    labelled=None,
    seed: int | None = None,
    anneal_steps: int = 0,
    chi_c_max_n: int = 15,
) -> AltitudeResult:
    """Interval [lower, upper] for the circular altitude, with certificates for each bound used.

    Lower: clique number, the edge bound, the zig-zag bound for Mycielskians of
    complete graphs and odd cycles (``labelled``), and girth once an exhaustive
    decision search shows no ordering stays at 2.
    Upper: chi via a colour-class ordering, annealing (when ``seed`` is given),
    floor(chi_c) for small graphs, and the odd-girth powerful-ordering certificate.
    """
    from . import certificates as certs
    from .circular_colouring import circular_colouring_optimum
    from .powerful import PreconditionError, oddgirth_certificate
    from .search import AnnealConfig, anneal_min_max_cycle

    if g.num_edges == 0:
        return AltitudeResult(1, 1, BOUNDS, CircularOrdering(range(g.n)), [0], "edgeless")
    via = altitude_via_complement(g)
    if via is not None:
        return via

    notes = []
    cert_list = []
    clique = max_clique(g)
    lower = max(len(clique), 2)
    notes.append(f"lower {lower}: clique {clique}")

    chi, colouring = optimal_colouring(g)
    start = colour_sorted_ordering(colouring).closed().canonical()
    upper, cycle = longest_monotonic_cycle(g, start)
    best_ordering, best_cycle = start, cycle
    cert_list.append(certs.ordering_certificate(g, start, kind="altitude-upper"))
    notes.append(f"upper {upper}: colour-class ordering (chi = {chi})")

    if labelled is not None:
        zz = zigzag_lower_bound(labelled.base, labelled.r)
        if zz is not None and zz > lower:
            lower = zz
            notes.append(f"lower {zz}: zig-zag corollary for M^{labelled.r} of the base graph")
        try:
            cert = oddgirth_certificate(labelled.base, labelled.r)
        except PreconditionError:
            pass
        else:
            if cert.payload["value"] < upper:
                upper = cert.payload["value"]
                best_ordering = CircularOrdering(cert.payload["ordering"])
                best_cycle = cert.payload["cycle"]
                notes.append(f"upper {upper}: powerful-ordering certificate")
            cert_list.append(cert)

    if seed is not None and anneal_steps > 0 and g.n >= 3:
        report = anneal_min_max_cycle(g, AnnealConfig(seed=seed, steps=anneal_steps))
        if report.best_value < upper:
            upper = report.best_value
            best_ordering, best_cycle = report.best_ordering, report.best_cycle
            notes.append(f"upper {upper}: annealed ordering (seed {seed})")
        cert_list.append(
            certs.ordering_certificate(g, report.best_ordering, kind="anneal")
        )

    if g.n <= chi_c_max_n and upper > lower:
        frac, pq = circular_colouring_optimum(g)
        if frac.numerator // frac.denominator < upper:
            upper = frac.numerator // frac.denominator
            notes.append(f"upper {upper}: floor of chi_c = {frac}")
            cert_list.append(certs.pq_certificate(g, pq))

    nodes = 0
    termination = "bounds"
    if lower == 2 and upper > 2 and g.n <= MAX_EXACT_N:
        try:
            low_ordering = ordering_below(g, 3, budget)
        except BudgetExceeded:
            termination = "budget-exceeded"
        else:
            if low_ordering is None:
                gi = girth(g)
                lower = max(lower, 3, int(gi))
                notes.append(f"lower {lower}: no ordering stays at 2, so girth {gi} applies")
            else:
                upper = 2
                best_ordering = low_ordering.canonical()
                best_cycle = longest_monotonic_cycle(g, best_ordering)[1]
                notes.append("upper 2: exhaustive search found an ordering with only 2-cycles")

    return AltitudeResult(
        lower, upper, BOUNDS, best_ordering, best_cycle, termination, nodes, cert_list, notes
    )
