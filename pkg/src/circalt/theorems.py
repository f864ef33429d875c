"""Consistency suite: replays the published claims on the built-in corpus.

Each check returns a :class:`Claim`; ``passed`` False on any claim is a
contradiction between the computation and a proved statement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import graph_core as gc
from .altitude import (
    altitude_via_complement,
    circular_altitude_bounds,
    circular_altitude_exact,
    linear_altitude_brute_force,
)
from .circular_colouring import (
    TheoremViolation,
    check_zigzag,
    circular_colouring_optimum,
    zhu_hypothesis_check,
    zigzag_witness,
)
from .corpus import named_graph, small_corpus
from .mycielski import check_adjacency_rules, iterated_mycielskian, word_adjacency_scan
from .orderings import colour_sorted_ordering, monotonic_cycles
from .powerful import (
    PreconditionError,
    apex_paths_bounded,
    build_powerful_ordering,
    long_paths_avoid_apexes,
    longest_path_within_t,
    oddgirth_certificate,
    u_shift_holds,
)


@dataclass
class Claim:
    name: str
    passed: bool
    checked: int = 0
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "claim": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:10],
        }


def _claim(name: str, items, check: Callable) -> Claim:
    failures = []
    count = 0
    for label, obj in items:
        count += 1
        try:
            ok, detail = check(obj)
        except TheoremViolation as exc:
            ok, detail = False, str(exc)
        if not ok:
            failures.append({"graph": label, "detail": detail})
    return Claim(name, not failures, count, failures)


def replay_pq_bound(g: gc.Graph, p: int, q: int, colouring) -> tuple[bool, str]:
    """Sort by a (p,q)-colouring and close the order into a circle. Along any monotonic
    cycle of length m read from its earliest vertex, colours climb m - 1 steps of at
    least q and the last one stays within p - q of the first, so (m - 1)q <= p - q."""
    circle = colour_sorted_ordering(colouring).closed()
    pos = circle.positions()
    cycles = [sorted(e, key=pos.__getitem__) for e in g.edges()] + monotonic_cycles(g, circle)
    for cycle in cycles:
        m = len(cycle)
        cols = [colouring[v] for v in cycle]
        if any(b - a < q for a, b in zip(cols, cols[1:])):
            return False, f"colours do not climb by >= q along {cycle}"
        if cols[-1] - cols[0] > p - q or (m - 1) * q > p - q:
            return False, f"(m-1)q = {(m - 1) * q} > p-q = {p - q} on {cycle}"
    return True, ""


def check_small_corpus(corpus: dict[str, gc.Graph]) -> list[Claim]:
    exact = {}
    for name, g in corpus.items():
        res = circular_altitude_exact(g)
        frac, pq = circular_colouring_optimum(g)
        exact[name] = (g, res.value, frac, pq)
    items = list(exact.items())

    def sandwich(x):
        g, alt, _, _ = x
        w, chi = gc.clique_number(g), gc.chromatic_number(g)
        return w <= alt <= chi, f"omega {w}, alt {alt}, chi {chi}"

    def floor_chi_c(x):
        g, alt, frac, pq = x
        ok = alt <= frac.numerator // frac.denominator
        ok2, why = replay_pq_bound(g, pq.p, pq.q, pq.colour)
        return ok and ok2, f"alt {alt}, chi_c {frac} {why}"

    def chi_c_window(x):
        g, _, frac, _ = x
        chi = gc.chromatic_number(g)
        return (chi - 1 < frac <= chi) or chi <= 1, f"chi {chi}, chi_c {frac}"

    def girth_bound(x):
        g, alt, frac, _ = x
        return alt <= 2 or frac >= gc.girth(g), f"alt {alt}, chi_c {frac}, girth {gc.girth(g)}"

    def complement_rule(x):
        g, alt, _, _ = x
        via = altitude_via_complement(g)
        return via is None or via.value == alt, f"complement says {via and via.value}, exact {alt}"

    return [
        _claim("clique <= altitude <= chromatic", items, sandwich),
        _claim("altitude <= floor(circular chromatic), with proof replay", items, floor_chi_c),
        _claim("chi - 1 < chi_c <= chi", items, chi_c_window),
        _claim("altitude > 2 implies chi_c >= girth", items, girth_bound),
        _claim("disconnected complement gives altitude = chi", items, complement_rule),
    ]


def check_linear_altitude(corpus: dict[str, gc.Graph], max_n: int = 6) -> Claim:
    items = [(k, g) for k, g in corpus.items() if g.n <= max_n]

    def check(g):
        brute, chi = linear_altitude_brute_force(g), gc.chromatic_number(g)
        return brute == chi, f"brute force {brute}, chi {chi}"

    return _claim("linear altitude equals chromatic number", items, check)


def check_mycielski() -> list[Claim]:
    bases = {"K2": gc.complete_graph(2), "K3": gc.complete_graph(3), "C5": gc.cycle_graph(5),
             "C7": gc.cycle_graph(7), "P4": gc.path_graph(4)}
    items = [(f"M{r}({k})", (g, r)) for k, g in bases.items() for r in range(3)]

    def chi_step(x):
        g, r = x
        lg = iterated_mycielskian(g, r)
        a, b = gc.chromatic_number(lg.graph), gc.chromatic_number(g) + r
        return a == b, f"chi(M^r) {a}, chi + r {b}"

    def omega_kept(x):
        g, r = x
        lg = iterated_mycielskian(g, r)
        return gc.clique_number(lg.graph) == gc.clique_number(g), ""

    def rules(x):
        lg = iterated_mycielskian(*x)
        return check_adjacency_rules(lg) and word_adjacency_scan(lg), ""

    return [
        _claim("Mycielski step raises chi by one", items, chi_step),
        _claim("Mycielski step keeps the clique number", items, omega_kept),
        _claim("Mycielski adjacency rules and word adjacency facts", items, rules),
    ]


def check_powerful() -> list[Claim]:
    items = [("M2(K2)", (gc.complete_graph(2), 2)), ("M2(C7)", (gc.cycle_graph(7), 2))]

    def props(x):
        g, r = x
        _, col = gc.optimal_colouring(g)
        po = build_powerful_ordering(g, col, r)
        checks = {
            "apex paths": apex_paths_bounded(po),
            "long paths avoid apexes": long_paths_avoid_apexes(po),
            "no path longer than t": longest_path_within_t(po),
            "u shift": u_shift_holds(po),
        }
        return all(checks.values()), str(checks)

    certs = [(f"M{r}({k})", (g, r)) for k, g, r in
             [("C5", gc.cycle_graph(5), 0), ("C7", gc.cycle_graph(7), 0), ("C7", gc.cycle_graph(7), 2)]]

    def odd_girth(x):
        cert = oddgirth_certificate(*x)
        return cert.payload["value"] <= cert.payload["t"] - 1, str(cert.payload["value"])

    def gate(x):
        try:
            oddgirth_certificate(*x)
        except PreconditionError as exc:
            return True, str(exc)
        return False, "precondition gate did not fire"

    return [
        _claim("powerful-ordering path properties", items, props),
        _claim("odd girth > t gives altitude(M^r) < t", certs, odd_girth),
        _claim("odd-girth certificate refuses failed hypotheses",
               [("M2(C5)", (gc.cycle_graph(5), 2)), ("K3", (gc.complete_graph(3), 0))], gate),
    ]


def check_mycielski_odd_cycles() -> Claim:
    """alt(M^{2r}(C_{2n+1})) = 2r + 2 for n > r + 1 on the desk-scale instances."""
    items = [("C5", (5, 0)), ("C7", (7, 0)), ("C9", (9, 0)), ("M2(C7)", (7, 1))]

    def check(x):
        n, r = x
        g, lg = named_graph(f"M{2 * r}C{n}") if r else (gc.cycle_graph(n), None)
        if lg is None:
            res = circular_altitude_exact(g)
        else:
            res = circular_altitude_bounds(g, labelled=lg)
        return res.value == 2 * r + 2, f"got [{res.lower}, {res.upper}]"

    return _claim("altitude of even Mycielskians of long odd cycles", items, check)


def check_chi_c_odd_cycles() -> Claim:
    items = [(f"C{2 * n + 1}", n) for n in (1, 2, 3, 4)]

    def check(n):
        frac = circular_colouring_optimum(gc.cycle_graph(2 * n + 1))[0]
        return frac == 2 + Fraction(1, n), str(frac)

    return _claim("chi_c of odd cycles is 2 + 1/n", items, check)


def check_zigzag_claims(samples: int = 20, seed: int = 7) -> Claim:
    rng = random.Random(seed)
    items = []
    for name in ("MK3", "Grotzsch"):
        g = named_graph(name)[0]
        t = gc.chromatic_number(g)
        for k in range(samples):
            items.append((f"{name}#{k}", (g, random_proper_colouring(g, rng), t)))

    def check(x):
        g, col, t = x
        w = zigzag_witness(g, col, t)
        return check_zigzag(g, col, t, w), str(w)

    return _claim("zig-zag witness exists for every proper colouring", items, check)


def random_proper_colouring(g: gc.Graph, rng: random.Random) -> list[int]:
    """Greedy colouring along a random vertex order, colours then randomly relabelled."""
    order = list(range(g.n))
    rng.shuffle(order)
    colour = [0] * g.n
    for v in order:
        taken = {colour[u] for u in g.neighbours(v)}
        c = 1
        while c in taken:
            c += 1
        colour[v] = c
    k = max(colour)
    extra = rng.randint(0, 2)
    names = rng.sample(range(1, k + extra + 1), k)
    return [names[c - 1] for c in colour]


def check_zhu() -> Claim:
    items = [("MK3", (named_graph("MK3")[0], False)), ("K4", (gc.complete_graph(4), True))]

    def check(x):
        g, expected = x
        res = zhu_hypothesis_check(g)
        return res.holds == expected, f"holds = {res.holds}"

    return _claim("class-separation hypothesis verdicts", items, check)


def run_suite(quick: bool = True) -> list[Claim]:
    corpus = small_corpus(random_count=40 if quick else 200)
    claims = check_small_corpus(corpus)
    claims.append(check_linear_altitude(corpus))
    claims += check_mycielski()
    claims += check_powerful()
    claims.append(check_mycielski_odd_cycles())
    claims.append(check_chi_c_odd_cycles())
    claims.append(check_zigzag_claims(samples=10 if quick else 100))
    claims.append(check_zhu())
    return claims
