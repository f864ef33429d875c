"""Powerful orderings of iterated Mycielskians and the odd-girth upper-bound certificate.

A powerful ordering of M^r(G) lists every apex before every base vertex, apex
levels ascending (P3, P4), base vertices grouped by word in right-to-left
lexicographic order with v < u (P2), and inside each word by the colour that
the ordering induces on G (P1), that colouring being optimal (P0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .certificates import Certificate, emit_graph6
from .circular_colouring import TheoremViolation
from .graph_core import Graph, is_proper_colouring, odd_girth, optimal_colouring
from .mycielski import LabelledGraph, iterated_mycielskian, word_key
from .orderings import (
    LinearOrdering,
    colour_sorted_ordering,
    induced_colouring,
    longest_monotonic_cycle,
    longest_monotonic_path,
)


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class PowerfulOrdering:
    ordering: LinearOrdering
    base_colouring: tuple[int, ...]
    r: int
    labelled: LabelledGraph


def build_powerful_ordering(g: Graph, colouring: Sequence[int], r: int) -> PowerfulOrdering:
    if not is_proper_colouring(g, colouring):
        raise ValueError("colouring is not proper")
    chi = optimal_colouring(g)[0]
    if len(set(colouring)) != chi:
        raise ValueError(f"colouring uses {len(set(colouring))} colours, chi = {chi}")
    # sorting by a colouring need not induce that same colouring (a vertex with no
    # neighbour in the class just below drops down); the colouring induced by the
    # sorted order does reproduce itself, and is still optimal
    colouring = induced_colouring(g, colour_sorted_ordering(colouring))
    lg = iterated_mycielskian(g, r)

    def key(i: int) -> tuple:
        lab = lg.labels[i]
        if lab.is_apex:
            return (0, lab.ident, word_key(lab.word))
        return (1, word_key(lab.word), colouring[lab.ident], lab.ident)

    perm = sorted(range(lg.n), key=key)
    return PowerfulOrdering(LinearOrdering(perm), tuple(colouring), r, lg)


def inherited_ordering(
    lg: LabelledGraph, ordering: LinearOrdering
) -> tuple[LabelledGraph, LinearOrdering]:
    """Restriction to the v-copy of M^{r-1}, re-indexed as M^{r-1}(G)."""
    if lg.r < 1:
        raise ValueError("M^0 has no parent")
    below = iterated_mycielskian(lg.base, lg.r - 1)
    perm = [
        below.index_of[lg.labels[i].stripped()]
        for i in ordering.perm
        if lg.labels[i].word[:1] == "v"
    ]
    return below, LinearOrdering(perm)


def base_colouring_of(lg: LabelledGraph, ordering: LinearOrdering) -> list[int]:
    """Colouring of G induced by inheriting the ordering all the way down."""
    while lg.r > 0:
        lg, ordering = inherited_ordering(lg, ordering)
    return induced_colouring(lg.graph, ordering)


def verify_powerful(ordering: LinearOrdering | PowerfulOrdering, lg: LabelledGraph) -> dict:
    if isinstance(ordering, PowerfulOrdering):
        ordering = ordering.ordering
    labels = [lg.labels[i] for i in ordering.perm]
    c = base_colouring_of(lg, ordering)
    chi = optimal_colouring(lg.base)[0]
    report = {"induced_colouring": c, "P0": max(c, default=0) == chi}

    last_colour: dict[str, int] = {}
    p1 = True
    for lab in labels:
        if not lab.is_apex:
            prev = last_colour.get(lab.word)
            if prev is not None and c[lab.ident] < prev:
                p1 = False
            last_colour[lab.word] = c[lab.ident]
    report["P1"] = p1

    base_words = [word_key(lab.word) for lab in labels if not lab.is_apex]
    report["P2"] = all(x <= y for x, y in zip(base_words, base_words[1:]))

    kinds = [lab.is_apex for lab in labels]
    report["P3"] = kinds == sorted(kinds, reverse=True)

    levels = [lab.ident for lab in labels if lab.is_apex]
    report["P4"] = levels == sorted(levels)
    return report


def is_powerful(ordering, lg: LabelledGraph) -> bool:
    report = verify_powerful(ordering, lg)
    return all(report[k] for k in ("P0", "P1", "P2", "P3", "P4"))


def check_oddgirth_hypotheses(g: Graph, r: int) -> int:
    """t = chi(M^r(g)) when g has an edge, t is odd and the odd girth exceeds t."""
    if g.num_edges == 0:
        raise PreconditionError("hypothesis failed: the base graph must have an edge")
    t = optimal_colouring(g)[0] + r
    if t % 2 == 0:
        raise PreconditionError(f"hypothesis failed: t = chi(M^r(G)) = {t} is even")
    og = odd_girth(g)
    if og <= t:
        raise PreconditionError(f"hypothesis failed: odd girth {og} is not greater than t = {t}")
    return t


def oddgirth_certificate(g: Graph, r: int) -> Certificate:
    """Upper-bound certificate alpha(M^r(g)) <= t - 1 from a powerful ordering closed into a circle."""
    t = check_oddgirth_hypotheses(g, r)
    _, colouring = optimal_colouring(g)
    po = build_powerful_ordering(g, colouring, r)
    circle = po.ordering.closed()
    value, cycle = longest_monotonic_cycle(po.labelled.graph, circle)
    if value >= t:
        raise TheoremViolation(f"powerful ordering of M^{r} has a monotonic {value}-cycle, t = {t}")
    payload = {
        "base": emit_graph6(g),
        "r": r,
        "t": t,
        "base_colouring": list(po.base_colouring),
        "ordering": list(circle.perm),
        "value": value,
        "cycle": cycle,
    }
    return Certificate("powerful", emit_graph6(po.labelled.graph), payload)


# --- path properties of powerful orderings ---------------------------------


def monotonic_paths(g: Graph, ordering: LinearOrdering, start: int | None = None) -> Iterator[list[int]]:
    """Every increasing path (>= 1 vertex), optionally only those beginning at ``start``."""
    pos = ordering.positions()
    later = [[u for u in g.neighbours(v) if pos[u] > pos[v]] for v in range(g.n)]

    def walk(path: list[int]) -> Iterator[list[int]]:
        yield list(path)
        for u in later[path[-1]]:
            path.append(u)
            yield from walk(path)
            path.pop()

    starts = range(g.n) if start is None else [start]
    for s in starts:
        yield from walk([s])


def apex_paths_bounded(po: PowerfulOrdering) -> bool:
    """Increasing paths starting at an apex w_i have at most r + 2 - i vertices."""
    lg = po.labelled
    for x in lg.apex_vertices:
        limit = po.r + 2 - lg.labels[x].ident
        if any(len(p) > limit for p in monotonic_paths(lg.graph, po.ordering, x)):
            return False
    return True


def long_paths_avoid_apexes(po: PowerfulOrdering) -> bool:
    """No increasing path with >= t vertices touches an apex (needs an edge in G)."""
    lg = po.labelled
    t = optimal_colouring(lg.base)[0] + po.r
    apex = set(lg.apex_vertices)
    return all(
        not apex.intersection(p) for p in monotonic_paths(lg.graph, po.ordering) if len(p) >= t
    )


def longest_path_within_t(po: PowerfulOrdering) -> bool:
    lg = po.labelled
    t = optimal_colouring(lg.base)[0] + po.r
    return longest_monotonic_path(lg.graph, po.ordering)[0] <= t


def u_shift_holds(po: PowerfulOrdering) -> bool:
    """For base x ~ y with x earlier: a u of x's word in position s > 1 is preceded
    (some position k < s) by a v in x's word where y's word has a u."""
    lg = po.labelled
    pos = po.ordering.positions()
    for x in lg.base_vertices:
        w1 = lg.labels[x].word
        for y in lg.graph.neighbours(x):
            if lg.labels[y].is_apex or pos[y] < pos[x]:
                continue
            w2 = lg.labels[y].word
            for s in range(2, len(w1) + 1):
                if w1[s - 1] == "u" and not any(
                    w1[k - 1] == "v" and w2[k - 1] == "u" for k in range(1, s)
                ):
                    return False
    return True

