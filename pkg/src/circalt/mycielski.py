"""Iterated Mycielskians with word-labelled vertices.

A vertex of M^r(G) is either a base vertex ``a`` of G carrying a word of
length r over {u, v}, or an apex ``w_i`` (created at step i) carrying a word of
length r - i. Each Mycielski step adds one letter: ``v`` for the copy of the
old vertex, ``u`` for its shadow.

Words are read right to left, the most recent letter being position 1. We
store them in position order, so ``word[s - 1]`` is the letter in position s
and the printed form (``b^{uv}``) is the reversed string.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from string import ascii_lowercase
from typing import Sequence

from .graph_core import Graph

BASE = "base"
APEX = "w"


@dataclass(frozen=True, order=True)
class MycLabel:
    kind: str  # BASE or APEX
    ident: int  # base vertex id, or apex level i >= 1
    word: str = ""  # letters in position order, word[0] is position 1

    def __post_init__(self) -> None:
        if self.kind not in (BASE, APEX):
            raise ValueError(f"unknown label kind {self.kind!r}")
        if set(self.word) - {"u", "v"}:
            raise ValueError(f"word over {{u, v}} expected, got {self.word!r}")
        if self.kind == APEX and self.ident < 1:
            raise ValueError("apex levels start at 1")

    @property
    def is_apex(self) -> bool:
        return self.kind == APEX

    def letter(self, position: int) -> str:
        return self.word[position - 1]

    def extended(self, letter: str) -> "MycLabel":
        return MycLabel(self.kind, self.ident, letter + self.word)

    def stripped(self) -> "MycLabel":
        """Drop the position-1 letter (the inverse of ``extended``)."""
        return MycLabel(self.kind, self.ident, self.word[1:])

    def render(self, base_names: Sequence[str] | None = None) -> str:
        if self.is_apex:
            stem = f"w_{self.ident}"
        elif base_names is not None:
            stem = base_names[self.ident]
        else:
            stem = _default_name(self.ident)
        printed = self.word[::-1]
        return f"{stem}^{{{printed}}}" if printed else stem


def _default_name(i: int) -> str:
    return ascii_lowercase[i] if i < 26 else f"x{i}"


def word_key(word: str) -> tuple[int, ...]:
    """Sort key for the right-to-left lexicographic order with v < u."""
    return tuple(0 if ch == "v" else 1 for ch in word)


def canonical_key(label: MycLabel) -> tuple:
    # apexes first by level, then base vertices; words right-to-left with v < u
    if label.is_apex:
        return (0, label.ident, word_key(label.word))
    return (1, word_key(label.word), label.ident)


@dataclass(frozen=True)
class LabelledGraph:
    """M^r(base) with one MycLabel per vertex index."""

    graph: Graph
    labels: tuple[MycLabel, ...]
    base: Graph
    r: int
    index_of: dict = field(compare=False, repr=False, default=None)

    def __post_init__(self) -> None:
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per vertex required")
        if self.index_of is None:
            object.__setattr__(self, "index_of", {lab: i for i, lab in enumerate(self.labels)})
        if len(self.index_of) != self.graph.n:
            raise ValueError("labels must be distinct")

    @property
    def n(self) -> int:
        return self.graph.n

    def label_strings(self) -> list[str]:
        return render_labels(self.labels, self.base)

    @cached_property
    def base_vertices(self) -> list[int]:
        return [i for i, lab in enumerate(self.labels) if not lab.is_apex]

    @cached_property
    def apex_vertices(self) -> list[int]:
        return [i for i, lab in enumerate(self.labels) if lab.is_apex]


def render_labels(labels: Sequence[MycLabel], base: Graph) -> list[str]:
    names = list(base.labels) if base.labels is not None else None
    return [lab.render(names) for lab in labels]


def label_base(g: Graph) -> LabelledGraph:
    """M^0(g): every vertex is a base vertex with the empty word."""
    return LabelledGraph(g, tuple(MycLabel(BASE, i) for i in range(g.n)), g, 0)


def mycielskian(g: LabelledGraph | Graph) -> LabelledGraph:
    """One Mycielski step, returned in canonical vertex order."""
    if isinstance(g, Graph):
        g = label_base(g)
    r = g.r + 1
    old = g.labels
    new_labels = [lab.extended("v") for lab in old] + [lab.extended("u") for lab in old]
    new_labels.append(MycLabel(APEX, r))
    n = len(old)
    edges = []
    for a, b in g.graph.edges():
        edges += [(a, b), (n + a, b), (n + b, a)]
    edges += [(2 * n, n + a) for a in range(n)]
    order = sorted(range(2 * n + 1), key=lambda i: canonical_key(new_labels[i]))
    where = {old_i: k for k, old_i in enumerate(order)}
    labels = tuple(new_labels[i] for i in order)
    graph = Graph.from_edges(
        2 * n + 1, [(where[a], where[b]) for a, b in edges], render_labels(labels, g.base)
    )
    return LabelledGraph(graph, labels, g.base, r)


def iterated_mycielskian(g: Graph, r: int) -> LabelledGraph:
    if r < 0:
        raise ValueError(f"iteration count must be non-negative, got {r}")
    lg = label_base(g)
    for _ in range(r):
        lg = mycielskian(lg)
    return lg


def mycielski_order(n: int, r: int) -> int:
    """|V(M^r(G))| for |V(G)| = n."""
    return 2**r * n + 2**r - 1


def inherited_vertices(lg: LabelledGraph) -> list[int]:
    """Indices of M^r whose position-1 letter is v: the copy of M^{r-1}."""
    return [i for i, lab in enumerate(lg.labels) if lab.word and lab.word[0] == "v"]


def check_adjacency_rules(lg: LabelledGraph) -> bool:
    """R1-R3 at the top level, then recursively on the v-copy down to the base graph."""
    g, labels = lg.graph, lg.labels
    r = lg.r
    if r == 0:
        if lg.n != lg.base.n or any(lab.is_apex or lab.word for lab in labels):
            return False
        return all(
            g.has_edge(i, j) == lg.base.has_edge(labels[i].ident, labels[j].ident)
            for i in range(lg.n)
            for j in range(i + 1, lg.n)
        )
    top = MycLabel(APEX, r)
    if top not in lg.index_of:
        return False
    w = lg.index_of[top]
    below = {}  # label in M^{r-1} -> (index of ^v copy, index of ^u copy)
    for i, lab in enumerate(labels):
        if i == w:
            continue
        if not lab.word:
            return False
        below.setdefault(lab.stripped(), [None, None])[lab.word[0] == "u"] = i
    if len(below) * 2 + 1 != lg.n or any(None in pair for pair in below.values()):
        return False
    # R1
    for av, au in below.values():
        if not g.has_edge(w, au) or g.has_edge(w, av):
            return False
    items = list(below.items())
    for x in range(len(items)):
        av, au = items[x][1]
        for y in range(x + 1, len(items)):
            bv, bu = items[y][1]
            # R2
            if g.has_edge(au, bu):
                return False
            # R3
            if not g.has_edge(av, bv) == g.has_edge(av, bu) == g.has_edge(au, bv):
                return False
        if g.has_edge(au, av):
            return False
    sub_order = sorted(below, key=canonical_key)
    sub_graph = g.induced_subgraph([below[lab][0] for lab in sub_order])
    return check_adjacency_rules(LabelledGraph(sub_graph, tuple(sub_order), lg.base, r - 1))


def word_adjacency_scan(lg: LabelledGraph) -> bool:
    """Exhaustive pairwise check of the three word-adjacency facts for M^r(G).

    (i) base vertices with distinct words are adjacent only over an edge of G;
    (ii) base vertices whose words share a u in some position are never adjacent;
    (iii) copies of the same apex w_i with distinct words are never adjacent.
    """
    g, labels, base = lg.graph, lg.labels, lg.base
    for i in range(lg.n):
        li = labels[i]
        for j in range(i + 1, lg.n):
            lj = labels[j]
            adjacent = g.has_edge(i, j)
            if not li.is_apex and not lj.is_apex and li.word != lj.word:
                if adjacent and not base.has_edge(li.ident, lj.ident):
                    return False
            if not li.is_apex and not lj.is_apex:
                shared_u = any(a == b == "u" for a, b in zip(li.word, lj.word))
                if shared_u and adjacent:
                    return False
            if li.is_apex and lj.is_apex and li.ident == lj.ident and adjacent:
                return False
    return True
