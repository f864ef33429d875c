"""Built-in named graphs and seeded random graphs.

Names understood by :func:`named_graph`::

    K5  C7  P4  S3 (star, 3 leaves)  E4 (edgeless)  W5 (wheel, rim 5)
    K3,3  Petersen  Grotzsch
    M3K6, M2C7, MK3, M2(K2)   (iterated Mycielskians; M alone means r = 1)
"""

from __future__ import annotations

import random
import re
from pathlib import Path

from . import graph_core as gc
from .mycielski import LabelledGraph, iterated_mycielskian

_SIMPLE = {
    "K": gc.complete_graph,
    "C": gc.cycle_graph,
    "P": gc.path_graph,
    "S": gc.star_graph,
    "E": gc.empty_graph,
    "W": gc.wheel_graph,
}
_MYC = re.compile(r"^M(\d*)\(?([A-Za-z]+[\d,]*)\)?$")


def named_graph(name: str) -> tuple[gc.Graph, LabelledGraph | None]:
    """Resolve a built-in name; Mycielskian names also return the labelled graph."""
    key = name.strip()
    lower = key.lower()
    if lower == "petersen":
        return gc.petersen_graph(), None
    if lower in ("grotzsch", "grötzsch"):
        return gc.grotzsch_graph(), None
    m = re.fullmatch(r"K(\d+),(\d+)", key)
    if m:
        return gc.complete_bipartite(int(m[1]), int(m[2])), None
    m = re.fullmatch(r"([KCPSEW])(\d+)", key)
    if m:
        return _SIMPLE[m[1]](int(m[2])), None
    m = _MYC.fullmatch(key)
    if m:
        r = int(m[1]) if m[1] else 1
        base, _ = named_graph(m[2])
        lg = iterated_mycielskian(base, r)
        return lg.graph, lg
    raise KeyError(f"unknown graph name {name!r}")


def resolve_graph(spec: str) -> tuple[gc.Graph, LabelledGraph | None]:
    """A built-in name, a path to a file whose first line is graph6, or a graph6 string."""
    try:
        return named_graph(spec)
    except KeyError:
        pass
    path = Path(spec)
    if len(spec) < 256 and path.is_file():
        first = path.read_text().splitlines()[0]
        return gc.parse_graph6(first), None
    return gc.parse_graph6(spec), None


def small_named_graphs(max_n: int = 7) -> dict[str, gc.Graph]:
    out: dict[str, gc.Graph] = {}
    for n in range(1, max_n + 1):
        out[f"K{n}"] = gc.complete_graph(n)
        out[f"E{n}"] = gc.empty_graph(n)
        out[f"P{n}"] = gc.path_graph(n)
        if n >= 3:
            out[f"C{n}"] = gc.cycle_graph(n)
        if n >= 4:
            out[f"W{n - 1}"] = gc.wheel_graph(n - 1)
        if n >= 3:
            out[f"S{n - 1}"] = gc.star_graph(n - 1)
    for a in range(1, max_n):
        for b in range(a, max_n - a + 1):
            out[f"K{a},{b}"] = gc.complete_bipartite(a, b)
    out["MK2"] = named_graph("MK2")[0]
    if max_n >= 7:
        out["MK3"] = named_graph("MK3")[0]
    return out


def random_graph(n: int, p: float, rng: random.Random) -> gc.Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return gc.Graph.from_edges(n, edges)


def random_graphs(count: int, seed: int, n_min: int = 3, n_max: int = 7) -> list[gc.Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(random_graph(n, rng.uniform(0.2, 0.9), rng))
    return out


def small_corpus(random_count: int = 200, seed: int = 20240601, max_n: int = 7) -> dict[str, gc.Graph]:
    """Named graphs plus seeded random graphs, all with at most ``max_n`` vertices."""
    corpus = small_named_graphs(max_n)
    for k, g in enumerate(random_graphs(random_count, seed, 3, max_n)):
        corpus[f"random-{k}"] = g
    return corpus
