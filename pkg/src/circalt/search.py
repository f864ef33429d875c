"""Simulated annealing over circular orderings, minimising the longest monotonic cycle.

Whatever the annealer reports is an upper bound on the circular altitude: the
best ordering is re-scored by :func:`circalt.orderings.longest_monotonic_cycle`
before it leaves this module.

The hot loop is a numba kernel. Per-anchor results are cached so that a move
touching positions ``lo..hi`` only re-runs anchors at positions ``<= hi``;
anchors further on never see the moved vertices.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numba
import numpy as np

from .graph_core import Graph
from .orderings import CircularOrdering, longest_monotonic_cycle

RNG_NAME = "numpy.random.PCG64 via default_rng(seed ^ restart)"


def csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    nbrs = [g.neighbours(v) for v in range(g.n)]
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + len(nbrs[v])
    indices = np.array([u for row in nbrs for u in row], dtype=np.int64)
    return indptr, indices


@numba.njit(cache=True)
def _scan_anchors(perm, pos, indptr, indices, top, cnt, f, upto):
    """Recompute anchor results for positions 0..upto inclusive."""
    n = perm.shape[0]
    for a in range(upto + 1):
        f[a] = 1
        for j in range(a + 1, n):
            v = perm[j]
            best = 0
            for k in range(indptr[v], indptr[v + 1]):
                p = pos[indices[k]]
                if p >= a and p < j and f[p] > best:
                    best = f[p]
            f[j] = best + 1 if best > 0 else 0
        s = perm[a]
        t = 0
        c = 0
        for k in range(indptr[s], indptr[s + 1]):
            p = pos[indices[k]]
            if p > a:
                val = f[p]
                if val > t:
                    t = val
                    c = 1
                elif val == t:
                    c += 1
        top[a] = t
        cnt[a] = c


@numba.njit(cache=True)
def _summary(top, cnt):
    n = top.shape[0]
    value = 0
    for a in range(n):
        if top[a] > value:
            value = top[a]
    count = 0
    for a in range(n):
        if top[a] == value:
            count += cnt[a]
    return value, count


@numba.njit(cache=True)
def evaluate_perm(perm, indptr, indices):
    """(longest monotonic cycle, number of extremal (anchor, closing edge) pairs)."""
    n = perm.shape[0]
    pos = np.empty(n, dtype=np.int64)
    for k in range(n):
        pos[perm[k]] = k
    top = np.zeros(n, dtype=np.int64)
    cnt = np.zeros(n, dtype=np.int64)
    f = np.zeros(n, dtype=np.int64)
    _scan_anchors(perm, pos, indptr, indices, top, cnt, f, n - 1)
    value, count = _summary(top, cnt)
    if value < 1:
        value = 1
    return value, count


@numba.njit(cache=True)
def enumerate_canonical(n, indptr, indices):
    """Score every canonical circular ordering (vertex 0 first, perm[1] < perm[-1]).

    Returns (minimum value, a minimising perm, orderings scored, histogram of
    values). Tails are visited in lexicographic order, so the minimiser is the
    lexicographically first one.
    """
    perm = np.arange(n, dtype=np.int64)
    best = n + 1
    best_perm = perm.copy()
    hist = np.zeros(n + 2, dtype=np.int64)
    seen = 0
    while True:
        if n < 3 or perm[1] < perm[n - 1]:
            value, _ = evaluate_perm(perm, indptr, indices)
            hist[value] += 1
            seen += 1
            if value < best:
                best = value
                best_perm[:] = perm
        # next permutation of perm[1:]
        i = n - 2
        while i >= 1 and perm[i] >= perm[i + 1]:
            i -= 1
        if i < 1:
            break
        j = n - 1
        while perm[j] <= perm[i]:
            j -= 1
        x = perm[i]
        perm[i] = perm[j]
        perm[j] = x
        lo, hi = i + 1, n - 1
        while lo < hi:
            x = perm[lo]
            perm[lo] = perm[hi]
            perm[hi] = x
            lo += 1
            hi -= 1
    return best, best_perm, seen, hist


@numba.njit(cache=True)
def _apply_move(perm, pos, kind, lo, hi, d, buf):
    if kind == 2:
        # rotate perm[lo..hi] left by d: moves a segment to the other end
        length = hi - lo + 1
        for k in range(length):
            buf[k] = perm[lo + (k + d) % length]
        for k in range(length):
            perm[lo + k] = buf[k]
            pos[buf[k]] = lo + k
    else:
        x = perm[lo]
        perm[lo] = perm[hi]
        perm[hi] = x
        pos[perm[lo]] = lo
        pos[perm[hi]] = hi


@numba.njit(cache=True)
def _anneal_kernel(indptr, indices, perm, draws, t0, decay, p_adj, p_swap, scale):
    n = perm.shape[0]
    pos = np.empty(n, dtype=np.int64)
    for k in range(n):
        pos[perm[k]] = k
    top = np.zeros(n, dtype=np.int64)
    cnt = np.zeros(n, dtype=np.int64)
    f = np.zeros(n, dtype=np.int64)
    save_top = np.zeros(n, dtype=np.int64)
    save_cnt = np.zeros(n, dtype=np.int64)
    buf = np.zeros(n, dtype=np.int64)
    _scan_anchors(perm, pos, indptr, indices, top, cnt, f, n - 1)
    value, count = _summary(top, cnt)
    energy = value + count / scale
    best_perm = perm.copy()
    best_value = value
    best_count = count
    best_energy = energy
    evaluations = 1
    traj_step = [0]
    traj_value = [value]
    mismatch = False
    temp = t0
    steps = draws.shape[0]
    for step in range(steps):
        u0 = draws[step, 0]
        if u0 < p_adj:
            kind = 0
            lo = int(draws[step, 1] * (n - 1))
            hi = lo + 1
            d = 0
        else:
            kind = 1 if u0 < p_adj + p_swap else 2
            i = int(draws[step, 1] * n)
            j = int(draws[step, 2] * (n - 1))
            if j >= i:
                j += 1
            lo = min(i, j)
            hi = max(i, j)
            d = 1 + int(draws[step, 3] * (hi - lo))
        for a in range(hi + 1):
            save_top[a] = top[a]
            save_cnt[a] = cnt[a]
        _apply_move(perm, pos, kind, lo, hi, d, buf)
        _scan_anchors(perm, pos, indptr, indices, top, cnt, f, hi)
        evaluations += 1
        new_value, new_count = _summary(top, cnt)
        new_energy = new_value + new_count / scale
        delta = new_energy - energy
        if delta <= 0.0 or draws[step, 4] < np.exp(-delta / temp):
            value, count, energy = new_value, new_count, new_energy
            if energy < best_energy:
                # full recomputation guards the incremental cache
                full_value, full_count = evaluate_perm(perm, indptr, indices)
                if full_value != max(value, 1) or (value >= 1 and full_count != count):
                    mismatch = True
                    break
                if value < best_value:
                    traj_step.append(step + 1)
                    traj_value.append(value)
                best_perm[:] = perm
                best_value = value
                best_count = count
                best_energy = energy
        else:
            if kind == 2:
                _apply_move(perm, pos, kind, lo, hi, (hi - lo + 1) - d, buf)
            else:
                _apply_move(perm, pos, kind, lo, hi, d, buf)
            for a in range(hi + 1):
                top[a] = save_top[a]
                cnt[a] = save_cnt[a]
        temp *= decay
    return (
        best_perm,
        max(best_value, 1),
        best_count,
        evaluations,
        np.array(traj_step, dtype=np.int64),
        np.array(traj_value, dtype=np.int64),
        mismatch,
    )


class KernelMismatch(RuntimeError):
    """The incremental evaluation disagreed with a full recomputation."""


@dataclass(frozen=True)
class AnnealConfig:
    seed: int
    restarts: int = 1
    steps: int = 100_000
    t0: float = 0.5
    decay: float | None = None  # None: reach t0 / 1000 at the last step
    moves: tuple[float, float, float] = (0.4, 0.3, 0.3)  # adjacent, swap, segment

    def __post_init__(self) -> None:
        if self.restarts < 1 or self.steps < 1:
            raise ValueError("restarts and steps must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.t0 <= 0:
            raise ValueError("initial temperature must be positive")
        if self.decay is not None and not 0 < self.decay < 1:
            raise ValueError("decay must lie in (0, 1)")
        if len(self.moves) != 3 or min(self.moves) < 0 or abs(sum(self.moves) - 1) > 1e-9:
            raise ValueError("move probabilities must be three non-negatives summing to 1")

    @property
    def effective_decay(self) -> float:
        if self.decay is not None:
            return self.decay
        return 1e-3 ** (1.0 / self.steps)


@dataclass
class SearchReport:
    best_value: int
    best_ordering: CircularOrdering
    best_cycle: list[int]
    evaluations: int
    restart_best: list[int]
    trajectories: list[list[tuple[int, int]]]
    config: AnnealConfig
    rng: str = RNG_NAME
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "best_value": self.best_value,
            "best_ordering": list(self.best_ordering.perm),
            "best_cycle": self.best_cycle,
            "evaluations": self.evaluations,
            "restart_best": self.restart_best,
            "trajectories": [[list(p) for p in t] for t in self.trajectories],
            "config": {**asdict(self.config), "effective_decay": self.config.effective_decay},
            "rng": self.rng,
        }


def anneal_min_max_cycle(g: Graph, cfg: AnnealConfig) -> SearchReport:
    if g.n < 3:
        raise ValueError("annealing needs at least 3 vertices")
    indptr, indices = csr(g)
    scale = float(2 * g.num_edges + 1)
    p_adj, p_swap, _ = cfg.moves
    results = []
    evaluations = 0
    for restart in range(cfg.restarts):
        rng = np.random.default_rng(cfg.seed ^ restart)
        perm = rng.permutation(g.n).astype(np.int64)
        draws = rng.random((cfg.steps, 5))
        out = _anneal_kernel(
            indptr, indices, perm, draws, cfg.t0, cfg.effective_decay, p_adj, p_swap, scale
        )
        best_perm, value, count, evals, t_step, t_value, mismatch = out
        if mismatch:
            raise KernelMismatch(f"incremental evaluation diverged in restart {restart}")
        evaluations += int(evals)
        results.append(
            (int(value), int(count), restart, best_perm, list(zip(t_step.tolist(), t_value.tolist())))
        )
    value, count, restart, best_perm, _ = min(results, key=lambda x: (x[0], x[1], x[2]))
    ordering = CircularOrdering(best_perm.tolist()).canonical()
    checked, cycle = longest_monotonic_cycle(g, ordering)
    if checked != value:
        raise KernelMismatch(f"annealer reported {value}, re-verification gives {checked}")
    return SearchReport(
        best_value=checked,
        best_ordering=ordering,
        best_cycle=cycle,
        evaluations=evaluations,
        restart_best=[x[0] for x in results],
        trajectories=[x[4] for x in results],
        config=cfg,
        extras={"best_restart": restart, "extremal_count": count},
    )


def sample_cycle_values(g: Graph, samples: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Longest monotonic cycle of ``samples`` uniform random circular orderings.

    Returns the values and the orderings (one per row).
    """
    indptr, indices = csr(g)
    rng = np.random.default_rng(seed)
    perms = np.stack([rng.permutation(g.n) for _ in range(samples)]).astype(np.int64)
    values = np.array([evaluate_perm(p, indptr, indices)[0] for p in perms], dtype=np.int64)
    return values, perms


def sampled_lower_evidence(g: Graph, k: int, samples: int, seed: int) -> bool:
    """True iff every sampled ordering has a monotonic cycle of length >= k (evidence only)."""
    values, _ = sample_cycle_values(g, samples, seed)
    return bool((values >= k).all())
