import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from circalt import graph_core as gc
from circalt.circular_colouring import (
    TheoremViolation,
    ZigzagWitness,
    candidate_fractions,
    check_zigzag,
    circular_chromatic_number,
    circular_colouring_optimum,
    classes_link_all,
    enumerate_colourings,
    find_pq_colouring,
    is_pq_colouring,
    zhu_hypothesis_check,
    zigzag_witness,
)
from circalt.corpus import named_graph
from circalt.orderings import CircularOrdering, LinearOrdering, induced_colouring, verify_monotonic_cycle
from circalt.theorems import random_proper_colouring
from test_graph_core import graphs

C5 = gc.cycle_graph(5)


def _pq_brute(g, p, q):
    for col in itertools.product(range(1, p + 1), repeat=g.n):
        if is_pq_colouring(g, col, p, q):
            return True
    return False


def test_is_pq_colouring_examples():
    assert is_pq_colouring(C5, (1, 3, 5, 2, 4), 5, 2)
    k2 = gc.complete_graph(2)
    assert not is_pq_colouring(k2, (1, 1), 4, 1)
    with pytest.raises(ValueError):
        is_pq_colouring(k2, (0, 1), 3, 1)
    with pytest.raises(ValueError):
        is_pq_colouring(k2, (1,), 3, 1)


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_proper_colouring_is_k1_colouring(g):
    chi, col = gc.optimal_colouring(g)
    assert is_pq_colouring(g, col, max(chi, 1), 1)


def test_find_pq_examples():
    found = find_pq_colouring(C5, 5, 2)
    assert found is not None and is_pq_colouring(C5, found.colour, 5, 2)
    assert find_pq_colouring(C5, 7, 3) is None
    assert not _pq_brute(C5, 7, 3)  # all 7^5 assignments
    assert find_pq_colouring(gc.complete_graph(3), 3, 1) is not None
    assert find_pq_colouring(gc.complete_graph(3), 5, 3) is None


@given(graphs(max_n=5))
@settings(max_examples=40, deadline=None)
def test_find_pq_matches_brute_force(g):
    for p, q in [(3, 1), (5, 2), (7, 3), (4, 1), (7, 2)]:
        found = find_pq_colouring(g, p, q)
        assert (found is not None) == _pq_brute(g, p, q)
        if found is not None:
            assert is_pq_colouring(g, found.colour, p, q)


def test_candidate_fractions():
    assert candidate_fractions(3, 5) == [Fraction(5, 2), Fraction(3)]
    assert candidate_fractions(3, 7) == [Fraction(7, 3), Fraction(5, 2), Fraction(3)]
    fr = candidate_fractions(4, 9)
    assert fr == sorted(fr) and all(3 < f <= 4 and f.numerator <= 9 for f in fr)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_odd_cycles(n):
    assert circular_chromatic_number(gc.cycle_graph(2 * n + 1)) == 2 + Fraction(1, n)


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_graphs(n):
    assert circular_chromatic_number(gc.complete_graph(n)) == n


def test_named_values():
    assert circular_chromatic_number(named_graph("MK3")[0]) == 4
    assert circular_chromatic_number(gc.grotzsch_graph()) == 4
    assert circular_chromatic_number(gc.petersen_graph()) == 3
    assert circular_chromatic_number(gc.empty_graph(3)) == 1


@given(graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_chi_c_window_and_monotone_feasibility(g):
    chi = gc.chromatic_number(g)
    frac, pq = circular_colouring_optimum(g)
    assert is_pq_colouring(g, pq.colour, pq.p, pq.q)
    if chi >= 2:
        assert chi - 1 < frac <= chi
        # nothing strictly below is feasible, everything above (p <= n) is
        for f in candidate_fractions(chi, g.n):
            feasible = find_pq_colouring(g, f.numerator, f.denominator) is not None
            assert feasible == (f >= frac)


# --- zig-zag ---------------------------------------------------------------


def _refuting_colourings():
    g, lg = named_graph("MK3")
    idx = {s: i for i, s in enumerate(lg.label_strings())}
    c1 = {"w_1": 1, "a^{v}": 2, "a^{u}": 2, "b^{v}": 3, "b^{u}": 3, "c^{v}": 4, "c^{u}": 4}
    c2 = {"w_1": 1, "a^{v}": 1, "a^{u}": 2, "b^{u}": 2, "c^{u}": 2, "b^{v}": 3, "c^{v}": 4}
    names = sorted(idx, key=idx.get)
    return g, [c1[s] for s in names], [c2[s] for s in names]


def test_zigzag_on_refuting_colouring():
    g, c1, _ = _refuting_colourings()
    assert gc.is_proper_colouring(g, c1)
    w = zigzag_witness(g, c1, 4)
    assert len(w.side_a) == 2 and len(w.side_b) == 2
    assert w.colours == (1, 2, 3, 4)
    assert check_zigzag(g, c1, 4, w)


def test_zigzag_c5_all_colourings():
    for col in itertools.product(range(1, 4), repeat=5):
        if gc.is_proper_colouring(C5, col):
            w = zigzag_witness(C5, col, 3)
            assert check_zigzag(C5, col, 3, w)
            assert len(w.side_a) == 2 and len(w.side_b) == 1


def test_zigzag_grotzsch_gives_monotonic_cycle():
    g = gc.grotzsch_graph()
    rnd = random.Random(4)
    for _ in range(30):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        col = induced_colouring(g, LinearOrdering(perm))
        w = zigzag_witness(g, col, 4)
        a1, a2 = w.side_a
        b1, b2 = w.side_b
        assert verify_monotonic_cycle(g, CircularOrdering(perm), [a1, b1, a2, b2])


def test_zigzag_random_colourings():
    rnd = random.Random(0)
    for name in ("MK3", "Grotzsch", "MK2"):
        g = named_graph(name)[0]
        t = gc.chromatic_number(g)
        for _ in range(20):
            col = random_proper_colouring(g, rnd)
            assert check_zigzag(g, col, t, zigzag_witness(g, col, t))


def test_zigzag_failure_is_reported():
    # a 4-colouring of the 4-path has no K_{2,2}
    p4 = gc.path_graph(4)
    with pytest.raises(TheoremViolation):
        zigzag_witness(p4, [1, 2, 3, 4], 4)
    with pytest.raises(ValueError):
        zigzag_witness(p4, [1, 1, 2, 3], 2)


def test_check_zigzag_rejects_bad_witnesses():
    g, c1, _ = _refuting_colourings()
    w = zigzag_witness(g, c1, 4)
    assert not check_zigzag(g, c1, 4, ZigzagWitness(w.side_b, w.side_a, w.colours))
    assert not check_zigzag(g, c1, 4, ZigzagWitness(w.side_a, w.side_b, (1, 2, 4, 3)))
    assert not check_zigzag(g, c1, 3, w)


# --- class-separation hypothesis --------------------------------------------


def _zhu_oracle(g, m):
    """Brute force: all m-colourings by product, all candidate sets A."""
    cols = [c for c in itertools.product(range(m), repeat=g.n)
            if gc.is_proper_colouring(g, c) and len(set(c)) == m]
    for mask in range(1, (1 << g.n) - 1):
        ok = True
        for c in cols:
            for colour in range(m):
                cls = {v for v in range(g.n) if c[v] == colour}
                inside = {v for v in cls if mask >> v & 1}
                if inside and inside != cls:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def test_zhu_mk3_example():
    g, c1, c2 = _refuting_colourings()
    res = zhu_hypothesis_check(g)
    assert not res.holds and res.m == 4
    enumerated = set(enumerate_colourings(g, 4))

    def relabel(c):
        names = {}
        return tuple(names.setdefault(x, len(names) + 1) for x in c)

    assert relabel(c1) in enumerated and relabel(c2) in enumerated
    assert classes_link_all(g.n, [c1, c2])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_zhu_complete(n):
    res = zhu_hypothesis_check(gc.complete_graph(n))
    assert res.holds == (n >= 2)


def test_zhu_c5_verdict_matches_oracle():
    res = zhu_hypothesis_check(C5)
    assert res.holds == _zhu_oracle(C5, 3)
    assert res.holds is False
    assert res.colourings == 5


@given(graphs(max_n=6))
@settings(max_examples=40, deadline=None)
def test_zhu_matches_oracle(g):
    m = gc.chromatic_number(g)
    res = zhu_hypothesis_check(g, m)
    assert res.holds == _zhu_oracle(g, m)
    if res.holds:
        assert 0 < len(res.witness_a) < g.n


def test_enumerate_colourings_counts():
    # C5 has 30 proper 3-colourings, 5 up to renaming
    assert len([c for c in enumerate_colourings(C5, 3) if max(c) == 3]) == 5
    assert len(enumerate_colourings(gc.empty_graph(3), 3)) == 5  # Bell(3)
    with pytest.raises(RuntimeError):
        enumerate_colourings(gc.empty_graph(8), 8, limit=10)
