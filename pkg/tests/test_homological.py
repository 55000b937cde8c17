from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from posdet.ideals import MonomialIdeal
from posdet.lattice import zero, one, indicator, box_enumerate, map_sqrt
from posdet.linalg import QQ, GF
from posdet.boxmod import (
    MonomialMatrix, from_ideal_pair, free_box, pullback_functor, compare_graded,
    window_reindex,
)
from posdet.homological import (
    BettiTable, FreeComplex, betti_table, taylor_oracle, minimal_resolution,
    radicalize_resolution, ext_window, ext_window_b, classify,
)
from posdet.harness import InstanceSpec, random_instance

I_EX = MonomialIdeal(2, [(2, 0), (1, 1)])
EX_TABLE = {(0, (0, 0)): 1, (1, (2, 0)): 1, (1, (1, 1)): 1, (2, (2, 1)): 1}


def quotient(I, t, field=QQ):
    return from_ideal_pair(I, MonomialIdeal.unit(I.n), t, field)


def test_betti_of_free_module():
    assert betti_table(quotient(MonomialIdeal.zero_ideal(3), (2, 1, 1))).entries == {(0, (0, 0, 0)): 1}


def test_betti_example_and_radical():
    M = quotient(I_EX, (2, 1))
    assert betti_table(M).entries == EX_TABLE
    R = pullback_functor(M, "r")
    bR = betti_table(R)
    assert bR.entries == {(0, (0, 0)): 1, (1, (1, 0)): 1}
    bM = betti_table(M)
    assert bM[2, (2, 1)] >= bR[2, (1, 1)] and bM[1, (2, 0)] >= bR[1, (1, 0)]


def test_taylor_examples():
    assert taylor_oracle(MonomialIdeal(1, [(1,)])).entries == {(0, (0,)): 1, (1, (1,)): 1}
    assert taylor_oracle(I_EX).entries == EX_TABLE
    tri = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    k, o = betti_table(quotient(tri, (1, 1, 1))), taylor_oracle(tri)
    assert k == o
    assert k[2, (1, 1, 1)] == 2


def _rp2_ideal():
    facets = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
              (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]
    facets = {frozenset(i - 1 for i in f) for f in facets}
    nonfaces = [F for F in map(frozenset, combinations(range(6), 3)) if F not in facets]
    return MonomialIdeal(6, [indicator(6, F) for F in nonfaces])


def test_characteristic_dependence_rp2():
    I = _rp2_ideal()
    full = (1,) * 6
    over_q = betti_table(quotient(I, full, QQ))
    over_2 = betti_table(quotient(I, full, GF(2)))
    assert over_q == taylor_oracle(I, QQ)
    assert over_2 == taylor_oracle(I, GF(2))
    assert over_q[3, full] == 0 and over_q[4, full] == 0
    assert over_2[3, full] == 1 and over_2[4, full] == 1


def test_resolution_examples():
    F = minimal_resolution(quotient(MonomialIdeal.zero_ideal(2), (1, 1)))
    assert F.length == 0
    F = minimal_resolution(quotient(I_EX, (2, 1)))
    assert [sorted(s) for s in F.shifts] == [[(0, 0)], [(1, 1), (2, 0)], [(2, 1)]]
    assert F.is_minimal()
    c = classify(quotient(I_EX, (2, 1)), F)
    assert F.length == c.projdim == 2 - c.depth


def test_radicalized_resolution_example():
    M = quotient(I_EX, (2, 1))
    G = radicalize_resolution(minimal_resolution(M))
    assert [sorted(s) for s in G.shifts] == [[(0, 0)], [(1, 0), (1, 1)], [(1, 1)]]
    assert not G.is_minimal()
    assert G.is_acyclic_on((0, 0), (1, 1))
    assert compare_graded(G.cokernel_box((1, 1)), quotient(MonomialIdeal(2, [(1, 0)]), (1, 1)))
    assert G.tor_table() == betti_table(pullback_functor(M, "r"))


def test_radicalize_squarefree_unchanged():
    F = minimal_resolution(quotient(MonomialIdeal(2, [(1, 1)]), (1, 1)))
    G = radicalize_resolution(F)
    assert G.shifts == F.shifts


def test_d_squared_checked():
    d1 = MonomialMatrix([(0,)], [(1,)], {(0, 0): 1})
    d2 = MonomialMatrix([(1,)], [(2,)], {(0, 0): 1})
    with pytest.raises(ValueError):
        FreeComplex([[(0,)], [(1,)], [(2,)]], [d1, d2], QQ)


def test_ext_examples():
    S = quotient(MonomialIdeal.zero_ideal(2), (1, 2))
    for p in (1, 2):
        assert ext_window(S, (1, 1), p).is_zero()
    M = quotient(MonomialIdeal(1, [(1,)]), (1,))
    E = ext_window(M, (1,), 1, ((0,), (1,)))
    assert E.dims == {(0,): 1, (1,): 0}


def test_ext_b_examples():
    S = quotient(MonomialIdeal.zero_ideal(2), (2, 1))
    for p in (1, 2):
        left, right = ext_window_b(S, p)
        assert left.is_zero() and right.is_zero()
    left, right = ext_window_b(S, 0)
    target = free_box([(1, 1)], (0, 0), (1, 1))
    assert compare_graded(left, target) and compare_graded(right, target)


def test_ext_theorem_on_example():
    M = quotient(I_EX, (2, 1))
    R = pullback_functor(M, "r")
    for p in range(3):
        lhs = window_reindex(ext_window(M, (1, 1), p, ((-1, 0), (1, 1))), "truncate_low", (0, 0))
        assert compare_graded(lhs, ext_window(R, (1, 1), p, ((0, 0), (1, 1))))


def test_classify_examples():
    c = classify(quotient(MonomialIdeal.zero_ideal(3), (1, 1, 1)))
    assert (c.depth, c.dim, c.is_CM) == (3, 3, True)
    M = quotient(I_EX, (2, 1))
    c = classify(M)
    assert (c.depth, c.dim, c.is_CM) == (0, 1, False)
    r = classify(pullback_functor(M, "r"))
    assert (r.depth, r.dim, r.is_CM) == (1, 1, True)
    assert c.depth <= r.depth


def test_classify_zero_module():
    c = classify(from_ideal_pair(I_EX, I_EX, (2, 1)))
    assert (c.projdim, c.depth, c.dim) == (-1, -1, -1)
    assert not (c.is_CM or c.is_seq_CM or c.is_gen_CM)


def test_paper_first_example_dims():
    I = MonomialIdeal(4, [(4, 0, 0, 4), (2, 3, 0, 0), (0, 3, 2, 0), (0, 3, 0, 1)])
    J = MonomialIdeal(4, [(3, 0, 0, 3), (3, 1, 0, 0), (0, 2, 0, 0)])
    assert classify(from_ideal_pair(I, J, (4, 3, 2, 4))).dim == 2
    assert classify(from_ideal_pair(I.radical(), J.radical(), (1, 1, 1, 1))).dim == 1


def test_per_degree_betti_reading_fails_aggregated_holds():
    # S/(x^2) + S/(x) at t = 2: r* gives S/(x) twice
    t = (2,)
    M = quotient(MonomialIdeal(1, [(2,)]), t)
    N = quotient(MonomialIdeal(1, [(1,)]), t)
    from posdet.boxmod import direct_sum
    X = direct_sum(M, N)
    bX, bR = betti_table(X), betti_table(pullback_functor(X, "r"))
    assert bR[1, (1,)] == 2
    # every a with sqrt(a) = 1 has a strictly smaller single Betti number
    assert bX[1, (1,)] == 1 and bX[1, (2,)] == 1
    assert bX[1, (1,)] + bX[1, (2,)] >= bR[1, (1,)]


specs = st.builds(
    lambda n, t, seed, kind: InstanceSpec(n, tuple(t[:n]), (1, 4), seed, kind),
    st.integers(1, 3), st.lists(st.integers(1, 3), min_size=3, max_size=3),
    st.integers(0, 10 ** 6), st.sampled_from(["ideal", "ideal-pair", "presentation", "direct-sum"]))


@given(specs)
def test_resolution_agrees_with_koszul(spec):
    M = random_instance(spec).module()
    F = minimal_resolution(M)
    assert F.check_complex() and F.is_minimal()
    assert F.tor_table() == betti_table(M)
    assert compare_graded(F.cokernel_box(M.hi), M)
    if not M.is_zero():
        assert F.length == M.n - classify(M, F).depth


@given(specs)
def test_radicalized_resolution_is_exact(spec):
    M = random_instance(spec).module()
    G = radicalize_resolution(minimal_resolution(M))
    assert G.check_complex()
    assert G.is_acyclic_on(zero(M.n), one(M.n))


@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_koszul_equals_taylor(seed, n):
    inst = random_instance(InstanceSpec(n, (2,) * n, (1, 6), seed, "ideal"))
    assert betti_table(inst.module()) == taylor_oracle(inst.I)
