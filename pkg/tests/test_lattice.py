from itertools import product

import pytest
from hypothesis import given, strategies as st

from posdet.lattice import (
    leq, map_r, map_sqrt, map_s, map_p, supports, box_enumerate, box_size,
    add, sub, one, zero, cmul,
)


def test_leq_examples():
    assert leq((0, 0), (0, 0))
    assert not leq((1, 2), (2, 1))
    assert leq((1, 1), (4, 3))


def test_leq_arity_mismatch():
    with pytest.raises(ValueError):
        leq((0, 0), (0, 0, 0))


def test_map_r_examples():
    assert map_r((0, 0, 0), (5, 1, 2)) == (0, 0, 0)
    assert map_r((1, 0, 5), (2, 3, 4)) == (2, 0, 4)
    assert map_r(map_r((1, 2), (3, 3)), (3, 3)) == (3, 3)


def test_map_sqrt_examples():
    assert map_sqrt((0, 0)) == (0, 0)
    assert map_sqrt((4, 0, 2)) == (1, 0, 1)
    assert map_sqrt((3, 1, 0)) == map_r((3, 1, 0), (1, 1, 1)) == (1, 1, 0)


def test_map_s_examples():
    assert map_s((0, 0), (2, 3)) == (1, 2)
    assert map_s((1, 0), (2, 3)) == (2, 2)
    a, t = (2, 0), (2, 2)
    assert leq(map_s(a, t), sub(add(a, t), one(2)))


def test_map_p_examples():
    assert map_p((1, 2), (2, 3)) == (1, 2)
    assert map_p((5, 0), (2, 3)) == (2, 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_alexander_identity_exhaustive(n):
    # r(-p_1(a) + 1) = -p_t(r(a)) + t on [0,1]^n
    for t in product(range(1, 4), repeat=n):
        for a in box_enumerate(zero(n), one(n)):
            lhs = map_r(sub(one(n), map_p(a, one(n))), t)
            rhs = sub(t, map_p(map_r(a, t), t))
            assert lhs == rhs


def test_supports():
    assert supports((0, 0), (1, 1)) == (frozenset(), frozenset())
    assert supports((1, 3), (2, 3)) == (frozenset({0, 1}), frozenset({1}))
    assert supports((2, 3), (2, 3)) == (frozenset({0, 1}),) * 2


def test_box_enumerate():
    assert box_enumerate((0, 0), (0, 0)) == [(0, 0)]
    pts = box_enumerate((0, 0), (1, 1))
    assert len(pts) == 4 and pts[0] == (0, 0) and pts[-1] == (1, 1)
    assert len(box_enumerate((0, 0, 0), (2, 1, 1))) == 12 == box_size((0, 0, 0), (2, 1, 1))


def test_box_enumerate_empty_window():
    with pytest.raises(ValueError):
        box_enumerate((1, 0), (0, 0))


def test_negative_degrees_rejected():
    for f in (lambda: map_r((-1, 0), (1, 1)), lambda: map_sqrt((0, -2)),
              lambda: map_s((-1,), (2,)), lambda: map_p((-1,), (1,))):
        with pytest.raises(ValueError):
            f()


degrees = st.integers(1, 3).flatmap(
    lambda n: st.tuples(st.lists(st.integers(0, 5), min_size=n, max_size=n),
                        st.lists(st.integers(0, 5), min_size=n, max_size=n),
                        st.lists(st.integers(1, 4), min_size=n, max_size=n)))


@given(degrees)
def test_degree_maps_order_preserving(abt):
    a, b, t = map(tuple, abt)
    lo, hi = tuple(map(min, a, b)), tuple(map(max, a, b))
    for f in (lambda x: map_r(x, t), map_sqrt, lambda x: map_s(x, t), lambda x: map_p(x, t)):
        assert leq(f(lo), f(hi))


@given(degrees)
def test_degree_map_identities(abt):
    a, _, t = map(tuple, abt)
    assert map_r(map_r(a, t), t) == map_r(a, t)
    assert map_r(a, t) == cmul(map_sqrt(a), t)
    assert leq(map_s(a, t), sub(add(a, t), one(len(a))))


def test_exhaustive_order_preservation_small_box():
    t = (2, 3)
    pts = box_enumerate((0, 0), (4, 4))
    for a in pts:
        for b in pts:
            if leq(a, b):
                assert leq(map_r(a, t), map_r(b, t))
                assert leq(map_s(a, t), map_s(b, t))
