from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from posdet.linalg import (
    QQ, GF, Matrix, Subspace, Subquotient, field_from_string, kernel_basis,
    subquotient, homology_dim, induced_map, rref_rank,
)


def M(rows, field=QQ):
    return Matrix(rows, field=field)


def test_rank_examples():
    assert Matrix.identity(2).rank() == 2
    assert Matrix.zeros(3, 4).rank() == 0
    assert M([[1, 2], [2, 4]]).rank() == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)).dim == 0
    assert kernel_basis(Matrix.zeros(2, 3)).dim == 3
    K = kernel_basis(M([[1, 1]]))
    assert K.dim == 1 and K.contains([1, -1])


def test_subquotient_examples():
    full = Subspace.full(3)
    assert subquotient(3, full, full)[0] == 0
    d, proj = subquotient(3, Subspace.zero(3), full)
    assert d == 3 and proj.rank() == 3
    assert subquotient(2, Subspace(2, [[1, 0]]), Subspace.full(2))[0] == 1


def test_subquotient_requires_nesting():
    with pytest.raises(ValueError):
        Subquotient(Subspace(2, [[1, 0]]), Subspace(2, [[0, 1]]))


def test_homology_examples():
    assert homology_dim(Matrix.zeros(3, 2), Matrix.zeros(1, 3)) == 3
    f = M([[1], [0]])
    g = M([[0, 1]])
    assert homology_dim(f, g) == 0
    with pytest.raises(ValueError):
        homology_dim(M([[1], [1]]), M([[1, 0]]))


def test_induced_map_examples():
    sq = Subquotient(Subspace(2, [[1, 0]]), Subspace.full(2))
    assert induced_map(Matrix.identity(2), sq, sq) == Matrix.identity(1)
    assert induced_map(Matrix.zeros(2, 2), sq, sq).is_zero()
    swap = M([[0, 1], [1, 0]])
    # the swap does not preserve the first axis, so it does not induce a map
    with pytest.raises(ValueError):
        induced_map(swap, sq, sq)
    # into the quotient by the first axis from the zero subspace, the second
    # basis vector is sent to the first axis, which dies
    src = Subquotient(Subspace.zero(2), Subspace(2, [[0, 1]]))
    assert induced_map(swap, src, sq).is_zero()


def test_prime_field():
    F = GF(5)
    m = M([[2, 4], [1, 2]], F)
    assert m.rank() == 1
    assert F(Fraction(1, 2)) == 3
    assert field_from_string("fp:7") == GF(7)
    assert field_from_string("q") == QQ
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        field_from_string("r")


def test_characteristic_changes_rank():
    m = M([[1, 1], [1, -1]])
    assert m.rank() == 2
    assert M(m.rows, GF(2)).rank() == 1


def test_fractions_stay_exact():
    a = M([[Fraction(1, 3), 1], [1, 3]])
    assert a.rank() == 1
    x = Fraction(1, 3) + Fraction(1, 6)
    assert x == Fraction(1, 2) and x.denominator == 2


matrices = st.tuples(st.integers(1, 5), st.integers(1, 5)).flatmap(
    lambda s: st.lists(st.lists(st.integers(-3, 3), min_size=s[1], max_size=s[1]),
                       min_size=s[0], max_size=s[0]))
primes = st.sampled_from([None, 2, 3, 7])


def _field(p):
    return QQ if p is None else GF(p)


@given(matrices, primes)
def test_rank_of_transpose(rows, p):
    m = M(rows, _field(p))
    assert m.rank() == m.T.rank()


@given(matrices, primes)
def test_rank_nullity(rows, p):
    m = M(rows, _field(p))
    K = kernel_basis(m)
    assert K.dim + m.rank() == m.ncols
    for v in K.basis:
        assert not any(m @ v)


@given(matrices)
def test_rref_is_idempotent(rows):
    m = M(rows)
    r, R, piv = rref_rank(m)
    assert rref_rank(R)[1] == R
    assert len(piv) == r


@given(matrices)
def test_exact_two_step_complex(rows):
    # im(m) -> ambient -> coker: the sequence K^k --m--> K^r --q--> K^r/im m is exact
    m = M(rows)
    image = Subspace.column_space(m)
    q = Subquotient(image, Subspace.full(m.nrows))
    proj = q.projection
    assert (proj @ m).is_zero()
    assert homology_dim(m, proj) == 0
    # complex with zero maps: homology is the middle dimension
    assert homology_dim(Matrix.zeros(m.nrows, 2), Matrix.zeros(1, m.nrows)) == m.nrows


@st.composite
def composable(draw):
    k, m, r = (draw(st.integers(1, 4)) for _ in range(3))
    entry = st.integers(-2, 2)
    a = draw(st.lists(st.lists(entry, min_size=m, max_size=m), min_size=k, max_size=k))
    b = draw(st.lists(st.lists(entry, min_size=r, max_size=r), min_size=m, max_size=m))
    return M(a), M(b)


@given(composable())
def test_product_rank_bound(ab):
    A, B = ab
    assert (A @ B).rank() <= min(A.rank(), B.rank())
    assert (A @ B).T == B.T @ A.T
