import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ..base.linalg import (PrimeField, Subspace, NotPrimeError, DimensionMismatch, enumerate_subspaces,
                           subspace_sum, subspace_intersect, is_prime)
from ..base.helpers import Caps, CapExceeded, coefficient_tuples, parse_int_list


GF2 = PrimeField(2)
GF3 = PrimeField(3)


def matrices(p, max_rows=4, max_cols=4):
    """strategy for small matrices over GF(p)"""
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c).map(
                lambda xs: np.array(xs, dtype=np.int64).reshape(r, c))))


def test_field_rejects_non_primes():
    for bad in [0, 1, 4, 9, 101, 2.0]:
        with pytest.raises(NotPrimeError):
            PrimeField(bad)
    assert is_prime(97)
    assert PrimeField(97).p == 97


def test_inverses():
    f = PrimeField(7)
    for x in range(1, 7):
        assert (x * f.inv(x)) % 7 == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_rref_and_rank():
    m = np.array([[1, 1, 0], [1, 1, 0], [0, 1, 1]])
    r, rank, pivots = GF2.rref(m)
    assert rank == 2
    assert pivots == [0, 1]
    assert r[:2].tolist() == [[1, 0, 1], [0, 1, 1]]
    assert GF3.rank(np.array([[1, 2], [2, 1]])) == 1


def test_kernel_and_solve():
    a = np.array([[1, 1, 0], [0, 1, 1]])
    kern = GF2.kernel(a)
    assert kern.dim == 1
    assert kern.basis.tolist() == [[1, 1, 1]]
    x, _ = GF2.solve(a, np.array([1, 0]))
    assert GF2.mul(a, x).flatten().tolist() == [1, 0]
    x, _ = GF2.solve(np.array([[1, 1], [1, 1]]), np.array([0, 1]))
    assert x is None
    with pytest.raises(DimensionMismatch):
        GF2.solve(a, np.array([1, 0, 1]))


def test_inverse():
    ok, inv = GF3.inverse(np.array([[1, 1], [0, 2]]))
    assert ok
    assert GF3.mul(np.array([[1, 1], [0, 2]]), inv).tolist() == [[1, 0], [0, 1]]
    assert not GF2.is_invertible(np.array([[1, 1], [1, 1]]))
    with pytest.raises(DimensionMismatch):
        GF2.inverse(np.array([[1, 0, 0]]))


def test_subspace_operations():
    u = Subspace(GF2, 3, np.array([[1, 0, 0], [0, 1, 0]]))
    v = Subspace(GF2, 3, np.array([[0, 1, 0], [0, 0, 1]]))
    assert subspace_sum(u, v) == Subspace.full(GF2, 3)
    meet = subspace_intersect(u, v)
    assert meet.basis.tolist() == [[0, 1, 0]]
    assert meet.is_subset(u) and meet.is_subset(v)
    assert not u.is_subset(v)
    assert u.contains(np.array([1, 1, 0]))
    assert not u.contains(np.array([0, 0, 1]))
    assert u.non_pivots == [2]
    with pytest.raises(DimensionMismatch):
        u.sum(Subspace.zero(GF2, 4))


def test_enumerate_vectors_and_cap():
    u = Subspace(GF3, 3, np.array([[1, 0, 1], [0, 1, 0]]))
    vectors = u.enumerate_vectors()
    assert len(vectors) == 9
    assert len(set(tuple(v) for v in vectors.tolist())) == 9
    with pytest.raises(CapExceeded) as e:
        u.enumerate_vectors(cap=8)
    assert e.value.needed == 9
    assert Subspace.zero(GF3, 2).enumerate_vectors().tolist() == [[0, 0]]


def test_enumerate_subspaces_counts():
    # Gaussian binomial sums
    assert len(enumerate_subspaces(GF2, 3)) == 16
    assert len(enumerate_subspaces(GF3, 2)) == 6
    assert len(enumerate_subspaces(GF2, 4)) == 67
    subs = enumerate_subspaces(GF2, 3)
    assert [s.dim for s in subs] == sorted(s.dim for s in subs)
    with pytest.raises(CapExceeded):
        enumerate_subspaces(GF2, 4, cap=10)


def test_caps_parsing():
    assert Caps.from_string('10,20,30').as_tuple() == (10, 20, 30)
    with pytest.raises(ValueError):
        Caps.from_string('1,2')
    with pytest.raises(ValueError):
        Caps(vectors=0)
    assert Caps.from_config({'caps': {'homs': 5}}).homs == 5
    assert parse_int_list('1, 2,3') == [1, 2, 3]
    assert len(list(coefficient_tuples(3, 2, cap=9))) == 9
    with pytest.raises(CapExceeded):
        coefficient_tuples(3, 3, cap=26)


@settings(max_examples=50, deadline=None)
@given(matrices(3))
def test_row_space_is_canonical(m):
    """row operations do not change the canonical basis"""
    u = GF3.row_space(m)
    shuffled = np.vstack([m[::-1], GF3.reduce(2 * m)])
    assert GF3.row_space(shuffled) == u
    assert u.dim == GF3.rank(m)


@settings(max_examples=50, deadline=None)
@given(matrices(2, max_cols=4), matrices(2, max_cols=4))
def test_dimension_formula(a, b):
    if a.shape[1] != b.shape[1]:
        return
    u, v = GF2.row_space(a), GF2.row_space(b)
    assert u.sum(v).dim + u.intersect(v).dim == u.dim + v.dim


@settings(max_examples=50, deadline=None)
@given(matrices(2, max_rows=4, max_cols=5))
def test_kernel_is_annihilated(m):
    kern = GF2.kernel(m)
    assert kern.dim + GF2.rank(m) == m.shape[1]
    for v in kern.basis:
        assert not GF2.mul(m, v).any()
