from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pertinency.coeff import QQ, CyclotomicField, PrimeField
from pertinency.linalg import (
    Matrix,
    ModularEchelon,
    RowSpace,
    matmul_mod,
    rank,
    rank_mod_p,
    rref_rank,
)

P = 2_147_483_629  # prime below 2^31


def test_rref_known():
    m = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, k = rref_rank(m)
    assert k == 2
    assert r.data[0] == [1, 0, 1]
    assert r.data[1] == [0, 1, 1]


def test_identity_and_zeros():
    assert rref_rank(Matrix.identity(4))[1] == 4
    assert rref_rank(Matrix.zeros(3, 5))[1] == 0


def test_rowspace_membership():
    s = RowSpace(3)
    assert s.insert([1, 1, 0])
    assert not s.insert([2, 2, 0])
    assert s.insert({2: 5})
    assert s.contains([3, 3, 7])
    assert not s.contains([1, 0, 0])
    assert s.dim == 2 and s.pivots == [0, 2]


def test_rowspace_dimension_mismatch():
    s = RowSpace(3)
    with pytest.raises(ValueError):
        s.insert([1, 2])
    with pytest.raises(ValueError):
        s.insert({3: 1})


def test_rowspace_nullspace():
    s = RowSpace(4)
    s.insert([1, 2, 0, 1])
    s.insert([0, 1, 1, 0])
    null = s.nullspace()
    assert len(null) == 2
    for v in null:
        for row in ([1, 2, 0, 1], [0, 1, 1, 0]):
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0


def test_rowspace_over_cyclotomic_field():
    F = CyclotomicField(4)
    i = F.gen()
    s = RowSpace(2, F)
    s.insert([F.one, i])
    assert s.contains([i, -F.one])  # i * (1, i)
    assert not s.contains([F.one, -i])


def test_rank_over_prime_field():
    assert rank([[1, 2], [3, 6]], PrimeField(7)) == 1
    assert rank([[1, 2], [3, 5]], PrimeField(7)) == 2
    assert rank([[1, 1], [1, 3]], PrimeField(2)) == 1


def test_matmul_mod_matches_python_ints():
    rng = np.random.default_rng(0)
    a = rng.integers(0, P, size=(7, 9), dtype=np.int64)
    b = rng.integers(0, P, size=(9, 5), dtype=np.int64)
    expected = [[sum(int(a[i, k]) * int(b[k, j]) for k in range(9)) % P for j in range(5)]
                for i in range(7)]
    assert matmul_mod(a, b, P).tolist() == expected


def test_modular_echelon_nullspace():
    rows = np.array([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 1]], dtype=np.int64)
    ech = ModularEchelon(4, P)
    ech.add_rows(rows)
    assert ech.rank == 2
    null = ech.nullspace()
    assert null.shape == (2, 4)
    assert not matmul_mod(rows, null.T.copy(), P).any()


small = st.integers(min_value=-3, max_value=3)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=6)))
def test_dense_and_sparse_rank_agree(rows):
    dense = rref_rank(Matrix(rows))[1]
    s = RowSpace(len(rows[0]))
    for r in rows:
        s.insert(r)
    assert dense == s.dim
    # the rank mod a large prime never exceeds the rational rank
    assert rank_mod_p(np.array(rows, dtype=np.int64) % P, P) <= dense


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=6)))
def test_reduce_leaves_no_pivots(rows):
    s = RowSpace(len(rows[0]), QQ)
    for r in rows[:-1]:
        s.insert(r)
    rem = s.reduce(rows[-1])
    assert not set(rem) & set(s.pivots)
    assert (not rem) == s.contains(rows[-1])
