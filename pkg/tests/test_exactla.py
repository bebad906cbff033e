from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from omx import exactla


def matrices(max_rows=5, max_cols=5, bound=4):
    return st.integers(1, max_cols).flatmap(lambda c: st.lists(
        st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=1, max_size=max_rows))


def test_rank_small_cases():
    assert exactla.rank([[1, 2], [2, 4]]) == 1
    assert exactla.rank([[2, 0], [0, 2]], char=2) == 0
    assert exactla.rank([[2, 0], [0, 2]], char=3) == 2
    assert exactla.rank([[Fraction(1, 2), 1], [1, 2]]) == 1
    assert exactla.rank([]) == 0


def test_kernel_of_identity_is_empty():
    assert exactla.kernel_basis(exactla.identity(3)) == []


def test_primitive():
    assert exactla.primitive([0, -4, 6]) == (0, 2, -3)
    assert exactla.primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)


def test_det():
    assert exactla.det([[2, 1], [7, 4]]) == 1
    assert exactla.det([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0


def test_smith_known():
    # Z/2 + Z/6 hidden in a 3x3 matrix
    snf = exactla.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert snf.diagonal == (2, 6, 12)
    assert snf.rank == 3


@given(matrices())
def test_rank_matches_rref(m):
    rows, pivots = exactla.rref(m, len(m[0]))
    assert exactla.rank(m) == len(pivots)


@given(matrices())
def test_kernel(m):
    ncols = len(m[0])
    ker = exactla.kernel_basis(m, ncols)
    assert len(ker) == ncols - exactla.rank(m)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    if ker:
        assert exactla.rank(ker) == len(ker)


@given(matrices())
def test_smith_invariants(m):
    ncols = len(m[0])
    snf = exactla.smith_normal_form(m, ncols)
    d = snf.diagonal
    assert snf.rank == exactla.rank(m)
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert d[len(nz):] == (0,) * (len(d) - len(nz))
    U, V = snf.left, snf.right
    assert abs(exactla.det(U)) == 1 and abs(exactla.det(V)) == 1
    D = exactla.matmul(exactla.matmul(U, m), V)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (d[i] if i == j and i < len(d) else 0)


@given(matrices(), st.sampled_from([2, 3, 5]))
def test_rank_mod_p_from_smith(m, p):
    # over GF(p) the rank counts invariant factors not divisible by p
    snf = exactla.smith_normal_form(m, len(m[0]), transforms=False)
    assert exactla.rank(m, p) == sum(1 for x in snf.diagonal if x % p)


def test_ragged_matrix_rejected():
    with pytest.raises(ValueError):
        exactla.shape([[1, 2], [3]])
