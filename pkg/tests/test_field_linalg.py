"""Exact scalar arithmetic and the sparse/dense elimination kernels."""

import pytest
from hypothesis import given, settings, strategies as st

from homalg import linalg
from homalg.field import Field, GF, QQ


def test_rational_field_basics():
    F = QQ
    a = F.parse("3/4")
    b = F.parse("-1/6")
    assert F.to_str(F.add(a, b)) == "7/12"
    assert F.to_str(F.mul(a, b)) == "-1/8"
    assert F.to_str(F.inv(a)) == "4/3"
    assert F.is_zero(F.sub(a, a))
    assert F.eq(F.div(a, a), F.one())


def test_prime_field_basics():
    F = GF(5)
    a = F.from_int(3)
    assert F.eq(F.inv(a), F.from_int(2))       # 3*2 = 6 = 1
    assert F.eq(F.add(F.from_int(4), F.from_int(3)), F.from_int(2))
    assert F.eq(F.neg(F.from_int(1)), F.from_int(4))
    assert F.parse("-1") == F.from_int(4)


def test_gf_rejects_composite():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_field_equality_and_sort_key():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert QQ != GF(5)
    F = QQ
    ks = sorted([F.parse("1/2"), F.parse("-3"), F.parse("0")], key=F.sort_key)
    assert [F.to_str(v) for v in ks] == ["-3", "0", "1/2"]


def _m(F, rows):
    return [[F.from_int(a) for a in r] for r in rows]


def test_rank_and_kernel_frozen():
    F = QQ
    A = _m(F, [[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    assert linalg.rank(F, A) == 2
    ker = linalg.kernel(F, A)
    assert len(ker) == 1
    # kernel vector is killed by A
    v = ker[0]
    for row in A:
        s = F.zero()
        for a, x in zip(row, v):
            s = F.add(s, F.mul(a, x))
        assert F.is_zero(s)


def test_solve_and_inverse_frozen():
    F = QQ
    A = _m(F, [[2, 1], [1, 1]])
    b = [F.from_int(3), F.from_int(2)]
    x = linalg.solve(F, A, b)
    assert x == [F.from_int(1), F.from_int(1)]
    Ainv = linalg.inverse(F, A)
    assert linalg.mat_eq(F, linalg.mat_mul(F, A, Ainv), linalg.identity(F, 2))
    # inconsistent system
    B = _m(F, [[1, 1], [1, 1]])
    assert linalg.solve(F, B, [F.from_int(0), F.from_int(1)]) is None


def test_solve_matrix_block():
    F = GF(7)
    A = _m(F, [[1, 2], [3, 4]])
    B = _m(F, [[1, 0], [0, 1]])
    X = linalg.solve_matrix(F, A, B)
    assert linalg.mat_eq(F, linalg.mat_mul(F, A, X), B)


def test_sparse_echelon_matches_dense_rank():
    F = QQ
    A = _m(F, [[0, 0, 1, 4], [1, 0, 0, 2], [1, 0, 1, 6], [0, 0, 0, 0]])
    rows = linalg.rows_to_dicts(F, A)
    assert linalg.sp_rank(F, rows, 4) == 2
    assert linalg.rank(F, A) == 2


def test_sparse_kernel_is_nullspace():
    F = GF(5)
    A = _m(F, [[1, 2, 3], [4, 0, 1]])
    rows = linalg.rows_to_dicts(F, A)
    ker = linalg.sp_kernel(F, rows, 3)
    assert len(ker) == 1
    v = linalg.dict_to_vec(F, ker[0], 3)
    for row in A:
        s = F.zero()
        for a, x in zip(row, v):
            s = F.add(s, F.mul(a, x))
        assert F.is_zero(s)


def test_sp_solve_many_per_column_consistency():
    F = QQ
    # third equation is 0 = b_2, so only the first rhs is solvable
    A = _m(F, [[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    rows = linalg.rows_to_dicts(F, A)
    rhs1 = {0: F.from_int(2), 1: F.from_int(-1)}
    rhs2 = {2: F.one()}
    sols = linalg.sp_solve_many(F, rows, 3, [rhs1, rhs2])
    assert sols[0] == {0: F.from_int(2), 1: F.from_int(-1)}
    assert sols[1] is None


def test_echelon_insert_reports_new_pivot():
    F = QQ
    ech = linalg.Echelon(F, 3)
    assert ech.insert({0: F.one(), 1: F.one()}) == 0
    assert ech.insert({1: F.one()}) == 1
    assert ech.insert({0: F.one()}) is None   # dependent on the first two
    assert ech.rank() == 2
    assert ech.contains({0: F.from_int(5), 1: F.from_int(5)})


def test_echelon_reduce_with_coeffs_reconstructs():
    F = QQ
    ech = linalg.Echelon(F, 3)
    v1 = {0: F.one(), 2: F.from_int(2)}
    v2 = {1: F.one(), 2: F.from_int(-1)}
    ech.insert(dict(v1))
    ech.insert(dict(v2))
    target = {0: F.from_int(3), 1: F.from_int(1), 2: F.from_int(5)}
    res, coeffs = ech.reduce_with_coeffs(dict(target))
    assert res == {}
    # coeffs are against the echelonized rows
    recon = {}
    for c, row in zip(coeffs, ech.rows):
        for j, a in row.items():
            s = F.add(recon.get(j, F.zero()), F.mul(c, a))
            if F.is_zero(s):
                recon.pop(j, None)
            else:
                recon[j] = s
    assert recon == target


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_rank_nullity_gf5(entries):
    F = GF(5)
    A = _m(F, entries)
    r = linalg.rank(F, A)
    assert r + len(linalg.kernel(F, A)) == 3


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=2),
                min_size=2, max_size=2),
       st.lists(st.integers(-6, 6), min_size=2, max_size=2))
def test_solve_then_multiply_roundtrip(entries, vec):
    F = QQ
    A = _m(F, entries)
    v = [F.from_int(a) for a in vec]
    b = linalg.mat_vec(F, A, v)
    x = linalg.solve(F, A, b)
    assert x is not None
    assert linalg.mat_vec(F, A, x) == b
