import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from regobj.errors import NoSolution, ShapeMismatch, WrongRing
from regobj.exact import QQ, ZZ, Fp, Zn
from regobj.matops import Matrix, det, hnf, kernel_basis, rank, rref, snf, solve


def M(ring, rows):
    return Matrix(ring, rows)


# ---------------------------------------------------------------- oracles

def minors_gcd(rows, k):
    """gcd of all k×k minors — the k-th determinantal divisor."""
    m, n = len(rows), len(rows[0]) if rows else 0
    g = 0
    for rs in itertools.combinations(range(m), k):
        for cs in itertools.combinations(range(n), k):
            g = gcd(g, int(det(Matrix(ZZ, [[rows[r][c] for c in cs] for r in rs]))))
    return g


def invariant_factors_oracle(rows):
    out, prev = [], 1
    for k in range(1, min(len(rows), len(rows[0])) + 1):
        dk = minors_gcd(rows, k)
        if dk == 0:
            break
        out.append(dk // prev)
        prev = dk
    return out


# --------------------------------------------------------------- examples

def test_rref_examples():
    R, piv, T = rref(M(Fp(2), [[1, 1], [1, 1]]))
    assert R == M(Fp(2), [[1, 1], [0, 0]]) and piv == [0]
    assert T @ M(Fp(2), [[1, 1], [1, 1]]) == R
    I3 = Matrix.identity(QQ, 3)
    assert rref(I3) == (I3, [0, 1, 2], I3)
    R, piv, _ = rref(Matrix.zeros(QQ, 2, 3))
    assert R.is_zero() and piv == []


def test_hnf_examples():
    assert hnf(M(ZZ, [[0, 1], [1, 0]]))[0] == Matrix.identity(ZZ, 2)
    assert hnf(M(ZZ, [[2], [3]]))[0] == M(ZZ, [[1], [0]])
    assert hnf(M(ZZ, [[4], [6]]))[0] == M(ZZ, [[2], [0]])


def test_snf_examples():
    assert snf(Matrix.identity(ZZ, 2)).D == Matrix.identity(ZZ, 2)
    assert snf(M(ZZ, [[2, 4], [6, 8]])).invariant_factors == [2, 4]
    assert snf(M(ZZ, [[6]])).invariant_factors == [6]


def test_solve_examples():
    assert solve(M(ZZ, [[2]]), M(ZZ, [[4]])) == M(ZZ, [[2]])
    with pytest.raises(NoSolution):
        solve(M(ZZ, [[2]]), M(ZZ, [[3]]))
    assert solve(M(Zn(4), [[2]]), M(Zn(4), [[2]])) == M(Zn(4), [[1]])


def test_kernel_basis_examples():
    K = kernel_basis(M(QQ, [[1, 1]]))
    assert K == M(QQ, [[1], [-1]]) or K == M(QQ, [[-1], [1]])
    assert kernel_basis(Matrix.identity(QQ, 2)).shape == (2, 0)
    assert kernel_basis(Matrix.zeros(QQ, 1, 2)) == Matrix.identity(QQ, 2)


def test_ring_and_shape_errors():
    with pytest.raises(WrongRing):
        hnf(M(QQ, [[1]]))
    with pytest.raises(WrongRing):
        M(ZZ, [[1]]) @ M(QQ, [[1]])
    with pytest.raises(ShapeMismatch):
        M(ZZ, [[1, 2]]) @ M(ZZ, [[1, 2]])


def test_json_round_trip_rationals():
    A = M(QQ, [[Fraction(1, 3), -2], [0, Fraction(-7, 4)]])
    js = A.to_json()
    assert js["entries"][0][0] == "1/3"
    assert Matrix.from_json(js) == A


# ------------------------------------------------------------ properties

small_int = st.integers(-9, 9)


def int_matrix(max_dim=3):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(st.lists(small_int, min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=150, deadline=None)
@given(int_matrix())
def test_snf_against_determinantal_divisors(rows):
    A = M(ZZ, rows)
    res = snf(A)
    assert res.P @ A @ res.Q == res.D
    assert abs(det(res.P)) == 1 and abs(det(res.Q)) == 1
    d = res.invariant_factors
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert d == invariant_factors_oracle(rows)


@settings(max_examples=150, deadline=None)
@given(int_matrix())
def test_hnf_contract(rows):
    A = M(ZZ, rows)
    H, U = hnf(A)
    assert U @ A == H
    assert abs(det(U)) == 1
    # echelon with positive pivots and reduced entries above each pivot
    last = -1
    for i, row in enumerate(H.tolist()):
        nz = [j for j, v in enumerate(row) if v]
        if not nz:
            assert all(not any(r) for r in H.tolist()[i:])
            break
        j = nz[0]
        assert j > last and row[j] > 0
        assert all(0 <= H.tolist()[k][j] < row[j] for k in range(i))
        last = j


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.data())
def test_rref_idempotent_and_transform(p, data):
    m, n = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    rows = data.draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=m, max_size=m))
    A = M(Fp(p), rows)
    R, piv, T = rref(A)
    assert T @ A == R
    assert rref(R)[0] == R
    assert rank(A) == len(piv)
    assert det(T) != 0


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.data())
def test_solve_mod_n_matches_brute_force(n, data):
    m, k = data.draw(st.integers(1, 2)), data.draw(st.integers(1, 2))
    rows = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k), min_size=m, max_size=m))
    b = data.draw(st.lists(st.integers(0, n - 1), min_size=m, max_size=m))
    A, B = M(Zn(n), rows), M(Zn(n), [[v] for v in b])
    sols = [x for x in itertools.product(range(n), repeat=k)
            if all(sum(r[j] * x[j] for j in range(k)) % n == b[i] for i, r in enumerate(rows))]
    try:
        x = solve(A, B)
    except NoSolution:
        assert not sols
        return
    assert A @ x == B


@settings(max_examples=100, deadline=None)
@given(int_matrix())
def test_kernel_basis_over_q(rows):
    A = M(QQ, rows)
    K = kernel_basis(A)
    assert (A @ K).is_zero() if K.shape[1] else True
    assert K.shape[1] == A.shape[1] - rank(A)
