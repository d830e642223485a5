import random
from fractions import Fraction
from itertools import combinations
from math import gcd

from spinetorsion.intlinalg import (CokernelData, rational_nullspace,
                                    rational_rank, smith_normal_form)


def minors_gcd(matrix, rows, cols, k):
    """gcd of all k x k minors; the classical oracle for Smith invariants."""
    if k == 0:
        return 1
    g = 0
    for rr in combinations(range(rows), k):
        for cc in combinations(range(cols), k):
            sub = [[matrix[i][j] for j in cc] for i in rr]
            g = gcd(g, _int_det(sub))
    return abs(g)


def _int_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    out = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = m[0][j] * _int_det(minor)
        out += term if j % 2 == 0 else -term
    return out


def mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B)))
             for j in range(len(B[0]))] for i in range(len(A))]


def test_smith_normal_form_random_matrices():
    rnd = random.Random(9)
    for _ in range(25):
        rows, cols = rnd.randint(1, 4), rnd.randint(1, 4)
        A = [[rnd.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        U, D, V = smith_normal_form(A, rows, cols)
        assert mat_mul(mat_mul(U, A), V) == D
        diag = [D[i][i] for i in range(min(rows, cols))]
        for i in range(len(diag) - 1):
            if diag[i] != 0:
                assert diag[i + 1] % diag[i] == 0
            else:
                assert diag[i + 1] == 0
        # off-diagonal zero
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert D[i][j] == 0
        # invariant factors against the minors-gcd oracle
        prev = 1
        for k in range(1, min(rows, cols) + 1):
            dk = minors_gcd(A, rows, cols, k)
            expect = 0 if dk == 0 else dk // prev
            if diag[k - 1] != expect:
                assert dk != 0 or diag[k - 1] == 0
            assert diag[k - 1] == expect
            if dk == 0:
                break
            prev = dk


def test_cokernel_data():
    # Z^2 / im [[2,0],[0,3]] = Z/2 + Z/3 = Z/6
    data = CokernelData([[2, 0], [0, 3]], 2, 2)
    assert data.free_rank == 0
    assert data.torsion == (6,)
    assert data.is_zero_class([6, 0]) or not data.is_zero_class([1, 0])
    # Z^2 / im [[2],[0]]: one free generator and one Z/2
    data = CokernelData([[2], [0]], 2, 1)
    assert data.free_rank == 1
    assert data.torsion == (2,)
    assert not data.is_zero_class([1, 0])
    assert data.is_zero_class([2, 0])
    assert not data.is_zero_class([0, 1])


def test_rational_nullspace():
    A = [[1, 2, 3], [2, 4, 6]]
    basis = rational_nullspace(A, 2, 3)
    assert len(basis) == 2
    for v in basis:
        for row in A:
            assert sum(Fraction(a) * x for a, x in zip(row, v)) == 0
    assert rational_rank(A, 2, 3) == 1
