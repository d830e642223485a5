"""Exact integer and rational linear algebra: Smith normal form, kernels, RREF."""

from fractions import Fraction


def smith_normal_form(matrix, rows, cols):
    """Smith normal form with transforms: returns (U, D, V) with U*A*V = D.

    ``matrix`` is a list of ``rows`` lists of ``cols`` ints.  U and V are
    unimodular; D is diagonal with nonnegative entries d_1 | d_2 | ...
    """
    A = [list(r) for r in matrix]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row i -= q * row j
        for k in range(cols):
            A[i][k] -= q * A[j][k]
        for k in range(rows):
            U[i][k] -= q * U[j][k]

    def col_op(i, j, q):  # col i -= q * col j
        for r in range(rows):
            A[r][i] -= q * A[r][j]
        for r in range(cols):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(rows):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(cols):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(rows, cols):
        # Find the nonzero entry of smallest absolute value in the working block.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = False
        for i in range(t + 1, rows):
            if A[i][t] % A[t][t] != 0:
                dirty = True
            row_op(i, t, A[i][t] // A[t][t])
        for j in range(t + 1, cols):
            if A[t][j] % A[t][t] != 0:
                dirty = True
            col_op(j, t, A[t][j] // A[t][t])
        if dirty or any(A[i][t] for i in range(t + 1, rows)) or \
                any(A[t][j] for j in range(t + 1, cols)):
            continue
        # Enforce the divisibility chain d_t | d_{t+1}.
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if A[i][j] % A[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(t, bad, -1)
            continue
        if A[t][t] < 0:
            for k in range(cols):
                A[t][k] = -A[t][k]
            for k in range(rows):
                U[t][k] = -U[t][k]
        t += 1
    return U, A, V


class CokernelData:
    """The cokernel Z^rows / im(A), via the Smith normal form of A.

    ``project(x)`` returns the class of an integer vector as a pair
    (free coordinates, torsion coordinates), where torsion coordinate i
    is reduced mod ``torsion[i]``.
    """

    def __init__(self, matrix, rows, cols):
        U, D, _V = smith_normal_form(matrix, rows, cols)
        self.U = U
        diag = [D[i][i] for i in range(min(rows, cols))]
        self.rank = sum(1 for d in diag if d != 0)
        self.torsion = tuple(d for d in diag if d > 1)
        self._torsion_pos = [i for i in range(self.rank)
                             if i < len(diag) and diag[i] > 1]
        self._free_pos = [i for i in range(rows) if i >= self.rank]
        self.free_rank = len(self._free_pos)
        self.rows = rows

    def project(self, x):
        y = [sum(self.U[i][j] * x[j] for j in range(self.rows))
             for i in range(self.rows)]
        free = tuple(y[i] for i in self._free_pos)
        tors = tuple(y[p] % d for p, d in zip(self._torsion_pos, self.torsion))
        return free, tors

    def is_zero_class(self, x):
        free, tors = self.project(x)
        return not any(free) and not any(tors)


def rational_rref(matrix, rows, cols):
    """Reduced row echelon form over Q.  Returns (rref, pivot columns)."""
    A = [[Fraction(x) for x in r] for r in matrix]
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rational_nullspace(matrix, rows, cols):
    """Echelon basis of the rational kernel, as a list of Fraction vectors."""
    rref, pivots = rational_rref(matrix, rows, cols)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def rational_rank(matrix, rows, cols):
    return len(rational_rref(matrix, rows, cols)[1])
