"""Independent oracles used by the tests.

The Sylvester oracle flattens AX - XB = C over the rational quaternions
into a 4nm-dimensional linear system over the rationals (components in
the basis 1, i, j, k, with left/right multiplication as 4x4 rational
matrices) and solves it by plain elimination, exercising none of the
library's closed-form code path.
"""

from fractions import Fraction

from skewdiag import HQ, DRMatrix
from skewdiag.rings import Quat


def left_rep(q):
    a, b, c, d = q.a, q.b, q.c, q.d
    return ((a, -b, -c, -d), (b, a, -d, c), (c, d, a, -b), (d, -c, b, a))


def right_rep(q):
    a, b, c, d = q.a, q.b, q.c, q.d
    return ((a, -b, -c, -d), (b, a, d, -c), (c, -d, a, b), (d, c, -b, a))


def _solve_rational(M, rhs):
    n = len(M)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(M)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def sylvester_flatten_solve(A, B, C):
    """Unique X with AX - XB = C, by rational elimination."""
    n, m = A.rows, B.rows
    N = 4 * n * m

    def idx(r, s, comp):
        return (r * m + s) * 4 + comp

    M = [[Fraction(0)] * N for _ in range(N)]
    rhs = [Fraction(0)] * N
    for r in range(n):
        for s in range(m):
            row0 = idx(r, s, 0)
            for k in range(n):
                Lq = left_rep(A[r, k])
                for ca in range(4):
                    for cb in range(4):
                        M[row0 + ca][idx(k, s, cb)] += Lq[ca][cb]
            for k in range(m):
                Rq = right_rep(B[k, s])
                for ca in range(4):
                    for cb in range(4):
                        M[row0 + ca][idx(r, k, cb)] -= Rq[ca][cb]
            cq = C[r, s]
            for ca, val in enumerate((cq.a, cq.b, cq.c, cq.d)):
                rhs[row0 + ca] = val
    sol = _solve_rational(M, rhs)
    ents = []
    for r in range(n):
        for s in range(m):
            ents.append(Quat(*[sol[idx(r, s, comp)] for comp in range(4)]))
    return DRMatrix(HQ, n, m, ents)
