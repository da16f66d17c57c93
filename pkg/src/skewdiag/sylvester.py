"""Sylvester equations AX - XB = C under a central annihilating polynomial.

If p has central coefficients, p(A) = 0 and p(B) is invertible, the
telescoping identity

    p(A) X - X p(B) = sum_k p_k sum_{i+j=k-1} A^i (AX - XB) B^j

pins the unique solution

    X = -( sum_{k>=1} p_k sum_{i+j=k-1} A^i C B^j ) p(B)^{-1},

which is exact and division-free except for p(B)^{-1}.  The result is
checked by substitution before it is returned.
"""

from dataclasses import dataclass

from .errors import AnnihilatorFails, NotInvertible, Singular
from .matrices import DRMatrix
from .rings import HF, CentralPolynomial


def _same(A: DRMatrix, B: DRMatrix) -> bool:
    if A.ring is HF:
        return (A - B).frob_norm() <= 1e-9 * (1.0 + B.frob_norm())
    return A == B


@dataclass(frozen=True)
class SylvesterInstance:
    A: DRMatrix
    B: DRMatrix
    C: DRMatrix
    p: CentralPolynomial

    def __post_init__(self):
        pa = self.p.eval_matrix(self.A)
        if not _same(pa, pa.ring_zeros()):
            raise AnnihilatorFails("p(A) != 0")
        try:
            self.p.eval_matrix(self.B).invert()
        except Singular:
            raise NotInvertible("p(B) is singular") from None


def solve_sylvester(inst: SylvesterInstance) -> DRMatrix:
    A, B, C, p = inst.A, inst.B, inst.C, inst.p
    n, m = A.rows, B.rows
    deg = p.degree
    apow = [DRMatrix.identity(A.ring, n)]
    bpow = [DRMatrix.identity(B.ring, m)]
    for _ in range(deg):
        apow.append(apow[-1] * A)
        bpow.append(bpow[-1] * B)
    acc = DRMatrix.zeros(A.ring, n, m)
    for k in range(1, deg + 1):
        pk = p.coeffs[k]
        if pk.is_zero():
            continue
        inner = DRMatrix.zeros(A.ring, n, m)
        for i in range(k):
            inner = inner + apow[i] * C * bpow[k - 1 - i]
        acc = acc + inner.scale_left(pk)
    try:
        pb_inv = p.eval_matrix(B).invert()
    except Singular:
        raise NotInvertible("p(B) is singular") from None
    X = (-acc) * pb_inv
    if not _same(A * X - X * B, C):
        raise AssertionError("closed-form Sylvester solution failed substitution")
    return X


def eliminate_corner(B: DRMatrix, alpha: DRMatrix, a, p: CentralPolynomial):
    """Split [[B, alpha], [0, a]] into B + (a) by the similarity
    T = [[I, y], [0, 1]] where By - ya = alpha; requires p(B) = 0 with
    p(a) invertible.  Returns (T, block diagonal matrix)."""
    ring = B.ring
    n = B.rows
    if alpha.rows != n or alpha.cols != 1:
        raise NotInvertible("corner column has wrong shape")
    a_mat = DRMatrix(ring, 1, 1, [a])
    inst = SylvesterInstance(B, a_mat, alpha, p)
    y = solve_sylvester(inst)
    z, o = ring.zero(), ring.one()
    rows = []
    for i in range(n):
        rows.append([o if i == j else z for j in range(n)] + [y[i, 0]])
    rows.append([z] * n + [o])
    T = DRMatrix.from_rows(ring, rows)
    block = DRMatrix.block_diag([B, a_mat])
    corner = DRMatrix.from_rows(ring, [
        [B[i, j] for j in range(n)] + [alpha[i, 0]] for i in range(n)
    ] + [[z] * n + [a]])
    if not _same(T * corner * T.invert(), block):
        raise AssertionError("corner elimination failed the similarity check")
    return T, block


def corner_matrix(B: DRMatrix, alpha: DRMatrix, a) -> DRMatrix:
    """[[B, alpha], [0, a]]."""
    ring = B.ring
    n = B.rows
    z = ring.zero()
    rows = [[B[i, j] for j in range(n)] + [alpha[i, 0]] for i in range(n)]
    rows.append([z] * n + [a])
    return DRMatrix.from_rows(ring, rows)


def lower_corner_matrix(B: DRMatrix, u_row: DRMatrix, a) -> DRMatrix:
    """[[B, 0], [u, a]] with u a 1 x n row."""
    ring = B.ring
    n = B.rows
    z = ring.zero()
    rows = [[B[i, j] for j in range(n)] + [z] for i in range(n)]
    rows.append([u_row[0, j] for j in range(n)] + [a])
    return DRMatrix.from_rows(ring, rows)
