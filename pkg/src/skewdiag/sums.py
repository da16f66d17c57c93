"""Sums of two (or, over center GF(2), three) diagonalizable matrices.

Companion matrices are split by attaching the trailing coefficient
column and row to the two halves of the subdiagonal shift; the halves
are block diagonal with explicitly diagonalizable 2x2 blocks, and the
attached column is removed with a corner elimination.  The case split is
on the parity of n and on whether the top coefficient vanishes.
"""

from .canonical import CompanionMatrix, is_nilpotent, jordan_nilpotent, rcf
from .certificates import (DiagCertificate, Decomposition,
                           block_diag_certificate, trivial_certificate)
from .errors import CenterTooSmall, NotCharTwo
from .matrices import DRMatrix
from .rings import GF2, HF, CentralPolynomial, central_sample, noncentral_sample
from .sylvester import corner_matrix, eliminate_corner, lower_corner_matrix


def _same(A: DRMatrix, B: DRMatrix) -> bool:
    if A.ring is HF:
        return (A - B).frob_norm() <= 1e-9 * (1.0 + B.frob_norm())
    return A == B


# ---------------------------------------------------------------------------
# the two halves of the subdiagonal shift


def _g_block(ring, x):
    z, o = ring.zero(), ring.one()
    return DRMatrix.from_rows(ring, [[z, z], [o, -x]])


def _h_block(ring, x):
    z, o = ring.zero(), ring.one()
    return DRMatrix.from_rows(ring, [[x, z], [o, z]])


def _g_block_cert(ring, x):
    # [[0,0],[1,-x]] = P diag(0,-x) P^{-1} with P = [[x,0],[1,1]], x != 0
    z, o = ring.zero(), ring.one()
    P = DRMatrix.from_rows(ring, [[x, z], [o, o]])
    return DiagCertificate(P, [z, -x], _g_block(ring, x))


def _h_block_cert(ring, x):
    # [[x,0],[1,0]] = P diag(x,0) P^{-1} with P = [[x,0],[1,1]], x != 0
    z, o = ring.zero(), ring.one()
    P = DRMatrix.from_rows(ring, [[x, z], [o, o]])
    return DiagCertificate(P, [x, z], _h_block(ring, x))


def _unit_corner_cert(ring, x):
    # [[x,0],[1,1]] = P diag(x,1) P^{-1} with P = [[x-1,0],[1,1]], x not in {0,1}
    z, o = ring.zero(), ring.one()
    M = DRMatrix.from_rows(ring, [[x, z], [o, o]])
    P = DRMatrix.from_rows(ring, [[x - o, z], [o, o]])
    return DiagCertificate(P, [x, o], M)


class ShiftSplit:
    """The subdiagonal n x n shift written as first + second, each
    block diagonal with diagonalizable blocks (any x != 0)."""

    def __init__(self, n, x):
        self.n = n
        self.x = x
        self.first = _g_matrix(x.ring, n, x)
        self.second = _h_matrix(x.ring, n, x)


def _g_matrix(ring, n, x):
    if n == 0:
        return DRMatrix.zeros(ring, 0, 0)
    if n == 1:
        return DRMatrix.zeros(ring, 1, 1)
    blocks = [_g_block(ring, x)] * (n // 2)
    if n % 2:
        blocks = blocks + [DRMatrix.zeros(ring, 1, 1)]
    return DRMatrix.block_diag(blocks)


def _h_matrix(ring, n, x):
    if n == 0:
        return DRMatrix.zeros(ring, 0, 0)
    if n == 1:
        return DRMatrix.zeros(ring, 1, 1)
    blocks = [DRMatrix.zeros(ring, 1, 1)]
    if n % 2 == 0:
        blocks += [_h_block(ring, x)] * ((n - 2) // 2)
        blocks += [DRMatrix.from_rows(ring, [[x]])]
    else:
        blocks += [_h_block(ring, x)] * ((n - 1) // 2)
    return DRMatrix.block_diag(blocks)


def build_shift_split(n: int, x) -> ShiftSplit:
    if x.is_zero():
        from .errors import ZeroX
        raise ZeroX("shift split needs a nonzero x")
    return ShiftSplit(n, x)


def shift_matrix(ring, n) -> DRMatrix:
    z, o = ring.zero(), ring.one()
    rows = [[o if j == i - 1 else z for j in range(n)] for i in range(n)]
    return DRMatrix.from_rows(ring, rows)


def _g_certs(ring, n, x):
    """Certificates for the blocks of the first half, in block order."""
    certs = [_g_block_cert(ring, x)] * (n // 2)
    if n % 2:
        certs = certs + [trivial_certificate(DRMatrix.zeros(ring, 1, 1))]
    return certs


def _h_certs(ring, n, x):
    certs = [trivial_certificate(DRMatrix.zeros(ring, 1, 1))]
    if n % 2 == 0:
        certs += [_h_block_cert(ring, x)] * ((n - 2) // 2)
        certs += [trivial_certificate(DRMatrix.from_rows(ring, [[x]]))]
    else:
        certs += [_h_block_cert(ring, x)] * ((n - 1) // 2)
    return certs


# ---------------------------------------------------------------------------
# companion splitting


def _uv_columns(C: CompanionMatrix):
    ring = C.ring
    n = C.size
    v = DRMatrix.column(ring, list(C.coeffs[:n - 1]))
    z, o = ring.zero(), ring.one()
    u = DRMatrix(ring, 1, n - 1, [z] * (n - 2) + [o])
    return u, v


def _transported_cert(T_inv, cert: DiagCertificate, target) -> DiagCertificate:
    return DiagCertificate(T_inv * cert.P, cert.diag, target)


def _eliminated_cert(B, alpha, corner, p_coeffs, block_certs) -> DiagCertificate:
    """Certificate for [[B, alpha],[0, corner]] via corner elimination."""
    ring = B.ring
    p = CentralPolynomial(p_coeffs)
    T, _ = eliminate_corner(B, alpha, corner, p)
    inner = block_diag_certificate(block_certs)
    target = corner_matrix(B, alpha, corner)
    return _transported_cert(T.invert(), inner, target)


def sum_two_companion(C: CompanionMatrix, start: int = 0) -> Decomposition:
    """Two diagonalizable summands for a companion matrix; needs a center
    with at least three elements for n >= 3, or any noncommutative ring
    at n = 2."""
    ring = C.ring
    n = C.size
    A = C.realize()
    z, o = ring.zero(), ring.one()

    if n == 1:
        parts = [trivial_certificate(A),
                 trivial_certificate(DRMatrix.zeros(ring, 1, 1))]
        return Decomposition("sum", parts, A)

    if n == 2:
        a0, a1 = C.coeffs
        try:
            d = central_sample(ring, 1, [z, a1], start=start)[0]
        except CenterTooSmall:
            if ring.commutative:
                raise
            d = noncentral_sample(ring, [z, a1])
        s1 = DRMatrix.from_rows(ring, [[z, z], [o, a1 - d]])
        s2 = DRMatrix.from_rows(ring, [[z, a0], [z, d]])
        P1 = DRMatrix.from_rows(ring, [[o, z], [(d - a1).inv(), o]])
        P2 = DRMatrix.from_rows(ring, [[o, a0 * d.inv()], [z, o]])
        parts = [DiagCertificate(P1, [z, a1 - d], s1),
                 DiagCertificate(P2, [z, d], s2)]
        assert _same(s1 + s2, A)
        return Decomposition("sum", parts, A)

    a_top = C.coeffs[n - 1]
    u, v = _uv_columns(C)
    m = n - 1
    if a_top.is_zero():
        x = central_sample(ring, 1, [z, o], start=start)[0]
    else:
        x = central_sample(ring, 1, [z, -a_top], start=start)[0]

    G = _g_matrix(ring, m, x)
    H = _h_matrix(ring, m, x)

    if n % 2 == 1 and a_top.is_zero():
        # odd, vanishing top coefficient
        s1 = corner_matrix(G, v, -o)
        cert1 = _eliminated_cert(G, v, -o, [z, x, o],
                                 _g_certs(ring, m, x)
                                 + [trivial_certificate(DRMatrix.diagonal(ring, [-o]))])
        s2 = lower_corner_matrix(H, u, o)
        cert2 = block_diag_certificate(
            [trivial_certificate(DRMatrix.zeros(ring, 1, 1))]
            + [_h_block_cert(ring, x)] * ((m - 2) // 2)
            + [_unit_corner_cert(ring, x)])
    elif n % 2 == 1:
        # odd, nonzero top coefficient
        s1 = corner_matrix(G, v, a_top)
        cert1 = _eliminated_cert(G, v, a_top, [z, x, o],
                                 _g_certs(ring, m, x)
                                 + [trivial_certificate(DRMatrix.diagonal(ring, [a_top]))])
        s2 = lower_corner_matrix(H, u, z)
        cert2 = block_diag_certificate(
            [trivial_certificate(DRMatrix.zeros(ring, 1, 1))]
            + [_h_block_cert(ring, x)] * (m // 2))
    elif a_top.is_zero():
        # even, vanishing top coefficient
        s1 = lower_corner_matrix(G, u, -o)
        cert1 = block_diag_certificate(
            [_g_block_cert(ring, x)] * ((m - 1) // 2) + [_g_block_cert(ring, o)])
        s2 = corner_matrix(H, v, o)
        cert2 = _eliminated_cert(H, v, o, [z, -x, o],
                                 _h_certs(ring, m, x)
                                 + [trivial_certificate(DRMatrix.diagonal(ring, [o]))])
    else:
        # even, nonzero top coefficient
        s1 = lower_corner_matrix(G, u, -x)
        cert1 = block_diag_certificate([_g_block_cert(ring, x)] * (n // 2))
        s2 = corner_matrix(H, v, a_top + x)
        cert2 = _eliminated_cert(H, v, a_top + x, [z, -x, o],
                                 _h_certs(ring, m, x)
                                 + [trivial_certificate(DRMatrix.diagonal(ring, [a_top + x]))])

    assert _same(s1 + s2, A)
    assert cert1.target == s1 and cert2.target == s2
    return Decomposition("sum", [cert1, cert2], A)


def sum_three_char2_companion(C: CompanionMatrix, start: int = 0) -> Decomposition:
    """Three diagonalizable summands in characteristic 2 with x = 1;
    two suffice at n <= 2 and the list is padded with a zero part."""
    ring = C.ring
    if ring.characteristic != 2:
        raise NotCharTwo("three-part splitting is the characteristic-2 route")
    n = C.size
    A = C.realize()
    z, o = ring.zero(), ring.one()

    def zero_part(k):
        return trivial_certificate(DRMatrix.zeros(ring, k, k))

    if n == 1:
        parts = [trivial_certificate(A), zero_part(1), zero_part(1)]
        return Decomposition("sum", parts, A)

    if n == 2:
        if ring is GF2:
            return _sum_three_gf2_exhaustive(A)
        two = sum_two_companion(C, start=start)
        return Decomposition("sum", list(two.parts) + [zero_part(2)], A)

    x = o
    a_top = C.coeffs[n - 1]
    u, v = _uv_columns(C)
    m = n - 1
    G = _g_matrix(ring, m, x)
    H = _h_matrix(ring, m, x)

    if n % 2 == 1:
        s1 = DRMatrix.block_diag([G, DRMatrix.diagonal(ring, [o + a_top])])
        cert1 = block_diag_certificate(
            _g_certs(ring, m, x)
            + [trivial_certificate(DRMatrix.diagonal(ring, [o + a_top]))])
        s2 = lower_corner_matrix(H, u, z)
        cert2 = block_diag_certificate(
            [trivial_certificate(DRMatrix.zeros(ring, 1, 1))]
            + [_h_block_cert(ring, x)] * (m // 2))
    else:
        s1 = lower_corner_matrix(G, u, o)
        cert1 = block_diag_certificate([_g_block_cert(ring, x)] * (n // 2))
        s2 = DRMatrix.block_diag([H, DRMatrix.diagonal(ring, [a_top])])
        cert2 = block_diag_certificate(
            _h_certs(ring, m, x)
            + [trivial_certificate(DRMatrix.diagonal(ring, [a_top]))])

    s3 = corner_matrix(DRMatrix.zeros(ring, m, m), v, o)
    cert3 = _eliminated_cert(DRMatrix.zeros(ring, m, m), v, o, [z, o],
                             [trivial_certificate(DRMatrix.zeros(ring, m, m)),
                              trivial_certificate(DRMatrix.diagonal(ring, [o]))])

    assert _same(s1 + s2 + s3, A)
    return Decomposition("sum", [cert1, cert2, cert3], A)


def _sum_three_gf2_exhaustive(A: DRMatrix) -> Decomposition:
    """Search over triples of diagonalizable 2x2 matrices over GF(2)."""
    from .canonical import all_matrices, field_diagonalization_certificate, \
        is_diagonalizable_field
    ring = A.ring
    diag_set = [M for M in all_matrices(ring, 2) if is_diagonalizable_field(M)]
    zero = DRMatrix.zeros(ring, 2, 2)
    for p1 in diag_set:
        for p2 in diag_set:
            rem = A - p1 - p2
            if rem == zero or is_diagonalizable_field(rem):
                parts = [p1, p2] if rem == zero else [p1, p2, rem]
                certs = [field_diagonalization_certificate(M) for M in parts]
                while len(certs) < 3:
                    certs.append(trivial_certificate(zero))
                return Decomposition("sum", certs, A)
    raise AssertionError("exhaustive GF(2) splitting failed")


def sum_two_nilpotent(N: DRMatrix, start: int = 0) -> Decomposition:
    """Two diagonalizable summands for a nilpotent matrix, over every
    supported ring: the Jordan blocks split as shift halves."""
    ring = N.ring
    jp = jordan_nilpotent(N)
    x = central_sample(ring, 1, [ring.zero()], start=start)[0]
    first_certs = []
    second_certs = []
    for m_i in jp.parts:
        first_certs.append(block_diag_certificate(_g_certs(ring, m_i, x))
                           if m_i > 1 else trivial_certificate(DRMatrix.zeros(ring, 1, 1)))
        second_certs.append(block_diag_certificate(_h_certs(ring, m_i, x))
                            if m_i > 1 else trivial_certificate(DRMatrix.zeros(ring, 1, 1)))
    Q = jp.conjugator
    Qinv = Q.invert()
    parts = []
    for certs in (first_certs, second_certs):
        combined = block_diag_certificate(certs) if len(certs) > 1 else certs[0]
        parts.append(DiagCertificate(Q * combined.P, combined.diag,
                                     Q * combined.target * Qinv))
    dec = Decomposition("sum", parts, N)
    assert dec.combine() == N
    return dec


def sum_decompose(A: DRMatrix, start: int = 0) -> Decomposition:
    """Dispatcher: two summands whenever the center has at least three
    elements (or the input is nilpotent), three over GF(2)."""
    ring = A.ring
    if A.is_diagonal():
        parts = [trivial_certificate(A),
                 trivial_certificate(A.ring_zeros())]
        return Decomposition("sum", parts, A)
    if ring.exact and is_nilpotent(A):
        return sum_two_nilpotent(A, start=start)
    res = rcf(A)
    if ring is GF2:
        subs = [sum_three_char2_companion(b, start=start) for b in res.blocks]
    else:
        subs = [sum_two_companion(b, start=start) for b in res.blocks]
    return merge_block_decompositions("sum", A, res, subs)


def merge_block_decompositions(mode, A, res, subs) -> Decomposition:
    """Combine per-block decompositions along the rcf conjugator.  Sums
    pad short blocks with zero parts, products with identity parts."""
    ring = A.ring
    width = max(len(s.parts) for s in subs)
    Q = res.conjugator
    Qinv = Q.invert()
    parts = []
    for j in range(width):
        certs = []
        for block, sub in zip(res.blocks, subs):
            if j < len(sub.parts):
                certs.append(sub.parts[j])
            elif mode == "sum":
                certs.append(trivial_certificate(DRMatrix.zeros(ring, block.size, block.size)))
            else:
                certs.append(trivial_certificate(DRMatrix.identity(ring, block.size)))
        combined = block_diag_certificate(certs) if len(certs) > 1 else certs[0]
        parts.append(DiagCertificate(Q * combined.P, combined.diag,
                                     Q * combined.target * Qinv))
    return Decomposition(mode, parts, A)
