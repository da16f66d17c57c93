import pytest

from skewdiag import (ASQ, GF2, GF3, GF4, HQ, QQ, CompanionMatrix, DRMatrix,
                      diagonalize_central_companion, diagonalize_involution,
                      diagonalize_weighted_reversal,
                      is_diagonalizable_bruteforce, jordan_nilpotent, rcf,
                      reversal, verify_certificate, weighted_reversal)
from skewdiag.canonical import is_companion_shaped, is_nilpotent
from skewdiag.errors import (CharTwo, NonCentralRoot, NotInvolution,
                             NotNilpotent, RepeatedRoot, RootMismatch)
from skewdiag.matrices import random_matrix, random_nilpotent
from skewdiag.sums import _g_matrix, _h_matrix, shift_matrix

from conftest import EXACT_RINGS, ring_kwargs


def _check_rcf(A):
    res = rcf(A)
    Q = res.conjugator
    assert Q * res.realize() * Q.invert() == A
    for b in res.blocks:
        assert is_companion_shaped(b.realize())
    return res


def test_rcf_companion_fixed_point():
    C = CompanionMatrix(QQ, [QQ.from_int(-1), QQ.from_int(2)])
    res = _check_rcf(C.realize())
    assert len(res.blocks) == 1


def test_rcf_diagonal():
    A = DRMatrix.diagonal(QQ, [QQ.one(), QQ.from_int(2)])
    res = _check_rcf(A)
    assert all(b.size == 1 for b in res.blocks)


def test_rcf_unipotent_example():
    z, o = QQ.zero(), QQ.one()
    A = DRMatrix.from_rows(QQ, [[o, o], [z, o]])
    res = _check_rcf(A)
    assert len(res.blocks) == 1
    assert list(res.blocks[0].coeffs) == [QQ.from_int(-1), QQ.from_int(2)]


def test_rcf_repeated_block_needs_fallback():
    C = CompanionMatrix(QQ, [QQ.one(), QQ.one()]).realize()
    A = DRMatrix.block_diag([C, C])
    res = _check_rcf(A)
    assert sum(b.size for b in res.blocks) == 4
    assert len(res.blocks) >= 2


def test_rcf_random_per_ring(rng):
    for ring in EXACT_RINGS:
        for trial in range(34):
            n = 1 + (trial % 6)
            A = random_matrix(ring, n, rng, **ring_kwargs(ring))
            _check_rcf(A)


def test_rcf_structured_inputs(rng):
    for ring in (QQ, HQ, GF2, ASQ):
        one = ring.one()
        _check_rcf(DRMatrix.identity(ring, 3))
        _check_rcf(reversal(ring, 4))
        _check_rcf(DRMatrix.block_diag([DRMatrix.identity(ring, 2),
                                        reversal(ring, 2)]))


def test_jordan_examples():
    jp = jordan_nilpotent(DRMatrix.zeros(QQ, 3))
    assert jp.parts == [1, 1, 1] and jp.conjugator.is_identity()
    z, o = QQ.zero(), QQ.one()
    sub = DRMatrix.from_rows(QQ, [[z, z], [o, z]])
    jp = jordan_nilpotent(sub)
    assert jp.parts == [2] and jp.conjugator.is_identity()
    sup = DRMatrix.from_rows(QQ, [[z, o], [z, z]])
    jp = jordan_nilpotent(sup)
    assert jp.parts == [2]
    assert jp.conjugator == reversal(QQ, 2)
    with pytest.raises(NotNilpotent):
        jordan_nilpotent(DRMatrix.identity(QQ, 2))


def test_jordan_random(rng):
    for ring in EXACT_RINGS:
        for trial in range(25):
            n = 2 + (trial % 5)
            N = random_nilpotent(ring, n, rng, **ring_kwargs(ring))
            assert is_nilpotent(N)
            jp = jordan_nilpotent(N)
            Q = jp.conjugator
            assert Q * jp.realize() * Q.invert() == N
            assert sum(jp.parts) == n
            assert jp.parts == sorted(jp.parts, reverse=True)


def test_shift_split_reproduces_jordan_blocks():
    # the two halves recombine to the subdiagonal shift for n <= 8
    for ring in (QQ, GF2, GF3, ASQ):
        xs = [c for c in (ring.from_int(1), ring.from_int(2), ring.from_int(3))
              if not c.is_zero()]
        if ring is ASQ:
            xs.append(ring.gen_t())
        for n in range(1, 9):
            for x in xs:
                assert _g_matrix(ring, n, x) + _h_matrix(ring, n, x) == \
                    shift_matrix(ring, n)


def test_involution_certificates():
    cert = diagonalize_involution(DRMatrix.identity(QQ, 3))
    assert all(d == QQ.one() for d in cert.diag)
    M = reversal(QQ, 2)
    cert = diagonalize_involution(M)
    assert verify_certificate(cert).ok
    assert sorted(repr(d) for d in cert.diag) == ["-1", "1"]
    cert = diagonalize_involution(reversal(QQ, 3))
    assert verify_certificate(cert).ok
    plus = sum(1 for d in cert.diag if d == QQ.one())
    assert plus == 2 and len(cert.diag) == 3
    with pytest.raises(NotInvolution):
        diagonalize_involution(DRMatrix.zeros(QQ, 2))
    with pytest.raises(CharTwo):
        diagonalize_involution(DRMatrix.identity(GF2, 2))


def test_weighted_reversal_certificates():
    w = QQ.from_int(4)
    a = QQ.from_int(2)
    cert = diagonalize_weighted_reversal(2, w, a)
    assert verify_certificate(cert).ok
    assert list(cert.diag) == [a, -a]
    assert cert.target == weighted_reversal(QQ, 2, w)
    one = QQ.one()
    cert = diagonalize_weighted_reversal(3, one, one)
    assert verify_certificate(cert).ok
    assert list(cert.diag) == [one, one, -one]
    cert = diagonalize_weighted_reversal(1, w, a)
    assert verify_certificate(cert).ok and list(cert.diag) == [w]
    # larger sizes: corner pair carries +-a, interior pairs +-1
    cert = diagonalize_weighted_reversal(5, w, a)
    assert verify_certificate(cert).ok
    assert sum(1 for d in cert.diag if d == a) == 1
    assert sum(1 for d in cert.diag if d == -a) == 1
    with pytest.raises(NonCentralRoot):
        diagonalize_weighted_reversal(2, HQ.quat(0, 0, 0, -1) * HQ.quat(0, 0, 0, 1),
                                      HQ.quat(0, 0, 0, 1))


def test_central_companion_certificates():
    C = CompanionMatrix(QQ, [QQ.from_int(-2), QQ.from_int(3)])
    cert = diagonalize_central_companion(C, [QQ.one(), QQ.from_int(2)])
    assert verify_certificate(cert).ok
    assert list(cert.diag) == [QQ.one(), QQ.from_int(2)]
    cert = diagonalize_central_companion(CompanionMatrix(QQ, [QQ.from_int(7)]),
                                         [QQ.from_int(7)])
    assert verify_certificate(cert).ok
    # (z-1)(z-w) over GF(4): z^2 + (1+w)z + w
    one, om = GF4.one(), GF4.element(2)
    C = CompanionMatrix(GF4, [om, one + om])
    cert = diagonalize_central_companion(C, [one, om])
    assert verify_certificate(cert).ok
    with pytest.raises(RepeatedRoot):
        diagonalize_central_companion(CompanionMatrix(QQ, [QQ.from_int(-1), QQ.from_int(2)]),
                                      [QQ.one(), QQ.one()])
    with pytest.raises(RootMismatch):
        diagonalize_central_companion(C, [one, one + om])


def test_bruteforce_oracle_examples():
    assert is_diagonalizable_bruteforce(DRMatrix.identity(GF2, 2))
    one, zero = GF2.one(), GF2.zero()
    M = DRMatrix.from_rows(GF2, [[one, one], [one, zero]])
    assert not is_diagonalizable_bruteforce(M)
    N = DRMatrix.from_rows(GF3, [[GF3.zero(), GF3.one()], [GF3.zero(), GF3.zero()]])
    assert not is_diagonalizable_bruteforce(N)


def test_bruteforce_routes_agree():
    from skewdiag.canonical import all_matrices
    for ring, n in ((GF2, 2), (GF3, 2)):
        for A in all_matrices(ring, n):
            assert is_diagonalizable_bruteforce(A, "rank") == \
                is_diagonalizable_bruteforce(A, "search")


def test_gf2_diagonalizable_count_is_eight():
    from skewdiag.canonical import all_matrices
    count = sum(1 for A in all_matrices(GF2, 2) if is_diagonalizable_bruteforce(A))
    assert count == 8
