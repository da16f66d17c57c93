import pytest

from skewdiag import DRMatrix, HQ, QQ, GF3, conjugate, mat_arith, \
    block_diag_certificate, conjugate_certificate, trivial_certificate, \
    verify_certificate
from skewdiag.certificates import DiagCertificate
from skewdiag.errors import RingMismatch, ShapeMismatch, Singular
from skewdiag.matrices import random_invertible, random_matrix

from conftest import EXACT_RINGS, ring_kwargs


def _quat_1x1(q):
    return DRMatrix(HQ, 1, 1, [q])


def test_scalar_sides_are_distinct():
    i = HQ.quat(0, 1, 0, 0)
    j = HQ.quat(0, 0, 1, 0)
    k = HQ.quat(0, 0, 0, 1)
    assert mat_arith("scale_left", i, _quat_1x1(j)) == _quat_1x1(k)
    assert mat_arith("scale_right", _quat_1x1(i), j) == _quat_1x1(k)
    assert mat_arith("scale_left", j, _quat_1x1(i)) == _quat_1x1(-k)


def test_identity_neutral(rng):
    A = random_matrix(QQ, 3, rng)
    assert DRMatrix.identity(QQ, 3) * A == A
    assert mat_arith("add", A, -A).is_zero()


def test_shape_and_ring_errors(rng):
    A = random_matrix(QQ, 2, rng)
    B = random_matrix(QQ, 3, rng)
    with pytest.raises(ShapeMismatch):
        A + B
    with pytest.raises(RingMismatch):
        A + random_matrix(GF3, 2, rng)


def test_invert_examples():
    assert DRMatrix.identity(QQ, 3).invert() == DRMatrix.identity(QQ, 3)
    i = HQ.quat(0, 1, 0, 0)
    j = HQ.quat(0, 0, 1, 0)
    D = DRMatrix.diagonal(HQ, [i, j])
    assert D.invert() == DRMatrix.diagonal(HQ, [-i, -j])
    z, o = HQ.zero(), HQ.one()
    U = DRMatrix.from_rows(HQ, [[o, i], [z, o]])
    assert U.invert() == DRMatrix.from_rows(HQ, [[o, -i], [z, o]])
    with pytest.raises(Singular):
        DRMatrix.zeros(QQ, 2).invert()


def test_invert_involution_per_ring(rng):
    for ring in EXACT_RINGS:
        for trial in range(34):
            n = 1 + (trial % 6)
            M = random_invertible(ring, n, rng, **ring_kwargs(ring))
            inv = M.invert()
            assert (M * inv).is_identity()
            assert inv.invert() == M


def test_conjugate_is_group_action(rng):
    A = random_matrix(HQ, 3, rng)
    P = random_invertible(HQ, 3, rng)
    Q = random_invertible(HQ, 3, rng)
    assert conjugate(DRMatrix.identity(HQ, 3), A) == A
    assert conjugate(Q, conjugate(P, A)) == conjugate(Q * P, A)


def test_conjugate_spec_example():
    z, o = QQ.zero(), QQ.one()
    P = DRMatrix.from_rows(QQ, [[o, z], [o, o]])
    D = DRMatrix.diagonal(QQ, [z, -o])
    assert conjugate(P, D) == DRMatrix.from_rows(QQ, [[z, z], [o, -o]])


def test_block_diag():
    one = QQ.one()
    two = QQ.from_int(2)
    got = DRMatrix.block_diag([DRMatrix.diagonal(QQ, [one]),
                               DRMatrix.diagonal(QQ, [two])])
    assert got == DRMatrix.diagonal(QQ, [one, two])


def test_g_plus_corner_is_g3():
    # appending a zero 1x1 block to the even-size half gives the odd one
    from skewdiag.sums import _g_matrix
    x = QQ.from_int(2)
    G2 = _g_matrix(QQ, 2, x)
    G3 = _g_matrix(QQ, 3, x)
    assert DRMatrix.block_diag([G2, DRMatrix.zeros(QQ, 1, 1)]) == G3


def test_verify_certificate_basics(rng):
    d = [QQ.from_int(1), QQ.from_int(5)]
    cert = trivial_certificate(DRMatrix.diagonal(QQ, d))
    assert verify_certificate(cert).ok
    # singular conjugator is a structured failure, not an exception
    bad = DiagCertificate(DRMatrix.zeros(QQ, 2), d, DRMatrix.diagonal(QQ, d))
    rep = verify_certificate(bad)
    assert not rep.ok and rep.failure == "singular-conjugator"
    # wrong reconstruction
    bad = DiagCertificate(DRMatrix.identity(QQ, 2), d, DRMatrix.zeros(QQ, 2))
    rep = verify_certificate(bad)
    assert not rep.ok and "reconstruction" in rep.failure


def test_certificate_transport_and_block_closure(rng):
    for trial in range(100):
        ring = (QQ, GF3, HQ)[trial % 3]
        n = 1 + (trial % 3)
        P = random_invertible(ring, n, rng)
        diag = [ring.random_element(rng) for _ in range(n)]
        target = P * DRMatrix.diagonal(ring, diag) * P.invert()
        cert = DiagCertificate(P, diag, target)
        assert verify_certificate(cert).ok
        Q = random_invertible(ring, n, rng)
        moved = conjugate_certificate(Q, cert)
        assert verify_certificate(moved).ok
        assert moved.target == Q * target * Q.invert()
        stacked = block_diag_certificate([cert, moved])
        assert verify_certificate(stacked).ok
