import pytest

from skewdiag import (ASQ, GF2, GF3, GF4, HQ, QQ, CompanionMatrix, DRMatrix,
                      build_shift_split, shift_matrix, sum_decompose,
                      sum_three_char2_companion, sum_two_companion,
                      sum_two_nilpotent, verify_certificate)
from skewdiag.errors import NotCharTwo, ZeroX
from skewdiag.matrices import random_matrix, random_nilpotent

from conftest import ring_kwargs


def test_shift_split_displays():
    x = QQ.from_int(3)
    z, o = QQ.zero(), QQ.one()
    sp = build_shift_split(2, x)
    assert sp.first == DRMatrix.from_rows(QQ, [[z, z], [o, -x]])
    assert sp.second == DRMatrix.from_rows(QQ, [[z, z], [z, x]])
    sp = build_shift_split(3, x)
    assert sp.second == DRMatrix.from_rows(QQ, [[z, z, z], [z, x, z], [z, o, z]])
    with pytest.raises(ZeroX):
        build_shift_split(4, QQ.zero())


def test_shift_split_identity():
    for ring in (QQ, GF2, GF3, GF4, ASQ):
        xs = [ring.from_int(1)]
        if ring is ASQ:
            xs = [ring.gen_t(), ring.gen_t() + ring.one()]
        elif ring.center_size is None or ring.center_size > 2:
            xs.append(ring.from_int(2))
        for n in range(1, 11):
            for x in xs:
                if x.is_zero():
                    continue
                sp = build_shift_split(n, x)
                assert sp.first + sp.second == shift_matrix(ring, n)


def test_sum_two_n1():
    q = HQ.quat(1, 2, 3, 4)
    dec = sum_two_companion(CompanionMatrix(HQ, [q]))
    rep = verify_certificate(dec)
    assert rep.ok and rep.part_count == 2
    assert dec.parts[0].target == DRMatrix(HQ, 1, 1, [q])
    assert dec.parts[1].target.is_zero()


def test_sum_two_n2_spec_values():
    z, o = QQ.zero(), QQ.one()
    dec = sum_two_companion(CompanionMatrix(QQ, [o, z]))
    assert verify_certificate(dec).ok
    s1, s2 = dec.parts
    assert s1.target == DRMatrix.from_rows(QQ, [[z, z], [o, -o]])
    assert s2.target == DRMatrix.from_rows(QQ, [[z, o], [z, o]])
    assert s1.P == DRMatrix.from_rows(QQ, [[o, z], [o, o]])
    assert s2.P == DRMatrix.from_rows(QQ, [[o, o], [z, o]])
    assert list(s1.diag) == [z, -o] and list(s2.diag) == [z, o]


def test_sum_two_case_coverage(rng):
    # odd/even sizes with zero and nonzero trailing coefficient
    for ring in (QQ, HQ, GF3, GF4, ASQ):
        z = ring.zero()
        for n in (3, 4, 5, 6):
            for top_zero in (True, False):
                coeffs = [ring.random_element(rng, **ring_kwargs(ring))
                          for _ in range(n - 1)]
                top = z if top_zero else ring.one()
                dec = sum_two_companion(CompanionMatrix(ring, coeffs + [top]))
                rep = verify_certificate(dec)
                assert rep.ok and rep.part_count == 2, (ring.name, n, rep.failure)


def test_sum_two_nilpotent_blocks(rng):
    for ring in (HQ, GF3, GF2, ASQ):
        for n in (2, 3, 4, 5):
            N = random_nilpotent(ring, n, rng, **ring_kwargs(ring))
            dec = sum_two_nilpotent(N)
            rep = verify_certificate(dec)
            assert rep.ok and rep.part_count == 2, (ring.name, n, rep.failure)


def test_sum_three_char2(rng):
    with pytest.raises(NotCharTwo):
        sum_three_char2_companion(CompanionMatrix(QQ, [QQ.one(), QQ.one()]))
    for ring in (GF2, GF4, ASQ):
        for n in (1, 2, 3, 4, 5):
            coeffs = [ring.random_element(rng, **ring_kwargs(ring)) for _ in range(n)]
            dec = sum_three_char2_companion(CompanionMatrix(ring, coeffs))
            rep = verify_certificate(dec)
            assert rep.ok and rep.part_count <= 3, (ring.name, n, rep.failure)


def test_sum_decompose_diagonal_shortcut():
    A = DRMatrix.diagonal(HQ, [HQ.quat(0, 1, 0, 0), HQ.from_int(2)])
    dec = sum_decompose(A)
    assert verify_certificate(dec).ok
    assert dec.parts[0].target == A and dec.parts[1].target.is_zero()
    Z = DRMatrix.zeros(GF2, 3)
    dec = sum_decompose(Z)
    assert verify_certificate(dec).ok
    assert all(p.target.is_zero() for p in dec.parts)


def test_sum_decompose_two_parts_random(rng):
    for ring in (QQ, HQ, GF3, GF4, ASQ):
        for trial in range(24):
            n = 1 + (trial % 6)
            if ring is ASQ:
                n = 1 + (trial % 3)
            A = random_matrix(ring, n, rng, **ring_kwargs(ring))
            dec = sum_decompose(A)
            rep = verify_certificate(dec)
            assert rep.ok and rep.part_count == 2, (ring.name, n, rep.failure)
            assert dec.combine() == A


def test_gf2_exhaustive_n2():
    from skewdiag.canonical import all_matrices, is_diagonalizable_field
    diag_set = [M for M in all_matrices(GF2, 2) if is_diagonalizable_field(M)]
    assert len(diag_set) == 8
    one, zero = GF2.one(), GF2.zero()
    hard = DRMatrix.from_rows(GF2, [[one, one], [one, zero]])
    # no pair of diagonalizable matrices sums to the hard witness
    pair_sums = {d1 + d2 for d1 in diag_set for d2 in diag_set}
    assert hard not in pair_sums
    for A in all_matrices(GF2, 2):
        dec = sum_decompose(A)
        rep = verify_certificate(dec)
        assert rep.ok and rep.part_count <= 3, rep.failure


def test_gf2_n3_counterexample_needs_three():
    one, zero = GF2.one(), GF2.zero()
    hard = DRMatrix.from_rows(GF2, [[one, one], [one, zero]])
    A = DRMatrix.block_diag([hard, DRMatrix.diagonal(GF2, [one])])
    dec = sum_decompose(A)
    rep = verify_certificate(dec)
    assert rep.ok and rep.part_count == 3
    from skewdiag.canonical import all_matrices, is_diagonalizable_field
    diag3 = [M for M in all_matrices(GF2, 3) if is_diagonalizable_field(M)]
    pair_sums = {d1 + d2 for d1 in diag3 for d2 in diag3}
    assert A not in pair_sums


def test_deterministic_outputs(rng):
    A = random_matrix(HQ, 4, rng)
    d1 = sum_decompose(A)
    d2 = sum_decompose(A)
    assert d1.parts == d2.parts
