"""Products of diagonalizable matrices.

Characteristic != 2: companion = reversal x flipped companion; the
reversal is an involution, hence diagonalizable, and the flipped factor
loses its corner by elimination as long as the corner avoids +-1 (a
central square replaces the reversal corner otherwise).

Rich center (any characteristic): companion = central companion with a
prescribed distinct spectrum x near-unitriangular factor, both
explicitly diagonalizable.

Characteristic 2, noncommutative: involutions are no longer
diagonalizable, so the reversal-style factors are themselves split by
the rich-center route; at most four certificates result.
"""

from .canonical import (CompanionMatrix, diagonalize_central_companion,
                        diagonalize_involution, diagonalize_weighted_reversal,
                        is_nilpotent, rcf, reversal)
from .certificates import (DiagCertificate, Decomposition,
                           block_diag_certificate, trivial_certificate)
from .errors import (GF2NonsingularUnreachable, GF2ProductUnreachable,
                     GF3Unsupported, NotCharTwo, UnsupportedRing)
from .matrices import DRMatrix
from .rings import ASQ, GF2, GF3, GF4, HF, CentralPolynomial, central_sample
from .sums import merge_block_decompositions
from .sylvester import corner_matrix, eliminate_corner


def _same(A: DRMatrix, B: DRMatrix) -> bool:
    if A.ring is HF:
        return (A - B).frob_norm() <= 1e-9 * (1.0 + B.frob_norm())
    return A == B


def _is_close_to(a, value) -> bool:
    if a.ring is HF:
        return (a - value).norm() < 1e-12
    return a == value


def _is_pm_one(a) -> bool:
    one = a.ring.one()
    return _is_close_to(a, one) or _is_close_to(a, -one)


def _flipped_companion(C: CompanionMatrix) -> DRMatrix:
    """Row-reversed companion: reversal * companion."""
    return reversal(C.ring, C.size) * C.realize()


def _flipped_parts(C: CompanionMatrix):
    """The flipped companion as (reversal block, alpha column, corner)."""
    ring = C.ring
    n = C.size
    alpha = DRMatrix.column(ring, [C.coeffs[n - 1 - i] for i in range(n - 1)])
    return reversal(ring, n - 1), alpha, C.coeffs[0]


def _transport(T_inv, cert, target):
    return DiagCertificate(T_inv * cert.P, cert.diag, target)


def _corner_eliminated_involution_cert(ring, Rp, alpha, corner, target):
    """Certificate for [[Rp, alpha],[0, corner]] with Rp a reversal and
    corner avoiding +-1 (characteristic != 2)."""
    z, o = ring.zero(), ring.one()
    p = CentralPolynomial([-o, z, o])  # z^2 - 1
    T, _ = eliminate_corner(Rp, alpha, corner, p)
    inner = block_diag_certificate([
        diagonalize_involution(Rp),
        trivial_certificate(DRMatrix.diagonal(ring, [corner]))])
    return _transport(T.invert(), inner, target)


def product_two_char_ne2(C: CompanionMatrix, start: int = 0) -> Decomposition:
    """Two diagonalizable factors in characteristic != 2.  The corner
    branch with a_0 = +-1 needs a central square differing from +-a_0,
    which GF(3) cannot supply."""
    ring = C.ring
    if ring.characteristic == 2:
        from .errors import CharTwo
        raise CharTwo("use the rich-center or characteristic-2 route")
    n = C.size
    A = C.realize()
    z, o = ring.zero(), ring.one()

    if n == 1:
        parts = [trivial_certificate(A),
                 trivial_certificate(DRMatrix.identity(ring, 1))]
        return Decomposition("product", parts, A)

    a0 = C.coeffs[0]
    if not _is_pm_one(a0):
        R = reversal(ring, n)
        F = _flipped_companion(C)
        Rp, alpha, _ = _flipped_parts(C)
        cert1 = diagonalize_involution(R)
        cert2 = _corner_eliminated_involution_cert(ring, Rp, alpha, a0, F)
        assert _same(R * F, A)
        return Decomposition("product", [cert1, cert2], A)

    if ring is GF3:
        raise GF3Unsupported(
            "GF(3) has no central square away from +-1; use the bounded search")
    aa = None
    for k in range(start, start + 64):
        cand = central_sample(ring, 1, [z], start=k)[0]
        sq = cand * cand
        if not _is_close_to(sq, a0) and not _is_close_to(sq, -a0):
            aa = cand
            break
    if aa is None:
        raise UnsupportedRing("no central element with square away from +-a_0")
    w = aa * aa
    W = _weighted_reversal_matrix(ring, n, w)
    corner = aa.inv() * aa.inv() * a0
    F2 = _flipped_with_corner(C, corner)
    cert1 = diagonalize_weighted_reversal(n, w, aa)
    Rp, alpha, _ = _flipped_parts(C)
    cert2 = _corner_eliminated_involution_cert(ring, Rp, alpha, corner, F2)
    assert _same(W * F2, A)
    return Decomposition("product", [cert1, cert2], A)


def _weighted_reversal_matrix(ring, n, w):
    from .canonical import weighted_reversal
    return weighted_reversal(ring, n, w)


def _flipped_with_corner(C: CompanionMatrix, corner) -> DRMatrix:
    Rp, alpha, _ = _flipped_parts(C)
    return corner_matrix(Rp, alpha, corner)


def product_two_central_rich(C: CompanionMatrix, start: int = 0) -> Decomposition:
    """Two diagonalizable factors whenever the center supplies a distinct
    nonzero spectrum of size n: a central companion with that spectrum
    times a near-unitriangular correction."""
    ring = C.ring
    n = C.size
    A = C.realize()
    z, o = ring.zero(), ring.one()
    a0 = C.coeffs[0]

    if n == 1:
        lam = central_sample(ring, 1, [z], start=start)[0]
        rest = lam.inv() * a0
        parts = [trivial_certificate(DRMatrix.diagonal(ring, [lam])),
                 trivial_certificate(DRMatrix.diagonal(ring, [rest]))]
        return Decomposition("product", parts, A)

    lam = None
    bvec = None
    for attempt in range(n + 3):
        cand = central_sample(ring, n, [z], start=start + attempt)
        # expand prod (z - l_i) = z^n + poly[n-1] z^{n-1} + ... + poly[0]
        poly = [o]
        for r in cand:
            nxt = [z] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = nxt[i + 1] + c
                nxt[i] = nxt[i] - r * c
            poly = nxt
        b = [-poly[i] for i in range(n)]
        if not b[0] == a0:
            lam, bvec = cand, b
            break
    if lam is None:
        raise UnsupportedRing("could not avoid b_0 = a_0 with the sampled spectrum")

    B = CompanionMatrix(ring, bvec)
    c_last = bvec[0].inv() * a0
    cvals = [C.coeffs[i] - bvec[i] * c_last for i in range(1, n)]  # c_0..c_{n-2}
    gamma = DRMatrix.column(ring, cvals)
    U = corner_matrix(DRMatrix.identity(ring, n - 1), gamma, c_last)
    cert1 = diagonalize_central_companion(B, lam)
    p = CentralPolynomial([-o, o])  # z - 1
    T, block = eliminate_corner(DRMatrix.identity(ring, n - 1), gamma, c_last, p)
    cert2 = _transport(T.invert(), trivial_certificate(block), U)
    assert _same(B.realize() * U, A)
    return Decomposition("product", [cert1, cert2], A)


def _decompose_two_central_rich_general(M: DRMatrix, start: int = 0):
    """<= 2 certificates multiplying to an arbitrary square matrix over a
    ring with rich center."""
    if M.is_diagonal():
        return [trivial_certificate(M)]
    res = rcf(M)
    subs = [product_two_central_rich(b, start=start) for b in res.blocks]
    return list(merge_block_decompositions("product", M, res, subs).parts)


def product_char2(C: CompanionMatrix, start: int = 0) -> Decomposition:
    """At most four diagonalizable factors over a noncommutative
    characteristic-2 ring with infinite center.  The reversal-shaped
    factors are not diagonalizable here, so each is split in two by the
    rich-center route."""
    ring = C.ring
    if ring.characteristic != 2 or ring.commutative or ring.center_size is not None:
        raise NotCharTwo("route requires characteristic 2, noncommutative, infinite center")
    n = C.size
    A = C.realize()
    z, o = ring.zero(), ring.one()

    if n == 1:
        parts = [trivial_certificate(A),
                 trivial_certificate(DRMatrix.identity(ring, 1))]
        return Decomposition("product", parts, A)

    a0 = C.coeffs[0]
    if not a0 == o:
        left = reversal(ring, n)
        corner = a0
        right = _flipped_companion(C)
    else:
        aa = None
        for k in range(start, start + 64):
            cand = central_sample(ring, 1, [z], start=k)[0]
            if not (cand * cand) == a0:
                aa = cand
                break
        if aa is None:
            raise UnsupportedRing("no central element with square differing from a_0")
        left = _weighted_reversal_matrix(ring, n, aa * aa)
        corner = aa.inv() * aa.inv() * a0
        right = _flipped_with_corner(C, corner)
    assert _same(left * right, A)

    left_certs = _decompose_two_central_rich_general(left, start=start)

    # right = [[R', alpha],[0, corner]] with corner != 1, eliminated then split
    Rp, alpha, _ = _flipped_parts(C)
    p = CentralPolynomial([o, z, o])  # z^2 + 1 = (z + 1)^2
    T, block = eliminate_corner(Rp, alpha, corner, p)
    T_inv = T.invert()
    inner_certs = _decompose_two_central_rich_general(block, start=start)
    right_certs = [_transport(T_inv, c, T_inv * c.target * T) for c in inner_certs]

    parts = left_certs + right_certs
    assert len(parts) <= 4
    dec = Decomposition("product", parts, A)
    assert _same(dec.combine(), A)
    return dec


# ---------------------------------------------------------------------------
# bounded searches over the tiny fields


def _bounded_product_search(A: DRMatrix, max_width: int):
    """BFS over ordered products of diagonalizable matrices; returns the
    factor list (possibly empty for the identity) or None."""
    from .canonical import all_matrices, is_diagonalizable_field
    ring = A.ring
    n = A.rows
    gens = [M for M in all_matrices(ring, n) if is_diagonalizable_field(M)]
    ident = DRMatrix.identity(ring, n)
    paths = {ident: []}
    frontier = [ident]
    if A == ident:
        return []
    for _ in range(max_width):
        nxt = []
        for M in frontier:
            base = paths[M]
            for g in gens:
                prod = M * g
                if prod not in paths:
                    paths[prod] = base + [g]
                    if prod == A:
                        return paths[prod]
                    nxt.append(prod)
        frontier = nxt
    return None


def _product_small_field_search(A: DRMatrix, max_width: int, err) -> Decomposition:
    from .canonical import field_diagonalization_certificate
    factors = _bounded_product_search(A, max_width)
    if factors is None:
        raise err
    certs = [field_diagonalization_certificate(M) for M in factors]
    while len(certs) < 2:
        certs.append(trivial_certificate(DRMatrix.identity(A.ring, A.rows)))
    return Decomposition("product", certs, A)


def _product_gf2(A: DRMatrix) -> Decomposition:
    n = A.rows
    if A.rank() == n:
        if A.is_identity():
            parts = [trivial_certificate(A), trivial_certificate(A)]
            return Decomposition("product", parts, A)
        raise GF2NonsingularUnreachable(
            "over GF(2) the only nonsingular product of diagonalizable matrices is I")
    if n > 3:
        raise GF2ProductUnreachable("GF(2) singular search is bounded at n <= 3")
    return _product_small_field_search(
        A, 3, GF2ProductUnreachable("matrix is not a product of diagonalizable matrices"))


def _product_gf3(A: DRMatrix, start: int) -> Decomposition:
    if A.rows <= 2:
        return _product_small_field_search(
            A, 3, GF3Unsupported("no product of width <= 3 found"))
    res = rcf(A)
    subs = [product_two_char_ne2(b, start=start) for b in res.blocks]
    return merge_block_decompositions("product", A, res, subs)


def product_decompose(A: DRMatrix, strategy: str = "auto", start: int = 0) -> Decomposition:
    """Dispatcher.  Two factors for characteristic != 2 (except GF(3))
    and for rich centers; three by bounded search over GF(3); at most
    four over the characteristic-2 quaternions; over GF(2) only the
    identity is reachable among nonsingular matrices."""
    ring = A.ring
    if strategy not in ("auto", "char-ne2", "central-rich", "char2"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if A.is_diagonal():
        parts = [trivial_certificate(A),
                 trivial_certificate(A.identity_like())]
        return Decomposition("product", parts, A)
    if ring is GF2:
        return _product_gf2(A)
    if ring is GF3 and strategy in ("auto", "char-ne2"):
        return _product_gf3(A, start)

    if strategy == "auto":
        strategy = "char-ne2" if ring.characteristic != 2 else "central-rich"
    if strategy == "char-ne2" and ring.characteristic == 2:
        from .errors import CharTwo
        raise CharTwo("char-ne2 strategy needs characteristic != 2")
    if strategy == "char2" and ring is not ASQ:
        raise NotCharTwo("char2 strategy is for the characteristic-2 quaternions")

    res = rcf(A)
    if strategy == "char-ne2":
        subs = [product_two_char_ne2(b, start=start) for b in res.blocks]
    elif strategy == "central-rich":
        subs = [product_two_central_rich(b, start=start) for b in res.blocks]
    else:
        subs = [product_char2(b, start=start) for b in res.blocks]
    return merge_block_decompositions("product", A, res, subs)
