"""Canonical forms over division rings.

rcf brings any square matrix to a similar block diagonal of companion
matrices.  No canonicity is promised: the contract is the conjugation
identity plus the block shape.  Three routes are used, cheapest first:

  1. already diagonal: one 1x1 companion per entry;
  2. a standard basis vector with a full Krylov chain gives a single
     companion block directly;
  3. otherwise the polynomial matrix zI - A is diagonalized over D[z]
     by unimodular row and column operations (valid because D[z] is
     both-sided Euclidean), and the cyclic summands the diagonal
     exhibits are read back as companion blocks with an explicit basis.

Nilpotent input short-circuits to the Jordan partition, whose blocks are
the same thing as all-zero companions.
"""

from .certificates import DiagCertificate
from .errors import (CharTwo, NonCentralRoot, NotInvolution, NotNilpotent,
                     RepeatedRoot, RootMismatch, Singular, TooLarge,
                     UnsupportedRing)
from .matrices import DRMatrix, hstack_columns
from .polyring import ZPoly
from .rings import GF2, GF3, GF4, HF


class CompanionMatrix:
    """Subdiagonal-ones matrix whose last column carries the defining
    coefficients a_0..a_{n-1}; it satisfies z^n = a_{n-1} z^{n-1} + ... + a_0
    on its cyclic vector."""

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self.size = len(self.coeffs)

    def realize(self) -> DRMatrix:
        n = self.size
        z, o = self.ring.zero(), self.ring.one()
        rows = [[z] * n for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = o
        for i in range(n):
            rows[i][n - 1] = self.coeffs[i]
        return DRMatrix.from_rows(self.ring, rows)

    def __repr__(self):
        return f"companion{list(self.coeffs)!r}"


def is_companion_shaped(M: DRMatrix) -> bool:
    n = M.rows
    if n != M.cols:
        return False
    one = M.ring.one()
    for i in range(n):
        for j in range(n - 1):
            want_one = (i == j + 1)
            e = M[i, j]
            if want_one and not e == one:
                return False
            if not want_one and not e.is_zero():
                return False
    return True


class RCFResult:
    def __init__(self, blocks, conjugator):
        self.blocks = list(blocks)
        self.conjugator = conjugator

    def realize(self) -> DRMatrix:
        return DRMatrix.block_diag([b.realize() for b in self.blocks])


class JordanPartition:
    def __init__(self, parts, conjugator):
        self.parts = list(parts)
        self.conjugator = conjugator

    def realize(self) -> DRMatrix:
        return DRMatrix.block_diag([_nilpotent_jordan_block(self.conjugator.ring, m)
                                    for m in self.parts])


def _nilpotent_jordan_block(ring, m) -> DRMatrix:
    z, o = ring.zero(), ring.one()
    rows = [[z] * m for _ in range(m)]
    for i in range(1, m):
        rows[i][i - 1] = o
    return DRMatrix.from_rows(ring, rows)


def _close_or_equal(A, B):
    if A.ring is HF:
        return (A - B).frob_norm() <= 1e-8 * (1.0 + B.frob_norm())
    return A == B


def is_nilpotent(A: DRMatrix) -> bool:
    # rank(A^k) is strictly decreasing until it stabilizes; a nilpotent
    # matrix must drive it to zero, so a stall means "no" immediately
    if A.ring is HF:
        P = A
        for _ in range(A.rows):
            P = P * A
        return P.frob_norm() <= 1e-10 * (1.0 + A.frob_norm()) ** A.rows
    P = A
    prev = A.rows
    for _ in range(A.rows):
        if P.is_zero():
            return True
        r = P.rank()
        if r >= prev:
            return False
        prev = r
        P = P * A
    return P.is_zero()


# ---------------------------------------------------------------------------
# rcf


def rcf(A: DRMatrix) -> RCFResult:
    if A.rows != A.cols:
        raise UnsupportedRing("rcf needs a square matrix")
    n = A.rows
    ring = A.ring
    if n == 0:
        return RCFResult([], A.identity_like())
    if A.is_diagonal():
        blocks = [CompanionMatrix(ring, [A[i, i]]) for i in range(n)]
        return RCFResult(blocks, A.identity_like())
    if ring.exact and is_nilpotent(A):
        jp = jordan_nilpotent(A)
        blocks = [CompanionMatrix(ring, [ring.zero()] * m) for m in jp.parts]
        return RCFResult(blocks, jp.conjugator)

    res = _rcf_cyclic_try(A)
    if res is None:
        if ring is HF:
            raise Singular("no cyclic basis vector for floating rcf")
        res = _rcf_polynomial(A)
    assert _close_or_equal(res.conjugator * res.realize() * res.conjugator.invert(), A)
    return res


def _krylov_chain(A, v):
    """Longest right-independent chain v, Av, A^2 v, ...; returns
    (columns, next vector)."""
    from .matrices import ColumnSpan
    span = ColumnSpan(A.ring)
    cols = []
    cur = v
    while span.add(cur):
        cols.append(cur)
        cur = A * cur
    return cols, cur


def _rcf_cyclic_try(A):
    n = A.rows
    ring = A.ring
    basis_vectors = [DRMatrix.column(ring, [ring.one() if i == j else ring.zero()
                                            for i in range(n)]) for j in range(n)]
    for v in basis_vectors:
        cols, nxt = _krylov_chain(A, v)
        if len(cols) == n:
            Q = hstack_columns(ring, cols)
            a = Q.solve(nxt)
            coeffs = [a[i, 0] for i in range(n)]
            return RCFResult([CompanionMatrix(ring, coeffs)], Q)
    return None


def _zi_minus_a(A):
    ring = A.ring
    n = A.rows
    M = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            diag = ring.one() if i == j else ring.zero()
            M[i][j] = ZPoly(ring, [-A[i, j], diag])
    return M


def _poly_matrix_diagonalize(M, ring):
    """Unimodular U, V with U M V diagonal; returns (diagonal entries,
    U^{-1}) where U^{-1} is tracked as a polynomial matrix.  Column
    transforms are not needed by the caller and are dropped."""
    n = len(M)
    zero = ZPoly.zero(ring)
    uinv = [[ZPoly.const(ring.one()) if i == j else zero for j in range(n)]
            for i in range(n)]

    def swap_rows(a, b):
        if a != b:
            M[a], M[b] = M[b], M[a]
            for r in range(n):
                uinv[r][a], uinv[r][b] = uinv[r][b], uinv[r][a]

    def swap_cols(a, b):
        if a != b:
            for r in range(n):
                M[r][a], M[r][b] = M[r][b], M[r][a]

    def row_sub(i, k, q):
        # row_i -= q * row_k ; U^{-1} column k += column i * q
        M[i] = [M[i][j] - q * M[k][j] for j in range(n)]
        for r in range(n):
            uinv[r][k] = uinv[r][k] + uinv[r][i] * q

    def col_sub(j, k, q):
        # col_j -= col_k * q (untracked)
        for r in range(n):
            M[r][j] = M[r][j] - M[r][k] * q

    def scale_row(i, c):
        # row_i = c * row_i ; U^{-1} column i *= c^{-1} on the right
        M[i] = [p.scale_left(c) for p in M[i]]
        cinv = c.inv()
        for r in range(n):
            uinv[r][i] = uinv[r][i].scale_right(cinv)

    for k in range(n):
        while True:
            pos = None
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if not M[i][j].is_zero():
                        if best is None or M[i][j].degree < best:
                            best = M[i][j].degree
                            pos = (i, j)
            if pos is None:
                raise AssertionError("rank collapse while reducing zI - A")
            swap_rows(k, pos[0])
            swap_cols(k, pos[1])
            dirty = False
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    q, r = M[i][k].divmod_left(M[k][k])
                    row_sub(i, k, q)
                    if not r.is_zero():
                        dirty = True
            if dirty:
                continue
            dirty = False
            for j in range(k + 1, n):
                if not M[k][j].is_zero():
                    q, r = M[k][j].divmod_right(M[k][k])
                    col_sub(j, k, q)
                    if not r.is_zero():
                        dirty = True
            if not dirty:
                break
        lead = M[k][k].lead()
        if not (lead - ring.one()).is_zero():
            scale_row(k, lead.inv())
    return [M[k][k] for k in range(n)], uinv


def _apply_poly_to_basis(A, powers, g, ell):
    """Column sum_i A^i e_ell g_i."""
    ring = A.ring
    acc = DRMatrix.zeros(ring, A.rows, 1)
    for i, c in enumerate(g.coeffs):
        if not c.is_zero():
            acc = acc + powers[i].col_matrix(ell).scale_right(c)
    return acc


def _rcf_polynomial(A):
    ring = A.ring
    n = A.rows
    diag, uinv = _poly_matrix_diagonalize(_zi_minus_a(A), ring)
    maxdeg = max(max((p.degree for p in row if not p.is_zero()), default=0)
                 for row in uinv)
    powers = [A.identity_like()]
    for _ in range(max(maxdeg, max(p.degree for p in diag))):
        powers.append(powers[-1] * A)

    blocks = []
    columns = []
    for j, f in enumerate(diag):
        m = f.degree
        if m == 0:
            continue
        coeffs = [-f.coeff(i) for i in range(m)]  # z^m = a_{m-1} z^{m-1} + ... + a_0
        blocks.append(CompanionMatrix(ring, coeffs))
        w = DRMatrix.zeros(ring, n, 1)
        for ell in range(n):
            w = w + _apply_poly_to_basis(A, powers, uinv[ell][j], ell)
        col = w
        for _ in range(m):
            columns.append(col)
            col = A * col
    assert sum(b.size for b in blocks) == n
    Q = hstack_columns(ring, columns)
    return RCFResult(blocks, Q)


# ---------------------------------------------------------------------------
# nilpotent Jordan form


def jordan_nilpotent(N: DRMatrix) -> JordanPartition:
    n = N.rows
    if n != N.cols:
        raise NotNilpotent("not square")
    if not is_nilpotent(N):
        raise NotNilpotent("matrix is not nilpotent")
    ring = N.ring
    if N.is_zero():
        return JordanPartition([1] * n, N.identity_like())

    powers = [N.identity_like()]
    while not powers[-1].is_zero():
        powers.append(powers[-1] * N)
    idx = len(powers) - 1  # nilpotency index

    kernels = [[] for _ in range(idx + 1)]
    for s in range(1, idx + 1):
        kernels[s] = powers[s].kernel_basis()
    dims = [0] + [len(kernels[s]) for s in range(1, idx + 1)]

    def extend(base_cols, pool, needed):
        from .matrices import ColumnSpan
        span = ColumnSpan(ring)
        for col in base_cols:
            span.add(col)
        chosen = []
        for cand in pool:
            if len(chosen) == needed:
                break
            if span.add(cand):
                chosen.append(cand)
        if len(chosen) != needed:
            raise AssertionError("jordan chain extension failed")
        return chosen

    chains = []
    for s in range(idx, 0, -1):
        # height-s vectors contributed by the chains already started
        carried = [powers[length - s] * head for head, length in chains]
        needed = (dims[s] - dims[s - 1]) - len(carried)
        if needed:
            heads = extend(kernels[s - 1] + carried, kernels[s], needed)
            for h in heads:
                chains.append((h, s))
    chains.sort(key=lambda hl: -hl[1])

    columns = []
    parts = []
    for head, length in chains:
        parts.append(length)
        col = head
        for _ in range(length):
            columns.append(col)
            col = N * col
    Q = hstack_columns(ring, columns)
    assert sum(parts) == n
    jp = JordanPartition(parts, Q)
    assert _close_or_equal(Q * jp.realize() * Q.invert(), N)
    return jp


# ---------------------------------------------------------------------------
# special-purpose diagonalizers


def diagonalize_involution(M: DRMatrix) -> DiagCertificate:
    """Certificate for M with M^2 = I over a ring of characteristic != 2;
    eigenvector columns come from the images of (I +/- M)/2."""
    ring = M.ring
    if ring.characteristic == 2:
        raise CharTwo("involutions are not diagonalizable in characteristic 2")
    I = M.identity_like()
    if not _close_or_equal(M * M, I):
        raise NotInvolution("matrix does not square to the identity")
    half = ring.from_int(2).inv()
    plus = (I + M).scale_left(half)
    minus = (I - M).scale_left(half)
    from .matrices import ColumnSpan
    cols = []
    diag = []
    for proj, val in ((plus, ring.one()), (minus, -ring.one())):
        span = ColumnSpan(ring)
        picked = []
        for j in range(M.cols):
            cand = proj.col_matrix(j)
            if not cand.is_zero() and span.add(cand):
                picked.append(cand)
        cols.extend(picked)
        diag.extend([val] * len(picked))
    P = hstack_columns(ring, cols)
    return DiagCertificate(P, diag, M)


def weighted_reversal(ring, n, w) -> DRMatrix:
    """Anti-diagonal matrix with top-right corner w, remaining
    anti-diagonal entries 1."""
    z, o = ring.zero(), ring.one()
    rows = [[z] * n for _ in range(n)]
    rows[0][n - 1] = w
    for i in range(1, n):
        rows[i][n - 1 - i] = o
    return DRMatrix.from_rows(ring, rows)


def reversal(ring, n) -> DRMatrix:
    return weighted_reversal(ring, n, ring.one())


def diagonalize_weighted_reversal(n: int, w, a) -> DiagCertificate:
    """Certificate for the weighted reversal with corner w = a^2, a a
    nonzero central element.  The corner pair carries eigenvalues +/- a;
    interior anti-diagonal pairs swap plainly and carry +/- 1."""
    ring = w.ring
    T = weighted_reversal(ring, n, w)
    if n == 1:
        return DiagCertificate(DRMatrix.identity(ring, 1), [w], T)
    if ring.characteristic == 2:
        raise CharTwo("weighted reversals are not diagonalizable in characteristic 2")
    if not a.is_central():
        raise NonCentralRoot("square root of the corner weight must be central")
    if a.is_zero() or not (a * a) == w:
        raise NonCentralRoot("corner weight is not the square of the given root")
    z, o = ring.zero(), ring.one()
    ainv = a.inv()

    def unit(i):
        return DRMatrix.column(ring, [o if r == i else z for r in range(n)])

    plus_cols, plus_diag, minus_cols, minus_diag = [], [], [], []
    for i in range(n // 2):
        j = n - 1 - i
        if i == 0:
            vp = unit(0).scale_right(a) + unit(j)
            vm = unit(0).scale_right(a) - unit(j)
            lam = a
        else:
            vp = unit(i) + unit(j)
            vm = unit(i) - unit(j)
            lam = o
        plus_cols.append(vp)
        plus_diag.append(lam)
        minus_cols.append(vm)
        minus_diag.append(-lam)
    if n % 2:
        plus_cols.append(unit(n // 2))
        plus_diag.append(o)
    P = hstack_columns(ring, plus_cols + minus_cols)
    return DiagCertificate(P, plus_diag + minus_diag, T)


def diagonalize_central_companion(C: CompanionMatrix, roots) -> DiagCertificate:
    """Certificate for a companion matrix with central coefficients whose
    defining polynomial has the given distinct central roots; the inverse
    conjugator is the Vandermonde with rows (1, r, ..., r^{n-1})."""
    ring = C.ring
    roots = list(roots)
    n = C.size
    if len(roots) != n:
        raise RootMismatch("need one root per coefficient")
    for c in C.coeffs:
        if not c.is_central():
            raise NonCentralRoot("companion coefficients must be central")
    for r in roots:
        if not r.is_central():
            raise NonCentralRoot("roots must be central")
    for i in range(n):
        for j in range(i + 1, n):
            if roots[i] == roots[j]:
                raise RepeatedRoot(f"root {roots[i]!r} repeats")
    # expand prod (z - r_i) and compare with z^n - a_{n-1} z^{n-1} - ... - a_0
    poly = [ring.one()]
    for r in roots:
        nxt = [ring.zero()] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - r * c
        poly = nxt
    for i in range(n):
        if not poly[i] == -C.coeffs[i]:
            raise RootMismatch("roots do not expand to the companion coefficients")
    vrows = []
    for r in roots:
        row = [ring.one()]
        for _ in range(n - 1):
            row.append(row[-1] * r)
        vrows.append(row)
    V = DRMatrix.from_rows(ring, vrows)
    P = V.invert()
    return DiagCertificate(P, roots, C.realize())


# ---------------------------------------------------------------------------
# brute-force diagonalizability oracle over the small fields


def _field_elements(ring):
    if ring not in (GF2, GF3, GF4):
        raise UnsupportedRing("oracle supports gf2, gf3 and gf4 only")
    return ring.all_elements()


def is_diagonalizable_field(A: DRMatrix) -> bool:
    """Rank characterization over a finite field: the eigenspace
    dimensions must sum to n."""
    elems = _field_elements(A.ring)
    n = A.rows
    total = 0
    for lam in elems:
        shifted = A - DRMatrix.diagonal(A.ring, [lam] * n)
        total += n - shifted.rank()
    return total == n


def all_matrices(ring, n):
    elems = _field_elements(ring)
    q = len(elems)
    if q ** (n * n) > 2 ** 22:
        raise TooLarge(f"{q}^{n * n} matrices is beyond the enumeration bound")
    total = q ** (n * n)
    for code in range(total):
        vals = []
        c = code
        for _ in range(n * n):
            vals.append(elems[c % q])
            c //= q
        yield DRMatrix(ring, n, n, vals)


def all_invertible(ring, n):
    for M in all_matrices(ring, n):
        if M.rank() == n:
            yield M


def is_diagonalizable_bruteforce(A: DRMatrix, method: str = "rank") -> bool:
    """Decide diagonalizability over gf2/gf3/gf4, n <= 4.

    method "rank" compares eigenspace dimensions; method "search"
    enumerates conjugators P and checks P^{-1} A P for diagonality.  The
    two must agree (tested); "search" is restricted to tiny sizes.
    """
    if A.ring not in (GF2, GF3, GF4):
        raise UnsupportedRing("oracle supports gf2, gf3 and gf4 only")
    if A.rows > 4:
        raise TooLarge("oracle bound is n <= 4")
    if method == "rank":
        return is_diagonalizable_field(A)
    if method == "search":
        for P in all_invertible(A.ring, A.rows):
            if (P.invert() * A * P).is_diagonal():
                return True
        return False
    raise ValueError(f"unknown method {method!r}")


def field_diagonalization_certificate(A: DRMatrix) -> DiagCertificate:
    """Search certificate for a diagonalizable small-field matrix."""
    for P in all_invertible(A.ring, A.rows):
        D = P.invert() * A * P
        if D.is_diagonal():
            return DiagCertificate(P, D.diagonal_entries(), A)
    raise UnsupportedRing("matrix is not diagonalizable")
