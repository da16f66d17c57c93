"""Dense matrices over a division ring.

Matrices act on column vectors; columns form a right vector space over
the (possibly noncommutative) coefficient ring.  Similarity is
A -> P A P^{-1}.  Row operations multiply rows on the left, which keeps
Gaussian elimination valid over every supported ring.  Left and right
scalar actions are distinct operations and are never interchanged.
"""

import math

from .errors import RingMismatch, ShapeMismatch, Singular
from .rings import HF, Ring

_FLOAT_PIVOT_EPS = 1e-12


class DRMatrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries")
        for e in entries:
            if e.ring is not ring:
                raise RingMismatch("entry ring does not match matrix ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(ring, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ShapeMismatch("ragged rows")
            flat.extend(row)
        return DRMatrix(ring, r, c, flat)

    @staticmethod
    def zeros(ring, rows, cols=None):
        cols = rows if cols is None else cols
        z = ring.zero()
        return DRMatrix(ring, rows, cols, [z] * (rows * cols))

    @staticmethod
    def identity(ring, n):
        z, o = ring.zero(), ring.one()
        return DRMatrix(ring, n, n, [o if i == j else z for i in range(n) for j in range(n)])

    @staticmethod
    def diagonal(ring, diag):
        diag = list(diag)
        n = len(diag)
        z = ring.zero()
        return DRMatrix(ring, n, n, [diag[i] if i == j else z
                                     for i in range(n) for j in range(n)])

    @staticmethod
    def block_diag(blocks):
        blocks = list(blocks)
        if not blocks:
            raise ShapeMismatch("empty block list")
        ring = blocks[0].ring
        for b in blocks:
            if b.ring is not ring:
                raise RingMismatch("blocks over different rings")
            if b.rows != b.cols:
                raise ShapeMismatch("blocks must be square")
        n = sum(b.rows for b in blocks)
        z = ring.zero()
        rows = [[z] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    rows[off + i][off + j] = b[i, j]
            off += b.rows
        return DRMatrix.from_rows(ring, rows)

    @staticmethod
    def column(ring, values):
        values = list(values)
        return DRMatrix(ring, len(values), 1, values)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col_matrix(self, j):
        return DRMatrix(self.ring, self.rows, 1,
                        [self[i, j] for i in range(self.rows)])

    def to_lists(self):
        return [self.row_list(i) for i in range(self.rows)]

    def identity_like(self):
        return DRMatrix.identity(self.ring, self.rows)

    def ring_zeros(self):
        return DRMatrix.zeros(self.ring, self.rows, self.cols)

    def submatrix(self, r0, r1, c0, c1):
        return DRMatrix.from_rows(self.ring,
                                  [[self[i, j] for j in range(c0, c1)]
                                   for i in range(r0, r1)])

    # -- arithmetic --------------------------------------------------------

    def _check(self, other, mul=False):
        if self.ring is not other.ring:
            raise RingMismatch("matrices over different rings")
        if mul:
            if self.cols != other.rows:
                raise ShapeMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        elif self.rows != other.rows or self.cols != other.cols:
            raise ShapeMismatch("shape mismatch")

    def __add__(self, other):
        self._check(other)
        return DRMatrix(self.ring, self.rows, self.cols,
                        [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return DRMatrix(self.ring, self.rows, self.cols,
                        [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return DRMatrix(self.ring, self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        self._check(other, mul=True)
        n, m, p = self.rows, self.cols, other.cols
        a = self.entries
        b = other.entries
        z = self.ring.zero()
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            for j in range(p):
                acc = z
                for k in range(m):
                    aik = arow[k]
                    if not aik.is_zero():
                        acc = acc + aik * b[k * p + j]
                out.append(acc)
        return DRMatrix(self.ring, n, p, out)

    def scale_left(self, s):
        return DRMatrix(self.ring, self.rows, self.cols, [s * a for a in self.entries])

    def scale_right(self, s):
        return DRMatrix(self.ring, self.rows, self.cols, [a * s for a in self.entries])

    def transpose(self):
        """Data transpose only; not a similarity invariant over
        noncommutative rings and never used as one."""
        return DRMatrix(self.ring, self.cols, self.rows,
                        [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __pow__(self, k):
        if self.rows != self.cols:
            raise ShapeMismatch("powers need a square matrix")
        r = self.identity_like()
        for _ in range(k):
            r = r * self
        return r

    def __eq__(self, other):
        return (isinstance(other, DRMatrix) and self.ring is other.ring
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ring.name, self.rows, self.cols, self.entries))

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def is_diagonal(self):
        return self.rows == self.cols and all(
            self[i, j].is_zero() for i in range(self.rows)
            for j in range(self.cols) if i != j)

    def is_identity(self):
        return self == self.identity_like()

    def diagonal_entries(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def __repr__(self):
        rows = "; ".join(", ".join(repr(e) for e in self.row_list(i))
                         for i in range(self.rows))
        return f"<{self.ring.name} {self.rows}x{self.cols} [{rows}]>"

    # -- norms (floating quaternions) ---------------------------------------

    def frob_norm(self):
        """Frobenius norm using the quaternion reduced norm per entry."""
        if self.ring is not HF:
            raise RingMismatch("frob_norm is for floating quaternion matrices")
        return math.sqrt(sum(e.norm() for e in self.entries))

    # -- elimination --------------------------------------------------------

    def _pivot_in_column(self, work, col, start):
        """Row index of the pivot to use, or None."""
        if self.ring is HF:
            best, best_n = None, _FLOAT_PIVOT_EPS
            for i in range(start, len(work)):
                n = work[i][col].norm()
                if n > best_n:
                    best, best_n = i, n
            return best
        for i in range(start, len(work)):
            if not work[i][col].is_zero():
                return i
        return None

    def rank(self):
        work = self.to_lists()
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = self._pivot_in_column(work, c, r)
            if p is None:
                continue
            work[r], work[p] = work[p], work[r]
            pinv = work[r][c].inv()
            work[r] = [pinv * e for e in work[r]]
            for i in range(r + 1, self.rows):
                f = work[i][c]
                if not f.is_zero():
                    work[i] = [a - f * b for a, b in zip(work[i], work[r])]
            r += 1
        return r

    def _reduced_echelon(self):
        """Gauss-Jordan form; returns (rows, pivot column list)."""
        work = self.to_lists()
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = self._pivot_in_column(work, c, r)
            if p is None:
                continue
            work[r], work[p] = work[p], work[r]
            pinv = work[r][c].inv()
            work[r] = [pinv * e for e in work[r]]
            for i in range(self.rows):
                if i != r:
                    f = work[i][c]
                    if not f.is_zero():
                        work[i] = [a - f * b for a, b in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
        return work, pivots

    def invert(self):
        if self.rows != self.cols:
            raise ShapeMismatch("only square matrices invert")
        n = self.rows
        ring = self.ring
        z, o = ring.zero(), ring.one()
        work = [self.row_list(i) + [o if i == j else z for j in range(n)]
                for i in range(n)]
        for c in range(n):
            p = None
            if ring is HF:
                best_n = _FLOAT_PIVOT_EPS
                for i in range(c, n):
                    nn = work[i][c].norm()
                    if nn > best_n:
                        p, best_n = i, nn
            else:
                for i in range(c, n):
                    if not work[i][c].is_zero():
                        p = i
                        break
            if p is None:
                raise Singular("matrix is singular")
            work[c], work[p] = work[p], work[c]
            pinv = work[c][c].inv()
            work[c] = [pinv * e for e in work[c]]
            for i in range(n):
                if i != c:
                    f = work[i][c]
                    if not f.is_zero():
                        work[i] = [a - f * b for a, b in zip(work[i], work[c])]
        return DRMatrix.from_rows(ring, [row[n:] for row in work])

    def solve(self, b: "DRMatrix") -> "DRMatrix":
        """Solve self @ X = b; requires a consistent system with full
        column rank (raises Singular otherwise)."""
        if b.ring is not self.ring:
            raise RingMismatch("matrices over different rings")
        if b.rows != self.rows:
            raise ShapeMismatch("right-hand side has wrong height")
        aug = DRMatrix(self.ring, self.rows, self.cols + b.cols,
                       [e for i in range(self.rows)
                        for e in self.row_list(i) + b.row_list(i)])
        work, pivots = aug._reduced_echelon()
        if any(p >= self.cols for p in pivots):
            raise Singular("inconsistent system")
        if len(pivots) < self.cols:
            raise Singular("system is underdetermined")
        z = self.ring.zero()
        out = [[z] * b.cols for _ in range(self.cols)]
        for r, c in enumerate(pivots):
            for j in range(b.cols):
                out[c][j] = work[r][self.cols + j]
        return DRMatrix.from_rows(self.ring, out)

    def kernel_basis(self):
        """Columns spanning the right kernel {x : Ax = 0}."""
        work, pivots = self._reduced_echelon()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        z, o = self.ring.zero(), self.ring.one()
        basis = []
        for fc in free:
            vec = [z] * self.cols
            vec[fc] = o
            for r, pc in enumerate(pivots):
                vec[pc] = -work[r][fc]
            basis.append(DRMatrix.column(self.ring, vec))
        return basis


def conjugate(P: DRMatrix, A: DRMatrix) -> DRMatrix:
    """P A P^{-1}."""
    return P * A * P.invert()


def mat_arith(op: str, A: DRMatrix, B=None) -> DRMatrix:
    """Dispatch form of the matrix arithmetic (tests/CLI convenience)."""
    if op == "add":
        return A + B
    if op == "mul":
        return A * B
    if op == "neg":
        return -A
    if op == "scale_left":
        return B.scale_left(A) if isinstance(B, DRMatrix) else A.scale_left(B)
    if op == "scale_right":
        return A.scale_right(B)
    raise ValueError(f"unknown op {op!r}")


def hstack_columns(ring, columns):
    """Matrix whose columns are the given n x 1 matrices."""
    n = columns[0].rows
    return DRMatrix(ring, n, len(columns),
                    [col[i, 0] for i in range(n) for col in columns])


class ColumnSpan:
    """Incrementally maintained right span of column vectors, kept in
    column-echelon form so membership tests cost one reduction."""

    def __init__(self, ring):
        self.ring = ring
        self.pivots = []  # (pivot row, reduced column as list), pivot entry 1

    def _reduce(self, col):
        v = [col[i, 0] for i in range(col.rows)] if isinstance(col, DRMatrix) else list(col)
        for p, pcol in self.pivots:
            f = v[p]
            if not f.is_zero():
                v = [a - b * f for a, b in zip(v, pcol)]
        return v

    def _pivot_of(self, v):
        if self.ring is HF:
            best, best_n = None, _FLOAT_PIVOT_EPS
            for i, e in enumerate(v):
                n = e.norm()
                if n > best_n:
                    best, best_n = i, n
            return best
        for i, e in enumerate(v):
            if not e.is_zero():
                return i
        return None

    def contains(self, col) -> bool:
        return self._pivot_of(self._reduce(col)) is None

    def add(self, col) -> bool:
        """Add the column if it enlarges the span; True when it did."""
        v = self._reduce(col)
        p = self._pivot_of(v)
        if p is None:
            return False
        f = v[p].inv()
        self.pivots.append((p, [a * f for a in v]))
        return True

    @property
    def dim(self):
        return len(self.pivots)


def random_matrix(ring, n, rng, cols=None, **kw):
    cols = n if cols is None else cols
    return DRMatrix(ring, n, cols,
                    [ring.random_element(rng, **kw) for _ in range(n * cols)])


def random_invertible(ring, n, rng, **kw):
    while True:
        M = random_matrix(ring, n, rng, **kw)
        try:
            M.invert()
            return M
        except Singular:
            continue


def random_nilpotent(ring, n, rng, **kw):
    """Random strictly lower triangular matrix conjugated by a random
    invertible one."""
    z = ring.zero()
    rows = [[ring.random_element(rng, **kw) if j < i else z for j in range(n)]
            for i in range(n)]
    N = DRMatrix.from_rows(ring, rows)
    P = random_invertible(ring, n, rng, **kw)
    return P * N * P.invert()
