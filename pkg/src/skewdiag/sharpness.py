"""Exhaustive width tables over GF(2), GF(3), GF(4).

Matrices are packed as tuples of residues and expanded breadth-first
from the set of diagonalizable matrices: layer w holds everything whose
minimal representation needs w summands (or factors).  Width 0 is the
empty combination, i.e. the zero matrix for sums and the identity for
products.  The layer expansion is deterministic, and the frontier can be
sharded across processes.
"""

import csv
import io as _io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import TooLarge, UnsupportedRing
from .matrices import DRMatrix
from .rings import GF2, GF3, GF4, GFRing

_GF4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))


class _FieldOps:
    """Residue arithmetic tables for one small field."""

    def __init__(self, q):
        self.q = q
        if q == 4:
            self.add = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
            self.mul = _GF4_MUL
        else:
            self.add = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
            self.mul = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
        self.neg = tuple(a ^ 0 if q == 4 else (-a) % q for a in range(q))
        self.inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mul[a][b] == 1:
                    self.inv[a] = b

    def mat_mul(self, a, b, n):
        mul, add = self.mul, self.add
        out = []
        for i in range(n):
            row = a[i * n:(i + 1) * n]
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = add[acc][mul[row[k]][b[k * n + j]]]
                out.append(acc)
        return tuple(out)

    def mat_add(self, a, b):
        add = self.add
        return tuple(add[x][y] for x, y in zip(a, b))

    def rank(self, m, n):
        rows = [list(m[i * n:(i + 1) * n]) for i in range(n)]
        add, mul, neg, inv = self.add, self.mul, self.neg, self.inv
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            f = inv[rows[r][c]]
            rows[r] = [mul[f][x] for x in rows[r]]
            for i in range(r + 1, n):
                g = rows[i][c]
                if g:
                    rows[i] = [add[x][neg[mul[g][y]]] for x, y in zip(rows[i], rows[r])]
            r += 1
        return r


def _ring_q(ring) -> int:
    if not isinstance(ring, GFRing):
        raise UnsupportedRing("width tables run over gf2, gf3 and gf4")
    return ring.q


def _check_size(q, n):
    if q ** (n * n) > 2 ** 32:
        raise TooLarge(f"{q}^{n * n} matrices exceed the enumeration bound")


def _all_packed(q, n):
    total = q ** (n * n)
    for code in range(total):
        vals = []
        c = code
        for _ in range(n * n):
            vals.append(c % q)
            c //= q
        yield tuple(vals)


def _identity_packed(n):
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def _is_diagonalizable_packed(ops, m, n):
    total = 0
    for lam in range(ops.q):
        shifted = list(m)
        for i in range(n):
            shifted[i * n + i] = ops.add[shifted[i * n + i]][ops.neg[lam]]
        total += n - ops.rank(tuple(shifted), n)
        if total > n:
            return False
    return total == n


def diagonalizable_packed(ring, n):
    """Sorted packed tuples of every diagonalizable matrix."""
    q = _ring_q(ring)
    _check_size(q, n)
    ops = _FieldOps(q)
    return sorted(m for m in _all_packed(q, n) if _is_diagonalizable_packed(ops, m, n))


def packed_to_matrix(ring, m, n) -> DRMatrix:
    return DRMatrix(ring, n, n, [ring.element(v) for v in m])


def matrix_to_packed(M: DRMatrix):
    return tuple(e.v for e in M.entries)


def enumerate_diagonalizable(ring, n):
    """The exact set {P diag P^{-1}} as matrices (small sizes only)."""
    q = _ring_q(ring)
    if q ** (n * n) > 2 ** 22:
        raise TooLarge("materializing matrices is limited to small spaces")
    return [packed_to_matrix(ring, m, n) for m in diagonalizable_packed(ring, n)]


@dataclass
class WidthTable:
    ring: str
    n: int
    mode: str
    histogram: dict
    unreachable: int
    witnesses: dict = field(default_factory=dict)

    def max_width(self):
        return max(self.histogram) if self.histogram else 0

    def width_of(self, packed):
        return self._widths.get(packed)

    def to_json(self):
        return {
            "ring": self.ring,
            "n": self.n,
            "mode": self.mode,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "unreachable": self.unreachable,
            "witnesses": {str(k): list(v) for k, v in sorted(self.witnesses.items())},
        }

    def to_csv(self):
        buf = _io.StringIO()
        w = csv.writer(buf)
        w.writerow(["ring", "n", "mode", "width", "count"])
        for k in sorted(self.histogram):
            w.writerow([self.ring, self.n, self.mode, k, self.histogram[k]])
        w.writerow([self.ring, self.n, self.mode, "unreachable", self.unreachable])
        return buf.getvalue()


_WORKER_STATE = {}


def _expand_chunk(args):
    q, n, mode, chunk, gens = args
    ops = _FieldOps(q)
    out = set()
    if mode == "sum":
        for m in chunk:
            for g in gens:
                out.add(ops.mat_add(m, g))
    else:
        for m in chunk:
            for g in gens:
                out.add(ops.mat_mul(m, g, n))
    return out


def width_table(ring, n, mode, jobs: int = 1) -> WidthTable:
    """Exhaustive minimal widths by breadth-first closure."""
    if mode not in ("sum", "product"):
        raise ValueError("mode must be sum or product")
    q = _ring_q(ring)
    _check_size(q, n)
    ops = _FieldOps(q)
    gens = diagonalizable_packed(ring, n)
    seed = tuple([0] * (n * n)) if mode == "sum" else _identity_packed(n)
    widths = {seed: 0}
    witnesses = {0: seed}
    frontier = [seed]
    w = 0
    while frontier:
        w += 1
        if jobs > 1 and len(frontier) > 256:
            chunks = [frontier[i::jobs] for i in range(jobs)]
            produced = set()
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for part in pool.map(_expand_chunk,
                                     [(q, n, mode, c, gens) for c in chunks if c]):
                    produced |= part
        else:
            produced = _expand_chunk((q, n, mode, frontier, gens))
        fresh = sorted(m for m in produced if m not in widths)
        for m in fresh:
            widths[m] = w
        if fresh:
            witnesses[w] = fresh[0]
        frontier = fresh
    histogram = dict(Counter(widths.values()))
    table = WidthTable(ring.name, n, mode, histogram,
                       q ** (n * n) - len(widths),
                       {k: v for k, v in witnesses.items()})
    table._widths = widths
    return table
