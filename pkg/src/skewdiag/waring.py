"""Waring-type witnesses over the floating quaternions.

The multiplicative group of the quaternions is radicable via polar-form
roots, so a diagonalizable matrix P diag(d) P^{-1} is the k-th power of
P diag(d^(1/k)) P^{-1}.  Splitting a target into two diagonalizable
summands or factors therefore writes it as a sum or product of two k-th
powers; linear combinations absorb their coefficients into the diagonal
before the root is taken.
"""

from dataclasses import dataclass

from .certificates import WARING_TOL, WaringWitness
from .errors import IllConditioned, Singular, UnsupportedRing
from .matrices import DRMatrix
from .products import product_decompose
from .rings import HF, kth_root
from .sums import sum_decompose

_COND_LIMIT = 1e12
_MAX_RETRIES = 8


def _require_hf(A: DRMatrix):
    if A.ring is not HF:
        raise UnsupportedRing("Waring witnesses are computed over the floating quaternions")


def _condition(P: DRMatrix) -> float:
    return P.frob_norm() * P.invert().frob_norm()


def _power_base(cert, k: int, pre_scale=None) -> DRMatrix:
    """P diag(root) P^{-1} whose k-th power re-creates the certificate."""
    diag = cert.diag
    if pre_scale is not None:
        diag = [pre_scale * d for d in diag]
    roots = [kth_root(d, k) for d in diag]
    return cert.P * DRMatrix.diagonal(HF, roots) * cert.P.invert()


def _two_part_split(A: DRMatrix, mode: str, start: int):
    if mode == "sum":
        dec = sum_decompose(A, start=start)
    else:
        dec = product_decompose(A, strategy="char-ne2", start=start)
    if len(dec.parts) != 2:
        raise IllConditioned("expected a two-part split")
    for part in dec.parts:
        if _condition(part.P) > _COND_LIMIT:
            raise IllConditioned("conjugator condition estimate too large")
    return dec.parts


def _with_retries(builder, start: int):
    last = None
    for r in range(_MAX_RETRIES + 1):
        try:
            return builder(start + r), r
        except (IllConditioned, Singular, AssertionError, ZeroDivisionError,
                OverflowError) as exc:
            last = exc
    raise IllConditioned(f"no witness within {_MAX_RETRIES} retries: {last}")


def waring_two(A: DRMatrix, k: int, mode: str, start: int = 0) -> WaringWitness:
    """Sum or product of two k-th powers approximating A."""
    _require_hf(A)
    if mode not in ("sum", "product"):
        raise ValueError("mode must be sum or product")
    if k < 1:
        raise ValueError("k must be >= 1")
    tol = WARING_TOL * (1.0 + A.frob_norm())

    def build(offset):
        c1, c2 = _two_part_split(A, mode, offset)
        w = WaringWitness(mode, (k,), _power_base(c1, k), _power_base(c2, k), A)
        if w.residual() > tol:
            raise IllConditioned("witness residual too large")
        return w

    w, retries = _with_retries(build, start)
    return WaringWitness(w.mode, w.ks, w.X, w.Y, w.target, retries=retries)


def lincomb_two(A: DRMatrix, k1: int, k2: int, lam1, lam2, start: int = 0) -> WaringWitness:
    """lam1 X^k1 + lam2 X^k2 = A with arbitrary nonzero real scalars."""
    _require_hf(A)
    c1 = lam1 if not isinstance(lam1, (int, float)) else HF.from_float(lam1)
    c2 = lam2 if not isinstance(lam2, (int, float)) else HF.from_float(lam2)
    if c1.is_zero() or c2.is_zero():
        raise ValueError("scalars must be nonzero")
    if not (c1.is_central() and c2.is_central()):
        raise ValueError("scalars must be central (real)")
    tol = WARING_TOL * (1.0 + A.frob_norm())

    def build(offset):
        p1, p2 = _two_part_split(A, "sum", offset)
        X = _power_base(p1, k1, pre_scale=c1.inv())
        Y = _power_base(p2, k2, pre_scale=c2.inv())
        w = WaringWitness("lincomb", (k1, k2), X, Y, A, coeffs=(c1, c2))
        if w.residual() > tol:
            raise IllConditioned("witness residual too large")
        return w

    w, retries = _with_retries(build, start)
    return WaringWitness(w.mode, w.ks, w.X, w.Y, w.target, coeffs=w.coeffs,
                         retries=retries)


@dataclass(frozen=True)
class DiagonalPolynomial:
    """lam_1 x_1^{k_1} + ... + lam_m x_m^{k_m} in noncommuting variables,
    nonzero central coefficients, zero constant term."""

    ks: tuple
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        coeffs = tuple(c if not isinstance(c, (int, float)) else HF.from_float(c)
                       for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(self.ks) != len(self.coeffs) or len(self.ks) < 2:
            raise ValueError("need m >= 2 matched exponents and coefficients")
        if any(k < 1 for k in self.ks):
            raise ValueError("exponents must be >= 1")
        if any(c.is_zero() or not c.is_central() for c in self.coeffs):
            raise ValueError("coefficients must be nonzero central scalars")

    @property
    def m(self):
        return len(self.ks)

    def evaluate(self, mats):
        acc = DRMatrix.zeros(HF, mats[0].rows, mats[0].cols)
        for k, c, M in zip(self.ks, self.coeffs, mats):
            acc = acc + (M ** k).scale_left(c)
        return acc


def diagonal_preimage(f: DiagonalPolynomial, A: DRMatrix, start: int = 0):
    """(X_1, ..., X_m) with f(X_1, ..., X_m) = A; everything past the
    first two variables is set to zero."""
    _require_hf(A)
    w = lincomb_two(A, f.ks[0], f.ks[1], f.coeffs[0], f.coeffs[1], start=start)
    zero = DRMatrix.zeros(HF, A.rows, A.cols)
    return [w.X, w.Y] + [zero] * (f.m - 2)


def product_two_squares(A: DRMatrix, start: int = 0) -> WaringWitness:
    """A = X^2 Y^2 over the floating quaternions."""
    w = waring_two(A, 2, "product", start=start)
    return WaringWitness("squares", (2,), w.X, w.Y, A, retries=w.retries)
