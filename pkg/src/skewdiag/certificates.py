"""Certificates and their verification.

A DiagCertificate claims target = P diag(d) P^{-1}.  A Decomposition is
an ordered list of certificates whose reconstructions sum or multiply to
the target.  A WaringWitness claims the target is built from k-th powers
of two base matrices.  Verification recomputes everything from scratch
using only ring and matrix arithmetic, so the construction code cannot
certify itself.

Exact rings demand exact equality; floating quaternion matrices pass at
Frobenius residual <= MATRIX_TOL * (1 + |target|_F), and Waring
witnesses at WARING_TOL * (1 + |target|_F).
"""

from dataclasses import dataclass, field

from .errors import ShapeMismatch, Singular, SkewdiagError
from .matrices import DRMatrix
from .rings import HF

MATRIX_TOL = 1e-9
WARING_TOL = 1e-8


@dataclass(frozen=True)
class DiagCertificate:
    P: DRMatrix
    diag: tuple
    target: DRMatrix

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        if self.P.rows != self.P.cols or self.P.rows != len(self.diag):
            raise ShapeMismatch("conjugator and diagonal sizes differ")
        if self.target.rows != self.P.rows or self.target.cols != self.P.rows:
            raise ShapeMismatch("certificate target has wrong shape")

    def reconstruct(self) -> DRMatrix:
        D = DRMatrix.diagonal(self.P.ring, self.diag)
        return self.P * D * self.P.invert()


@dataclass(frozen=True)
class Decomposition:
    mode: str  # "sum" | "product"
    parts: tuple
    target: DRMatrix

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.mode not in ("sum", "product"):
            raise ValueError(f"bad decomposition mode {self.mode!r}")

    def part_targets(self):
        return [p.target for p in self.parts]

    def combine(self) -> DRMatrix:
        if self.mode == "sum":
            acc = DRMatrix.zeros(self.target.ring, self.target.rows, self.target.cols)
            for p in self.parts:
                acc = acc + p.target
        else:
            acc = DRMatrix.identity(self.target.ring, self.target.rows)
            for p in self.parts:
                acc = acc * p.target
        return acc


@dataclass(frozen=True)
class WaringWitness:
    mode: str           # "sum" | "product" | "lincomb" | "squares"
    ks: tuple           # one exponent (sum/product/squares) or two (lincomb)
    X: DRMatrix
    Y: DRMatrix
    target: DRMatrix
    coeffs: tuple = ()  # two central scalars, lincomb only
    retries: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(self.ks))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    def combine(self) -> DRMatrix:
        if self.mode == "lincomb":
            k1, k2 = self.ks
            return (self.X ** k1).scale_left(self.coeffs[0]) + \
                   (self.Y ** k2).scale_left(self.coeffs[1])
        if self.mode == "squares":
            return (self.X ** 2) * (self.Y ** 2)
        k = self.ks[0]
        if self.mode == "sum":
            return self.X ** k + self.Y ** k
        return (self.X ** k) * (self.Y ** k)

    def residual(self) -> float:
        return (self.combine() - self.target).frob_norm()


@dataclass
class VerifyReport:
    ok: bool
    kind: str
    part_count: int
    residuals: list = field(default_factory=list)
    failure: str = ""

    def to_json(self):
        return {
            "ok": self.ok,
            "kind": self.kind,
            "parts": self.part_count,
            "residuals": self.residuals,
            "failure": self.failure or None,
        }


def _matrices_close(A: DRMatrix, B: DRMatrix, tol: float):
    """(ok, residual) where residual is a float for hf and 0/1 for exact."""
    if A.ring is HF:
        r = (A - B).frob_norm()
        return r <= tol * (1.0 + B.frob_norm()), r
    ok = A == B
    return ok, 0.0 if ok else 1.0


def _verify_cert(cert: DiagCertificate) -> tuple[bool, float, str]:
    try:
        recon = cert.reconstruct()
    except Singular:
        return False, float("inf"), "singular-conjugator"
    ok, res = _matrices_close(recon, cert.target, MATRIX_TOL)
    return ok, res, "" if ok else "reconstruction-mismatch"


def verify_certificate(obj) -> VerifyReport:
    """Structured verification; never raises on a bad certificate."""
    try:
        if isinstance(obj, DiagCertificate):
            ok, res, why = _verify_cert(obj)
            return VerifyReport(ok, "certificate", 1, [res], why)
        if isinstance(obj, Decomposition):
            return _verify_decomposition(obj)
        if isinstance(obj, WaringWitness):
            return _verify_witness(obj)
    except SkewdiagError as exc:
        return VerifyReport(False, type(obj).__name__.lower(), 0, [], exc.code)
    raise TypeError(f"cannot verify {type(obj).__name__}")


def _verify_decomposition(dec: Decomposition) -> VerifyReport:
    residuals = []
    bound = 3 if dec.mode == "sum" else 4
    if not dec.parts:
        return VerifyReport(False, "decomposition", 0, [], "no-parts")
    if len(dec.parts) > bound:
        return VerifyReport(False, "decomposition", len(dec.parts), [], "part-count")
    for idx, part in enumerate(dec.parts):
        if part.target.ring is not dec.target.ring:
            return VerifyReport(False, "decomposition", len(dec.parts),
                                residuals, f"part-{idx}-ring-mismatch")
        ok, res, why = _verify_cert(part)
        residuals.append(res)
        if not ok:
            return VerifyReport(False, "decomposition", len(dec.parts),
                                residuals, f"part-{idx}-{why}")
    ok, res = _matrices_close(dec.combine(), dec.target, MATRIX_TOL)
    residuals.append(res)
    if not ok:
        return VerifyReport(False, "decomposition", len(dec.parts),
                            residuals, f"{dec.mode}-mismatch")
    return VerifyReport(True, "decomposition", len(dec.parts), residuals)


def _verify_witness(w: WaringWitness) -> VerifyReport:
    if w.target.ring is not HF:
        return VerifyReport(False, "witness", 2, [], "witness-ring-not-hf")
    if w.mode == "lincomb":
        if len(w.ks) != 2 or len(w.coeffs) != 2:
            return VerifyReport(False, "witness", 2, [], "lincomb-shape")
        if any(c.is_zero() or not c.is_central() for c in w.coeffs):
            return VerifyReport(False, "witness", 2, [], "lincomb-coeffs")
    r = w.residual()
    ok = r <= WARING_TOL * (1.0 + w.target.frob_norm())
    return VerifyReport(ok, "witness", 2, [r], "" if ok else "residual-too-large")


# -- certificate transport (similarity and direct sums) ---------------------


def conjugate_certificate(Q: DRMatrix, cert: DiagCertificate) -> DiagCertificate:
    """Transport a certificate for A to one for Q A Q^{-1}."""
    Qinv = Q.invert()
    return DiagCertificate(Q * cert.P, cert.diag, Q * cert.target * Qinv)


def block_diag_certificate(certs) -> DiagCertificate:
    """Direct sum of certificates is a certificate for the direct sum."""
    certs = list(certs)
    P = DRMatrix.block_diag([c.P for c in certs])
    diag = [d for c in certs for d in c.diag]
    target = DRMatrix.block_diag([c.target for c in certs])
    return DiagCertificate(P, diag, target)


def trivial_certificate(M: DRMatrix) -> DiagCertificate:
    """Certificate for a matrix that is already diagonal."""
    if not M.is_diagonal():
        raise ShapeMismatch("matrix is not diagonal")
    return DiagCertificate(M.identity_like(), M.diagonal_entries(), M)
