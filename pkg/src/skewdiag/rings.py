"""Division-ring elements.

Seven coefficient rings are supported:

  qq   rationals (exact)
  hq   quaternions with rational components (exact, noncommutative)
  hf   quaternions with float components (approximate, noncommutative)
  gf2, gf3, gf4   small finite fields (exact)
  asq  the characteristic-2 quaternion division ring over GF(2)(t)
       with basis 1, u, v, uv and relations u^2 = u + 1, v^2 = t,
       vu = (u + 1)v  (exact, noncommutative, infinite center)

Every element is immutable; arithmetic never reorders operands, so the
noncommutative rings behave faithfully.  ``asq`` is a division ring
because its norm form x^2 + xy + y^2 + t(z^2 + zs + s^2) is anisotropic
over GF(2)(t); see the README for the valuation argument.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CenterTooSmall, DivisionByZero, RingMismatch, UnsupportedRing
from .gf2x import RF_ONE, RF_T, RF_ZERO, RatFun, pmul


class Ring:
    """Singleton describing one coefficient ring."""

    name = ""
    characteristic = 0
    commutative = True
    center_size = None  # None means infinite
    exact = True

    @property
    def center_class(self) -> str:
        return {2: "two", 3: "three", 4: "four"}.get(self.center_size, "infinite")

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, k: int):
        raise NotImplementedError

    def central_candidates(self):
        """Deterministic stream of central elements used by central_sample."""
        raise NotImplementedError

    def noncentral_candidates(self):
        """Deterministic stream of elements outside the center (if any)."""
        return iter(())

    def random_element(self, rng, nonzero=False):
        raise NotImplementedError

    def __repr__(self):
        return f"<ring {self.name}>"


class _Element:
    """Shared element behaviour: tagging, subtraction, powers."""

    __slots__ = ()

    def _check(self, other):
        if self.ring is not other.ring:
            raise RingMismatch(f"{self.ring.name} vs {getattr(other.ring, 'name', other)}")

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, k: int):
        if k < 0:
            return (self ** (-k)).inv()
        r = self.ring.one()
        for _ in range(k):
            r = r * self
        return r

    def is_central(self) -> bool:
        raise NotImplementedError

    def is_zero(self) -> bool:
        raise NotImplementedError

    def inv(self):
        raise NotImplementedError


# ---------------------------------------------------------------------------
# rationals


@dataclass(frozen=True, repr=False)
class Rat(_Element):
    value: Fraction

    def __add__(self, other):
        self._check(other)
        return Rat(self.value + other.value)

    def __mul__(self, other):
        self._check(other)
        return Rat(self.value * other.value)

    def __neg__(self):
        return Rat(-self.value)

    def inv(self):
        if self.value == 0:
            raise DivisionByZero("inverse of 0")
        return Rat(1 / self.value)

    def is_zero(self):
        return self.value == 0

    def is_central(self):
        return True

    def __repr__(self):
        return str(self.value)


class QQRing(Ring):
    name = "qq"

    def zero(self):
        return Rat(Fraction(0))

    def one(self):
        return Rat(Fraction(1))

    def from_int(self, k):
        return Rat(Fraction(k))

    def central_candidates(self):
        k = 1
        while True:
            yield Rat(Fraction(k))
            k += 1

    def random_element(self, rng, nonzero=False):
        while True:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            if not (nonzero and x == 0):
                return Rat(x)


# ---------------------------------------------------------------------------
# quaternions (exact and floating)


def _quat_mul(a1, b1, c1, d1, a2, b2, c2, d2):
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


@dataclass(frozen=True, repr=False)
class Quat(_Element):
    """Exact quaternion a + bi + cj + dk over the rationals."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __add__(self, other):
        self._check(other)
        return Quat(self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    def __mul__(self, other):
        self._check(other)
        return Quat(*_quat_mul(self.a, self.b, self.c, self.d,
                               other.a, other.b, other.c, other.d))

    def __neg__(self):
        return Quat(-self.a, -self.b, -self.c, -self.d)

    def conj(self):
        return Quat(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        """Reduced norm a^2 + b^2 + c^2 + d^2 (a rational)."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inv(self):
        n = self.norm()
        if n == 0:
            raise DivisionByZero("inverse of 0")
        return Quat(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def is_zero(self):
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def is_central(self):
        return self.b == 0 and self.c == 0 and self.d == 0

    def __repr__(self):
        return f"({self.a},{self.b},{self.c},{self.d})"


class HQRing(Ring):
    name = "hq"
    commutative = False

    def zero(self):
        z = Fraction(0)
        return Quat(z, z, z, z)

    def one(self):
        z = Fraction(0)
        return Quat(Fraction(1), z, z, z)

    def from_int(self, k):
        z = Fraction(0)
        return Quat(Fraction(k), z, z, z)

    def quat(self, a, b, c, d):
        return Quat(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    def central_candidates(self):
        k = 1
        while True:
            yield self.from_int(k)
            k += 1

    def noncentral_candidates(self):
        z = Fraction(0)
        one = Fraction(1)
        yield Quat(z, one, z, z)
        yield Quat(z, z, one, z)
        yield Quat(z, z, z, one)
        k = 1
        while True:
            yield Quat(Fraction(k), one, z, z)
            k += 1

    def random_element(self, rng, nonzero=False):
        while True:
            q = Quat(*(Fraction(rng.randint(-5, 5)) for _ in range(4)))
            if not (nonzero and q.is_zero()):
                return q


@dataclass(frozen=True, repr=False)
class FQuat(_Element):
    """Floating-point quaternion."""

    a: float
    b: float
    c: float
    d: float

    def __add__(self, other):
        self._check(other)
        return FQuat(self.a + other.a, self.b + other.b,
                     self.c + other.c, self.d + other.d)

    def __mul__(self, other):
        self._check(other)
        return FQuat(*_quat_mul(self.a, self.b, self.c, self.d,
                                other.a, other.b, other.c, other.d))

    def __neg__(self):
        return FQuat(-self.a, -self.b, -self.c, -self.d)

    def conj(self):
        return FQuat(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inv(self):
        n = self.norm()
        if n == 0.0:
            raise DivisionByZero("inverse of 0")
        return FQuat(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def is_zero(self):
        return self.a == 0.0 and self.b == 0.0 and self.c == 0.0 and self.d == 0.0

    def is_central(self):
        return self.b == 0.0 and self.c == 0.0 and self.d == 0.0

    def __repr__(self):
        return f"({self.a:.6g},{self.b:.6g},{self.c:.6g},{self.d:.6g})"


class HFRing(Ring):
    name = "hf"
    commutative = False
    exact = False

    def zero(self):
        return FQuat(0.0, 0.0, 0.0, 0.0)

    def one(self):
        return FQuat(1.0, 0.0, 0.0, 0.0)

    def from_int(self, k):
        return FQuat(float(k), 0.0, 0.0, 0.0)

    def from_float(self, x):
        return FQuat(float(x), 0.0, 0.0, 0.0)

    def quat(self, a, b, c, d):
        return FQuat(float(a), float(b), float(c), float(d))

    def central_candidates(self):
        k = 1
        while True:
            yield self.from_int(k)
            k += 1

    def noncentral_candidates(self):
        yield FQuat(0.0, 1.0, 0.0, 0.0)
        yield FQuat(0.0, 0.0, 1.0, 0.0)
        yield FQuat(0.0, 0.0, 0.0, 1.0)

    def random_element(self, rng, nonzero=False):
        return FQuat(rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))


# ---------------------------------------------------------------------------
# small finite fields

_GF4_MUL = ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2))
_GF4_INV = (None, 1, 3, 2)


@dataclass(frozen=True, repr=False)
class GF(_Element):
    """Element of GF(2), GF(3) or GF(4); GF(4) residues are 2-bit
    polynomials b0 + b1*w with w^2 = w + 1."""

    ring: Ring
    v: int

    def __add__(self, other):
        self._check(other)
        q = self.ring.q
        if q == 4:
            return GF(self.ring, self.v ^ other.v)
        return GF(self.ring, (self.v + other.v) % q)

    def __mul__(self, other):
        self._check(other)
        q = self.ring.q
        if q == 4:
            return GF(self.ring, _GF4_MUL[self.v][other.v])
        return GF(self.ring, (self.v * other.v) % q)

    def __neg__(self):
        q = self.ring.q
        if q == 4:
            return self
        return GF(self.ring, (-self.v) % q)

    def inv(self):
        if self.v == 0:
            raise DivisionByZero("inverse of 0")
        q = self.ring.q
        if q == 4:
            return GF(self.ring, _GF4_INV[self.v])
        return GF(self.ring, pow(self.v, q - 2, q))

    def is_zero(self):
        return self.v == 0

    def is_central(self):
        return True

    def __repr__(self):
        return str(self.v)


class GFRing(Ring):
    def __init__(self, q):
        self.q = q
        self.name = f"gf{q}"
        self.characteristic = 2 if q in (2, 4) else q
        self.center_size = q

    def zero(self):
        return GF(self, 0)

    def one(self):
        return GF(self, 1)

    def from_int(self, k):
        # image of the integer k, i.e. k copies of 1 (k mod 2 for GF(4))
        return GF(self, k % self.characteristic if self.q == 4 else k % self.q)

    def element(self, v):
        if not 0 <= v < self.q:
            raise ValueError(f"residue {v} out of range for {self.name}")
        return GF(self, v)

    def all_elements(self):
        return [GF(self, v) for v in range(self.q)]

    def central_candidates(self):
        return iter(self.all_elements())

    def random_element(self, rng, nonzero=False):
        return GF(self, rng.randrange(1 if nonzero else 0, self.q))


# ---------------------------------------------------------------------------
# characteristic-2 quaternions over GF(2)(t)

# Products of basis elements 1, u, v, w (= uv), each given as coordinates
# in that basis.  Derived from u^2 = u + 1, v^2 = t, vu = (u + 1)v.
def _asq_tables():
    z, o, t = RF_ZERO, RF_ONE, RF_T
    return {
        ("u", "u"): (o, o, z, z),
        ("u", "v"): (z, z, z, o),
        ("u", "w"): (z, z, o, o),
        ("v", "u"): (z, z, o, o),
        ("v", "v"): (t, z, z, z),
        ("v", "w"): (t, t, z, z),
        ("w", "u"): (z, z, o, z),
        ("w", "v"): (z, t, z, z),
        ("w", "w"): (t, z, z, z),
    }


_ASQ_TAB = _asq_tables()
_ASQ_KEYS = ("u", "v", "w")


@dataclass(frozen=True, repr=False)
class ASQ4(_Element):
    """s + x*u + y*v + z*uv with rational-function components."""

    s: RatFun
    x: RatFun
    y: RatFun
    z: RatFun

    def comps(self):
        return (self.s, self.x, self.y, self.z)

    def __add__(self, other):
        self._check(other)
        return ASQ4(self.s + other.s, self.x + other.x,
                    self.y + other.y, self.z + other.z)

    def __mul__(self, other):
        self._check(other)
        a = self.comps()
        b = other.comps()
        out = [a[0] * b[0], RF_ZERO, RF_ZERO, RF_ZERO]
        # scalar column and row
        for i in range(1, 4):
            out[i] = a[0] * b[i] + a[i] * b[0]
        for i in range(1, 4):
            ai = a[i]
            if ai.is_zero():
                continue
            for j in range(1, 4):
                bj = b[j]
                if bj.is_zero():
                    continue
                coeff = ai * bj
                prod = _ASQ_TAB[(_ASQ_KEYS[i - 1], _ASQ_KEYS[j - 1])]
                for k in range(4):
                    if not prod[k].is_zero():
                        out[k] = out[k] + coeff * prod[k]
        return ASQ4(*out)

    def __neg__(self):
        return self  # characteristic 2

    def conj(self):
        """Canonical involution: u -> u+1, v -> v, uv -> uv."""
        return ASQ4(self.s + self.x, self.x, self.y, self.z)

    def norm(self):
        """Reduced norm x0^2 + x0*x1 + x1^2 + t(x2^2 + x2*x3 + x3^2)."""
        s, x, y, z = self.comps()
        return s * s + s * x + x * x + RF_T * (y * y + y * z + z * z)

    def inv(self):
        n = self.norm()
        if n.is_zero():
            raise DivisionByZero("inverse of 0")
        ninv = n.inv()
        c = self.conj()
        return ASQ4(c.s * ninv, c.x * ninv, c.y * ninv, c.z * ninv)

    def is_zero(self):
        return all(c.is_zero() for c in self.comps())

    def is_central(self):
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def __repr__(self):
        names = ("", "u", "v", "uv")
        parts = [f"({c}){n}" if n else f"{c}"
                 for c, n in zip(self.comps(), names) if not c.is_zero()]
        return "+".join(parts) if parts else "0"


class ASQRing(Ring):
    name = "asq"
    characteristic = 2
    commutative = False

    def zero(self):
        return ASQ4(RF_ZERO, RF_ZERO, RF_ZERO, RF_ZERO)

    def one(self):
        return ASQ4(RF_ONE, RF_ZERO, RF_ZERO, RF_ZERO)

    def from_int(self, k):
        return ASQ4(RatFun(k % 2, 1), RF_ZERO, RF_ZERO, RF_ZERO)

    def scalar(self, r: RatFun):
        return ASQ4(r, RF_ZERO, RF_ZERO, RF_ZERO)

    def gen_u(self):
        return ASQ4(RF_ZERO, RF_ONE, RF_ZERO, RF_ZERO)

    def gen_v(self):
        return ASQ4(RF_ZERO, RF_ZERO, RF_ONE, RF_ZERO)

    def gen_t(self):
        return ASQ4(RF_T, RF_ZERO, RF_ZERO, RF_ZERO)

    def central_candidates(self):
        # t, t+1, t^2, t^2+1, ... : all polynomials of degree >= 1 in order
        p = 2
        while True:
            yield self.scalar(RatFun(p, 1))
            p += 1

    def noncentral_candidates(self):
        yield self.gen_u()
        yield self.gen_v()
        yield ASQ4(RF_ZERO, RF_ONE, RF_ONE, RF_ZERO)
        yield ASQ4(RF_ZERO, RF_ZERO, RF_ZERO, RF_ONE)

    def random_ratfun(self, rng, degree=3):
        num = rng.randrange(0, 1 << (degree + 1))
        den = rng.randrange(1, 1 << max(1, degree))
        return RatFun(num, den)

    def random_element(self, rng, nonzero=False, degree=3):
        while True:
            e = ASQ4(*(self.random_ratfun(rng, degree) for _ in range(4)))
            if not (nonzero and e.is_zero()):
                return e


QQ = QQRing()
HQ = HQRing()
HF = HFRing()
GF2 = GFRing(2)
GF3 = GFRing(3)
GF4 = GFRing(4)
ASQ = ASQRing()

Rat.ring = QQ
Quat.ring = HQ
FQuat.ring = HF
ASQ4.ring = ASQ

RINGS = {r.name: r for r in (QQ, HQ, HF, GF2, GF3, GF4, ASQ)}


def ring_by_name(name: str) -> Ring:
    try:
        return RINGS[name.lower()]
    except KeyError:
        raise UnsupportedRing(f"unknown ring tag {name!r}") from None


# ---------------------------------------------------------------------------
# operations on elements


def ring_arith(op: str, x, y=None):
    """Dispatch form of the element arithmetic (mainly for tests/CLI)."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    raise ValueError(f"unknown op {op!r}")


def is_central(x) -> bool:
    return x.is_central()


def central_sample(ring: Ring, count: int, forbidden=(), start: int = 0):
    """Deterministically pick ``count`` distinct central elements avoiding
    ``forbidden``; ``start`` skips that many admissible candidates first
    (used for seeded retries)."""
    forbidden = list(forbidden)
    out = []
    skipped = 0
    limit = (ring.center_size or 0) + count + start + 64
    for i, cand in enumerate(ring.central_candidates()):
        if ring.center_size is None and i > 4 * limit:
            break
        if any(cand == f for f in forbidden) or any(cand == o for o in out):
            continue
        if skipped < start:
            skipped += 1
            continue
        out.append(cand)
        if len(out) == count:
            return out
        continue
    raise CenterTooSmall(
        f"center of {ring.name} cannot supply {count} elements outside the forbidden set")


def noncentral_sample(ring: Ring, forbidden=()):
    """First deterministic non-central element avoiding ``forbidden``."""
    for cand in ring.noncentral_candidates():
        if not any(cand == f for f in forbidden):
            return cand
    raise CenterTooSmall(f"no usable element of {ring.name} outside the forbidden set")


def kth_root(q, k: int):
    """k-th root of a floating quaternion via the polar form.

    q = |q| (cos θ + n sin θ) maps to |q|^(1/k) (cos θ/k + n sin θ/k);
    for real q < 0 the axis n = i is used by convention.
    """
    if q.ring is not HF:
        raise UnsupportedRing("kth_root is defined for the floating quaternions")
    if k < 1:
        raise ValueError("k must be >= 1")
    imn = math.sqrt(q.b * q.b + q.c * q.c + q.d * q.d)
    r = math.sqrt(q.a * q.a + imn * imn)
    if r == 0.0:
        return HF.zero()
    if imn == 0.0:
        axis = (1.0, 0.0, 0.0)
    else:
        axis = (q.b / imn, q.c / imn, q.d / imn)
    theta = math.atan2(imn, q.a)
    rr = r ** (1.0 / k)
    phi = theta / k
    s = rr * math.sin(phi)
    return FQuat(rr * math.cos(phi), axis[0] * s, axis[1] * s, axis[2] * s)


# ---------------------------------------------------------------------------
# central polynomials


class CentralPolynomial:
    """Polynomial in one variable whose coefficients are central elements
    of the ambient ring; the workhorse behind the Sylvester solver."""

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) < 2:
            raise ValueError("degree must be at least 1")
        if coeffs[-1].is_zero():
            raise ValueError("leading coefficient must be nonzero")
        for c in coeffs:
            if not c.is_central():
                raise NonCentralCoefficient(f"coefficient {c!r} is not central")
        self.ring = coeffs[0].ring
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def eval_scalar(self, a):
        acc = self.ring.zero()
        p = self.ring.one()
        for c in self.coeffs:
            acc = acc + p * c
            p = p * a
        return acc

    def eval_matrix(self, A):
        acc = A.ring_zeros()
        p = A.identity_like()
        for c in self.coeffs:
            acc = acc + p.scale_right(c)
            p = p * A
        return acc

    def __repr__(self):
        return "poly[" + ", ".join(repr(c) for c in self.coeffs) + "]"


class NonCentralCoefficient(UnsupportedRing):
    code = "non-central-coefficient"
