"""Dense polynomials in a central variable over a division ring.

The variable commutes with all coefficients, so D[z] is left and right
Euclidean; both one-sided divisions are provided.  Coefficients are
stored low degree first with no trailing zeros.
"""

from .rings import Ring


class ZPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @staticmethod
    def zero(ring):
        return ZPoly(ring, [])

    @staticmethod
    def const(c):
        return ZPoly(c.ring, [c])

    @staticmethod
    def monomial(ring, k, c=None):
        c = ring.one() if c is None else c
        return ZPoly(ring, [ring.zero()] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        return len(self.coeffs) == 1

    def lead(self):
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.ring.zero()

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(self.ring, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return ZPoly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return ZPoly.zero(self.ring)
        z = self.ring.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return ZPoly(self.ring, out)

    def scale_left(self, c):
        return ZPoly(self.ring, [c * a for a in self.coeffs])

    def scale_right(self, c):
        return ZPoly(self.ring, [a * c for a in self.coeffs])

    def shift(self, k):
        if self.is_zero():
            return self
        return ZPoly(self.ring, [self.ring.zero()] * k + list(self.coeffs))

    def divmod_left(self, g):
        """q, r with self = q*g + r and deg r < deg g."""
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ginv = g.lead().inv()
        q = ZPoly.zero(self.ring)
        r = self
        while not r.is_zero() and r.degree >= g.degree:
            d = r.degree - g.degree
            qd = r.lead() * ginv
            step = ZPoly.monomial(self.ring, d, qd)
            q = q + step
            r = r - step * g
        return q, r

    def divmod_right(self, g):
        """q, r with self = g*q + r and deg r < deg g."""
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ginv = g.lead().inv()
        q = ZPoly.zero(self.ring)
        r = self
        while not r.is_zero() and r.degree >= g.degree:
            d = r.degree - g.degree
            qd = ginv * r.lead()
            step = ZPoly.monomial(self.ring, d, qd)
            q = q + step
            r = r - g * step
        return q, r

    def __eq__(self, other):
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs \
            and self.ring is other.ring

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"({c!r})z^{i}" for i, c in enumerate(self.coeffs)
                          if not c.is_zero())
