"""Polynomials and rational functions over GF(2).

A polynomial sum a_i t^i is stored as the integer sum a_i 2^i, so
addition is xor and the zero polynomial is 0.  Rational functions are
reduced fractions of such integers; over GF(2) every nonzero polynomial
is monic, so gcd reduction alone makes the representation canonical and
equality structural.
"""

from dataclasses import dataclass


def pdeg(p: int) -> int:
    """Degree; -1 for the zero polynomial."""
    return p.bit_length() - 1


def pmul(a: int, b: int) -> int:
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def pdivmod(f: int, g: int) -> tuple[int, int]:
    if g == 0:
        raise ZeroDivisionError("division by zero polynomial")
    gl = g.bit_length()
    q = 0
    fl = f.bit_length()
    while fl >= gl:
        sh = fl - gl
        q |= 1 << sh
        f ^= g << sh
        fl = f.bit_length()
    return q, f


def pmod(f: int, g: int) -> int:
    if g == 0:
        raise ZeroDivisionError("division by zero polynomial")
    gl = g.bit_length()
    fl = f.bit_length()
    while fl >= gl:
        f ^= g << (fl - gl)
        fl = f.bit_length()
    return f


def pgcd(a: int, b: int) -> int:
    while b:
        bl = b.bit_length()
        fl = a.bit_length()
        while fl >= bl:
            a ^= b << (fl - bl)
            fl = a.bit_length()
        a, b = b, a
    return a


def ppow(p: int, k: int) -> int:
    r = 1
    for _ in range(k):
        r = pmul(r, p)
    return r


def bits_of(p: int) -> list[int]:
    """Coefficient list, low degree first; [0] for the zero polynomial."""
    if p == 0:
        return [0]
    return [(p >> i) & 1 for i in range(pdeg(p) + 1)]


def from_bits(bits) -> int:
    p = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("polynomial bits must be 0 or 1")
        p |= b << i
    return p


@dataclass(frozen=True)
class RatFun:
    """Reduced rational function num/den over GF(2)."""

    num: int
    den: int

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = self.num, self.den
        if num == 0:
            den = 1
        else:
            g = pgcd(num, den)
            if g != 1:
                num = pdivmod(num, g)[0]
                den = pdivmod(den, g)[0]
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __add__(self, other):
        return RatFun(pmul(self.num, other.den) ^ pmul(other.num, self.den),
                      pmul(self.den, other.den))

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        return RatFun(pmul(self.num, other.num), pmul(self.den, other.den))

    def __neg__(self):
        return self

    def inv(self):
        if self.num == 0:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def is_zero(self) -> bool:
        return self.num == 0

    def __repr__(self):
        if self.den == 1:
            return _poly_str(self.num)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"


RF_ZERO = RatFun(0, 1)
RF_ONE = RatFun(1, 1)
RF_T = RatFun(2, 1)


def _poly_str(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for i in range(pdeg(p), -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else ("t" if i == 1 else f"t^{i}"))
    return "+".join(terms)
