"""Exact arithmetic in cyclotomic fields Q(zeta_d).

Elements are dense coefficient vectors reduced modulo the d-th
cyclotomic polynomial Phi_d, which is computed once per order by
recursive polynomial division of x^d - 1.  The orders showing up in
concordance computations are tiny (d <= 100 or so), so density costs
nothing and keeps reduction canonical: equal elements have equal
coefficient vectors, making zero-tests trivial.

Real elements (fixed by zeta -> zeta^{-1}) get an exact sign routine:
interval evaluation at increasing precision, which terminates because
the canonical representation already told us the element is nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath


# ---------------------------------------------------------------------------
# Polynomial helpers (dense lists over Q, low degree first)
# ---------------------------------------------------------------------------

def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    _poly_trim(a)
    _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, y in enumerate(b):
            a[shift + i] -= f * y
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_gcd_ext(a, b):
    """Extended gcd in Q[x]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = [Fraction(x) for x in a], [Fraction(x) for x in b]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while _poly_trim(list(r1)):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    return r0, s0, t0


def _poly_sub(a, b):
    out = [Fraction(x) for x in a] + [Fraction(0)] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, low degree first."""
    if d < 1:
        raise ValueError("order must be positive")
    if d == 1:
        return (-1, 1)
    p = [Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            q, r = _poly_divmod(p, list(cyclotomic_polynomial(e)))
            assert not r
            p = q
    assert all(c.denominator == 1 for c in p)
    return tuple(int(c) for c in p)


def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


# ---------------------------------------------------------------------------
# Roots of unity as reduced fractions of a full turn
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootArg:
    """The root of unity exp(2*pi*i * k/d), stored with gcd(k, d) = 1."""

    k: int
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("denominator must be positive")
        k = self.k % self.d
        g = gcd(k, self.d)
        object.__setattr__(self, "k", k // g)
        object.__setattr__(self, "d", self.d // g)

    @property
    def is_one(self) -> bool:
        return self.k == 0

    def conjugate(self) -> "RootArg":
        return RootArg(-self.k, self.d)

    def fraction(self) -> Fraction:
        return Fraction(self.k, self.d)

    def __str__(self) -> str:
        return f"exp(2*pi*i*{self.k}/{self.d})"


# ---------------------------------------------------------------------------
# Field elements
# ---------------------------------------------------------------------------

class Cyclotomic:
    """An element of Q(zeta_d), reduced modulo Phi_d."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs):
        self.d = d
        phi = euler_phi(d)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            _, rem = _poly_divmod(cs, list(cyclotomic_polynomial(d)))
            cs = rem
        cs += [Fraction(0)] * (phi - len(cs))
        self.coeffs = cs[:phi]

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(d: int) -> "Cyclotomic":
        return Cyclotomic(d, [])

    @staticmethod
    def one(d: int) -> "Cyclotomic":
        return Cyclotomic(d, [1])

    @staticmethod
    def rational(d: int, value) -> "Cyclotomic":
        return Cyclotomic(d, [Fraction(value)])

    @staticmethod
    def zeta_power(d: int, j: int) -> "Cyclotomic":
        """zeta_d^j as an element of Q(zeta_d)."""
        j %= d
        return Cyclotomic(d, [0] * j + [1])

    # -- structure ----------------------------------------------------------

    def _check_order(self, other: "Cyclotomic"):
        if self.d != other.d:
            raise ValueError(f"mixed cyclotomic orders {self.d} and {other.d}")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(self.d, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, tuple(self.coeffs)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(self.d, other)
        self._check_order(other)
        return Cyclotomic(self.d, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.d, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(self.d, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.d, [Fraction(other) * a for a in self.coeffs])
        self._check_order(other)
        return Cyclotomic(self.d, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        g, s, _ = _poly_gcd_ext(self.coeffs, list(cyclotomic_polynomial(self.d)))
        # Phi_d is irreducible over Q, so the gcd is a nonzero constant.
        assert len(_poly_trim(list(g))) == 1
        c = g[0]
        return Cyclotomic(self.d, [x / c for x in s])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return self * (Fraction(1) / Fraction(other))
        self._check_order(other)
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic.one(self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, j: int) -> "Cyclotomic":
        """Apply zeta -> zeta^j (requires gcd(j, d) = 1)."""
        if gcd(j, self.d) != 1:
            raise ValueError("galois exponent must be a unit mod d")
        out = Cyclotomic.zero(self.d)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + Cyclotomic.zeta_power(self.d, i * j) * c
        return out

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.d - 1) if self.d > 1 else self

    def is_real(self) -> bool:
        return self == self.conjugate()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    # -- numerics ------------------------------------------------------------

    def interval(self, precision: int = 80):
        """Certified complex interval enclosure via mpmath.iv."""
        iv = mpmath.iv
        old = iv.prec
        try:
            iv.prec = precision
            two_pi = 2 * iv.pi
            re = iv.mpf(0)
            im = iv.mpf(0)
            for j, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                cf = iv.mpf(c.numerator) / iv.mpf(c.denominator)
                angle = two_pi * iv.mpf(j) / iv.mpf(self.d)
                re += cf * iv.cos(angle)
                im += cf * iv.sin(angle)
            return re, im
        finally:
            iv.prec = old

    def sign_of_real(self) -> int:
        """Exact sign of a real element (-1, 0, +1).

        Zero is decided by the canonical representation; otherwise the
        interval enclosure is refined until it excludes zero.
        """
        if not self.is_real():
            raise ValueError("sign requested for a non-real element")
        if self.is_zero():
            return 0
        precision = 80
        while True:
            re, _ = self.interval(precision)
            if re > 0:
                return 1
            if re < 0:
                return -1
            precision *= 2
            if precision > 100000:
                raise RuntimeError("sign refinement runaway (element nonzero?)")

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                if j == 0:
                    terms.append(str(c))
                else:
                    terms.append(f"{c}*z^{j}" if c != 1 else f"z^{j}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic(d={self.d}, {body})"


def zeta(d: int, j: int = 1) -> Cyclotomic:
    return Cyclotomic.zeta_power(d, j)
