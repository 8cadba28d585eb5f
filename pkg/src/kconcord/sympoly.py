"""Symmetric integer Laurent polynomials p(t) = a_0 + sum a_k (t^k + t^-k).

This is the shape of every Alexander polynomial after symmetrization,
and the input shape for cyclotomic evaluation and torsion coefficients.
Symmetry p(t) = p(1/t) is structural: only the coefficients a_0..a_g
are stored.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic, RootArg


class SymLaurentPoly:
    """a_0 + sum_{k>=1} a_k (t^k + t^{-k}) with integer a_k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = cs

    @staticmethod
    def one() -> "SymLaurentPoly":
        return SymLaurentPoly([1])

    @property
    def degree(self) -> int:
        """Largest k with a_k != 0 (0 for constants)."""
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == [other]
        if not isinstance(other, SymLaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __neg__(self):
        return SymLaurentPoly([-c for c in self.coeffs])

    def __mul__(self, other: "SymLaurentPoly") -> "SymLaurentPoly":
        # Multiply the one-sided expansions t^g p(t), then refold.
        a, b = self.as_poly(), other.as_poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        mid = self.degree + other.degree
        folded = [out[mid]] + [out[mid + k] for k in range(1, mid + 1)]
        return SymLaurentPoly(folded)

    def as_poly(self) -> list[int]:
        """Coefficients of t^g * p(t), low degree first (degree 2g)."""
        g = self.degree
        out = [0] * (2 * g + 1)
        out[g] = self.coeffs[0]
        for k in range(1, g + 1):
            out[g + k] += self.coeffs[k]
            out[g - k] += self.coeffs[k]
        return out

    def eval_int(self, t: int) -> Fraction:
        """Exact value at a nonzero rational point."""
        t = Fraction(t)
        if t == 0:
            raise ZeroDivisionError("Laurent polynomial at t = 0")
        val = Fraction(self.coeffs[0])
        for k in range(1, len(self.coeffs)):
            val += self.coeffs[k] * (t ** k + t ** -k)
        return val

    def eval_at_one(self) -> int:
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])

    def eval_at_minus_one(self) -> int:
        return self.coeffs[0] + 2 * sum(
            c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs) if k >= 1
        )

    def eval_root(self, omega: RootArg) -> Cyclotomic:
        """Exact value at the root of unity omega, in Q(zeta_d)."""
        d = omega.d
        val = Cyclotomic.rational(d, self.coeffs[0])
        for k in range(1, len(self.coeffs)):
            if self.coeffs[k]:
                zk = Cyclotomic.zeta_power(d, (omega.k * k) % d)
                zmk = Cyclotomic.zeta_power(d, (-omega.k * k) % d)
                val = val + (zk + zmk) * self.coeffs[k]
        return val

    def torsion_coefficient(self, j: int) -> int:
        """t_j = sum_{k>=1} k * a_{j+k}."""
        if j < 0:
            raise ValueError("torsion index must be >= 0")
        return sum(k * self.coeffs[j + k]
                   for k in range(1, len(self.coeffs) - j))

    def compact_form(self) -> list[int]:
        """Integer polynomial h(z) with p(t) = h(t + 1/t), low degree first.

        On the unit circle t = e^{i theta} this is p as a polynomial in
        z = 2 cos(theta), which is how unit-circle roots get isolated.
        """
        # t^k + t^-k = C_k(z) with C_0 = 2, C_1 = z, C_{k+1} = z*C_k - C_{k-1}.
        g = self.degree
        cheb = [[2], [0, 1]]
        while len(cheb) <= g:
            prev, cur = cheb[-2], cheb[-1]
            nxt = [0] + cur
            for i, p in enumerate(prev):
                nxt[i] -= p
            cheb.append(nxt)
        h = [0] * (g + 1)
        h[0] = self.coeffs[0]
        for k in range(1, g + 1):
            for i, coef in enumerate(cheb[k]):
                h[i] += self.coeffs[k] * coef
        return h

    def __repr__(self):
        terms = []
        for k in range(self.degree, 0, -1):
            c = self.coeffs[k]
            if c:
                terms.append(f"{c}*(t^{k}+t^-{k})" if k > 1 else f"{c}*(t+t^-1)")
        if self.coeffs[0] or not terms:
            terms.append(str(self.coeffs[0]))
        return " + ".join(terms).replace("+ -", "- ")

    def pretty(self) -> str:
        """One-sided display a_g t^g + ... + a_0 + ... + a_g t^-g."""
        g = self.degree
        parts = []
        for k in range(g, -g - 1, -1):
            c = self.coeffs[abs(k)]
            if c == 0:
                continue
            if k == 0:
                parts.append(f"{c:+d}")
            elif k == 1:
                parts.append(f"{c:+d}*t")
            elif k == -1:
                parts.append(f"{c:+d}*t^-1")
            else:
                parts.append(f"{c:+d}*t^{k}")
        return " ".join(parts) if parts else "0"
