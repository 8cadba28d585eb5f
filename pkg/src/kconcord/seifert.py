"""Knot invariants from a Seifert matrix, in exact arithmetic.

A Seifert matrix V is an integer 2g x 2g matrix with det(V - V^T) = 1.
From it we compute:

* the symmetrized Alexander polynomial Delta(t) = t^-g det(V - t V^T),
  which automatically satisfies Delta(1/t) = Delta(t) and Delta(1) = 1;
* the Levine-Tristram signature sigma(omega) of the Hermitian form
  (1-omega)V + (1-conj(omega))V^T at roots of unity, diagonalized
  exactly over Q(zeta);
* the full signature step function on the circle, with jump locations
  isolated as real algebraic numbers in z = 2 cos(theta);
* the normalized integral rho_0 of the signature function, as an exact
  rational when every jump is at a cyclotomic angle and as a certified
  interval otherwise;
* the Arf invariant and the torsion coefficients of Delta.

At a root of the Alexander polynomial the signature is defined as the
average of its two one-sided limits; jumps of the step function are
even, so these averages are integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from .cyclotomic import Cyclotomic, RootArg
from .intmat import block_diagonal, determinant, dims, transpose
from .realroots import (isolate_roots, poly_eval, refine_root,
                        simplest_between, squarefree_part)
from .sympoly import SymLaurentPoly


class NotASeifertMatrixError(ValueError):
    """det(V - V^T) != 1, so V cannot be a Seifert matrix."""


def validate_seifert(v) -> None:
    r, c = dims(v)
    if r != c:
        raise NotASeifertMatrixError("Seifert matrix must be square")
    anti = [[v[i][j] - v[j][i] for j in range(c)] for i in range(r)]
    if determinant(anti) != 1:
        raise NotASeifertMatrixError("det(V - V^T) must be 1")


def seifert_sum(v1, v2):
    """Block sum of Seifert matrices (connected sum of knots)."""
    return block_diagonal(v1, v2)


# ---------------------------------------------------------------------------
# Alexander polynomial
# ---------------------------------------------------------------------------

def alexander(v) -> SymLaurentPoly:
    """Symmetrized Alexander polynomial t^-g det(V - t V^T).

    det(V - t V^T) is palindromic of even degree whenever V is a
    Seifert matrix, and its value at t = 1 is det(V - V^T) = 1, so no
    sign or shift correction is ever needed.  Computed by evaluation at
    2g + 1 integer points and exact Lagrange interpolation.
    """
    validate_seifert(v)
    n, _ = dims(v)
    g = n // 2
    if n == 0:
        return SymLaurentPoly([1])
    vt = transpose(v)
    points = list(range(-(g), g + 1))
    values = []
    for t in points:
        m = [[v[i][j] - t * vt[i][j] for j in range(n)] for i in range(n)]
        values.append(Fraction(determinant(m)))
    coeffs = _interpolate(points, values, n)
    poly = [int(c) for c in coeffs]
    # Fold around the middle coefficient.
    folded = [poly[g]] + [poly[g + k] for k in range(1, g + 1)]
    mirror = [poly[g]] + [poly[g - k] for k in range(1, g + 1)]
    if folded != mirror:
        raise AssertionError("Alexander polynomial failed to be palindromic")
    delta = SymLaurentPoly(folded)
    if delta.eval_at_one() != 1:
        raise AssertionError("Alexander normalization Delta(1) = 1 failed")
    return delta


def _interpolate(xs, ys, degree):
    """Exact coefficients (low first) of the degree-`degree` interpolant."""
    n = degree + 1
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        # Lagrange basis polynomial for node i.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis[:]
            low = [-xj * c for c in basis[1:]] + [Fraction(0)]
            basis = [a + b for a, b in zip(basis, low + [Fraction(0)] * (len(basis) - len(low)))]
            denom *= xi - xj
        for k in range(min(len(basis), n)):
            coeffs[k] += yi * basis[k] / denom
    return coeffs


def arf(v) -> int:
    """Arf invariant: 0 iff Delta(-1) = +-1 (mod 8)."""
    delta = alexander(v)
    return 0 if abs(delta.eval_at_minus_one()) % 8 in (1, 7) else 1


def torsion_coefficients(delta: SymLaurentPoly, j: int) -> int:
    return delta.torsion_coefficient(j)


# ---------------------------------------------------------------------------
# Levine-Tristram signatures
# ---------------------------------------------------------------------------

def _hermitian_form(v, omega: RootArg):
    """(1-omega)V + (1-conj(omega))V^T as Cyclotomic entries in Q(zeta_d)."""
    n, _ = dims(v)
    d = omega.d
    one = Cyclotomic.one(d)
    w = Cyclotomic.zeta_power(d, omega.k)
    wbar = Cyclotomic.zeta_power(d, (-omega.k) % d)
    a = one - w
    abar = one - wbar
    return [[a * v[i][j] + abar * v[j][i] for j in range(n)] for i in range(n)]


def _hermitian_signature(h) -> tuple[int, int, int]:
    """Inertia of a Hermitian matrix over a cyclotomic field.

    Congruence diagonalization: pivot on nonzero (real) diagonal
    entries; when all live diagonal entries vanish, the basis change
    e_i -> e_i + conj(H_ij) e_j manufactures the positive entry
    2|H_ij|^2.  Pivot signs come from the exact cyclotomic sign test.
    """
    n = len(h)
    if n == 0:
        return (0, 0, 0)
    h = [row[:] for row in h]
    live = list(range(n))
    n_plus = n_minus = n_zero = 0

    def add_multiple(i, j, lam):
        # Basis change e_i -> e_i + lam * e_j.
        lam_bar = lam.conjugate()
        h[i] = [x + lam_bar * y for x, y in zip(h[i], h[j])]
        for r in range(n):
            h[r][i] = h[r][i] + lam * h[r][j]

    while live:
        pivot = next((i for i in live if not h[i][i].is_zero()), None)
        if pivot is None:
            pair = next(((i, j) for i in live for j in live
                         if i != j and not h[i][j].is_zero()), None)
            if pair is None:
                n_zero += len(live)
                break
            add_multiple(pair[0], pair[1], h[pair[0]][pair[1]].conjugate())
            pivot = pair[0]
        p = h[pivot][pivot]
        if p.sign_of_real() > 0:
            n_plus += 1
        else:
            n_minus += 1
        live.remove(pivot)
        for k in live:
            if not h[k][pivot].is_zero():
                # e_k -> e_k + nu e_pivot with nu = -H[pivot][k]/p kills
                # the (k, pivot) and (pivot, k) entries.
                add_multiple(k, pivot, -(h[pivot][k] / p))
    return n_plus, n_zero, n_minus


def signature_at(v, omega: RootArg) -> int:
    """Levine-Tristram signature at a root of unity.

    At a root of the Alexander polynomial this returns the average of
    the two one-sided limits (always an integer, since jumps are even).
    omega = 1 is rejected: the form degenerates to zero there and the
    function value is fixed to 0 by convention.
    """
    validate_seifert(v)
    if omega.is_one:
        raise ValueError("signature at omega = 1 is not defined by the form")
    n, _ = dims(v)
    if n == 0:
        return 0
    delta = alexander(v)
    if delta.eval_root(omega).is_zero():
        return signature_function(v).value_at(omega)
    p, _, q = _hermitian_signature(_hermitian_form(v, omega))
    return p - q


def tristram_signatures(v, p: int, r: int = 1) -> list[int]:
    """sigma(omega^j) for omega = exp(2 pi i / p^r), j = 1..p^r - 1."""
    q = p ** r
    if q < 2:
        raise ValueError("prime power must be at least 2")
    return [signature_at(v, RootArg(j, q)) for j in range(1, q)]


# ---------------------------------------------------------------------------
# The full signature step function
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JumpPoint:
    """A signature jump at angle theta in (0, pi].

    `turn` is the exact fraction theta/(2 pi) when the jump sits at a
    root of unity (a cyclotomic factor of Delta); otherwise the angle
    is described algebraically by an integer polynomial vanishing at
    z = 2 cos(theta) together with an isolating rational interval.
    """

    turn: RootArg | None
    z_poly: tuple[int, ...]
    z_interval: tuple[Fraction, Fraction]
    value: int

    @property
    def is_cyclotomic(self) -> bool:
        return self.turn is not None


@dataclass
class SignatureFunction:
    """Step-function description of sigma on the upper semicircle.

    plateaus[k] is the constant value between jumps[k-1] and jumps[k]
    (with theta = 0 and theta = pi as outer fenceposts); by evenness
    sigma(conj(omega)) = sigma(omega) this determines the whole circle.
    The value at omega = 1 is 0.
    """

    jumps: list[JumpPoint]
    plateaus: list[int]

    def is_zero(self) -> bool:
        return all(p == 0 for p in self.plateaus) and all(j.value == 0 for j in self.jumps)

    def values_taken(self) -> set[int]:
        vals = set(self.plateaus)
        vals.update(j.value for j in self.jumps)
        return vals

    def value_at(self, omega: RootArg) -> int:
        """Evaluate at any root of unity (averaged value on jumps)."""
        if omega.is_one:
            return 0
        # Fold to the upper semicircle.
        turn = omega.fraction()
        if turn > Fraction(1, 2):
            omega = omega.conjugate()
            turn = omega.fraction()
        for jump in self.jumps:
            if jump.turn is not None and jump.turn == omega:
                return jump.value
        # Locate the plateau: count jumps with angle strictly below omega;
        # comparisons happen in z = 2cos space, where angle order reverses.
        z_omega = Cyclotomic.zeta_power(omega.d, omega.k)
        z_omega = z_omega + z_omega.conjugate()
        idx = sum(1 for jump in self.jumps if _angle_above(jump, z_omega))
        return self.plateaus[idx]

    def rho0(self, width: Fraction = Fraction(1, 10 ** 10)) -> "CertifiedInterval":
        """Normalized integral over the circle (total measure 1).

        Exact rational when all jumps are cyclotomic; otherwise the
        jump angles are enclosed via interval arccos until the result
        interval is narrower than `width`.
        """
        if not self.jumps:
            # Constant function: the integral is the constant itself.
            exact = Fraction(self.plateaus[0])
            return CertifiedInterval(exact, exact, True)
        if all(j.is_cyclotomic for j in self.jumps):
            total = Fraction(0)
            prev = Fraction(0)
            for k, jump in enumerate(self.jumps):
                turn = jump.turn.fraction()
                total += self.plateaus[k] * (turn - prev)
                prev = turn
            total += self.plateaus[-1] * (Fraction(1, 2) - prev)
            exact = 2 * total
            return CertifiedInterval(exact, exact, True)
        # Certified enclosure: refine z-intervals, convert to turn intervals.
        target = Fraction(width) / (4 * len(self.jumps) + 4)
        lo_total = Fraction(0)
        hi_total = Fraction(0)
        prev_lo = prev_hi = Fraction(0)
        for k, jump in enumerate(self.jumps):
            t_lo, t_hi = _turn_enclosure(jump, target)
            seg_lo = t_lo - prev_hi
            seg_hi = t_hi - prev_lo
            c = self.plateaus[k]
            lo_total += c * (seg_lo if c >= 0 else seg_hi)
            hi_total += c * (seg_hi if c >= 0 else seg_lo)
            prev_lo, prev_hi = t_lo, t_hi
        c = self.plateaus[-1]
        seg_lo = Fraction(1, 2) - prev_hi
        seg_hi = Fraction(1, 2) - prev_lo
        lo_total += c * (seg_lo if c >= 0 else seg_hi)
        hi_total += c * (seg_hi if c >= 0 else seg_lo)
        return CertifiedInterval(2 * lo_total, 2 * hi_total, False)


def _angle_above(jump: JumpPoint, z_omega: Cyclotomic) -> bool:
    """Is the angle of omega strictly above this jump's angle?

    Works in z = 2 cos(theta) coordinates (decreasing in theta).  The
    jump's isolating interval is refined until z(omega), which is known
    not to be the jump's root, falls clearly on one side.
    """
    lo, hi = jump.z_interval
    if lo == hi:
        return (z_omega - lo).sign_of_real() < 0
    poly = list(jump.z_poly)
    while True:
        if (z_omega - hi).sign_of_real() > 0:
            return False  # z above the interval: angle below the jump
        if (z_omega - lo).sign_of_real() < 0:
            return True
        lo, hi = refine_root(poly, (lo, hi), (hi - lo) / 4)


@dataclass(frozen=True)
class CertifiedInterval:
    """A rational interval certified to contain the true value."""

    lo: Fraction
    hi: Fraction
    exact: bool

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("interval is not exact")
        return self.lo

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def __add__(self, other: "CertifiedInterval") -> "CertifiedInterval":
        return CertifiedInterval(self.lo + other.lo, self.hi + other.hi,
                                 self.exact and other.exact)

    def __str__(self):
        if self.exact:
            return str(self.lo)
        return f"[{self.lo}, {self.hi}]"


def _turn_enclosure(jump: JumpPoint, target: Fraction) -> tuple[Fraction, Fraction]:
    """Certified rational enclosure of theta/(2 pi) for a jump."""
    if jump.turn is not None:
        t = jump.turn.fraction()
        return t, t
    lo, hi, _ = turn_enclosure_of_z_root(list(jump.z_poly), jump.z_interval, target)
    return lo, hi


def turn_enclosure_of_z_root(poly, z_interval, target: Fraction):
    """Certified enclosure of acos(z/2)/(2 pi) for the root of `poly`
    isolated by `z_interval`, refined until narrower than `target`.

    Returns (turn_lo, turn_hi, refined_z_interval); the turn bounds are
    exact dyadic rationals from interval arithmetic, so any rational
    strictly outside them is certified to be on that side of the root.
    """
    a, b = z_interval
    iv = mpmath.iv
    old = iv.prec
    target = Fraction(target)
    try:
        # Enough working precision for the requested output width, plus
        # a margin; the z-interval is then narrowed geometrically.
        bits = 80
        t = target
        while t < 1:
            t *= 2
            bits += 1
        iv.prec = bits
        width = b - a
        while True:
            a, b = refine_root(poly, (a, b), width)
            # theta = acos(z/2) is decreasing in z: the z-interval (a, b)
            # maps to the turn interval [acos(b/2), acos(a/2)] / (2 pi).
            za = iv.mpf(a.numerator) / iv.mpf(a.denominator) / 2
            zb = iv.mpf(b.numerator) / iv.mpf(b.denominator) / 2
            x = iv.mpf([za.a, zb.b])
            # acos(x) = atan2(sqrt(1 - x^2), x), monotone decreasing.
            enclosure = iv.atan2(iv.sqrt(1 - x * x), x) / (2 * iv.pi)
            lo = max(_mpf_to_fraction(enclosure.a), Fraction(0))
            hi = min(_mpf_to_fraction(enclosure.b), Fraction(1, 2))
            if hi - lo <= target:
                return lo, hi, (a, b)
            width /= 64
            iv.prec += 16
    finally:
        iv.prec = old


def _mpf_to_fraction(x) -> Fraction:
    """Exact Fraction from a dyadic mpf.

    The mantissa/exponent may be gmpy2 integers depending on the mpmath
    backend, so they are coerced to plain ints.
    """
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    man, exp = int(man), int(exp)
    if man == 0:
        return Fraction(0)
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


@lru_cache(maxsize=256)
def _signature_function_cached(v_key) -> SignatureFunction:
    return _build_signature_function([list(r) for r in v_key])


def signature_function(v) -> SignatureFunction:
    validate_seifert(v)
    return _signature_function_cached(tuple(tuple(r) for r in v))


def _build_signature_function(v) -> SignatureFunction:
    n, _ = dims(v)
    if n == 0:
        return SignatureFunction(jumps=[], plateaus=[0])
    delta = alexander(v)
    h = delta.compact_form()

    # Unit-circle Alexander roots <-> roots of h(z) in [-2, 2); z = 2
    # (omega = 1) is excluded since h(2) = Delta(1) = 1.  A root at
    # z = -2 (omega = -1) is split off so the interior isolation never
    # touches the endpoints.
    hsf = squarefree_part(h)
    minus_two_root = poly_eval(hsf, Fraction(-2)) == 0
    interior = hsf
    if minus_two_root:
        from .realroots import _poly_divmod_q
        q, rem = _poly_divmod_q(hsf, [2, 1])  # divide by (z + 2)
        assert not rem
        interior = [int(c) for c in q]
    intervals = isolate_roots(interior, Fraction(-2), Fraction(2))

    roots = []  # [z_lo, z_hi, RootArg | None], ordered by z descending
    for a, b in intervals:
        a = max(a, Fraction(-2))
        b = min(b, Fraction(2))
        roots.append([a, b, None])
    roots.sort(key=lambda r: r[0], reverse=True)

    # Identify cyclotomic roots: factors Phi_m of t^g Delta(t) put jumps
    # at the primitive m-th roots of unity.
    cyclo_turns = _cyclotomic_jump_turns(delta)
    for turn in cyclo_turns:
        z = Cyclotomic.zeta_power(turn.d, turn.k)
        z = z + z.conjugate()
        for r in roots:
            lo_s = (z - r[0]).sign_of_real()
            hi_s = (z - r[1]).sign_of_real()
            if lo_s > 0 and hi_s < 0:
                r[2] = turn
                break

    # Choose small rational sampling turns strictly between consecutive
    # jumps and evaluate the plateaus there.
    sample_turns = _sampling_turns(roots, interior, include_pi=not minus_two_root)

    plateaus = [signature_at_nonroot(v, RootArg(t.numerator, t.denominator))
                for t in sample_turns]

    jumps = []
    for k, r in enumerate(roots):
        value = Fraction(plateaus[k] + plateaus[k + 1], 2)
        assert value.denominator == 1, "odd signature jump"
        jumps.append(JumpPoint(turn=r[2], z_poly=tuple(interior),
                               z_interval=(r[0], r[1]), value=int(value)))
    if minus_two_root:
        # Jump at omega = -1: both one-sided limits equal the last plateau.
        jumps.append(JumpPoint(turn=RootArg(1, 2), z_poly=tuple(hsf),
                               z_interval=(Fraction(-2), Fraction(-2)),
                               value=plateaus[-1]))
        plateaus = plateaus + [plateaus[-1]]
    assert len(plateaus) == len(jumps) + 1
    return SignatureFunction(jumps=jumps, plateaus=plateaus)


def signature_at_nonroot(v, omega: RootArg) -> int:
    """Signature at an angle known not to be an Alexander root."""
    p, z, q = _hermitian_signature(_hermitian_form(v, omega))
    assert z == 0, "unexpected degeneracy at a declared non-root"
    return p - q


def _cyclotomic_jump_turns(delta: SymLaurentPoly) -> list[RootArg]:
    """Turns k/m (in (0, 1/2]) of primitive m-th roots of unity that are
    roots of Delta, found by exact divisibility by Phi_m.

    Since phi(m) >= sqrt(m/2), orders with phi(m) <= deg are bounded by
    2 deg^2, so the scan is finite.
    """
    from .cyclotomic import cyclotomic_polynomial
    from .realroots import _poly_divmod_q

    p = delta.as_poly()
    deg = len(p) - 1
    turns = []
    for m in range(2, 2 * deg * deg + 7):
        phi = cyclotomic_polynomial(m)
        if len(phi) - 1 > deg:
            continue
        _, rem = _poly_divmod_q(p, list(phi))
        if not rem:
            for k in range(1, m // 2 + 1):
                if math.gcd(k, m) == 1:
                    turns.append(RootArg(k, m))
    return turns


def _sampling_turns(roots, interior_poly, include_pi: bool) -> list[Fraction]:
    """Rational turns strictly between consecutive jump angles.

    Returns len(roots) + 1 fractions: one in each open gap
    (0, theta_1), (theta_1, theta_2), ..., (theta_last, pi].  Each root
    gets a certified turn enclosure; picking the simplest fraction in
    the open gap between enclosures keeps cyclotomic orders small.
    When the top gap is free of roots, omega = -1 (turn 1/2) is used.
    """
    target = Fraction(1, 64)
    while True:
        enclosures = []
        for r in roots:
            lo, hi, refined = turn_enclosure_of_z_root(interior_poly, (r[0], r[1]), target)
            r[0], r[1] = refined
            enclosures.append((lo, hi))
        disjoint = all(enclosures[i][1] < enclosures[i + 1][0]
                       for i in range(len(enclosures) - 1))
        open_below = not enclosures or enclosures[0][0] > 0
        open_above = (include_pi or not enclosures
                      or enclosures[-1][1] < Fraction(1, 2))
        if disjoint and open_below and open_above:
            break
        target /= 8

    turns = []
    prev_hi = Fraction(0)
    for lo, hi in enclosures:
        turns.append(simplest_between(prev_hi, lo))
        prev_hi = hi
    if include_pi:
        turns.append(Fraction(1, 2))
    else:
        turns.append(simplest_between(prev_hi, Fraction(1, 2)))
    return turns


# ---------------------------------------------------------------------------
# rho_0: the integral of the signature function
# ---------------------------------------------------------------------------

def rho0(v, width: Fraction = Fraction(1, 10 ** 10)) -> CertifiedInterval:
    """Integral of the Levine-Tristram signature function over the
    circle, normalized to total measure 1."""
    validate_seifert(v)
    return signature_function(v).rho0(width)
