"""Exact isolation of real roots of integer polynomials via Sturm chains.

Used to locate unit-circle roots of Alexander polynomials: after the
substitution z = t + 1/t a symmetric Laurent polynomial becomes an
ordinary integer polynomial whose roots in (-2, 2) are exactly the
signature-jump locations.
"""

from __future__ import annotations

from fractions import Fraction


def poly_eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def _poly_rem(a, b):
    """Remainder of a mod b over Q."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and b[-1] == 0:
        b.pop()
    while a and a[-1] == 0:
        a.pop()
    if not b:
        raise ZeroDivisionError
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] -= f * y
        while a and a[-1] == 0:
            a.pop()
    return a


def squarefree_part(p):
    """p / gcd(p, p') over Q, returned with integer coefficients."""
    a = [Fraction(x) for x in p]
    b = [Fraction(x) for x in poly_derivative(p)]
    # Euclidean gcd
    while True:
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        a, b = b, _poly_rem(a, b)
    # a is the gcd; divide p by it
    q, r = _poly_divmod_q(p, a)
    assert not r
    from math import lcm
    denom = 1
    for c in q:
        denom = lcm(denom, Fraction(c).denominator)
    ints = [int(Fraction(c) * denom) for c in q]
    from math import gcd as _gcd
    g = 0
    for c in ints:
        g = _gcd(g, c)
    return [c // g for c in ints] if g else ints


def _poly_divmod_q(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b and b[-1] == 0:
        b.pop()
    while a and a[-1] == 0:
        a.pop()
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and b:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, y in enumerate(b):
            a[shift + i] -= f * y
        while a and a[-1] == 0:
            a.pop()
    return q, a


def sturm_chain(p):
    chain = [[Fraction(c) for c in p], [Fraction(c) for c in poly_derivative(p)]]
    while True:
        last = chain[-1]
        if not [c for c in last if c != 0]:
            chain.pop()
            break
        rem = _poly_rem(chain[-2], last)
        rem = [-c for c in rem]
        if not rem:
            break
        chain.append(rem)
    return chain


def _sign_changes(chain, x: Fraction) -> int:
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots of p in (lo, hi]; p(lo), p(hi) may vanish
    (a root exactly at hi is counted, one at lo is not)."""
    chain = sturm_chain(p)
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def isolate_roots(p, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals (a, b), each containing exactly one root of the
    squarefree polynomial p, covering all roots in (lo, hi).  Endpoints are
    never roots."""
    p = squarefree_part(p)
    chain = sturm_chain(p)
    lo, hi = Fraction(lo), Fraction(hi)
    # Nudge endpoints off roots.
    step = Fraction(1, 64)
    while poly_eval(p, lo) == 0:
        lo -= step
        step /= 2
    step = Fraction(1, 64)
    while poly_eval(p, hi) == 0:
        hi += step
        step /= 2

    out = []

    def recurse(a, b, n):
        if n == 0:
            return
        if n == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        while poly_eval(p, mid) == 0:
            mid += (b - a) / 64
        left = _sign_changes(chain, a) - _sign_changes(chain, mid)
        recurse(a, mid, left)
        recurse(mid, b, n - left)

    total = _sign_changes(chain, lo) - _sign_changes(chain, hi)
    recurse(lo, hi, total)
    return out


def refine_root(p, interval: tuple[Fraction, Fraction],
                width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink an isolating interval of squarefree p below the given width."""
    a, b = interval
    fa = poly_eval(p, a)
    assert fa != 0 and poly_eval(p, b) != 0
    while b - a > width:
        mid = (a + b) / 2
        fm = poly_eval(p, mid)
        if fm == 0:
            # Land the interval symmetrically around an exact rational root.
            eps = min(width, b - a) / 4
            return (mid - eps, mid + eps)
        if (fa > 0) == (fm > 0):
            a, fa = mid, fm
        else:
            b = mid
    return a, b


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A smallest-denominator fraction strictly inside (lo, hi).

    Continued-fraction descent: if an integer fits, take it; otherwise
    shift into a unit interval and recurse on the reciprocal.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    floor_lo = lo.numerator // lo.denominator
    candidate = Fraction(floor_lo + 1)
    if lo < candidate < hi:
        return candidate
    if lo == floor_lo:
        # Interval (n, n + frac): take n + 1/k for the least valid k,
        # i.e. the smallest k with 1/k < hi - n.
        gap = hi - floor_lo
        k = gap.denominator // gap.numerator + 1
        while floor_lo + Fraction(1, k) >= hi:  # boundary adjustment only
            k += 1
        return floor_lo + Fraction(1, k)
    frac_lo, frac_hi = lo - floor_lo, min(hi - floor_lo, Fraction(1))
    return floor_lo + 1 / simplest_between(1 / frac_hi, 1 / frac_lo)
