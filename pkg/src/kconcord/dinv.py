"""Heegaard-Floer correction terms of lens spaces and knot surgeries,
and the definite-cobordism inequality bookkeeping built on them.

All values are exact rationals.  The basic recursion is

    d(1, 0, 0) = 0,
    d(p, q, i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(q, p mod q, i mod q),

which computes the correction terms of the lens space obtained by
p/q-surgery on the unknot with its standard orientation.  The lens
space L(p, q) in the orientation convention of the Heegaard-Floer
literature (the one bounding the negative-definite linear plumbing,
i.e. -p/q-surgery on the unknot) has the negated values; the paper
constants pin both conventions:

    d_lens(7, 1, 0)                 =  3/2   (so d of -7-surgery is -3/2)
    lens_space_d_invariants(25, 2)  =  the printed 25-value multiset
    d_surgery_lspace(RHT, 6, 0)     = -3/4   and label 3 gives -1/4.

Positive n-surgery on an L-space knot uses the torsion coefficients of
the Alexander polynomial:  d(S^3_n(K), i) = d_lens(n, 1, i) - 2 t_j
with j = min(i, n - i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .sympoly import SymLaurentPoly


@lru_cache(maxsize=None)
def d_lens(p: int, q: int, i: int) -> Fraction:
    """Correction term of p/q-surgery on the unknot at spin^c label i.

    The recursion index may exceed p - 1 in intermediate steps, so the
    admissible range is 0 <= i < p + q.
    """
    if p < 1 or q < 0:
        raise ValueError("need p >= 1 and q >= 0")
    if q == 0:
        if p != 1 or i != 0:
            raise ValueError("q = 0 only admissible as the base case (1, 0, 0)")
        return Fraction(0)
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")
    if p < q:
        raise ValueError("need p >= q")
    if not 0 <= i < p + q:
        raise ValueError(f"label {i} out of range for ({p}, {q})")
    num = (2 * i + 1 - p - q) ** 2 - p * q
    return Fraction(num, 4 * p * q) - d_lens(q, p % q, i % q)


@dataclass(frozen=True)
class DInvariantVector:
    """Exact correction terms indexed by spin^c labels 0..p-1."""

    p: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.p:
            raise ValueError("need exactly one value per label")

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i % self.p]

    def reverse_orientation(self) -> "DInvariantVector":
        """d(-Y, s) = -d(Y, s): negate every entry."""
        return DInvariantVector(self.p, tuple(-v for v in self.values))

    def multiset(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.values))

    def zero_count(self) -> int:
        return sum(1 for v in self.values if v == 0)


def d_lens_vector(p: int, q: int) -> DInvariantVector:
    """All labels of the p/q-surgery on the unknot (positive surgery)."""
    return DInvariantVector(p, tuple(d_lens(p, q, i) for i in range(p)))


def lens_space_d_invariants(p: int, q: int) -> DInvariantVector:
    """Correction terms of the lens space L(p, q) in the orientation
    standard in the Floer literature (boundary of the negative-definite
    plumbing; equivalently -p/q-surgery on the unknot, equivalently the
    double branched cover of the (p, q) two-bridge link)."""
    return d_lens_vector(p, q).reverse_orientation()


def d_reverse(v: DInvariantVector) -> DInvariantVector:
    return v.reverse_orientation()


def d_surgery_lspace(delta: SymLaurentPoly, n: int, i: int) -> Fraction:
    """d(S^3_n(K), i) for positive n-surgery on an L-space knot with
    symmetrized Alexander polynomial delta.

    L-space status is the caller's assertion; this function only checks
    the framing range n >= 2 deg(delta) - 1.
    """
    if n < 1:
        raise ValueError("framing must be positive")
    if n < 2 * delta.degree - 1:
        raise ValueError(
            f"framing {n} below the L-space surgery range "
            f"(need n >= {2 * delta.degree - 1})")
    if not 0 <= i < n:
        raise ValueError("label out of range")
    j = min(i, n - i)
    return d_lens(n, 1, i) - 2 * delta.torsion_coefficient(j)


def d_surgery_lspace_vector(delta: SymLaurentPoly, n: int) -> DInvariantVector:
    return DInvariantVector(n, tuple(d_surgery_lspace(delta, n, i)
                                     for i in range(n)))


def d_connected_sum(parts: list[tuple[DInvariantVector, int]]) -> Fraction:
    """Correction term of a connected sum: the sum of the selected
    entries (empty sum is 0)."""
    return sum((vec[i] for vec, i in parts), Fraction(0))


# ---------------------------------------------------------------------------
# Definite-boundedness inequalities
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DefiniteBound:
    """Data of a definite 4-manifold bound: second Betti number, the
    square of the relevant spin^c first Chern class, and the sign of
    the definite intersection form."""

    beta2: int
    c1_squared: Fraction
    sign: str  # "positive" | "negative"

    def __post_init__(self):
        if self.sign not in ("positive", "negative"):
            raise ValueError("sign must be 'positive' or 'negative'")
        if self.beta2 < 0:
            raise ValueError("beta2 must be nonnegative")

    def offset(self) -> Fraction:
        """For a negative-definite cobordism the inequality reads
        d(source) + (c1^2 + beta2)/4 <= d(target); this is that shift."""
        if self.sign != "negative":
            raise ValueError("offset is defined for negative-definite bounds")
        return (Fraction(self.c1_squared) + self.beta2) / 4


def oz_bound(d_value: Fraction, bound: DefiniteBound) -> str:
    """Evaluate the definite-bounding inequality exactly.

    negative-definite X:  c1^2 + beta2 <= 4 d(Y)
    positive-definite X:  c1^2 - beta2 >= 4 d(Y)

    Returns "consistent" or "violated".
    """
    d4 = 4 * Fraction(d_value)
    c1 = Fraction(bound.c1_squared)
    if bound.sign == "negative":
        ok = c1 + bound.beta2 <= d4
    else:
        ok = c1 - bound.beta2 >= d4
    return "consistent" if ok else "violated"


@dataclass(frozen=True)
class ChainCase:
    """One branch of a cobordism-chain estimate: a name and the exact
    terminal correction term it leads to."""

    name: str
    terminal: Fraction


@dataclass(frozen=True)
class ChainBoundReport:
    offsets: tuple[Fraction, ...]
    per_case: dict
    bound: Fraction


def chain_bound(offsets: list[Fraction], cases: list[ChainCase]) -> ChainBoundReport:
    """Propagate d(source) + sum(offsets) <= terminal through a chain of
    negative-definite cobordisms, case by case.

    Each case yields d(source) <= terminal - sum(offsets); since
    exactly one case must hold but which one is unknown, the guaranteed
    bound is the maximum over cases.
    """
    if not cases:
        raise ValueError("chain bound needs at least one case")
    total = sum((Fraction(o) for o in offsets), Fraction(0))
    per_case = {c.name: Fraction(c.terminal) - total for c in cases}
    return ChainBoundReport(offsets=tuple(Fraction(o) for o in offsets),
                            per_case=per_case,
                            bound=max(per_case.values()))


# ---------------------------------------------------------------------------
# Surgery-comparison obstruction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeqVerdict:
    consistent: bool
    witness: int | None = None


def geq_obstruction(d_upper: DInvariantVector, d_lower: DInvariantVector,
                    equality: bool = False) -> GeqVerdict:
    """Check the surgery d-invariant comparison for a claimed relation
    'upper knot dominates lower knot'.

    For surgeries with the same framing, the claim forces
    d(surgery on lower)[i] >= d(surgery on upper)[i] for every label;
    with `equality` (the 0-bipolar case against the unknot) the vectors
    must agree outright.  Returns the first violating label otherwise.
    """
    if d_upper.p != d_lower.p:
        raise ValueError("vectors must have equal length")
    for i in range(d_upper.p):
        bad = (d_lower[i] != d_upper[i]) if equality else (d_lower[i] < d_upper[i])
        if bad:
            return GeqVerdict(consistent=False, witness=i)
    return GeqVerdict(consistent=True)
