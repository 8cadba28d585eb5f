"""Homology, linking forms, and metabolizers of branched covers and
surgered 3-manifolds.

A framed surgery presentation P (symmetric integer linking/framing
matrix) presents H_1 of the surgered manifold as coker(P).  When P is
nondegenerate the manifold is a rational homology sphere and carries
the Q/Z-valued linking form lambda = -P^{-1} mod 1 on meridian classes;
the sign convention is immaterial to every consumer here (metabolizer
lists are invariant under a global flip, which the test suite checks).

The q-fold cyclic branched cover of a knot with Seifert matrix V is
presented by the standard (q-1) x (q-1) block tridiagonal matrix with
V + V^T on the diagonal and -V / -V^T off it.  That construction is
gated by an independent order check: |coker| must equal the absolute
value of the product of Alexander values at nontrivial q-th roots of
unity, computed by resultants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .intmat import (Matrix, SingularMatrixError, determinant, dims,
                     identity, is_symmetric, mat_vec, rational_inverse,
                     smith_normal_form, sylvester_resultant, transpose,
                     zero_matrix)
from .sympoly import SymLaurentPoly


@dataclass
class FramedPresentation:
    """Symmetric integer framing/linking matrix with labeled meridians."""

    matrix: Matrix
    labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        r, c = dims(self.matrix)
        if r != c or not is_symmetric(self.matrix):
            raise ValueError("framing matrix must be square and symmetric")
        if not self.labels:
            self.labels = [f"g{i + 1}" for i in range(r)]
        if len(self.labels) != r:
            raise ValueError("one label per generator required")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def det(self) -> int:
        return int(determinant(self.matrix))


@dataclass
class FiniteAbelianGroup:
    """coker(P) in Smith coordinates.

    invariant_factors lists the d_i > 1; to_snf maps an original
    meridian coordinate vector to its class in the product of cyclic
    factors.
    """

    invariant_factors: list[int]
    snf_rows: Matrix          # rows of U restricted to nontrivial factors
    moduli: list[int]         # same length as invariant_factors
    labels: list[str]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def class_of(self, v: list[int]) -> tuple[int, ...]:
        """SNF coordinates (mod the invariant factors) of a meridian
        combination v."""
        return tuple(sum(row[j] * v[j] for j in range(len(v))) % m
                     for row, m in zip(self.snf_rows, self.moduli))

    def label_classes(self) -> dict[str, tuple[int, ...]]:
        n = len(self.labels)
        basis = identity(n)
        return {lab: self.class_of(basis[i]) for i, lab in enumerate(self.labels)}

    def describe(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " + ".join(f"Z{d}" for d in self.invariant_factors)

    def derived_relations(self) -> list[str]:
        """Human-readable proportionality relations among the labeled
        generators (e.g. 'x2 = 2*x1'), as implied by the presentation."""
        classes = self.label_classes()
        names = list(classes)
        out = []
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                ca, cb = classes[a], classes[b]
                for c in range(0, max(self.moduli, default=1)):
                    if all((c * x - y) % m == 0
                           for x, y, m in zip(ca, cb, self.moduli)):
                        out.append(f"{b} = {c}*{a}")
                        break
        return out


def homology_from_presentation(pres: FramedPresentation) -> FiniteAbelianGroup:
    """First homology of the surgered manifold presented by P.

    Requires det P != 0 (rational homology sphere); a singular P is
    reported as infinite H_1.
    """
    p = pres.matrix
    n, _ = dims(p)
    if n == 0:
        return FiniteAbelianGroup([], [], [], [])
    if determinant(p) == 0:
        raise SingularMatrixError("det P = 0: H_1 is infinite")
    sf = smith_normal_form(p)
    keep = [i for i, d in enumerate(sf.diagonal) if d > 1]
    return FiniteAbelianGroup(
        invariant_factors=[sf.diagonal[i] for i in keep],
        snf_rows=[sf.u[i] for i in keep],
        moduli=[sf.diagonal[i] for i in keep],
        labels=list(pres.labels),
    )


def branched_cover_presentation(v: Matrix, q: int,
                                labels: list[str] | None = None) -> FramedPresentation:
    """Presentation of H_1 of the q-fold cyclic branched cover.

    Block tridiagonal of size (q-1) * 2g: diagonal blocks V + V^T,
    superdiagonal -V, subdiagonal -V^T.
    """
    if q < 2:
        raise ValueError("cover order must be at least 2")
    n, c = dims(v)
    if n != c:
        raise ValueError("Seifert matrix must be square")
    size = (q - 1) * n
    m = zero_matrix(size, size)
    vt = transpose(v)
    for b in range(q - 1):
        for i in range(n):
            for j in range(n):
                m[b * n + i][b * n + j] = v[i][j] + vt[i][j]
                if b + 1 < q - 1:
                    m[b * n + i][(b + 1) * n + j] = -v[i][j]
                    m[(b + 1) * n + i][b * n + j] = -vt[i][j]
    if labels is None:
        labels = [f"m{b + 1}_{i + 1}" for b in range(q - 1) for i in range(n)]
    return FramedPresentation(matrix=m, labels=labels)


def branched_cover_order_oracle(v: Matrix, q: int) -> int:
    """|H_1(Sigma_q)| via the Alexander polynomial: the absolute value
    of prod_{j=1}^{q-1} Delta(zeta_q^j), computed as a resultant.

    Independent of the presentation route: the product equals
    Res(c_q, f) / lc-power up to sign, where f = t^g Delta(t) and
    c_q = 1 + t + ... + t^{q-1}.
    """
    from .seifert import alexander

    delta = alexander(v)
    f = delta.as_poly()
    cq = [1] * q
    res = sylvester_resultant(cq, f)
    # prod Delta(zeta^j) = prod f(zeta^j) * zeta^{-g * sum j}; the unit
    # factor has absolute value 1, and res = prod f(zeta^j) exactly.
    return abs(res)


# ---------------------------------------------------------------------------
# Linking forms and metabolizers
# ---------------------------------------------------------------------------

@dataclass
class LinkingForm:
    """Q/Z-valued symmetric pairing on the torsion of coker(P)."""

    group: FiniteAbelianGroup
    pairing: list[list[Fraction]]  # on SNF generators, values mod 1

    def pair_snf(self, a, b) -> Fraction:
        k = len(self.group.invariant_factors)
        total = Fraction(0)
        for i in range(k):
            for j in range(k):
                total += a[i] * self.pairing[i][j] * b[j]
        return total % 1

    def self_linking(self, a) -> Fraction:
        return self.pair_snf(a, a)

    def flipped(self) -> "LinkingForm":
        return LinkingForm(self.group,
                           [[(-x) % 1 for x in row] for row in self.pairing])


def linking_form(pres: FramedPresentation) -> LinkingForm:
    """lambda(mu_i, mu_j) = -(P^{-1})_{ij} mod 1, transported to SNF
    generators."""
    p = pres.matrix
    n, _ = dims(p)
    group = homology_from_presentation(pres)
    if n == 0 or not group.invariant_factors:
        return LinkingForm(group, [])
    pinv = rational_inverse(p)
    sf = smith_normal_form(p)
    uinv = rational_inverse(sf.u)
    keep = [i for i, d in enumerate(sf.diagonal) if d > 1]
    pairing = []
    for i in keep:
        row = []
        for j in keep:
            gi = [uinv[r][i] for r in range(n)]
            gj = [uinv[r][j] for r in range(n)]
            val = -sum(gi[a] * pinv[a][b] * gj[b]
                       for a in range(n) for b in range(n))
            row.append(Fraction(val) % 1)
        pairing.append(row)
    form = LinkingForm(group, pairing)
    _check_well_defined(form)
    return form


def linking_form_on_meridians(pres: FramedPresentation, a, b) -> Fraction:
    """lambda on original meridian coordinate vectors: -a^T P^{-1} b mod 1."""
    pinv = rational_inverse(pres.matrix)
    n = pres.rank
    return (-sum(Fraction(a[i]) * pinv[i][j] * b[j]
                 for i in range(n) for j in range(n))) % 1


def _check_well_defined(form: LinkingForm) -> None:
    k = len(form.group.invariant_factors)
    for i in range(k):
        for j in range(k):
            di = form.group.invariant_factors[i]
            if (di * form.pairing[i][j]) % 1 != 0:
                raise AssertionError("linking form not well defined mod 1")


@dataclass(frozen=True)
class Metabolizer:
    """A subgroup G with lambda|_{G x G} = 0 and |G|^2 = |H_1|.

    Generators are given in SNF coordinates, from the Hermite basis of
    the corresponding lattice (canonical per subgroup).
    """

    generators: tuple[tuple[int, ...], ...]
    order: int

    def describe(self, group: FiniteAbelianGroup) -> str:
        names = []
        for g in self.generators:
            terms = [f"{c}*e{i + 1}" if c != 1 else f"e{i + 1}"
                     for i, c in enumerate(g)
                     if c % group.invariant_factors[i] != 0]
            names.append(" + ".join(terms) if terms else "0")
        return "<" + ", ".join(names) + ">"

    def elements(self, factors: list[int]) -> frozenset:
        """All elements of the subgroup, as SNF coordinate tuples."""
        zero = tuple([0] * len(factors))
        elems = {zero}
        frontier = [zero]
        while frontier:
            e = frontier.pop()
            for g in self.generators:
                ne = tuple((a + b) % f for a, b, f in zip(e, g, factors))
                if ne not in elems:
                    elems.add(ne)
                    frontier.append(ne)
        return frozenset(elems)

    def contains(self, cls: tuple, factors: list[int]) -> bool:
        return tuple(c % f for c, f in zip(cls, factors)) in self.elements(factors)


class EnumerationBoundExceeded(RuntimeError):
    pass


def metabolizers(form: LinkingForm, bound: int = 10 ** 6) -> list[Metabolizer]:
    """All metabolizers of the linking form.

    Subgroups of the cyclic product are enumerated as Hermite bases of
    lattices between D Z^k and Z^k with the right index; each candidate
    is kept iff the pairing vanishes on all generator pairs.  Returns
    [] (with the trivial group handled separately) when |H_1| is not a
    perfect square.
    """
    factors = form.group.invariant_factors
    n_order = form.group.order
    if n_order > bound:
        raise EnumerationBoundExceeded(
            f"|H_1| = {n_order} exceeds the enumeration bound {bound}")
    if n_order == 1:
        return [Metabolizer(generators=(), order=1)]
    root = isqrt(n_order)
    if root * root != n_order:
        return []
    k = len(factors)
    target_det = n_order // root  # index of the lattice in Z^k
    out = []
    for h in _hermite_bases(k, target_det, factors):
        gens = _subgroup_generators(h, factors)
        if all(form.pair_snf(a, b) == 0 for ai, a in enumerate(gens)
               for b in gens[ai:]):
            out.append(Metabolizer(generators=tuple(tuple(g) for g in gens),
                                   order=root))
    return out


def _hermite_bases(k: int, det: int, factors: list[int]):
    """Upper triangular Hermite bases H (h_ii > 0, 0 <= h_ij < h_ii for
    j > i) with determinant `det` whose lattice contains D Z^k."""
    diags = []

    def split(rem, pos, cur):
        if pos == k:
            if rem == 1:
                diags.append(tuple(cur))
            return
        d = 1
        while d <= rem:
            if rem % d == 0:
                split(rem // d, pos + 1, cur + [d])
            d += 1

    split(det, 0, [])
    for diag in diags:
        # Each pivot must divide the corresponding invariant factor for
        # D Z^k to be contained (checked exactly below anyway).
        yield from _fill_offdiag(diag, factors, k)


def _fill_offdiag(diag, factors, k):
    h = [[0] * k for _ in range(k)]
    for i in range(k):
        h[i][i] = diag[i]

    free = [(i, j) for i in range(k) for j in range(i + 1, k)]

    def rec(pos):
        if pos == len(free):
            if _contains_dzk(h, factors, k):
                yield [row[:] for row in h]
            return
        i, j = free[pos]
        for val in range(diag[i]):
            h[i][j] = val
            yield from rec(pos + 1)
        h[i][j] = 0

    yield from rec(0)


def _contains_dzk(h, factors, k):
    """Does the lattice spanned by the columns of H contain D Z^k?"""
    # Solve H x = d_j e_j for each j by back substitution; integrality
    # of all solutions is the containment test.
    for j in range(k):
        target = [factors[i] if i == j else 0 for i in range(k)]
        x = [0] * k
        for i in range(k - 1, -1, -1):
            s = target[i] - sum(h[i][m] * x[m] for m in range(i + 1, k))
            if s % h[i][i] != 0:
                return False
            x[i] = s // h[i][i]
    return True


def _subgroup_generators(h, factors):
    k = len(factors)
    gens = []
    for j in range(k):
        col = [h[i][j] % factors[i] for i in range(k)]
        if any(col):
            gens.append(col)
    return gens


# ---------------------------------------------------------------------------
# Linking numbers in the surgered manifold (Hoste's formula)
# ---------------------------------------------------------------------------

def hoste_linking(pres: FramedPresentation, a: list[int], b: list[int],
                  lk_ambient: Fraction | int) -> Fraction:
    """Linking number (or framing when a = b) in the surgered manifold:
    lk_Sigma(a, b) = lk_ambient - a^T P^{-1} b."""
    p = pres.matrix
    n, _ = dims(p)
    if n == 0:
        return Fraction(lk_ambient)
    if determinant(p) == 0:
        raise SingularMatrixError("Hoste correction needs det P != 0")
    pinv = rational_inverse(p)
    corr = sum(Fraction(a[i]) * pinv[i][j] * b[j]
               for i in range(n) for j in range(n))
    return Fraction(lk_ambient) - corr


class OrderPreconditionError(ValueError):
    """A stated curve order fails to kill its class in coker(P)."""


def cobordism_intersection_matrix(pres: FramedPresentation, curves: Matrix,
                                  framings: list[int], orders: list[int],
                                  ambient_lk: Matrix | None = None) -> Matrix:
    """Intersection matrix of the surgery cobordism.

    curves has one column per attached handle, giving the homology
    class of its attaching circle in meridian coordinates; entry (i, j)
    is k_i k_j lk_Sigma(e_i, e_j), with the stated framings as ambient
    self-linking and 0 ambient linking off the diagonal unless a full
    ambient matrix is supplied.  Each order k_i must satisfy
    k_i [e_i] = 0 in coker(P), which makes every entry an integer.
    """
    n, ncurves = dims(curves)
    if n != pres.rank:
        raise ValueError("curve coordinates must match the presentation rank")
    if len(framings) != ncurves or len(orders) != ncurves:
        raise ValueError("need one framing and one order per curve")
    cols = [[curves[i][j] for i in range(n)] for j in range(ncurves)]

    if pres.rank > 0:
        pinv = rational_inverse(pres.matrix)
        for j, col in enumerate(cols):
            scaled = [orders[j] * x for x in col]
            sol = mat_vec(pinv, scaled)
            if any(Fraction(s).denominator != 1 for s in sol):
                raise OrderPreconditionError(
                    f"order {orders[j]} does not kill curve {j + 1} in coker(P)")

    out = zero_matrix(ncurves, ncurves)
    for i in range(ncurves):
        for j in range(ncurves):
            if ambient_lk is not None:
                amb = ambient_lk[i][j]
            else:
                amb = framings[i] if i == j else 0
            lk = hoste_linking(pres, cols[i], cols[j], amb)
            val = orders[i] * orders[j] * lk
            if Fraction(val).denominator != 1:
                raise AssertionError("non-integral intersection number")
            out[i][j] = int(val)
    return out
