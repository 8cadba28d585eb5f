"""Integral symmetric form utilities: definiteness, characteristic
vectors, minimal characteristic squares, diagonalizability, and small
congruence searches.

The main consumers are the definite-bounding arguments: a unimodular
definite form admits a characteristic vector x with |x^2| <= rank
(with equality exactly for the diagonal forms), and a definite form is
congruent to +-identity iff it splits off norm-one vectors all the way
down.  Everything here is exhaustive search over exactly bounded
regions; every returned witness is verified before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .intmat import (Matrix, determinant, dims, identity, is_symmetric,
                     mat_mul, mat_vec, symmetric_signature, transpose,
                     vec_mat_vec)


class SearchBoundExceeded(RuntimeError):
    pass


def definiteness(m: Matrix) -> str:
    """'positive' | 'negative' | 'indefinite' | 'degenerate'."""
    n_plus, n_zero, n_minus = symmetric_signature(m)
    if n_zero > 0:
        return "degenerate"
    if n_minus == 0:
        return "positive"
    if n_plus == 0:
        return "negative"
    return "indefinite"


def is_unimodular_form(m: Matrix) -> bool:
    r, c = dims(m)
    return r == c and is_symmetric(m) and abs(determinant(m)) == 1


def is_characteristic(m: Matrix, x: list[int]) -> bool:
    """x pairs with every basis vector like that vector pairs with
    itself, mod 2:  (x^T M)_i = M_ii (mod 2) for all i."""
    n, c = dims(m)
    if n != c or not is_symmetric(m):
        raise ValueError("characteristic test needs a symmetric square matrix")
    if len(x) != n:
        raise ValueError("dimension mismatch")
    row = mat_vec(m, x)
    return all((row[i] - m[i][i]) % 2 == 0 for i in range(n))


def _characteristic_basepoint(m: Matrix) -> list[int]:
    """Some characteristic vector, from solving M x = diag(M) mod 2."""
    n, _ = dims(m)
    a = [[m[i][j] % 2 for j in range(n)] + [m[i][i] % 2] for i in range(n)]
    # Gaussian elimination over GF(2).
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for r in range(n):
            if r != row and a[r][col]:
                a[r] = [(x + y) % 2 for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    x = [0] * n
    for r, col in enumerate(pivots):
        x[col] = a[r][n]
    if any(a[r][n] and not any(a[r][:n]) for r in range(n)):
        raise ValueError("form admits no characteristic vector (not symmetric?)")
    if not is_characteristic(m, x):
        raise AssertionError("characteristic basepoint failed verification")
    return x


def _ldl(m_pos: Matrix):
    """M = L^T D L with unit upper-triangular L and positive diagonal D,
    for positive definite M.  Returns (d, l) with Q(x) expressible as
    sum_i d_i (x_i + sum_{j>i} l_ij x_j)^2."""
    n, _ = dims(m_pos)
    a = [[Fraction(x) for x in row] for row in m_pos]
    d = [Fraction(0)] * n
    l = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise ValueError("matrix is not positive definite")
        for j in range(i + 1, n):
            l[i][j] = a[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] -= a[i][r] * a[i][c] / d[i]
    return d, l


def _enumerate_bounded(m_pos: Matrix, bound: Fraction, parity: list[int] | None):
    """All integer vectors with Q(x) <= bound (positive definite Q),
    optionally restricted to x_i = parity_i (mod 2).  Branch and bound
    on the LDL decomposition, from the last coordinate down."""
    n, _ = dims(m_pos)
    if n == 0:
        yield []
        return
    d, l = _ldl(m_pos)
    x = [0] * n

    def rec(i: int, remaining: Fraction):
        if i < 0:
            yield x[:]
            return
        shift = sum(l[i][j] * x[j] for j in range(i + 1, n))
        # d_i (x_i + shift)^2 <= remaining
        limit = remaining / d[i]
        # |x_i + shift| <= sqrt(limit)
        lo = _floor_sqrt_bound(-shift, limit, -1)
        hi = _floor_sqrt_bound(-shift, limit, +1)
        start = lo
        if parity is not None and (start - parity[i]) % 2 != 0:
            start += 1
        step = 2 if parity is not None else 1
        xi = start
        while xi <= hi:
            term = d[i] * (xi + shift) ** 2
            if term <= remaining:
                x[i] = xi
                yield from rec(i - 1, remaining - term)
            xi += step
        x[i] = 0

    yield from rec(n - 1, Fraction(bound))


def _floor_sqrt_bound(center: Fraction, limit: Fraction, direction: int) -> int:
    """Largest (direction=+1) or smallest (-1) integer t with
    (t - center)^2 <= limit."""
    if limit < 0:
        return 0 if direction > 0 else 1  # empty range
    # integer sqrt of limit's ceiling gives a safe over-approximation
    from math import isqrt
    approx = isqrt(limit.numerator // limit.denominator) + 2
    if direction > 0:
        t = int(center) + approx + 2
        while (t - center) ** 2 > limit:
            t -= 1
        return t
    t = int(center) - approx - 2
    while (t - center) ** 2 > limit:
        t += 1
    return t


@dataclass(frozen=True)
class CharSquareResult:
    vector: tuple[int, ...]
    value: int  # signed x^T M x


def min_characteristic_square(m: Matrix, dim_bound: int = 12) -> CharSquareResult:
    """Characteristic vector minimizing |x^T M x| over a definite
    unimodular form, by exhaustive search of the characteristic coset.

    The coset is x0 + 2 Z^n; vectors are enumerated under the bound
    |Q(x)| <= n, which always contains the minimum.  The result is
    asserted to satisfy |x^2| <= dim, with equality only for the
    +-identity forms.
    """
    n, c = dims(m)
    if n > dim_bound:
        raise SearchBoundExceeded(f"dimension {n} exceeds search bound {dim_bound}")
    kind = definiteness(m)
    if kind not in ("positive", "negative"):
        raise ValueError("minimal characteristic square needs a definite form")
    if not is_unimodular_form(m):
        raise ValueError("form must be unimodular")
    if n == 0:
        return CharSquareResult(vector=(), value=0)
    work = m if kind == "positive" else [[-x for x in row] for row in m]
    x0 = _characteristic_basepoint(work)
    best = None
    # The Elkies guarantee makes |x^2| <= n attainable, so the search
    # bound n is sufficient; it is widened defensively if somehow empty.
    bound = n
    while best is None:
        for x in _enumerate_bounded(work, Fraction(bound), parity=[v % 2 for v in x0]):
            q = vec_mat_vec(x, work, x)
            if is_characteristic(work, x):
                if best is None or q < best[0] or (q == best[0] and tuple(x) < best[1]):
                    best = (q, tuple(x))
        bound += n
    value = best[0] if kind == "positive" else -best[0]
    assert abs(value) <= n, "Elkies bound violated"
    return CharSquareResult(vector=best[1], value=value)


def is_diagonalizable(m: Matrix, dim_bound: int = 12) -> bool:
    """Is the definite unimodular form congruent to +-identity over Z?

    Splits off vectors of square +-1 and recurses on the orthogonal
    complement; a definite unimodular form containing a unit vector
    splits as <unit> + complement, so this terminates with the full
    answer.
    """
    n, c = dims(m)
    if n > dim_bound:
        raise SearchBoundExceeded(f"dimension {n} exceeds search bound {dim_bound}")
    kind = definiteness(m) if n else "positive"
    if n and kind not in ("positive", "negative"):
        raise ValueError("diagonalizability test needs a definite form")
    if not is_unimodular_form(m) and n:
        raise ValueError("form must be unimodular")
    work = m if kind == "positive" else [[-x for x in row] for row in m]
    return _is_diag_positive(work)


def _is_diag_positive(m: Matrix) -> bool:
    n, _ = dims(m)
    if n == 0:
        return True
    unit = next((x for x in _enumerate_bounded(m, Fraction(1), parity=None)
                 if vec_mat_vec(x, m, x) == 1), None)
    if unit is None:
        return False
    comp = _orthogonal_complement_form(m, unit)
    return _is_diag_positive(comp)


def _orthogonal_complement_form(m: Matrix, x: list[int]) -> Matrix:
    """Gram matrix of the sublattice orthogonal to x (with Q(x) = 1, the
    complement is unimodular of rank n - 1)."""
    from .intmat import smith_normal_form

    n, _ = dims(m)
    row = [mat_vec(m, x)]  # 1 x n integer matrix
    sf = smith_normal_form(row)
    # Columns of Vt beyond the first span ker(row . ): row * vt = d * e_1.
    vt = sf.vt
    basis = [[vt[i][j] for i in range(n)] for j in range(1, n)]
    out = [[vec_mat_vec(basis[a], m, basis[b]) for b in range(n - 1)]
           for a in range(n - 1)]
    return out


# ---------------------------------------------------------------------------
# Congruence search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceResult:
    witness: Matrix | None
    exhausted: bool
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.witness is not None


def _parity_type(m: Matrix) -> str:
    """Even forms have all diagonal self-pairings even; congruence
    preserves this type."""
    n, _ = dims(m)
    return "even" if all(m[i][i] % 2 == 0 for i in range(n)) else "odd"


def congruence_search(a: Matrix, b: Matrix, bound: int = 3,
                      dim_bound: int = 6) -> CongruenceResult:
    """Search for unimodular U with U^T A U = B, entries |u_ij| <= bound.

    Column-by-column backtracking: column j must pair with the earlier
    columns exactly as B prescribes.  Returns a verified witness, or an
    exhaustion report (with the parity-type shortcut when the types
    already differ).
    """
    n, c = dims(a)
    nb, cb = dims(b)
    if n != c or nb != cb or n != nb:
        raise ValueError("forms must be square of equal dimension")
    if n > dim_bound:
        raise SearchBoundExceeded(f"dimension {n} exceeds search bound {dim_bound}")
    if _parity_type(a) != _parity_type(b):
        return CongruenceResult(witness=None, exhausted=True,
                                reason="parity types differ (even vs odd)")
    cols: list[list[int]] = []
    rng = range(-bound, bound + 1)

    def ok_column(v, j):
        if vec_mat_vec(v, a, v) != b[j][j]:
            return False
        return all(vec_mat_vec(cols[i], a, v) == b[i][j] for i in range(j))

    def rec(j):
        if j == n:
            u = transpose(cols)
            if abs(determinant(u)) != 1:
                return None
            return [list(r) for r in u]
        for v in product(rng, repeat=n):
            if ok_column(list(v), j):
                cols.append(list(v))
                got = rec(j + 1)
                if got is not None:
                    return got
                cols.pop()
        return None

    u = rec(0)
    if u is None:
        return CongruenceResult(witness=None, exhausted=True,
                                reason=f"no witness with entries bounded by {bound}")
    if mat_mul(mat_mul(transpose(u), a), u) != b:
        raise AssertionError("congruence witness failed verification")
    return CongruenceResult(witness=u, exhausted=False)
