"""Exact integer and rational matrix arithmetic.

Everything downstream (Seifert invariants, branched-cover homology,
intersection forms) reduces to a handful of primitives over Z and Q:
Smith normal form with transform accumulation, exact inverses,
determinants, and signatures of rational symmetric matrices by
congruence diagonalization.  Matrices are plain lists of rows; entries
are Python ints or Fractions, so nothing ever overflows or rounds.

The sizes arising here are tiny (at most ~24x24), so the algorithms
favour transparency over asymptotics: smallest-pivot Smith reduction,
Gauss-Jordan inversion, Bareiss determinants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Matrix = list[list[int]]
QMatrix = list[list[Fraction]]


class SingularMatrixError(ValueError):
    """Raised when an operation requires det != 0 but the input is singular."""


class NonSymmetricError(ValueError):
    """Raised when an operation requires a symmetric input."""


def dims(m: list[list]) -> tuple[int, int]:
    """Return (rows, cols), insisting the matrix is rectangular."""
    r = len(m)
    c = len(m[0]) if r else 0
    if any(len(row) != c for row in m):
        raise ValueError("ragged matrix")
    return r, c


def copy_matrix(m):
    return [list(row) for row in m]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def transpose(m):
    r, c = dims(m)
    return [[m[i][j] for i in range(r)] for j in range(c)]


def mat_mul(a, b):
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise ValueError(f"shape mismatch {ra}x{ca} * {rb}x{cb}")
    return [[sum(a[i][k] * b[k][j] for k in range(ca)) for j in range(cb)]
            for i in range(ra)]


def mat_add(a, b):
    ra, ca = dims(a)
    rb, cb = dims(b)
    if (ra, ca) != (rb, cb):
        raise ValueError("shape mismatch in addition")
    return [[a[i][j] + b[i][j] for j in range(ca)] for i in range(ra)]


def mat_scale(c, m):
    return [[c * x for x in row] for row in m]


def mat_neg(m):
    return [[-x for x in row] for row in m]


def mat_vec(m, v):
    r, c = dims(m)
    if len(v) != c:
        raise ValueError("vector length mismatch")
    return [sum(m[i][j] * v[j] for j in range(c)) for i in range(r)]


def vec_mat_vec(u, m, v):
    return sum(u[i] * x for i, x in enumerate(mat_vec(m, v)))


def is_symmetric(m) -> bool:
    r, c = dims(m)
    return r == c and all(m[i][j] == m[j][i] for i in range(r) for j in range(i))


def block_diagonal(a, b):
    ra, ca = dims(a)
    rb, cb = dims(b)
    out = zero_matrix(ra + rb, ca + cb)
    for i in range(ra):
        for j in range(ca):
            out[i][j] = a[i][j]
    for i in range(rb):
        for j in range(cb):
            out[ra + i][ca + j] = b[i][j]
    return out


def determinant(m) -> Fraction | int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n, c = dims(m)
    if n != c:
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in m]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 if all(isinstance(x, int) for row in m for x in row) else Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    det = sign * a[n - 1][n - 1]
    if all(isinstance(x, int) for row in m for x in row):
        assert det.denominator == 1
        return int(det)
    return det


def rational_inverse(m) -> QMatrix:
    """Exact inverse over Q via Gauss-Jordan.

    Raises SingularMatrixError when det(m) = 0.  The result satisfies
    m * inverse(m) = identity exactly.
    """
    n, c = dims(m)
    if n != c:
        raise ValueError("inverse of non-square matrix")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass
class SmithForm:
    """Diagonalization U * M * Vt = D over Z.

    D is diagonal with nonnegative invariant factors d_1 | d_2 | ...;
    U and Vt are unimodular.  `diagonal` lists the d_i (including any
    trailing zeros for a rank-deficient M).
    """

    d: Matrix
    u: Matrix
    vt: Matrix

    @property
    def diagonal(self) -> list[int]:
        r, c = dims(self.d)
        return [self.d[i][i] for i in range(min(r, c))]

    def invariant_factors(self) -> list[int]:
        """Nontrivial torsion factors: the d_i not in {0, 1}."""
        return [x for x in self.diagonal if x not in (0, 1)]

    def free_rank_of_cokernel(self) -> int:
        """Free rank of Z^rows / (column span of M)."""
        r, _ = dims(self.d)
        return r - sum(1 for x in self.diagonal if x != 0)

    def verify(self, m: Matrix) -> bool:
        return (mat_mul(mat_mul(self.u, m), self.vt) == self.d
                and abs(determinant(self.u)) == 1
                and abs(determinant(self.vt)) == 1)


def _smallest_pivot(a, start, rows, cols):
    best = None
    for i in range(start, rows):
        for j in range(start, cols):
            if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(m: Matrix) -> SmithForm:
    """Smith normal form with accumulated unimodular transforms.

    Smallest-nonzero-entry pivoting keeps intermediate entries small at
    the sizes used here.  Returns SmithForm(d, u, vt) with u*m*vt = d,
    d_i >= 0 and d_i | d_{i+1}.
    """
    rows, cols = dims(m)
    a = copy_matrix(m)
    u = identity(rows)
    vt = identity(cols)

    def row_op(i, j, q):  # row i -= q * row j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col i -= q * col j
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            vt[r][i] -= q * vt[r][j]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in range(rows):
                a[r][i], a[r][j] = a[r][j], a[r][i]
            for r in range(cols):
                vt[r][i], vt[r][j] = vt[r][j], vt[r][i]

    def clear_at(k):
        """Make a[k][k] the gcd of the trailing block's row/col k and
        zero out the rest of row k and column k."""
        while True:
            piv = _smallest_pivot(a, k, rows, cols)
            if piv is None:
                return False
            swap_rows(k, piv[0])
            swap_cols(k, piv[1])
            dirty = False
            for i in range(k + 1, rows):
                if a[i][k] != 0:
                    row_op(i, k, a[i][k] // a[k][k])
                    if a[i][k] != 0:  # non-exact division: smaller remainder
                        dirty = True
            for j in range(k + 1, cols):
                if a[k][j] != 0:
                    col_op(j, k, a[k][j] // a[k][k])
                    if a[k][j] != 0:
                        dirty = True
            if not dirty:
                return True

    rank = 0
    for k in range(min(rows, cols)):
        if not clear_at(k):
            break
        rank += 1

    # Enforce the divisibility chain d_i | d_{i+1}: fold an offending
    # column into its predecessor and re-clear from that position.
    i = 0
    while i < rank - 1:
        if a[i + 1][i + 1] % a[i][i] != 0:
            col_op(i, i + 1, -1)  # col i += col i+1; brings d_{i+1} below d_i
            clear_at(i)
            i = max(i - 1, 0)     # gcd shrank d_i; earlier links may break
        else:
            i += 1

    for i in range(rank):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    sf = SmithForm(d=a, u=u, vt=vt)
    if not sf.verify(m):
        raise AssertionError("Smith form verification failed")
    return sf


def cokernel_invariants(m: Matrix) -> tuple[list[int], int]:
    """Invariant factors (excluding 1s) and free rank of Z^r / im(M).

    The cokernel of an r x c matrix M (columns = relations) is
    Z^r / M Z^c; by symmetry of SNF we may feed rows-as-relations too.
    """
    sf = smith_normal_form(m)
    return sf.invariant_factors(), sf.free_rank_of_cokernel()


# ---------------------------------------------------------------------------
# Exact signature of rational symmetric matrices
# ---------------------------------------------------------------------------

def symmetric_signature(m) -> tuple[int, int, int]:
    """Inertia (n_plus, n_zero, n_minus) of a symmetric rational matrix.

    Symmetric Gaussian congruence over Q: pivot on nonzero diagonal
    entries; when the diagonal is all zero but some off-diagonal entry
    a != 0 survives, the basis change e_i -> e_i + e_j manufactures the
    diagonal entry 2a, so no eigenvalue computation is ever needed.
    """
    n, c = dims(m)
    if n != c or not is_symmetric(m):
        raise NonSymmetricError("signature requires a symmetric matrix")
    a = [[Fraction(x) for x in row] for row in m]
    live = list(range(n))
    n_plus = n_minus = n_zero = 0

    def add_row_col(i, j):  # e_i -> e_i + e_j, symmetric update
        a[i] = [x + y for x, y in zip(a[i], a[j])]
        for r in range(n):
            a[r][i] += a[r][j]

    while live:
        pivot = next((i for i in live if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in live for j in live
                         if i != j and a[i][j] != 0), None)
            if pair is None:
                n_zero += len(live)
                break
            add_row_col(*pair)
            pivot = pair[0]
        p = a[pivot][pivot]
        if p > 0:
            n_plus += 1
        else:
            n_minus += 1
        live.remove(pivot)
        for i in live:
            if a[i][pivot] != 0:
                f = a[i][pivot] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[pivot])]
                for r in range(n):
                    a[r][i] -= f * a[r][pivot]
    return n_plus, n_zero, n_minus


def signature(m) -> int:
    """sigma = n_plus - n_minus of a symmetric rational matrix."""
    p, _, q = symmetric_signature(m)
    return p - q


# ---------------------------------------------------------------------------
# Resultants (used as an independent oracle for branched-cover orders)
# ---------------------------------------------------------------------------

def sylvester_resultant(f: list[int], g: list[int]) -> int:
    """Resultant of two integer polynomials (coefficient lists, low degree
    first) via the Sylvester matrix determinant."""
    while f and f[-1] == 0:
        f = f[:-1]
    while g and g[-1] == 0:
        g = g[:-1]
    if not f or not g:
        return 0
    n, m = len(f) - 1, len(g) - 1
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    s = zero_matrix(size, size)
    frev, grev = f[::-1], g[::-1]
    for i in range(m):
        for j, cf in enumerate(frev):
            s[i][i + j] = cf
    for i in range(n):
        for j, cg in enumerate(grev):
            s[m + i][i + j] = cg
    return int(determinant(s))
