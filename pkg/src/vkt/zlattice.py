"""Exact integer linear algebra: Smith normal form, kernels, cokernels.

Everything here is over plain Python ints (arbitrary precision) or
fractions.Fraction; no floating point anywhere.  Matrices are immutable
and small (desk scale, dimensions up to ~50).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class IntMatrix:
    """An immutable integer matrix, entries stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(int(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, diag, rows=None, cols=None):
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        ent = [0] * (rows * cols)
        for i, d in enumerate(diag):
            ent[i * cols + i] = d
        return cls(rows, cols, ent)

    def at(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [self.at(i, j) for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __mul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ent = []
            for i in range(self.rows):
                ri = self.row(i)
                for j in range(other.cols):
                    ent.append(sum(ri[k] * other.at(k, j) for k in range(self.cols)))
            return IntMatrix(self.rows, other.cols, ent)
        return NotImplemented

    def apply(self, vec):
        """Matrix times column vector; accepts ints or Fractions."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(self.at(i, j) * vec[j] for j in range(self.cols))
                     for i in range(self.rows))

    def is_diagonal(self):
        return all(self.at(i, j) == 0
                   for i in range(self.rows) for j in range(self.cols) if i != j)

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self.at(i, j) == self.at(j, i)
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def determinant(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = D with U, V unimodular and D in Smith normal form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def invariant_diagonal(self):
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D.at(i, i) for i in range(n))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finitely generated abelian group: torsion invariant factors + free rank.

    invariant_factors excludes 1's and divide successively; generator_reps
    (when present) express generators of the corresponding summands in the
    coordinates of the lattice being quotiented.
    """

    invariant_factors: tuple
    free_rank: int
    generator_reps: tuple = ()

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for f in self.invariant_factors:
            n *= f
        return n

    def is_trivial(self):
        return not self.invariant_factors and self.free_rank == 0

    def __str__(self):
        parts = [f"Z/{f}" for f in self.invariant_factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def _find_pivot(a, t, rows, cols):
    """Smallest |a[i][j]| != 0 in the trailing submatrix, ties row-then-column."""
    best = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = abs(a[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    return None if best is None else (best[1], best[2])


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Diagonalize M over Z: U*M*V = D, d_i >= 0 and d_i | d_{i+1}.

    Deterministic: pivots are chosen by smallest absolute value, ties
    broken by row index then column index.
    """
    rows, cols = M.rows, M.cols
    a = M.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        pos = _find_pivot(a, t, rows, cols)
        if pos is None:
            break
        if pos[0] != t:
            swap_rows(t, pos[0])
        if pos[1] != t:
            swap_cols(t, pos[1])
        while True:
            # reduce column t, then row t, against the pivot
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if done:
                break
            pos = _find_pivot(a, t, rows, cols)
            if pos[0] != t:
                swap_rows(t, pos[0])
            if pos[1] != t:
                swap_cols(t, pos[1])
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    # enforce the divisibility chain d_i | d_{i+1}
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if di and dj % di == 0:
                continue
            changed = True
            # fold the 2x2 block diag(di, dj) into diag(gcd, lcm)
            g, x, y = _xgcd(di, dj)
            # U2 = [[x, y], [-dj/g, di/g]], V2 = [[1, -y*dj/g], [1, x*di/g]]
            p, q = i, i + 1
            rowp = [x * ap + y * aq for ap, aq in zip(a[p], a[q])]
            rowq = [(-dj // g) * ap + (di // g) * aq for ap, aq in zip(a[p], a[q])]
            a[p], a[q] = rowp, rowq
            urowp = [x * ap + y * aq for ap, aq in zip(u[p], u[q])]
            urowq = [(-dj // g) * ap + (di // g) * aq for ap, aq in zip(u[p], u[q])]
            u[p], u[q] = urowp, urowq
            for rr in a:
                cp, cq = rr[p], rr[q]
                rr[p] = cp + cq
                rr[q] = (-(y * dj) // g) * cp + ((x * di) // g) * cq
            for rr in v:
                cp, cq = rr[p], rr[q]
                rr[p] = cp + cq
                rr[q] = (-(y * dj) // g) * cp + ((x * di) // g) * cq

    D = IntMatrix.from_rows(a)
    return SmithDecomposition(IntMatrix.from_rows(u), D, IntMatrix.from_rows(v))


def _xgcd(p, q):
    """g, x, y with x*p + y*q = g = gcd(p, q), g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while q:
        k, p, q = p // q, q, p % q
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if p < 0:
        p, x0, y0 = -p, -x0, -y0
    return p, x0, y0


def rank(M: IntMatrix) -> int:
    d = smith_normal_form(M).invariant_diagonal()
    return sum(1 for x in d if x != 0)


def kernel_basis(M: IntMatrix):
    """A Z-basis (list of integer tuples) of ker(M); saturated by construction."""
    snf = smith_normal_form(M)
    d = snf.invariant_diagonal()
    r = sum(1 for x in d if x != 0)
    return [snf.V.column(j) for j in range(r, M.cols)]


def cokernel_structure(M: IntMatrix) -> FiniteAbelianGroup:
    """Invariant factors and free rank of coker(M) = Z^rows / M(Z^cols).

    Generators of the nontrivial cyclic summands are returned in the
    coordinates of the quotiented lattice Z^rows.
    """
    snf = smith_normal_form(M)
    d = snf.invariant_diagonal()
    uinv = inverse_unimodular(snf.U)
    factors = []
    gens = []
    for i, di in enumerate(d):
        if di > 1:
            factors.append(di)
            gens.append(uinv.column(i))
    free = M.rows - sum(1 for x in d if x != 0)
    for i in range(M.rows):
        if i >= len(d) or d[i] == 0:
            gens.append(uinv.column(i))
    return FiniteAbelianGroup(tuple(factors), free, tuple(gens))


def inverse_unimodular(M: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix (det +-1)."""
    inv = inverse_rational(M)
    ent = []
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            ent.append(x.numerator)
    return IntMatrix(M.rows, M.cols, ent)


def inverse_rational(M: IntMatrix):
    """Inverse over Q as a list of Fraction rows; raises on singular input."""
    if M.rows != M.cols:
        raise ValueError("inverse of non-square matrix")
    n = M.rows
    a = [[Fraction(M.at(i, j)) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def solve_rational(M: IntMatrix, vec):
    """The unique rational solution x of M x = vec for invertible M."""
    inv = inverse_rational(M)
    return tuple(sum(inv[i][j] * Fraction(vec[j]) for j in range(M.cols))
                 for i in range(M.rows))


def matvec_fraction(rows, vec):
    """rows: list of Fraction rows; vec: sequence of numbers."""
    return tuple(sum(r[j] * vec[j] for j in range(len(vec))) for r in rows)


def coset_representatives(M: IntMatrix):
    """Deterministic coset representatives of Z^rows / M(Z^cols).

    Requires the quotient to be finite (square M with det != 0).  Returns
    |det M| integer tuples, one per coset.
    """
    if M.rows != M.cols:
        raise ValueError("finite quotient needs a square matrix")
    snf = smith_normal_form(M)
    d = snf.invariant_diagonal()
    if any(x == 0 for x in d):
        raise ValueError("quotient is infinite")
    uinv = inverse_unimodular(snf.U)
    reps = []
    idx = [0] * len(d)
    while True:
        reps.append(uinv.apply(idx))
        j = len(d) - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < d[j]:
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            break
    return reps
