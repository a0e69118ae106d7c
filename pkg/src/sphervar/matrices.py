"""Exact integer matrices, Hermite and Smith normal forms, small helpers.

Everything here works on arbitrary-precision Python ints (or Fractions for
the few rational routines); there is no floating point anywhere.

Conventions:
  * HNF is row-style: ``u @ a == h`` with ``u`` unimodular, ``h`` in echelon
    form with positive pivots and entries above each pivot reduced into
    ``[0, pivot)``.
  * SNF returns the nonzero invariant factors ``d_1 | d_2 | ...`` together
    with unimodular ``u, v`` such that ``u @ a @ v`` is the rectangular
    diagonal matrix carrying those factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import InvalidInputError

Vec = tuple[int, ...]


# ---------------------------------------------------------------------------
# vector helpers

def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise InvalidInputError(f"dot: length mismatch {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Sequence) -> tuple:
    return tuple(-a for a in u)


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def is_zero_vec(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def primitive_vector(vec: Sequence) -> Vec:
    """Scale a rational vector to the primitive integer vector with the
    same direction (the zero vector stays zero)."""
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class IntMatrix:
    """Immutable rectangular matrix with exact integer entries."""

    nrows: int
    ncols: int
    entries: tuple[Vec, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.nrows:
            raise InvalidInputError("IntMatrix: row count mismatch")
        for row in self.entries:
            if len(row) != self.ncols:
                raise InvalidInputError("IntMatrix: ragged rows")
            for x in row:
                if not isinstance(x, int):
                    raise InvalidInputError(f"IntMatrix: non-integer entry {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        tup = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not tup:
                raise InvalidInputError("IntMatrix.from_rows: ncols required for empty matrix")
            ncols = len(tup[0])
        return cls(len(tup), ncols, tup)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols, tuple(tuple(0 for _ in range(ncols)) for _ in range(nrows)))

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.ncols, self.nrows,
                         tuple(tuple(self.entries[i][j] for i in range(self.nrows))
                               for j in range(self.ncols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise InvalidInputError("matmul: shape mismatch")
        cols = other.transpose().entries
        return IntMatrix(self.nrows, other.ncols,
                         tuple(tuple(dot(r, c) for c in cols) for r in self.entries))

    def __repr__(self) -> str:  # pragma: no cover
        return f"IntMatrix({list(map(list, self.entries))})"


def det(a: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if a.nrows != a.ncols:
        raise InvalidInputError("det: matrix not square")
    n = a.nrows
    if n == 0:
        return 1
    m = [list(r) for r in a.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _row_sub(m: list[list[int]], i: int, j: int, q: int) -> None:
    # row_i -= q * row_j
    ri, rj = m[i], m[j]
    for k in range(len(ri)):
        ri[k] -= q * rj[k]


def _col_sub(m: list[list[int]], i: int, j: int, q: int) -> None:
    # col_i -= q * col_j
    for row in m:
        row[i] -= q * row[j]


def hnf(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``u @ a == h``, ``u`` unimodular, ``h`` in
    echelon form with positive pivots and reduced entries above them.
    """
    m, n = a.nrows, a.ncols
    h = [list(r) for r in a.entries]
    u = [list(r) for r in IntMatrix.identity(m).entries]
    pr = 0
    for col in range(n):
        while True:
            nz = [i for i in range(pr, m) if h[i][col] != 0]
            if not nz:
                pivot = None
                break
            if len(nz) == 1:
                pivot = nz[0]
                break
            best = min(nz, key=lambda i: abs(h[i][col]))
            for i in nz:
                if i == best:
                    continue
                q = h[i][col] // h[best][col]
                _row_sub(h, i, best, q)
                _row_sub(u, i, best, q)
        if pivot is None:
            continue
        if pivot != pr:
            h[pivot], h[pr] = h[pr], h[pivot]
            u[pivot], u[pr] = u[pr], u[pivot]
        if h[pr][col] < 0:
            h[pr] = [-x for x in h[pr]]
            u[pr] = [-x for x in u[pr]]
        for i in range(pr):
            q = h[i][col] // h[pr][col]
            if q:
                _row_sub(h, i, pr, q)
                _row_sub(u, i, pr, q)
        pr += 1
    return IntMatrix.from_rows(h, n), IntMatrix.from_rows(u, m)


def snf(a: IntMatrix) -> tuple[tuple[int, ...], IntMatrix, IntMatrix]:
    """Smith normal form with transforms.

    Returns ``(diag, u, v)`` where ``diag`` lists the nonzero invariant
    factors (positive, each dividing the next) and ``u @ a @ v`` is the
    rectangular diagonal matrix with ``diag`` on its leading diagonal.
    """
    m, n = a.nrows, a.ncols
    d = [list(r) for r in a.entries]
    u = [list(r) for r in IntMatrix.identity(m).entries]
    v = [list(r) for r in IntMatrix.identity(n).entries]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        candidates = [(abs(d[i][j]), i, j)
                      for i in range(t, m) for j in range(t, n) if d[i][j] != 0]
        if not candidates:
            break
        _, pi, pj = min(candidates)
        if pi != t:
            swap_rows(pi, t)
        if pj != t:
            swap_cols(pj, t)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    _row_sub(d, i, t, q)
                    _row_sub(u, i, t, q)
                    if d[i][t]:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    _col_sub(d, j, t, q)
                    _col_sub(v, j, t, q)
                    if d[t][j]:
                        swap_cols(j, t)
                        dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry for the chain to hold
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_sub(d, t, offender, -1)
            _row_sub(u, t, offender, -1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    diag = tuple(d[i][i] for i in range(min(m, n)) if d[i][i] != 0)
    return diag, IntMatrix.from_rows(u, m), IntMatrix.from_rows(v, n)


# ---------------------------------------------------------------------------
# rational routines (exact, Fraction based)

def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a list of rational vectors."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    while rank < len(work) and col < ncols:
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / prow[col]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        rank += 1
        col += 1
    return rank


def in_rational_span(rows: Sequence[Sequence], v: Sequence) -> bool:
    """Whether ``v`` lies in the rational span of ``rows``."""
    base = [list(r) for r in rows]
    return rational_rank(base) == rational_rank(base + [list(v)])


def solve_combination(rows: Sequence[Sequence], target: Sequence
                      ) -> tuple[Fraction, ...] | None:
    """One exact solution ``x`` of ``sum x_i rows[i] == target`` (free
    variables set to zero), or None when the system is inconsistent."""
    k = len(rows)
    if k == 0:
        return () if all(Fraction(t) == 0 for t in target) else None
    n = len(rows[0])
    # columns are the unknown coefficients: row-reduce the transpose
    aug = [[Fraction(rows[i][j]) for i in range(k)] + [Fraction(target[j])]
           for j in range(n)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pval = aug[r][col]
        aug[r] = [x / pval for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
    if any(aug[i][k] != 0 for i in range(r, n)):
        return None
    x = [Fraction(0)] * k
    for row, col in pivots:
        x[col] = aug[row][k]
    return tuple(x)


def invert_unimodular(a: IntMatrix) -> IntMatrix:
    """Inverse of an integer matrix with determinant +-1."""
    if a.nrows != a.ncols:
        raise InvalidInputError("invert_unimodular: matrix not square")
    n = a.nrows
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a.entries)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            raise InvalidInputError("invert_unimodular: matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        pval = work[col][col]
        work[col] = [x / pval for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    inv = []
    for i in range(n):
        row = work[i][n:]
        if any(x.denominator != 1 for x in row):
            raise InvalidInputError("invert_unimodular: matrix is not unimodular")
        inv.append(tuple(int(x) for x in row))
    return IntMatrix.from_rows(inv, n)


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> tuple[Vec, ...]:
    """Canonical basis of ``{x in Z^ncols : row . x == 0 for every row}``.

    The result is saturated (primitive) and returned as the HNF basis of
    the kernel lattice; with no rows it is the standard basis.
    """
    if not rows:
        return tuple(IntMatrix.identity(ncols).entries)
    a = IntMatrix.from_rows(rows, ncols)
    diag, _, v = snf(a)
    r = len(diag)
    cols = v.transpose().entries  # columns of v as rows
    basis = cols[r:]
    if not basis:
        return ()
    h, _ = hnf(IntMatrix.from_rows(basis, ncols))
    return tuple(row for row in h.entries if not is_zero_vec(row))
