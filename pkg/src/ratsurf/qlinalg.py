"""Exact dense linear algebra over the rationals.

Entries are fractions.Fraction throughout; floats are rejected at the
boundary so no rounding can sneak in. Everything is plain Gaussian
elimination with exact pivots, which is all the rest of the package needs:
ranks, kernels, determinants and column-span membership of smallish
matrices.

Kernel bases come out in free-column normalized form: basis vector t has
value 1 at its own free column and 0 at the free columns of the other
basis vectors. Callers rely on this to read off coordinates of a kernel
element directly from its free-column entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def as_fraction(x) -> Fraction:
    """Coerce int/Fraction to Fraction, rejecting anything inexact."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError("exact scalar expected (int or Fraction), got %r" % (x,))


class QMatrix:
    """Immutable dense matrix over Q (row-major)."""

    __slots__ = ("rows", "cols", "_a")

    def __init__(self, rows: int, cols: int, entries: Iterable) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        data = [as_fraction(x) for x in entries]
        if len(data) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(data)))
        self.rows = rows
        self.cols = cols
        self._a = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
            flat.extend(row)
        return cls(r, c, flat)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        m = [0] * (n * n)
        for i in range(n):
            m[i * n + i] = 1
        return cls(n, n, m)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("index out of range")
        return self._a[i * self.cols + j]

    def row(self, i: int) -> list:
        return self._a[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> list:
        return [self._a[i * self.cols + j] for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        out = []
        for j in range(self.cols):
            for i in range(self.rows):
                out.append(self._a[i * self.cols + j])
        return QMatrix(self.cols, self.rows, out)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                s = Fraction(0)
                for k, x in enumerate(ri):
                    if x:
                        s += x * other._a[k * other.cols + j]
                out.append(s)
        return QMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._a == other._a
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self._a)))

    def __repr__(self) -> str:
        return "QMatrix(%d x %d)" % (self.rows, self.cols)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        a, n = self._a, self.cols
        return all(a[i * n + j] == a[j * n + i] for i in range(n) for j in range(i))

    def is_zero(self) -> bool:
        return not any(self._a)

    # ----- elimination ----------------------------------------------------

    def _echelon_rows(self):
        """Forward elimination. Returns (work rows, pivot column list)."""
        work = [self.row(i) for i in range(self.rows)]
        pivots = []
        r = 0
        for c in range(self.cols):
            p = next((i for i in range(r, len(work)) if work[i][c]), None)
            if p is None:
                continue
            work[r], work[p] = work[p], work[r]
            prow = work[r]
            inv = 1 / prow[c]
            for i in range(r + 1, len(work)):
                x = work[i][c]
                if x:
                    f = x * inv
                    wi = work[i]
                    for jj in range(c, self.cols):
                        if prow[jj]:
                            wi[jj] -= f * prow[jj]
            pivots.append(c)
            r += 1
        return work, pivots

    def rank(self) -> int:
        return len(self._echelon_rows()[1])

    def kernel_dim(self) -> int:
        return self.cols - self.rank()

    def kernel_basis(self) -> list:
        """Basis of the right kernel, free-column normalized (see module doc)."""
        work, pivots = self._echelon_rows()
        npiv = len(pivots)
        # back-substitute to reduced echelon form
        for t in range(npiv - 1, -1, -1):
            c = pivots[t]
            prow = work[t]
            inv = 1 / prow[c]
            if inv != 1:
                for jj in range(c, self.cols):
                    if prow[jj]:
                        prow[jj] *= inv
            for i in range(t):
                x = work[i][c]
                if x:
                    wi = work[i]
                    for jj in range(c, self.cols):
                        if prow[jj]:
                            wi[jj] -= x * prow[jj]
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for t, c in enumerate(pivots):
                v[c] = -work[t][f]
            basis.append(v)
        return basis

    def kernel_free_columns(self) -> list:
        """Free (non-pivot) column indices, matching kernel_basis order."""
        _, pivots = self._echelon_rows()
        pivot_set = set(pivots)
        return [c for c in range(self.cols) if c not in pivot_set]

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        work = [self.row(i) for i in range(n)]
        sign = 1
        det = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if work[i][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                work[c], work[p] = work[p], work[c]
                sign = -sign
            prow = work[c]
            det *= prow[c]
            inv = 1 / prow[c]
            for i in range(c + 1, n):
                x = work[i][c]
                if x:
                    f = x * inv
                    wi = work[i]
                    for jj in range(c, n):
                        if prow[jj]:
                            wi[jj] -= f * prow[jj]
        return det * sign

    def leading_principal_minor(self, k: int) -> Fraction:
        if not (0 <= k <= min(self.rows, self.cols)):
            raise ValueError("minor size out of range")
        sub = []
        for i in range(k):
            sub.extend(self.row(i)[:k])
        return QMatrix(k, k, sub).det()


def mat_rank(m: QMatrix) -> int:
    return m.rank()


def mat_kernel_dim(m: QMatrix) -> int:
    return m.kernel_dim()


def mat_stack_vertical(ms: Sequence[QMatrix], cols: int | None = None) -> QMatrix:
    """Stack matrices vertically. An empty list needs a declared column count."""
    if not ms:
        if cols is None:
            raise ValueError("empty stack needs an explicit column count")
        return QMatrix.zero(0, cols)
    c = ms[0].cols
    if cols is not None and cols != c:
        raise ValueError("declared column count disagrees with the matrices")
    flat = []
    rows = 0
    for m in ms:
        if m.cols != c:
            raise ValueError("column count mismatch in vertical stack")
        flat.extend(m._a)
        rows += m.rows
    return QMatrix(rows, c, flat)


def in_column_span(m: QMatrix, vec: Sequence) -> bool:
    """Is vec a linear combination of the columns of m?"""
    v = [as_fraction(x) for x in vec]
    if len(v) != m.rows:
        raise ValueError("vector length must match row count")
    aug = []
    for i in range(m.rows):
        aug.extend(m.row(i))
        aug.append(v[i])
    return QMatrix(m.rows, m.cols + 1, aug).rank() == m.rank()
