"""Vectorized arithmetic modulo primes just above 2**60.

Products of two residues need up to 124 bits.  The quotient is estimated in
80-bit extended precision (64-bit mantissa) and the remainder is recovered
with wrapping int64 arithmetic, so the result is exact for any p < 2**62.
Residues are stored as int64 in [0, p).
"""

from __future__ import annotations

import numpy as np

_LD = np.longdouble
MAX_MODULUS = 1 << 62

if np.finfo(_LD).nmant < 63:  # pragma: no cover - platform guard
    raise ImportError("gpencil modular kernels need an 80-bit long double (x86-64)")


class Field:
    """Residue arithmetic for one prime modulus."""

    def __init__(self, p: int):
        if not 2 < p < MAX_MODULUS:
            raise ValueError(f"modulus {p} outside (2, 2**62)")
        self.p = int(p)
        self._p64 = np.int64(p)
        self._inv = _LD(1) / _LD(p)

    def reduce(self, values) -> np.ndarray:
        """Residues of arbitrary Python integers (object or int arrays)."""
        arr = np.asarray(values, dtype=object) % self.p
        return arr.astype(np.int64)

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        q = (a.astype(_LD) * b.astype(_LD) * self._inv).astype(np.int64)
        with np.errstate(over="ignore"):
            r = a * b - q * self._p64
        r = np.where(r < 0, r + self._p64, r)
        return np.where(r >= self._p64, r - self._p64, r)

    def sub(self, a, b) -> np.ndarray:
        r = np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)
        return np.where(r < 0, r + self._p64, r)

    def add(self, a, b) -> np.ndarray:
        r = np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)
        return np.where(r >= self._p64, r - self._p64, r)

    def sum_rows(self, a: np.ndarray) -> np.ndarray:
        """Sum over axis 0, reducing mod p after every pairwise addition."""
        a = np.asarray(a, dtype=np.int64)
        while a.shape[0] > 1:
            half = a.shape[0] // 2
            top = self.add(a[:half], a[half:2 * half])
            a = np.concatenate([top, a[2 * half:]]) if a.shape[0] % 2 else top
        if a.shape[0] == 0:
            return np.zeros(a.shape[1:], dtype=np.int64)
        return a[0]

    def inv(self, x: int) -> int:
        return pow(int(x), -1, self.p)


def det_mod(field: Field, A: np.ndarray) -> int:
    """Determinant of a residue matrix by Gaussian elimination with row swaps."""
    A = np.array(A, dtype=np.int64, copy=True)
    n = A.shape[0]
    p = field.p
    det = 1
    for k in range(n):
        nz = np.flatnonzero(A[k:, k])
        if nz.size == 0:
            return 0
        piv = k + int(nz[0])
        if piv != k:
            A[[k, piv]] = A[[piv, k]]
            det = -det
        pivot = int(A[k, k])
        det = det * pivot % p
        if k + 1 == n:
            break
        factors = field.mul(A[k + 1:, k], field.inv(pivot))
        rows = np.flatnonzero(factors)
        if rows.size:
            upd = field.mul(factors[rows, None], A[k, None, k + 1:])
            A[k + 1 + rows, k + 1:] = field.sub(A[k + 1 + rows, k + 1:], upd)
    return det % p


class LeadingRankTracker:
    """Ranks of all leading principal submatrices of one matrix mod p.

    Rows and columns are admitted one index at a time.  The admitted rows are
    kept in reduced row-echelon form with respect to the admitted columns, over
    the full width of the matrix, so admitting index n costs O(n * width)
    residue operations instead of a fresh O(n**3) elimination.
    """

    def __init__(self, field: Field, A: np.ndarray):
        self.field = field
        self.A = np.asarray(A, dtype=np.int64)
        self.width = self.A.shape[1]
        self.E = np.zeros_like(self.A)
        self.size = 0
        self.pivot_col_of_row: dict[int, int] = {}
        self.free_rows: list[int] = []
        self.pivot_cols = np.zeros(self.width, dtype=bool)

    @property
    def rank(self) -> int:
        return len(self.pivot_col_of_row)

    def _active_columns(self, start: int) -> np.ndarray:
        below = np.flatnonzero(~self.pivot_cols[:start])
        return np.concatenate([below, np.arange(start, self.width)])

    def _make_pivot(self, row: int, col: int, cols: np.ndarray):
        f = self.field
        E = self.E
        scale = f.inv(E[row, col])
        E[row, cols] = f.mul(E[row, cols], scale)
        others = [r for r in range(self.size) if r != row and E[r, col] != 0]
        if others:
            others = np.array(others)
            upd = f.mul(E[others, col][:, None], E[row, cols][None, :])
            E[np.ix_(others, cols)] = f.sub(E[np.ix_(others, cols)], upd)
        self.pivot_col_of_row[row] = col
        self.pivot_cols[col] = True

    def admit(self) -> int:
        """Admit the next index; return the rank of the new leading block."""
        f = self.field
        n = self.size
        if n >= self.A.shape[0]:
            raise IndexError("all indices already admitted")
        cols = self._active_columns(n)
        row = self.A[n].copy()
        if self.pivot_col_of_row:
            prow = np.fromiter(self.pivot_col_of_row.keys(), dtype=np.int64)
            pcol = np.fromiter(self.pivot_col_of_row.values(), dtype=np.int64)
            coef = row[pcol]
            keep = coef != 0
            if keep.any():
                prods = f.mul(coef[keep][:, None], self.E[np.ix_(prow[keep], cols)])
                row[cols] = f.sub(row[cols], f.sum_rows(prods))
            row[pcol] = 0
        self.E[n] = row
        self.size = n + 1

        # new row may pivot on a column that was free in the previous block
        free_cols = np.flatnonzero((row[:n] != 0) & ~self.pivot_cols[:n])
        if free_cols.size:
            self._make_pivot(n, int(free_cols[0]), cols)
        else:
            self.free_rows.append(n)

        # new column may give a pivot to one of the rows zero on columns < n
        cand = [r for r in self.free_rows if self.E[r, n] != 0]
        if cand:
            r = min(cand)
            self.free_rows.remove(r)
            self._make_pivot(r, n, cols)
        return self.rank

    def leading_ranks(self, upto: int) -> list[int]:
        return [self.admit() for _ in range(upto - self.size)]
