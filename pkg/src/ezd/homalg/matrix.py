"""Matrices over a quotient ring."""
from __future__ import annotations

from itertools import combinations
from typing import Optional

from ..errors import InputError, RingMismatch


class RMatrix:
    """Immutable matrix of normal-formed ring elements."""

    __slots__ = ("ring", "entries", "nrows", "ncols")

    def __init__(self, ring, rows, ncols: Optional[int] = None):
        rows = [list(r) for r in rows]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise InputError(f"ragged matrix: row lengths {sorted(widths)}")
        width = widths.pop() if rows else (ncols or 0)
        if ncols is not None and width != ncols:
            raise InputError(f"expected {ncols} columns, got {width}")
        self.ring = ring
        self.entries = tuple(tuple(ring.element(e) for e in r) for r in rows)
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zero(cls, ring, r, c):
        return cls(ring, [[0] * c for _ in range(r)], c)

    @classmethod
    def from_columns(cls, ring, columns, nrows):
        columns = [list(c) for c in columns]
        if any(len(c) != nrows for c in columns):
            raise InputError("column length does not match the row count")
        return cls(ring, [[c[i] for c in columns] for i in range(nrows)], len(columns))

    @classmethod
    def block_diag(cls, ring, *blocks):
        r = sum(b.nrows for b in blocks)
        c = sum(b.ncols for b in blocks)
        rows = [[0] * c for _ in range(r)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[i0 + i][j0 + j] = b.entries[i][j]
            i0 += b.nrows
            j0 += b.ncols
        return cls(ring, rows, c)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def column_terms(self):
        """Columns as tuples of normal-form term dicts (engine input)."""
        return [tuple(e.rep._terms for e in col) for col in self.columns()]

    def transpose(self):
        return RMatrix(self.ring, self.columns(), self.nrows)

    def _check(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch("matrices over different rings")
        return other

    def __mul__(self, other):
        if not isinstance(other, RMatrix):
            c = self.ring.element(other)
            return RMatrix(self.ring, [[c * e for e in r] for r in self.entries], self.ncols)
        other = self._check(other)
        if self.ncols != other.nrows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero()
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return RMatrix(self.ring, rows, other.ncols)

    def __rmul__(self, c):
        return self * c

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.shape != other.shape:
            raise InputError("shape mismatch")
        return RMatrix(self.ring, [[a + b for a, b in zip(r, s)]
                                   for r, s in zip(self.entries, other.entries)], self.ncols)

    def __neg__(self):
        return RMatrix(self.ring, [[-a for a in r] for r in self.entries], self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def is_zero(self):
        return all(e.is_zero() for r in self.entries for e in r)

    def is_minimal(self):
        """True when every entry lies in the maximal ideal."""
        return not any(e.is_unit() for r in self.entries for e in r)

    def unit_entry(self):
        for i, r in enumerate(self.entries):
            for j, e in enumerate(r):
                if e.is_unit():
                    return i, j
        return None

    def is_homogeneous(self):
        return all(e.is_homogeneous() for r in self.entries for e in r)

    def max_entry_degree(self):
        return max((e.degree() for r in self.entries for e in r), default=-1)

    # -- elementary operations (return new matrices) -----------------------
    def add_row_multiple(self, target, source, c):
        """row[target] += c * row[source]."""
        c = self.ring.element(c)
        rows = [list(r) for r in self.entries]
        rows[target] = [a + c * b for a, b in zip(rows[target], rows[source])]
        return RMatrix(self.ring, rows, self.ncols)

    def add_col_multiple(self, target, source, c):
        """col[target] += c * col[source]."""
        c = self.ring.element(c)
        rows = [list(r) for r in self.entries]
        for r in rows:
            r[target] = r[target] + c * r[source]
        return RMatrix(self.ring, rows, self.ncols)

    def scale_row(self, i, u):
        u = self.ring.element(u)
        rows = [list(r) for r in self.entries]
        rows[i] = [u * a for a in rows[i]]
        return RMatrix(self.ring, rows, self.ncols)

    def scale_col(self, j, u):
        u = self.ring.element(u)
        rows = [list(r) for r in self.entries]
        for r in rows:
            r[j] = u * r[j]
        return RMatrix(self.ring, rows, self.ncols)

    def swap_rows(self, i, j):
        rows = list(self.entries)
        rows[i], rows[j] = rows[j], rows[i]
        return RMatrix(self.ring, rows, self.ncols)

    def swap_cols(self, i, j):
        rows = [list(r) for r in self.entries]
        for r in rows:
            r[i], r[j] = r[j], r[i]
        return RMatrix(self.ring, rows, self.ncols)

    def delete(self, row=None, col=None):
        rows = [[e for j, e in enumerate(r) if j != col]
                for i, r in enumerate(self.entries) if i != row]
        ncols = self.ncols - (col is not None)
        return RMatrix(self.ring, rows, ncols)

    def submatrix(self, rows, cols):
        return RMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows], len(cols))

    # -- minors ------------------------------------------------------------
    def determinant(self):
        if self.nrows != self.ncols:
            raise InputError("determinant of a non-square matrix")
        return _det(self.entries, tuple(range(self.nrows)), tuple(range(self.ncols)), {}, self.ring)

    def minors(self, k):
        """All k x k minors; k = 0 gives [1]."""
        if k == 0:
            return [self.ring.one()]
        if k > self.nrows or k > self.ncols:
            return []
        memo = {}
        return [_det(self.entries, rs, cs, memo, self.ring)
                for rs in combinations(range(self.nrows), k)
                for cs in combinations(range(self.ncols), k)]

    # -- printing ----------------------------------------------------------
    def to_lists(self):
        return [[str(e) for e in r] for r in self.entries]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(r) + "]" for r in self.to_lists()) + "]"

    def __repr__(self):
        return f"RMatrix({self})"

    def pretty(self):
        cells = self.to_lists()
        if not cells or not self.ncols:
            return f"<{self.nrows}x{self.ncols} matrix>"
        widths = [max(len(cells[i][j]) for i in range(self.nrows)) for j in range(self.ncols)]
        return "\n".join("[ " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + " ]" for r in cells)


def _det(entries, rows, cols, memo, ring):
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        out = entries[rows[0]][cols[0]]
    else:
        out = ring.zero()
        r0, rest = rows[0], rows[1:]
        for idx, c in enumerate(cols):
            a = entries[r0][c]
            if a.is_zero():
                continue
            sub = _det(entries, rest, cols[:idx] + cols[idx + 1:], memo, ring)
            if sub.is_zero():
                continue
            term = a * sub
            out = out - term if idx % 2 else out + term
    memo[key] = out
    return out
