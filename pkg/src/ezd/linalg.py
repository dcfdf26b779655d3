"""Sparse exact linear algebra over a field.

Vectors are dicts ``coordinate -> coefficient``.  Coordinates may be any
hashable value; a sort key decides which coordinate of a vector is its pivot
(the largest one).  `Echelon` keeps a *fully reduced* echelon basis, so the
basis it holds is a canonical function of the subspace and the key.
"""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Optional

Vector = Dict[Hashable, object]


def _identity(c):
    return c


class Echelon:
    """Incrementally built reduced row echelon basis of a subspace."""

    def __init__(self, field, key: Optional[Callable] = None, vectors: Iterable[Vector] = ()):
        self.field = field
        self.key = key or _identity
        self.rows: Dict[Hashable, Vector] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def copy(self):
        e = Echelon(self.field, self.key)
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        return e

    def reduce(self, v: Vector) -> Vector:
        f = self.field
        out = dict(v)
        rows = self.rows
        for p in [c for c in v if c in rows]:
            c = out.get(p)
            if not c:
                continue
            for col, val in rows[p].items():
                nv = f.reduce(out.get(col, 0) - c * val)
                if nv:
                    out[col] = nv
                else:
                    out.pop(col, None)
        return out

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def add(self, v: Vector) -> bool:
        """Insert `v`; return True when the dimension grew."""
        r = self.reduce(v)
        if not r:
            return False
        f = self.field
        pivot = max(r, key=self.key)
        inv = f.inv(r[pivot])
        if inv != 1:
            r = {col: f.reduce(val * inv) for col, val in r.items()}
        for q, row in self.rows.items():
            c = row.get(pivot)
            if c:
                for col, val in r.items():
                    nv = f.reduce(row.get(col, 0) - c * val)
                    if nv:
                        row[col] = nv
                    else:
                        row.pop(col, None)
        self.rows[pivot] = r
        return True

    def extend(self, vectors: Iterable[Vector]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def basis(self) -> List[Vector]:
        """Canonical basis, sorted by descending pivot."""
        return [self.rows[p] for p in sorted(self.rows, key=self.key, reverse=True)]

    def pivots(self):
        return sorted(self.rows, key=self.key, reverse=True)

    def issubspace(self, other: "Echelon") -> bool:
        return all(other.contains(r) for r in self.rows.values())

    def equals(self, other: "Echelon") -> bool:
        return self.rank == other.rank and self.issubspace(other)


def span_rank(field, vectors: Iterable[Vector], key=None) -> int:
    return Echelon(field, key, vectors).rank


def kernel(field, images: List[Vector], key=None) -> List[Dict[int, object]]:
    """Basis of {c : sum_i c_i images[i] = 0}, as dicts index -> coefficient.

    Augments each image with a tag coordinate; tags rank below every image
    coordinate, so rows whose pivot is a tag have a zero image part.
    """
    k = key or _identity

    def aug_key(c):
        if c[0] == 1:
            return (1, k(c[1]))
        return (0, -c[1])

    ech = Echelon(field, aug_key)
    for i, img in enumerate(images):
        v = {(1, col): val for col, val in img.items()}
        v[(0, i)] = field.one
        ech.add(v)
    out = []
    for pivot in ech.pivots():
        if pivot[0] == 0:
            row = ech.rows[pivot]
            out.append({c[1]: val for c, val in row.items()})
    out.sort(key=lambda d: min(d))
    return out


def intersection_dim(a: Echelon, b: Echelon) -> int:
    union = a.copy()
    union.extend(b.rows.values())
    return a.rank + b.rank - union.rank


def dense_rank(field, rows: List[List[object]]) -> int:
    vecs = [{j: v for j, v in enumerate(r) if field.reduce(v)} for r in rows]
    return span_rank(field, vecs)


def solve(field, columns: List[Vector], target: Vector, key=None):
    """Coefficients c with sum c_i columns[i] = target, or None."""
    k = key or _identity

    def aug_key(c):
        if c[0] == 1:
            return (1, k(c[1]))
        return (0, -c[1])

    ech = Echelon(field, aug_key)
    for i, col in enumerate(columns):
        v = {(1, r): val for r, val in col.items()}
        v[(0, i)] = field.one
        ech.add(v)
    t = ech.reduce({(1, r): val for r, val in target.items()})
    if any(c[0] == 1 for c in t):
        return None
    # t = target - sum(...) restricted to tags gives -coefficients
    coeffs = [field.zero] * len(columns)
    for c, val in t.items():
        coeffs[c[1]] = field.reduce(-val)
    return coeffs
