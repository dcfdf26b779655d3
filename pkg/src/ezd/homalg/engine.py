"""Linear algebra on free modules, one "slot" at a time.

A free module R^r carries integer twists; basis vector e_j sits in degree
twists[j].  Its coordinates over k are pairs (j, m) with m a standard monomial.

* exact engine (Artinian R): a single slot holding every coordinate;
* graded engine: slot d holds the coordinates of degree d, for d up to the
  truncation window D.

Every submodule is stored as a dict slot -> `Echelon`.  Pivots are chosen by
`coord_key`, the same key in both engines, so canonical bases agree.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence

from ..errors import InputError, WindowError
from ..linalg import Echelon, kernel


def infer_twists(ring, matrices, base: Optional[Sequence[int]] = None):
    """Twists making a chain of homogeneous matrices degree-preserving.

    matrices[i] maps F_{i+1} -> F_i.  Returns one twist tuple per free module
    F_0 .. F_len.  Unconstrained basis vectors of F_0 get 0 (or `base`); a zero
    column of matrices[i] gets min(twists of F_i) + 1.
    """
    if not matrices:
        return [tuple(base or ())]
    sizes = [matrices[0].nrows] + [m.ncols for m in matrices]
    for i in range(1, len(matrices)):
        if matrices[i].nrows != sizes[i]:
            raise InputError("matrices do not compose")
    if base is not None and len(base) != sizes[0]:
        raise InputError("row degrees do not match the number of rows")
    for m in matrices:
        for r in m.entries:
            for e in r:
                if not e.is_homogeneous():
                    raise InputError(f"entry {e} is not homogeneous")
    # adjacency: node (level, index); edge weight = degree difference
    edges: Dict[tuple, list] = {}
    for lvl, m in enumerate(matrices):
        for i, r in enumerate(m.entries):
            for j, e in enumerate(r):
                if e.is_zero():
                    continue
                a, b, w = (lvl, i), (lvl + 1, j), e.degree()
                edges.setdefault(a, []).append((b, w))
                edges.setdefault(b, []).append((a, -w))
    tw: Dict[tuple, int] = {}
    for lvl, size in enumerate(sizes):
        for idx in range(size):
            node = (lvl, idx)
            if node in tw:
                continue
            if lvl == 0:
                start = base[idx] if base is not None else 0
            else:
                prev = [tw[(lvl - 1, t)] for t in range(sizes[lvl - 1])]
                start = (min(prev) + 1) if prev else 0
            tw[node] = start
            queue = deque([node])
            while queue:
                cur = queue.popleft()
                for nxt, w in edges.get(cur, ()):
                    want = tw[cur] + w
                    have = tw.get(nxt)
                    if have is None:
                        tw[nxt] = want
                        queue.append(nxt)
                    elif have != want:
                        raise InputError("matrix entries admit no consistent grading")
    if base is not None and any(tw[(0, i)] != base[i] for i in range(sizes[0])):
        raise InputError("row degrees are inconsistent with the matrix")
    return [tuple(tw[(lvl, i)] for i in range(size)) for lvl, size in enumerate(sizes)]


class Engine:
    """Slotwise linear algebra over R, exact (window None) or truncated at D."""

    def __init__(self, ring, window: Optional[int] = None):
        if window is None:
            if not ring.is_artinian:
                raise InputError("the exact engine needs an Artinian ring; pass a truncation window")
        else:
            if not ring.is_graded:
                raise InputError("the graded engine needs homogeneous relations")
            if window < 0:
                raise InputError("truncation window must be nonnegative")
        self.ring = ring
        self.field = ring.field
        self.window = window
        self.exact = window is None

    # -- coordinates -------------------------------------------------------
    def key(self, twists):
        order = self.ring.base.key
        tw = tuple(twists)

        def coord_key(c):
            j, m = c
            return (sum(m) + tw[j], -j, order(m))
        return coord_key

    def slots(self, twists):
        if self.exact:
            return [None]
        if not twists:
            return []
        return list(range(min(twists), self.window + 1))

    def multipliers(self, degree, slot):
        if self.exact:
            return self.ring.monomial_basis
        return self.ring.basis_in_degree(slot - degree)

    def slot_basis(self, twists, slot):
        return [(j, m) for j, t in enumerate(twists) for m in self.multipliers(t, slot)]

    def slot_dim(self, twists, slot):
        return sum(len(self.multipliers(t, slot)) for t in twists)

    @staticmethod
    def coords(vec) -> dict:
        return {(j, m): c for j, comp in enumerate(vec) for m, c in comp.items()}

    @staticmethod
    def vector(coords, rank):
        vec = [dict() for _ in range(rank)]
        for (j, m), c in coords.items():
            vec[j][m] = c
        return tuple(vec)

    def mul_vec(self, m, vec):
        return tuple(self.ring.mul_monomial_terms(m, comp) if comp else {} for comp in vec)

    def mul_coords(self, m, coords):
        f = self.field
        out = {}
        nf = self.ring.nf_monomial
        for (j, t), c in coords.items():
            for mm, cc in nf(tuple(a + b for a, b in zip(m, t))).items():
                k = (j, mm)
                v = f.reduce(out.get(k, 0) + c * cc)
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def vec_degree(self, vec, twists):
        degs = {sum(m) + twists[j] for j, comp in enumerate(vec) for m in comp}
        if len(degs) != 1:
            raise InputError("vector is not homogeneous")
        return degs.pop()

    # -- subspaces ---------------------------------------------------------
    def span(self, gens, gen_degrees, twists) -> Dict[Optional[int], Echelon]:
        """Slotwise k-span of the submodule generated by `gens`."""
        key = self.key(twists)
        out = {}
        for slot in self.slots(twists):
            ech = Echelon(self.field, key)
            for g, dg in zip(gens, gen_degrees):
                for m in self.multipliers(dg, slot):
                    ech.add(self.coords(self.mul_vec(m, g)))
            out[slot] = ech
        return out

    def image(self, col_terms, col_twists, row_twists):
        return self.span(col_terms, col_twists, row_twists)

    def kernel(self, col_terms, col_twists, row_twists=None) -> Dict[Optional[int], Echelon]:
        """Slotwise kernel of the map F1 -> F0 given by the columns."""
        key = self.key(col_twists)
        out = {}
        for slot in self.slots(col_twists):
            domain = self.slot_basis(col_twists, slot)
            images = [self.coords(self.mul_vec(m, col_terms[j])) for j, m in domain]
            ech = Echelon(self.field, key)
            for rel in kernel(self.field, images):
                ech.add({domain[i]: c for i, c in rel.items()})
            out[slot] = ech
        return out

    def min_generators(self, spaces, twists) -> List[tuple]:
        """Canonical minimal generators of a slotwise-stored submodule.

        In each slot the generators span the complement of m*K inside K that
        vanishes on the pivots of m*K; that complement is unique, and its
        reduced echelon basis is the canonical choice.  Returns
        (degree, coords) pairs, by degree and then descending pivot.
        """
        key = self.key(twists)
        nvars = self.ring.nvars
        units = [tuple(1 if i == v else 0 for i in range(nvars)) for v in range(nvars)]
        out = []
        for slot in sorted(spaces, key=lambda s: (s is not None, s)):
            K = spaces[slot]
            if not K.rank:
                continue
            src = K if self.exact else spaces.get(slot - 1)
            mK = Echelon(self.field, key)
            if src is not None:
                for v in src.basis():
                    for u in units:
                        mK.add(self.mul_coords(u, v))
            if mK.rank == K.rank:
                continue
            comp = Echelon(self.field, key)
            for v in K.basis():
                comp.add(mK.reduce(v))
            for v in comp.basis():
                out.append((slot, v))
        if self.exact:
            # one slot: order by the degree of the pivot, ascending (stable)
            out = [(key(max(v, key=key))[0], v) for _, v in out]
            out.sort(key=lambda t: t[0])
        return out

    def check_window(self, twists, what="module"):
        if self.exact or not twists:
            return
        if max(twists) > self.window - 1:
            raise WindowError(f"{what} has generators in degree {max(twists)}; "
                              f"truncation window {self.window} is exhausted",
                              degree_reached=self.window)
