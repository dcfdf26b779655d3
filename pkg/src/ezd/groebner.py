"""Buchberger's algorithm and the ideal operations built on it.

Everything here works in a polynomial ring k[x_1..x_m]; quotient rings live in
`ezd.ring` and pass their defining ideal around explicitly.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence

from .errors import FitError, InputError, RingMismatch
from .linalg import Echelon
from .poly import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)

# --------------------------------------------------------------------------
# division


def _reduce(terms, basis, ring, full=True, track=False):
    """Divide `terms` by `basis`; return (remainder dict, quotient dicts)."""
    f = ring.field
    key = ring.key
    p = dict(terms)
    r = {}
    quots = [dict() for _ in basis] if track else None
    lms = [g.lm for g in basis]
    invs = [f.inv(g.lc) for g in basis]
    while p:
        m = max(p, key=key)
        c = p[m]
        for idx, lm in enumerate(lms):
            if mono_divides(lm, m):
                qm = mono_div(m, lm)
                qc = f.reduce(c * invs[idx])
                for gm, gc in basis[idx]._terms.items():
                    mm = tuple(a + b for a, b in zip(gm, qm))
                    v = f.reduce(p.get(mm, 0) - qc * gc)
                    if v:
                        p[mm] = v
                    else:
                        del p[mm]
                if track:
                    q = quots[idx]
                    v = f.reduce(q.get(qm, 0) + qc)
                    if v:
                        q[qm] = v
                    else:
                        q.pop(qm, None)
                break
        else:
            if not full:
                r.update(p)
                break
            r[m] = c
            del p[m]
    return r, quots


def divide(f: Polynomial, divisors: Sequence[Polynomial]):
    """Multivariate division: f = sum q_i g_i + r.  Returns (quotients, remainder)."""
    ring = f.ring
    basis = [g for g in divisors if g]
    r, q = _reduce(f._terms, basis, ring, track=True)
    it = iter(q)
    quotients = [Polynomial(ring, next(it)) if g else ring.zero() for g in divisors]
    return quotients, Polynomial(ring, r)


def exact_quotient(h: Polynomial, f: Polynomial) -> Polynomial:
    (q,), r = divide(h, [f])
    if r:
        raise ArithmeticError(f"{f} does not divide {h}")
    return q


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    lcm = mono_lcm(f.lm, g.lm)
    fi = ring.field.inv(f.lc)
    gi = ring.field.inv(g.lc)
    return f.mul_term(mono_div(lcm, f.lm), fi) - g.mul_term(mono_div(lcm, g.lm), gi)


# --------------------------------------------------------------------------
# Buchberger


def _buchberger(polys: List[Polynomial], ring: PolyRing, cofactors=None):
    """Core loop: returns a (non-reduced) Groebner basis, optionally with cofactors.

    Pairs are processed smallest lcm first (normal strategy) with the product
    and chain criteria; ties break on pair indices, so the run is deterministic.
    """
    f = ring.field
    key = ring.key
    G: List[Polynomial] = []
    C: Optional[list] = [] if cofactors is not None else None
    pairs = set()

    def insert(p, cof):
        inv = f.inv(p.lc)
        p = p.scale(inv)
        if C is not None:
            cof = [c.scale(inv) for c in cof]
            C.append(cof)
        idx = len(G)
        G.append(p)
        for i in range(idx):
            pairs.add((i, idx))

    for i, p in enumerate(polys):
        if p:
            insert(p, cofactors[i] if cofactors is not None else None)

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(mono_lcm(G[ij[0]].lm, G[ij[1]].lm)), ij))
        pairs.discard((i, j))
        gi, gj = G[i], G[j]
        lcm = mono_lcm(gi.lm, gj.lm)
        if lcm == mono_mul(gi.lm, gj.lm):
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(G[k].lm, lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        mi, mj = mono_div(lcm, gi.lm), mono_div(lcm, gj.lm)
        s = gi.mul_term(mi) - gj.mul_term(mj)
        if C is None:
            r, _ = _reduce(s._terms, G, ring)
            if r:
                insert(Polynomial(ring, r), None)
        else:
            r, q = _reduce(s._terms, G, ring, track=True)
            if r:
                cof = [a.mul_term(mi) - b.mul_term(mj) for a, b in zip(C[i], C[j])]
                for k, qk in enumerate(q):
                    if qk:
                        qp = Polynomial(ring, qk)
                        cof = [c - qp * ck for c, ck in zip(cof, C[k])]
                insert(Polynomial(ring, r), cof)
    return G, C


def _reduced(G: List[Polynomial], ring: PolyRing) -> List[Polynomial]:
    G = [g for g in G if g]
    minimal = []
    for i, g in enumerate(G):
        if any(mono_divides(h.lm, g.lm) and (h.lm != g.lm or j < i)
               for j, h in enumerate(G) if j != i):
            continue
        minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = [h for j, h in enumerate(minimal) if j != i]
        r, _ = _reduce(g._terms, others, ring)
        out.append(Polynomial(ring, r).monic())
    out.sort(key=lambda g: ring.key(g.lm), reverse=True)
    return out


def buchberger(gens: Sequence[Polynomial], ring: Optional[PolyRing] = None) -> List[Polynomial]:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Elements are monic and sorted by descending leading monomial.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch(f"generator {g} lives in {g.ring!r}, expected {ring!r}")
    G, _ = _buchberger(gens, ring)
    return _reduced(G, ring)


def is_groebner_basis(G: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g]
    if not G:
        return True
    ring = G[0].ring
    for a, b in combinations(G, 2):
        r, _ = _reduce(s_polynomial(a, b)._terms, G, ring)
        if r:
            return False
    return True


# --------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class MembershipCertificate:
    element: Polynomial
    generators: tuple
    cofactors: tuple

    def verify(self) -> bool:
        total = self.element.ring.zero()
        for c, g in zip(self.cofactors, self.generators):
            total = total + c * g
        return total == self.element


class Ideal:
    """Ideal of a polynomial ring with a lazily computed, then frozen, reduced GB."""

    def __init__(self, ring: PolyRing, generators: Sequence = ()):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring(g)
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = None
        self._tracked = None
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    @property
    def gb(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = tuple(buchberger(self.generators, self.ring))
        return self._gb

    def _tracked_basis(self):
        if self._tracked is None:
            with self._lock:
                if self._tracked is None:
                    n = len(self.generators)
                    unit = [[self.ring.one() if i == j else self.ring.zero() for j in range(n)]
                            for i in range(n)]
                    self._tracked = _buchberger(list(self.generators), self.ring, unit)
        return self._tracked

    def leading_monomials(self):
        return [g.lm for g in self.gb]

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return any(g.is_constant() for g in self.gb)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def reduce(self, f: Polynomial) -> Polynomial:
        f = self.ring(f)
        r, _ = _reduce(f._terms, list(self.gb), self.ring)
        return Polynomial(self.ring, r)

    def contains(self, f) -> bool:
        return not self.reduce(f)

    def __contains__(self, f):
        return self.contains(f)

    def __add__(self, other):
        if isinstance(other, Ideal):
            other = other.generators
        return Ideal(self.ring, self.generators + tuple(self.ring(g) for g in other))

    def __mul__(self, other: "Ideal"):
        return Ideal(self.ring, [a * b for a in self.generators for b in other.generators])

    def power(self, j: int) -> "Ideal":
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(j):
            out = out * self
        return out

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash(self.gb)


def normal_form(f: Polynomial, ideal: Ideal) -> Polynomial:
    return ideal.reduce(f)


def ideal_member(f: Polynomial, ideal: Ideal, certificate: bool = False):
    """Membership test; with ``certificate=True`` return (bool, certificate or None)."""
    f = ideal.ring(f)
    member = ideal.contains(f)
    if not certificate:
        return member
    if not member:
        return False, None
    ring = ideal.ring
    n = len(ideal.generators)
    if not f:
        return True, MembershipCertificate(f, ideal.generators, tuple(ring.zero() for _ in range(n)))
    G, C = ideal._tracked_basis()
    basis = [g for g in G]
    r, q = _reduce(f._terms, basis, ring, track=True)
    assert not r
    cof = [ring.zero() for _ in range(n)]
    for k, qk in enumerate(q):
        if qk:
            qp = Polynomial(ring, qk)
            cof = [c + qp * ck for c, ck in zip(cof, C[k])]
    cert = MembershipCertificate(f, ideal.generators, tuple(cof))
    assert cert.verify()
    return True, cert


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring.names != b.ring.names or a.ring.field != b.ring.field:
        raise RingMismatch("ideals live in different rings")
    if a.ring.order != b.ring.order:
        return a.issubset(b) and b.issubset(a)
    return a.gb == b.gb


# --------------------------------------------------------------------------
# elimination, intersection, colon


def _fresh_name(names, base="_t"):
    name = base
    while name in names:
        name += "_"
    return name


def eliminate(ideal: Ideal, keep_vars) -> Ideal:
    """ideal ∩ k[keep_vars], returned as an ideal of the original ring."""
    ring = ideal.ring
    keep = [ring.index(v) for v in keep_vars]
    elim = [i for i in range(ring.nvars) if i not in keep]
    if ideal.is_zero():
        return Ideal(ring, [])
    new_names = [ring.names[i] for i in elim] + [ring.names[i] for i in keep]
    big = PolyRing(ring.field, new_names, MonomialOrder("block", len(elim)))
    perm = elim + keep
    positions = [0] * ring.nvars
    for new_pos, old in enumerate(perm):
        positions[old] = new_pos
    G = buchberger([g.embed(big, positions) for g in ideal.generators], big)
    k = len(elim)
    back = [perm[i] for i in range(big.nvars)]
    out = [g.embed(ring, back) for g in G if all(not any(m[:k]) for m in g._terms)]
    return Ideal(ring, out)


def intersect(a: Ideal, b: Ideal) -> Ideal:
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Ideal(ring, [])
    t = _fresh_name(ring.names)
    big = PolyRing(ring.field, (t,) + ring.names, MonomialOrder("block", 1))
    positions = list(range(1, ring.nvars + 1))
    tv = big.var(0)
    gens = [tv * g.embed(big, positions) for g in a.generators]
    gens += [(big.one() - tv) * h.embed(big, positions) for h in b.generators]
    G = buchberger(gens, big)
    back = [0] + list(range(ring.nvars))
    out = [g.embed(ring, back) for g in G if all(m[0] == 0 for m in g._terms)]
    return Ideal(ring, out)


def colon_ideal(ideal: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = {g : g f ∈ I}, via I ∩ (f) divided by f."""
    ring = ideal.ring
    f = ring(f)
    if not f:
        raise InputError("colon by zero is not supported")
    if ideal.is_zero():
        return Ideal(ring, [])
    if ideal.contains(f):
        return Ideal(ring, [ring.one()])
    inter = intersect(ideal, Ideal(ring, [f]))
    gens = [exact_quotient(h, f) for h in inter.generators]
    out = Ideal(ring, gens)
    for g in out.generators:
        assert ideal.contains(g * f)
    return out


def colon_by_ideal(ideal: Ideal, other: Ideal) -> Ideal:
    """(I : J) as the intersection of the colons by J's generators."""
    ring = ideal.ring
    gens = [g for g in other.generators if not ideal.contains(g)]
    if not gens:
        return Ideal(ring, [ring.one()])
    out = colon_ideal(ideal, gens[0])
    for g in gens[1:]:
        out = intersect(out, colon_ideal(ideal, g))
    return out


# --------------------------------------------------------------------------
# dimension and Hilbert functions


def krull_dim(ideal: Ideal) -> int:
    """dim k[x]/I via maximal independent sets modulo the leading-term ideal.

    The unit ideal gives -1 (the dimension of the zero ring).
    """
    ring = ideal.ring
    if ideal.is_unit():
        return -1
    lms = ideal.leading_monomials()
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    n = ring.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def _minimalize(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def hilbert_numerator(monos, _cache=None) -> List[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[x]/(monos)."""
    if _cache is None:
        _cache = {}
    gens = tuple(_minimalize(monos))
    if gens in _cache:
        return _cache[gens]
    if not gens:
        result = [1]
    elif all(not (set(i for i, e in enumerate(a) if e) & set(i for i, e in enumerate(b) if e))
             for a, b in combinations(gens, 2)):
        result = [1]
        for m in gens:
            result = _poly_mul(result, [1] + [0] * (sum(m) - 1) + [-1])
    else:
        *rest, last = gens
        colon = [tuple(max(a - b, 0) for a, b in zip(m, last)) for m in rest]
        first = hilbert_numerator(rest, _cache)
        second = [0] * sum(last) + hilbert_numerator(colon, _cache)
        result = _poly_sub(first, second)
    _cache[gens] = result
    return result


def hilbert_values_from_numerator(num, n, upto) -> List[int]:
    vals = []
    for d in range(upto + 1):
        if n == 0:
            vals.append(num[d] if d < len(num) else 0)
        else:
            vals.append(sum(c * comb(d - i + n - 1, n - 1) for i, c in enumerate(num) if i <= d))
    return vals


def count_standard_monomials(lms, n, d) -> int:
    return sum(1 for m in monomials_of_degree(n, d) if not any(mono_divides(g, m) for g in lms))


def multiplicity_from_values(values: Sequence[int], dim: int) -> int:
    """Multiplicity from Hilbert values 0..D by the trailing-window fit.

    dim = 0: the tail must vanish and the multiplicity is the total length.
    dim >= 1: the last dim+3 values must lie on one polynomial of degree dim-1
    (a fit through dim+1 values plus two validation points); the multiplicity
    is the (dim-1)-th finite difference there.
    """
    values = list(values)
    if dim < 0:
        raise FitError("zero ring has no multiplicity")
    if dim == 0:
        if len(values) < 2 or values[-1] or values[-2]:
            raise FitError("Hilbert function has not vanished inside the window")
        return sum(values)
    need = dim + 3
    if len(values) < need:
        raise FitError(f"need at least {need} Hilbert values, have {len(values)}")
    tail = values[-need:]
    diffs = [tail]
    for _ in range(dim):
        prev = diffs[-1]
        diffs.append([b - a for a, b in zip(prev, prev[1:])])
    if any(diffs[dim]):
        raise FitError(f"last {need} Hilbert values do not fit a polynomial of degree {dim - 1}")
    e = diffs[dim - 1][-1]
    if e <= 0:
        raise FitError(f"fitted leading coefficient {e} is not positive")
    return e


@dataclass(frozen=True)
class HilbertData:
    hilbert_function_values: tuple
    krull_dim: int
    multiplicity: int

    @property
    def values(self):
        return [v for _, v in self.hilbert_function_values]


def hilbert_data(ideal: Ideal, up_to_degree: int = 8, max_degree: int = 64) -> HilbertData:
    if not ideal.is_homogeneous():
        raise InputError("Hilbert data needs homogeneous generators")
    ring = ideal.ring
    dim = krull_dim(ideal)
    if dim < 0:
        raise InputError("unit ideal: the quotient is the zero ring")
    D = max(up_to_degree, dim + 3)
    # any monomial order: k[x]/I and k[x]/LT(I) share the Hilbert function
    num = hilbert_numerator(ideal.leading_monomials())
    while True:
        values = hilbert_values_from_numerator(num, ring.nvars, D)
        try:
            e = multiplicity_from_values(values, dim)
            return HilbertData(tuple(enumerate(values)), dim, e)
        except FitError:
            if D * 2 > max_degree:
                raise
            D *= 2


# --------------------------------------------------------------------------
# minimal generators


def standard_monomials(modulo: Optional[Ideal], n: int, d: int):
    if d < 0:
        return []
    if modulo is None or modulo.is_zero():
        return list(monomials_of_degree(n, d))
    lms = modulo.leading_monomials()
    return [m for m in monomials_of_degree(n, d) if not any(mono_divides(g, m) for g in lms)]


def graded_nu(gens: Sequence[Polynomial], modulo: Optional[Ideal] = None):
    """ν of the ideal generated by homogeneous `gens` in k[x]/modulo.

    Degree by degree: a generator counts when it is independent of
    (lower-degree generators)·(monomials) and of the generators already kept.
    Returns (count, chosen generators in input order).
    """
    gens = [g for g in gens]
    if not gens:
        return 0, []
    ring = gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise InputError(f"generator {g} is not homogeneous")
    if modulo is not None:
        if not modulo.is_homogeneous():
            raise InputError("modulus must be homogeneous")

    def coords(p):
        if modulo is not None:
            p = modulo.reduce(p)
        return p._terms

    f = ring.field
    nonzero = [(i, g) for i, g in enumerate(gens) if coords(g)]
    degrees = sorted({g.degree() for _, g in nonzero})
    chosen = []
    for d in degrees:
        ech = Echelon(f, ring.key)
        for _, g in nonzero:
            e = d - g.degree()
            if e <= 0:
                continue
            for m in standard_monomials(modulo, ring.nvars, e):
                ech.add(coords(g.mul_term(m)))
        for i, g in nonzero:
            if g.degree() == d and ech.add(coords(g)):
                chosen.append((i, g))
    chosen.sort()
    return len(chosen), [g for _, g in chosen]


def minimal_generators(ideal: Ideal, modulo: Optional[Ideal] = None):
    """(ν, chosen generators) for a homogeneous ideal."""
    return graded_nu(list(ideal.generators), modulo)
