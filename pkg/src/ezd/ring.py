"""Quotient rings R = k[x]/I, their elements, exact zerodivisor pairs and
G-regularity certificates.

The maximal ideal is always the ideal of the variables; an element is a unit
exactly when its residue (constant term of the normal form) is nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError, NotExactPair, RingMismatch
from .fields import field_from_spec
from .groebner import (
    HilbertData,
    Ideal,
    colon_ideal,
    graded_nu,
    hilbert_data,
    ideal_equal,
    krull_dim,
)
from .linalg import Echelon, solve
from .poly import PolyRing, Polynomial, mono_divides, monomials_of_degree


class QuotientRing:
    def __init__(self, base: PolyRing, relations: Sequence = (), name: Optional[str] = None):
        self.base = base
        self.field = base.field
        self.ideal = Ideal(base, relations)
        if self.ideal.is_unit():
            raise InputError("relations generate the unit ideal")
        self.relations = self.ideal.generators
        if any(r.constant_term() for r in self.relations):
            raise InputError("relations must lie in the ideal of the variables")
        self.is_graded = self.ideal.is_homogeneous()
        self.dim = krull_dim(self.ideal)
        self.is_artinian = self.dim == 0
        self._lms = tuple(self.ideal.leading_monomials())
        self._nf_cache = {}
        self._basis_cache = {}
        self._quotients = {}
        self.name = name
        self.monomial_basis = None
        if self.is_artinian:
            basis = []
            d = 0
            while True:
                level = self.basis_in_degree(d)
                if not level:
                    break
                basis.extend(level)
                d += 1
            self.monomial_basis = tuple(basis)
            self.top_degree = d - 1

    def __repr__(self):
        rels = ", ".join(map(str, self.relations))
        return f"{self.field}[{','.join(self.base.names)}]/({rels})"

    def describe(self):
        return {
            "field": self.field.tag,
            "vars": list(self.base.names),
            "relations": [str(g) for g in self.relations],
        }

    @property
    def names(self):
        return self.base.names

    @property
    def nvars(self):
        return self.base.nvars

    @property
    def length(self):
        if not self.is_artinian:
            raise InputError("length is only defined for Artinian rings")
        return len(self.monomial_basis)

    # -- normal forms ------------------------------------------------------
    def is_standard(self, m) -> bool:
        return not any(mono_divides(g, m) for g in self._lms)

    def nf_monomial(self, m) -> dict:
        """Normal form of a monomial as a term dict (cached)."""
        hit = self._nf_cache.get(m)
        if hit is None:
            if self.is_standard(m):
                hit = {m: self.field.one}
            else:
                hit = self.ideal.reduce(Polynomial(self.base, {m: self.field.one}))._terms
            self._nf_cache[m] = hit
        return hit

    def nf_terms(self, terms) -> dict:
        f = self.field
        out = {}
        for m, c in terms.items():
            for mm, cc in self.nf_monomial(m).items():
                v = f.reduce(out.get(mm, 0) + c * cc)
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return out

    def nf(self, p: Polynomial) -> Polynomial:
        return Polynomial(self.base, self.nf_terms(self.base(p)._terms))

    def mul_monomial_terms(self, m, terms) -> dict:
        """Normal form of m * (terms)."""
        f = self.field
        out = {}
        for t, c in terms.items():
            for mm, cc in self.nf_monomial(tuple(a + b for a, b in zip(m, t))).items():
                v = f.reduce(out.get(mm, 0) + c * cc)
                if v:
                    out[mm] = v
                else:
                    out.pop(mm, None)
        return out

    def basis_in_degree(self, d: int):
        hit = self._basis_cache.get(d)
        if hit is None:
            if d < 0:
                hit = ()
            else:
                hit = tuple(sorted((m for m in monomials_of_degree(self.nvars, d) if self.is_standard(m)),
                                   key=self.base.key, reverse=True))
            self._basis_cache[d] = hit
        return hit

    def hilbert_function(self, d: int) -> int:
        return len(self.basis_in_degree(d))

    # -- elements ----------------------------------------------------------
    def __call__(self, obj) -> "RingElement":
        return self.element(obj)

    def element(self, obj) -> "RingElement":
        if isinstance(obj, RingElement):
            if obj.ring is not self and obj.ring != self:
                raise RingMismatch("element belongs to a different ring")
            return obj
        p = self.base(obj)
        return RingElement(self, self.nf(p))

    def zero(self):
        return RingElement(self, self.base.zero())

    def one(self):
        return RingElement(self, self.nf(self.base.one()))

    def gens(self):
        return [self.element(g) for g in self.base.gens()]

    def __eq__(self, other):
        return (isinstance(other, QuotientRing) and self.base == other.base
                and ideal_equal(self.ideal, other.ideal))

    def __hash__(self):
        return hash((self.base, self.ideal.gb))

    # -- derived rings -----------------------------------------------------
    def quotient(self, elements) -> "QuotientRing":
        """R/(elements) as a new quotient of the same polynomial ring (cached)."""
        polys = [self.element(e).rep for e in elements]
        key = tuple(sorted(str(p) for p in polys))
        hit = self._quotients.get(key)
        if hit is None:
            hit = QuotientRing(self.base, list(self.relations) + polys)
            self._quotients[key] = hit
        return hit

    def ideal_of(self, elements) -> Ideal:
        """The preimage in k[x] of the ideal of R generated by `elements`."""
        return self.ideal + [self.element(e).rep for e in elements]

    def annihilator(self, a) -> Ideal:
        """Preimage of (0 : a) in k[x], i.e. (I : a)."""
        a = self.element(a)
        if a.is_zero():
            return Ideal(self.base, [self.base.one()])
        return colon_ideal(self.ideal, a.rep)

    def multiplication_matrix(self, a):
        """k-linear map of multiplication by `a` on the monomial basis (Artinian)."""
        if not self.is_artinian:
            raise InputError("multiplication matrix needs an Artinian ring")
        a = self.element(a)
        index = {m: i for i, m in enumerate(self.monomial_basis)}
        cols = []
        for m in self.monomial_basis:
            img = self.mul_monomial_terms(m, a.rep._terms)
            cols.append({index[k]: v for k, v in img.items()})
        return cols


class RingElement:
    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotientRing, rep: Polynomial):
        self.ring = ring
        self.rep = rep

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch("elements of different rings")
            return other
        if isinstance(other, (int, Fraction, Polynomial, str)):
            return self.ring.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.rep - other.rep)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return RingElement(self.ring, -self.rep)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.nf(self.rep * other.rep))

    __rmul__ = __mul__

    def __pow__(self, e):
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return False
        return self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __str__(self):
        return str(self.rep)

    def __repr__(self):
        return f"RingElement({self.rep!s})"

    def is_zero(self):
        return self.rep.is_zero()

    def residue(self):
        return residue(self)

    def is_unit(self):
        return bool(self.rep.constant_term())

    def in_maximal_ideal(self):
        return not self.is_unit()

    def degree(self):
        return self.rep.degree()

    def is_homogeneous(self):
        return self.rep.is_homogeneous()

    def inverse(self) -> "RingElement":
        """Inverse of a unit; exact in Artinian rings, constants only otherwise."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        R = self.ring
        f = R.field
        if self.rep.is_constant():
            return R.element(R.base.const(f.inv(self.rep.constant_term())))
        if not R.is_artinian:
            raise InputError("only constant units can be inverted in a positive-dimensional graded ring")
        index = {m: i for i, m in enumerate(R.monomial_basis)}
        cols = R.multiplication_matrix(self)
        target = {index[R.base.one_monomial]: f.one}
        coeffs = solve(f, cols, target)
        terms = {m: c for m, c in zip(R.monomial_basis, coeffs) if c}
        return RingElement(R, Polynomial(R.base, terms))


def residue(a: RingElement):
    """Image of `a` in the residue field k = R/m."""
    return a.rep.constant_term()


def make_quotient_ring(vars, field, relations=(), order="grevlex", graded=False) -> QuotientRing:
    """Build k[vars]/(relations); strings are parsed with the polynomial grammar."""
    base = PolyRing(field_from_spec(field), vars, order)
    rels = [base(r) for r in relations]
    if graded:
        for r in rels:
            if not r.is_homogeneous():
                raise InputError(f"relation {r} is not homogeneous")
    return QuotientRing(base, rels)


# --------------------------------------------------------------------------
# exact zerodivisor pairs


@dataclass(frozen=True)
class EzdPair:
    x: RingElement
    y: RingElement
    checks: dict

    @property
    def ring(self):
        return self.x.ring

    def swapped(self) -> "EzdPair":
        return EzdPair(self.y, self.x, {"ann_x": self.checks["ann_y"], "ann_y": self.checks["ann_x"]})

    def summary(self):
        return {"x": str(self.x), "y": str(self.y), "verified": True}


def is_exact_zerodivisor_pair(R: QuotientRing, x, y) -> EzdPair:
    """Verify (0:x) = (y) and (0:y) = (x) in R.

    Raises `NotExactPair` naming the failing equality.
    """
    x = R.element(x)
    y = R.element(y)
    for name, e in (("x", x), ("y", y)):
        if e.is_zero():
            raise InputError(f"{name} = {e} is zero in R")
        if e.is_unit():
            raise InputError(f"{name} = {e} is a unit of R")
    checks = {}
    for label, a, b in (("ann_x", x, y), ("ann_y", y, x)):
        ann = R.annihilator(a)
        target = R.ideal_of([b])
        ok = ideal_equal(ann, target)
        checks[label] = {
            "equality": f"(0:{a}) = ({b})",
            "annihilator_gb": [str(g) for g in ann.gb],
            "holds": ok,
        }
        if not ok:
            raise NotExactPair(f"(0:{a}) != ({b}); (0:{a}) is generated by "
                               f"{', '.join(str(R.nf(g)) for g in ann.gb if R.nf(g))} in R",
                               failed=checks[label]["equality"])
    return EzdPair(x, y, checks)


# --------------------------------------------------------------------------
# G-regularity


CERTIFIED_REGULAR = "CertifiedRegular"
CERTIFIED_HILBERT = "CertifiedHilbertCriterion"
ASSUMED = "Assumed"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class GRegularityCertificate:
    verdict: str
    evidence: dict = field(default_factory=dict)

    @property
    def certified(self):
        return self.verdict in (CERTIFIED_REGULAR, CERTIFIED_HILBERT)

    def to_dict(self):
        return {"verdict": self.verdict, "evidence": self.evidence}


def embedding_dimension(R: QuotientRing) -> int:
    return R.hilbert_function(1) if R.is_graded else nu_of_ideal(R, R.gens())


def g_regularity_certificate(R: QuotientRing, assumption: Optional[str] = None) -> GRegularityCertificate:
    """Certificate that every totally reflexive R-module is free, when checkable.

    Linear defining ideal: R is a polynomial ring, hence regular.  Otherwise,
    for standard graded R with m^3 = 0, the Hilbert series must differ from
    1 + e t + (e-1) t^2 with e the embedding dimension.
    """
    if R.is_graded:
        nu, gens = graded_nu(list(R.relations))
        degrees = sorted(g.degree() for g in gens)
        if all(d == 1 for d in degrees):
            return GRegularityCertificate(CERTIFIED_REGULAR, {"minimal_generator_degrees": degrees})
        if R.hilbert_function(3) == 0:
            series = [R.hilbert_function(d) for d in range(3)]
            e = series[1]
            excluded = [1, e, e - 1]
            if series != excluded:
                return GRegularityCertificate(CERTIFIED_HILBERT, {
                    "hilbert_series": series,
                    "embedding_dimension": e,
                    "excluded_series": excluded,
                })
    if assumption:
        return GRegularityCertificate(ASSUMED, {"note": assumption})
    return GRegularityCertificate(UNKNOWN, {})


def ring_dim(R: QuotientRing) -> int:
    return R.dim


def ring_hilbert_data(R: QuotientRing, up_to_degree: int = 8) -> HilbertData:
    if not R.is_graded:
        raise InputError("Hilbert data needs a homogeneous defining ideal")
    return hilbert_data(R.ideal, up_to_degree)


def ring_multiplicity(R: QuotientRing, up_to_degree: int = 8) -> int:
    if R.is_artinian:
        return R.length
    return ring_hilbert_data(R, up_to_degree).multiplicity


# --------------------------------------------------------------------------
# minimal number of generators of ideals of R


def nu_of_ideal(R: QuotientRing, elements) -> int:
    """ν_R of the ideal generated by `elements`.

    Homogeneous elements in a graded ring use the degreewise count; otherwise
    an Artinian ring gives dim_k J - dim_k mJ exactly.
    """
    elems = [R.element(e) for e in elements]
    elems = [e for e in elems if not e.is_zero()]
    if not elems:
        return 0
    if R.is_graded and all(e.is_homogeneous() for e in elems):
        nu, _ = graded_nu([e.rep for e in elems], R.ideal)
        return nu
    if not R.is_artinian:
        raise InputError("ν of inhomogeneous elements needs an Artinian ring")
    f = R.field
    J = Echelon(f, R.base.key)
    mJ = Echelon(f, R.base.key)
    for e in elems:
        for m in R.monomial_basis:
            img = R.mul_monomial_terms(m, e.rep._terms)
            J.add(img)
            if any(m):
                mJ.add(img)
    return J.rank - mJ.rank
