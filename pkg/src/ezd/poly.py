"""Multivariate polynomials with exact coefficients.

Monomials are dense exponent tuples.  A `Polynomial` is an immutable mapping
monomial -> nonzero coefficient bound to a `PolyRing` (field, variable names,
monomial order).  Terms are produced in strictly descending order on demand.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from .errors import RingMismatch
from .fields import QQ, field_from_spec

Monomial = Tuple[int, ...]


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex, or a two-block elimination order.

    For ``block`` the first ``split`` variables form the eliminated block; the
    blocks are compared in turn, each by grevlex.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, m):
        if self.kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        if self.kind == "lex":
            return m
        k = self.split
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def __str__(self):
        return self.kind if self.kind != "block" else f"block({self.split})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def order_from_name(name) -> MonomialOrder:
    if isinstance(name, MonomialOrder):
        return name
    name = str(name)
    if name.startswith("block"):
        return MonomialOrder("block", int(name[name.index("(") + 1:name.index(")")]))
    return MonomialOrder(name)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int):
    """All exponent tuples of length n and total degree d, in lex-descending order."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


class PolyRing:
    """k[x_1..x_m] with a fixed monomial order."""

    def __init__(self, field, names: Sequence[str], order="grevlex"):
        self.field = field_from_spec(field)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        self.nvars = len(self.names)
        self.order = order_from_name(order)
        self.key = self.order.key
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {list(self.names)}, {self.order})"

    @property
    def one_monomial(self):
        return self._zero_mono

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field(c)
        return Polynomial(self, {self._zero_mono: c} if c else {})

    def var(self, name_or_index):
        i = self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def index(self, name_or_index):
        if isinstance(name_or_index, int):
            return name_or_index
        try:
            return self.names.index(name_or_index)
        except ValueError:
            raise KeyError(f"unknown variable {name_or_index!r}") from None

    def monomial(self, exps, coef=1):
        c = self.field(coef)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_terms(self, terms: Dict[Monomial, object]):
        f = self.field
        return Polynomial(self, {m: f(c) for m, c in terms.items() if f(c)})

    def __call__(self, obj):
        """Coerce an int, Fraction, string or polynomial into this ring."""
        if isinstance(obj, Polynomial):
            if obj.ring == self:
                return obj
            if obj.ring.names == self.names and obj.ring.field == self.field:
                return Polynomial(self, obj._terms)
            raise RingMismatch(f"{obj.ring!r} is not {self!r}")
        if isinstance(obj, (int, Fraction)):
            return self.const(obj)
        if isinstance(obj, str):
            from .parse import parse_polynomial
            return parse_polynomial(obj, self)
        raise TypeError(f"cannot coerce {obj!r}")

    def with_order(self, order):
        return PolyRing(self.field, self.names, order)

    def format_monomial(self, m) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


class Polynomial:
    __slots__ = ("ring", "_terms", "_lm", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, object]):
        # callers guarantee: coefficients normalised and nonzero
        self.ring = ring
        self._terms = terms
        self._lm = None
        self._hash = None

    # -- inspection -------------------------------------------------------
    @property
    def terms(self):
        """(monomial, coefficient) pairs, strictly descending in the ring's order."""
        key = self.ring.key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def coefficient_dict(self):
        return dict(self._terms)

    def coefficient(self, m):
        return self._terms.get(tuple(m), self.ring.field.zero)

    def monomials(self):
        return [m for m, _ in self.terms]

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def lm(self):
        if self._lm is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self._terms, key=self.ring.key)
        return self._lm

    @property
    def lc(self):
        return self._terms[self.lm]

    def degree(self):
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self._terms}
        return len(degs) <= 1

    def is_constant(self):
        return all(not any(m) for m in self._terms)

    def constant_term(self):
        return self._terms.get(self.ring._zero_mono, self.ring.field.zero)

    def homogeneous_parts(self):
        parts: Dict[int, dict] = {}
        for m, c in self._terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(parts.items())}

    def variables_used(self):
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"mixed ring contexts {self.ring!r} and {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _add(self._terms, other._terms, self.ring.field, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, _add(self._terms, other._terms, self.ring.field, -1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.reduce(-c) for m, c in self._terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.ring.field
        out: Dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, _clean(out, f))

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        f = self.ring.field
        c = f(c) if not isinstance(c, type(f.zero)) else c
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.reduce(v * c) for m, v in self._terms.items()})

    def mul_term(self, mono, c=None):
        f = self.ring.field
        if c is None:
            return Polynomial(self.ring, {tuple(a + b for a, b in zip(m, mono)): v
                                          for m, v in self._terms.items()})
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(m, mono)): f.reduce(v * c)
                                      for m, v in self._terms.items()})

    def monic(self):
        if not self._terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    # -- comparison / printing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.names == other.ring.names and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"

    def embed(self, target: PolyRing, positions: Sequence[int]):
        """Map into `target`, sending variable i to target variable positions[i]."""
        n = target.nvars
        out = {}
        for m, c in self._terms.items():
            e = [0] * n
            for i, a in enumerate(m):
                if a:
                    e[positions[i]] += a
            out[tuple(e)] = c
        return Polynomial(target, out)


def _clean(d, f):
    out = {}
    for m, c in d.items():
        c = f.reduce(c)
        if c:
            out[m] = c
    return out


def _add(a, b, f, sign):
    out = dict(a)
    for m, c in b.items():
        v = f.reduce(out.get(m, 0) + sign * c)
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def format_polynomial(p: Polynomial) -> str:
    if not p._terms:
        return "0"
    ring = p.ring
    f = ring.field
    pieces = []
    for i, (m, c) in enumerate(p.terms):
        neg = f.is_negative(c)
        mag = f.format(c)
        mono = ring.format_monomial(m)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)


def linear_combination(ring: PolyRing, coeffs: Iterable, polys: Iterable[Polynomial]):
    out = ring.zero()
    for c, p in zip(coeffs, polys):
        out = out + c * p
    return out


def default_ring(names, field=QQ):
    return PolyRing(field, names)
