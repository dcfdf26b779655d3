"""Exact coefficient fields: prime fields F_p and the rationals.

Coefficients are plain Python values (``int`` in [0, p) for F_p, ``Fraction``
for Q); the field object knows how to normalise and combine them.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InputError, ParseError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p) or p >= 2**31:
            raise InputError(f"characteristic must be a prime below 2^31, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"

    @property
    def tag(self):
        return f"F{self.p}"

    @property
    def is_finite(self):
        return True

    @property
    def order(self):
        return self.p

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            if den % self.p == 0:
                raise ParseError(f"literal {value} has denominator divisible by {self.p}")
            return num * pow(den, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def reduce(self, a):
        return a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def format(self, c) -> str:
        return str(c)

    def is_negative(self, c) -> bool:
        return False


class RationalField:
    characteristic = 0
    p = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    tag = "Q"
    is_finite = False
    order = None

    def __call__(self, value) -> Fraction:
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into Q")

    def reduce(self, a):
        return a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def elements(self):
        raise ValueError("Q is infinite")

    def format(self, c) -> str:
        return str(abs(c))

    def is_negative(self, c) -> bool:
        return c < 0


QQ = RationalField()


def field_from_spec(spec, p=None):
    """Build a field from ``"Q"``, ``"Fp"`` (with ``p``), ``"F5"``, ``"GF(5)"`` or an int."""
    if isinstance(spec, (PrimeField, RationalField)):
        return spec
    if isinstance(spec, int):
        return PrimeField(spec)
    s = str(spec).strip()
    if s in ("Q", "QQ"):
        return QQ
    if s == "Fp":
        if p is None:
            raise InputError('field "Fp" needs a prime p')
        return PrimeField(int(p))
    for prefix in ("GF(", "F"):
        if s.startswith(prefix):
            body = s[len(prefix):].rstrip(")")
            if body.isdigit():
                return PrimeField(int(body))
    raise InputError(f"unknown field {spec!r}")
