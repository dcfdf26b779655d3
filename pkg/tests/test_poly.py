from fractions import Fraction

import pytest

from ezd.errors import ParseError, RingMismatch
from ezd.fields import QQ, PrimeField, field_from_spec
from ezd.poly import PolyRing


@pytest.fixture
def S():
    return PolyRing("Q", ["x", "y", "z"])


def test_canonical_printing_grevlex(S):
    f = S("z^2 + x*y - 3*x^3 + 1/2")
    assert str(f) == "-3*x^3 + x*y + z^2 + 1/2"


def test_arithmetic(S):
    x, y, _ = S.gens()
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - x).is_zero()
    assert S("2/4*x") == S("1/2*x")
    assert S("x").lc == Fraction(1)


def test_degree_and_homogeneity(S):
    f = S("x^2*y + z^3")
    assert f.degree() == 3
    assert f.is_homogeneous()
    assert not S("x + 1").is_homogeneous()


def test_prime_field_reduction():
    F = PolyRing(5, ["a", "b"])
    assert str(F("6*a + 10*b")) == "a"
    assert str(F("-a")) == "4*a"


def test_field_spec():
    assert field_from_spec("Q") is QQ
    assert field_from_spec("F7") == PrimeField(7)
    with pytest.raises(ValueError):
        field_from_spec(6)


@pytest.mark.parametrize("bad", ["x +", "x^", "2*", "(x", "q", "x^-1", "1/0"])
def test_parse_errors_are_located(S, bad):
    with pytest.raises(ParseError) as info:
        S(bad)
    assert "column" in str(info.value)


def test_parse_implicit_product_and_powers(S):
    assert S("2x*y^2") == 2 * S("x") * S("y") ** 2
    assert S("(x+y)^2") == S("x^2 + 2*x*y + y^2")


def test_ring_mismatch():
    A = PolyRing("Q", ["x"])
    B = PolyRing(3, ["x"])
    with pytest.raises(RingMismatch):
        A("x") + B("x")
