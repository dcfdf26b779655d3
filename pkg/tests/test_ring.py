import pytest

from ezd.errors import InputError, NotExactPair
from ezd.ring import (
    ASSUMED,
    CERTIFIED_HILBERT,
    CERTIFIED_REGULAR,
    UNKNOWN,
    g_regularity_certificate,
    is_exact_zerodivisor_pair,
    make_quotient_ring,
    nu_of_ideal,
)


@pytest.mark.parametrize("name, x, y", [
    ("ex1_truncated_line.toml", "x", "x^2"),
    ("ex2_node.toml", "x", "y"),
    ("ex3_f2.toml", "x", "x"),
    ("ex4.toml", "x", "y"),
    ("ex4.toml", "z", "z"),
    ("x2y.toml", "Y", "X^2"),
])
def test_exact_pairs(ring_fixture, name, x, y):
    pair = is_exact_zerodivisor_pair(ring_fixture(name), x, y)
    assert pair.summary() == {"x": x, "y": y, "verified": True}
    assert all(c["holds"] for c in pair.checks.values())


def test_node_negative_control(ring_fixture):
    with pytest.raises(NotExactPair) as info:
        is_exact_zerodivisor_pair(ring_fixture("ex2_node.toml"), "x", "x")
    assert info.value.failed == "(0:x) = (x)"


def test_units_and_zero_rejected(ring_fixture):
    R = ring_fixture("ex2_node.toml")
    with pytest.raises(InputError):
        is_exact_zerodivisor_pair(R, "0", "x")
    with pytest.raises(InputError):
        is_exact_zerodivisor_pair(R, "1", "x")


def test_artinian_invariants(ring_fixture):
    R = ring_fixture("ex3_f2.toml")
    assert R.is_artinian and R.length == 6 and R.dim == 0
    assert [R.hilbert_function(d) for d in range(4)] == [1, 3, 2, 0]
    assert R.top_degree == 2


def test_ring_element_arithmetic(ring_fixture):
    R = ring_fixture("ex3_f2.toml")
    x, y, z = R.gens()
    assert (x * x).is_zero()
    assert str(x * y + y * x) == "0"
    u = R.one() + x + y
    assert (u * u.inverse()) == R.one()


def test_relations_must_vanish_at_origin():
    with pytest.raises(InputError):
        make_quotient_ring(["x"], "Q", ["x - 1"])


def test_g_regularity_certificates():
    R = make_quotient_ring(["y", "z"], 2, ["y^2", "y*z", "z^2"])
    cert = g_regularity_certificate(R)
    assert cert.verdict == CERTIFIED_HILBERT
    assert cert.evidence["hilbert_series"] == [1, 2, 0]
    assert cert.evidence["excluded_series"] == [1, 2, 1]
    assert g_regularity_certificate(make_quotient_ring(["a", "b"], "Q", [])).verdict == CERTIFIED_REGULAR
    linear = make_quotient_ring(["a", "b"], "Q", ["a - b"])
    assert g_regularity_certificate(linear).verdict == CERTIFIED_REGULAR
    gor = make_quotient_ring(["y", "z"], 2, ["y^2 - z^2", "y*z"])
    assert g_regularity_certificate(gor).verdict == UNKNOWN
    assert g_regularity_certificate(gor, "by hand").verdict == ASSUMED


def test_nu_of_ideal(ring_fixture):
    R = ring_fixture("ex3_f2.toml")
    assert nu_of_ideal(R, ["y", "z", "y + z"]) == 2
    assert nu_of_ideal(R, []) == 0
    assert nu_of_ideal(R, ["x + x*y"]) == 1
