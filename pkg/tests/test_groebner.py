import pytest

from ezd.errors import InputError
from ezd.groebner import (
    Ideal,
    buchberger,
    colon_ideal,
    eliminate,
    hilbert_data,
    ideal_equal,
    ideal_member,
    intersect,
    is_groebner_basis,
    krull_dim,
)
from ezd.poly import PolyRing


@pytest.fixture
def S():
    return PolyRing("Q", ["x", "y", "z"])


def test_twisted_cubic_basis(S):
    G = buchberger([S("x*z - y^2"), S("y*z - x^2"), S("z^2 - x*y")], S)
    assert is_groebner_basis(G)


def test_reduced_basis_is_canonical(S):
    a = buchberger([S("x^2 - y"), S("x*y - z")], S)
    b = buchberger([S("x*y - z"), S("x^2 - y"), S("x^3 - x*y")], S)
    assert [str(g) for g in a] == [str(g) for g in b]
    assert all(g.lc == 1 for g in a)


def test_membership_certificate(S):
    I = Ideal(S, ["x^2", "y*z"])
    f = S("x^3 + 2*x*y*z")
    ok, cert = ideal_member(f, I, certificate=True)
    assert ok and cert.verify()
    assert not I.contains(S("x*y"))


def test_colon_and_intersection(S):
    I = Ideal(S, ["x*y"])
    assert ideal_equal(colon_ideal(I, S("x")), Ideal(S, ["y"]))
    J = intersect(Ideal(S, ["x"]), Ideal(S, ["y"]))
    assert ideal_equal(J, I)
    with pytest.raises(InputError):
        colon_ideal(I, S("0"))


def test_elimination(S):
    I = Ideal(S, ["x - y^2", "z - y^3"])
    E = eliminate(I, ["x", "z"])
    assert ideal_equal(E, Ideal(S, ["x^3 - z^2"]))


@pytest.mark.parametrize("gens, dim", [
    ([], 3),
    (["x"], 2),
    (["x*y", "x*z"], 2),
    (["x^2", "y^2", "z^2"], 0),
    (["1"], -1),
])
def test_krull_dim(S, gens, dim):
    assert krull_dim(Ideal(S, gens)) == dim


def test_hilbert_data_of_node():
    S = PolyRing(2, ["x", "y"])
    data = hilbert_data(Ideal(S, ["x*y"]))
    assert data.values[:4] == [1, 2, 2, 2]
    assert data.multiplicity == 2
    assert data.krull_dim == 1
