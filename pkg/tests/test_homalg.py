import pytest

from ezd.errors import DimensionDeficit, InputError, WindowError
from ezd.homalg import (
    RMatrix,
    cokernel_module,
    compare_modules,
    direct_sum,
    endomorphism_algebra,
    fitting_generators,
    fitting_ideal,
    is_indecomposable_bruteforce,
    minimal_free_resolution,
    minimal_presentation,
    module_hilbert_values,
    module_length,
    module_multiplicity,
    truncated_kernel,
    verify_exact_pair,
)
from ezd.homalg.endo import verify_idempotent
from ezd.ring import make_quotient_ring


@pytest.fixture(scope="module")
def A():
    return make_quotient_ring(["x", "y", "z"], 2, ["x^2", "y^2", "y*z", "z^2"])


@pytest.fixture(scope="module")
def node():
    return make_quotient_ring(["x", "y"], 3, ["x*y"])


def test_matrix_shape_and_printing(A):
    M = RMatrix(A, [["x", "y"], ["0", "z"]])
    assert M.shape == (2, 2)
    assert str(M) == "[[x, y], [0, z]]"
    assert M.determinant() == A.element("x*z")
    with pytest.raises(InputError):
        RMatrix(A, [["x"], ["x", "y"]])


def test_cyclic_lengths(A):
    assert module_length(cokernel_module(A, [["x"]])) == 3
    assert module_length(cokernel_module(A, [["x", "y", "z"]])) == 1
    assert module_length(cokernel_module(A, [["0"]])) == 6


def test_unit_stripping_keeps_cokernel(A):
    M = cokernel_module(A, [["1", "y"], ["x", "z"]])
    P = minimal_presentation(M)
    assert P.rank == 1
    # A/(z + xy) in characteristic 2
    assert module_length(P) == module_length(M) == 4


def test_resolution_of_residue_pair(A):
    M = cokernel_module(A, [["x"]])
    res = minimal_free_resolution(M, steps=4)
    assert res.betti == (1, 1, 1, 1, 1)
    assert res.period == 1
    assert res.compositions_vanish()
    assert all(res.minimality)


def test_resolution_of_residue_field_grows(A):
    M = cokernel_module(A, [["x", "y", "z"]])
    res = minimal_free_resolution(M, steps=3)
    assert res.betti[:3] == (1, 3, 7)
    assert res.compositions_vanish()


def test_node_period_two(node):
    M = cokernel_module(node, [["x"]])
    res = minimal_free_resolution(M, steps=4, window=6)
    assert [str(d) for d in res.differentials[:2]] == ["[[x]]", "[[y]]"]
    assert res.period == 2


def test_window_guard(node):
    M = cokernel_module(node, [["x^3"]])
    with pytest.raises(WindowError):
        minimal_free_resolution(M, steps=2, window=3)


def test_exact_pair_check(node):
    x = RMatrix(node, [["x"]])
    y = RMatrix(node, [["y"]])
    assert verify_exact_pair(x, y, window=5)
    assert not verify_exact_pair(x, RMatrix(node, [["y^2"]]), window=5)


def test_multiplicity_and_deficit(node):
    assert module_multiplicity(cokernel_module(node, [["x"]])) == 1
    assert module_multiplicity(cokernel_module(node, [["0"]])) == 2
    with pytest.raises(DimensionDeficit):
        module_multiplicity(cokernel_module(node, [["x", "y"]]))


def test_hilbert_values(node):
    M = cokernel_module(node, [["x"]])
    assert module_hilbert_values(M, 4) == [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]


def test_fitting_ideals(A):
    M = cokernel_module(A, [["x", "y", "0"], ["0", "z", "x"]])
    assert fitting_ideal(M, 2).is_unit()
    assert fitting_generators(M, 1) == ["x", "y", "z"]
    assert fitting_generators(M, 0) == ["x*y", "x*z"]


def test_truncated_kernel(node):
    ker = truncated_kernel(node, [["x"]], window=4)
    assert [len(ker[d]) for d in sorted(ker)] == [0, 1, 1, 1]
    assert str(ker[2][0][0]) == "y"


def test_decomposition_verdicts(A):
    R_x = cokernel_module(A, [["x"]])
    v = is_indecomposable_bruteforce(R_x)
    assert v.verdict == "Indecomposable"
    S = direct_sum(R_x, cokernel_module(A, [["y", "z"]]))
    v = is_indecomposable_bruteforce(S)
    assert v.verdict == "Decomposable"
    assert verify_idempotent(v.witness)


def test_endomorphism_algebra_dimension(A):
    E = endomorphism_algebra(cokernel_module(A, [["x"]]))
    assert E.dim == 3


def test_compare_modules(A):
    a = cokernel_module(A, [["x", "y"]])
    b = cokernel_module(A, [["x", "z"]])
    c = cokernel_module(A, [["x", "y + z*0"]])
    assert str(compare_modules(a, b)).startswith("NotIsomorphic")
    assert str(compare_modules(a, c)).startswith("Isomorphic")
    assert str(compare_modules(a, cokernel_module(A, [["x"]]))) == "NotIsomorphic(length)"
