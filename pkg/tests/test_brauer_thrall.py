import pytest

from ezd.brauer_thrall import (
    CERTIFIED,
    CONDITIONAL,
    UNCERTIFIED,
    build_t_matrix,
    certify_indecomposable,
    find_witnesses,
    generate_family,
    main_theorem_report,
    reduce_decomposable_t,
    s_invariant,
    verify_ses_structure,
)
from ezd.errors import InputError, NothingToReduce, PremiseError, WitnessRefusal
from ezd.homalg import module_length, verify_exact_pair
from ezd.ring import ASSUMED, GRegularityCertificate, g_regularity_certificate, is_exact_zerodivisor_pair


@pytest.fixture(scope="module")
def pair(ring_fixture):
    return is_exact_zerodivisor_pair(ring_fixture("ex3_f2.toml"), "x", "x")


def test_t_matrix_layout(pair):
    T = build_t_matrix(pair, ["y", "z"])
    assert str(T.matrix) == "[[x, 0, y], [0, x, z], [0, 0, x]]"
    assert T.label() == "T(x, x, y, z)"
    C = T.companion()
    assert str(C) == "[[x, 0, y], [0, x, z], [0, 0, x]]"  # -1 = 1 in characteristic 2
    assert verify_exact_pair(T.matrix, C)


def test_t_matrix_entries_are_normal_forms(pair):
    T = build_t_matrix(pair, ["x^2 + y"])
    assert str(T.matrix[0, 1]) == "y"


def test_t_matrix_needs_verified_pair(pair):
    with pytest.raises(InputError):
        build_t_matrix((pair.x, pair.y), ["y"])


def test_ses_and_lengths(pair):
    T = build_t_matrix(pair, ["y"])
    ses = verify_ses_structure(T)
    assert ses.verified
    assert ses.lengths["M"] == 6
    assert module_length(T.module()) == 6


def test_s_invariant_artinian(pair):
    est = s_invariant(pair)
    assert est.label() == "ExactlyK(2)"
    empty = s_invariant(pair, power_window=0)
    assert empty.label() == "AtLeastK(0)" and empty.nu_values == ()


def test_s_invariant_node():
    from ezd.ring import make_quotient_ring
    R = make_quotient_ring(["x", "y"], "Q", ["x*y"])
    p = is_exact_zerodivisor_pair(R, "x", "y")
    assert s_invariant(p).label() == "ExactlyK(1)"


def test_witnesses(pair):
    assert [str(a) for a in find_witnesses(pair, 2)] == ["y", "z"]
    assert find_witnesses(pair, 0) == []
    with pytest.raises(WitnessRefusal) as info:
        find_witnesses(pair, 3)
    assert info.value.bound == 2


def test_certificates(pair):
    greg = g_regularity_certificate(pair.ring.quotient([pair.x]))
    assert certify_indecomposable(build_t_matrix(pair, []), greg).method == "cyclic"
    cert = certify_indecomposable(build_t_matrix(pair, ["y", "z"]), greg)
    assert cert.verdict == CERTIFIED
    assert list(cert.fitting_generators) == ["x", "y", "z"]
    with pytest.raises(PremiseError):
        certify_indecomposable(build_t_matrix(pair, ["y", "y"]), greg)


def test_conditional_and_uncertified(ring_fixture):
    R = ring_fixture("main1_f2.toml")
    p = is_exact_zerodivisor_pair(R, "x", "y")
    T = build_t_matrix(p, ["v"])
    unknown = g_regularity_certificate(R.quotient([p.x]))
    assert certify_indecomposable(T, unknown).verdict == UNCERTIFIED
    assumed = GRegularityCertificate(ASSUMED, {"note": "checked by hand"})
    cert = certify_indecomposable(T, assumed)
    assert cert.verdict == CONDITIONAL
    assert "checked by hand" in cert.note


def test_family_needs_enough_witnesses(pair):
    with pytest.raises(InputError):
        generate_family(pair, 1, ["y"], [0])
    with pytest.raises(PremiseError):
        generate_family(pair, 1, ["y", "y"], [0])


def test_reduction_refuses_irreducible(pair):
    with pytest.raises(NothingToReduce):
        reduce_decomposable_t(build_t_matrix(pair, ["y", "z"]))


def test_reduction_splits_summand(pair):
    red = reduce_decomposable_t(build_t_matrix(pair, ["y", "z", "y + z"]))
    assert red.reduced.n == 2
    assert red.conservation["before"] == red.conservation["after"] + red.conservation["summand"]


def test_report_flags_dimension(pair):
    rep = main_theorem_report(pair.ring, pair, None, 1)
    assert rep["hypothesis_checks"]["dim_ok"] is False
    assert rep["hypothesis_checks"]["failures"]
    assert [m["multiplicity_or_length"] for m in rep["family"]] == [3, 6]
