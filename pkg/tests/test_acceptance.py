"""Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.

Run ``python tests/test_acceptance.py`` for the bare summary, or through
pytest (the lines are printed uncaptured).
"""
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from ezd.brauer_thrall import (  # noqa: E402
    CERTIFIED,
    build_t_matrix,
    certify_indecomposable,
    find_witnesses,
    generate_family,
    main_theorem_report,
    reduce_decomposable_t,
    residue_pair_ring,
    s_invariant,
    verify_ses_structure,
)
from ezd.cli import load_ring  # noqa: E402
from ezd.errors import NotExactPair, WitnessRefusal  # noqa: E402
from ezd.groebner import ideal_equal  # noqa: E402
from ezd.homalg import (  # noqa: E402
    fitting_ideal,
    is_indecomposable_bruteforce,
    minimal_free_resolution,
    module_length,
)
from ezd.ring import (  # noqa: E402
    ASSUMED,
    CERTIFIED_HILBERT,
    CERTIFIED_REGULAR,
    GRegularityCertificate,
    g_regularity_certificate,
    is_exact_zerodivisor_pair,
    make_quotient_ring,
    ring_multiplicity,
)

FIXTURES = HERE.parent / "fixtures"


def ring(name):
    return load_ring(FIXTURES / name)


def criterion_1():
    cases = [
        ("ex1_truncated_line.toml", "x", "x^2"),
        ("ex2_node.toml", "x", "y"),
        ("ex3_f2.toml", "x", "x"),
        ("ex4.toml", "x", "y"),
        ("ex4.toml", "z", "z"),
        ("x2y.toml", "Y", "X^2"),
    ]
    for name, x, y in cases:
        pair = is_exact_zerodivisor_pair(ring(name), x, y)
        assert all(c["holds"] for c in pair.checks.values())
    try:
        is_exact_zerodivisor_pair(ring("ex2_node.toml"), "x", "x")
    except NotExactPair as exc:
        assert exc.failed == "(0:x) = (x)"
    else:
        raise AssertionError("(x, x) in k[x,y]/(xy) was accepted")
    return f"{len(cases)} pairs verified, negative control refused"


def criterion_2():
    R = make_quotient_ring(["y", "z"], 2, ["y^2", "y*z", "z^2"])
    cert = g_regularity_certificate(R)
    assert cert.verdict == CERTIFIED_HILBERT
    assert cert.evidence["hilbert_series"] == [1, 2, 0]
    assert cert.evidence["excluded_series"] == [1, 2, 1]
    for field in ("Q", 2, 5):
        for names in (["t"], ["a", "b"], ["a", "b", "c"]):
            poly_ring = make_quotient_ring(names, field, [])
            assert g_regularity_certificate(poly_ring).verdict == CERTIFIED_REGULAR
    return "series 1+2t -> CertifiedHilbertCriterion; polynomial rings -> CertifiedRegular"


def criterion_3():
    R = ring("ex3_f2.toml")
    pair = is_exact_zerodivisor_pair(R, "x", "x")
    greg = g_regularity_certificate(R.quotient([pair.x]))
    lengths = []
    for n in range(3):
        T = build_t_matrix(pair, find_witnesses(pair, n))
        ses = verify_ses_structure(T, None)
        assert ses.verified, ses.failed
        M = T.module()
        length = module_length(M)
        assert length == 3 * (n + 1)
        lengths.append(length)
        assert certify_indecomposable(T, greg, None, ses).verdict == CERTIFIED
        assert is_indecomposable_bruteforce(M).verdict == "Indecomposable"
        res = minimal_free_resolution(M, 6, None, T.companion())
        assert res.compositions_vanish()
        assert res.periodicity_report["companion_verified"]
        assert res.period is not None and res.period <= 2
    try:
        find_witnesses(pair, 3)
    except WitnessRefusal as exc:
        assert exc.bound == 2
    else:
        raise AssertionError("n = 3 witnesses were produced")
    assert s_invariant(pair).label() == "ExactlyK(2)"
    return f"lengths {lengths}, all Certified and Indecomposable, n = 3 refused (s = 2)"


def criterion_4():
    R = ring("ex3_f5.toml")
    pair = is_exact_zerodivisor_pair(R, "x", "x")
    fam = generate_family(pair, 1, ["y", "z"], range(5))
    expected = [["x", "y"]] + [["x", f"y + {r}*z" if r > 1 else "y + z"] for r in range(1, 5)]
    assert [list(m.fitting_generators) for m in fam.members] == expected
    distinct = 0
    for p, q in combinations(fam.members, 2):
        assert not ideal_equal(fitting_ideal(p.module, 1), fitting_ideal(q.module, 1))
        distinct += 1
    assert distinct == 10
    assert all(v == "NotIsomorphic(Fitt_1)" for _, _, v, _ in fam.separation)
    assert fam.pairwise_distinct
    return f"{distinct}/10 pairwise Fitt_1 inequalities"


def criterion_5():
    R = ring("ex3_f2.toml")
    pair = is_exact_zerodivisor_pair(R, "x", "x")
    T = build_t_matrix(pair, ["y", "z", "y + z"])
    red = reduce_decomposable_t(T)
    assert red.reduced.matrix.shape == (3, 3)
    c = red.conservation
    assert (c["before"], c["after"], c["summand"]) == (12, 9, 3)
    return f"{T.label()} -> {red.reduced.label()}, 12 = 9 + 3"


def criterion_6():
    R = ring("main1_f2.toml")
    pair = is_exact_zerodivisor_pair(R, "x", "y")
    assert residue_pair_ring(pair).dim == 2
    assert ring_multiplicity(R.quotient([pair.x])) == 3
    assert ring_multiplicity(R.quotient([pair.y])) == 3
    greg = GRegularityCertificate(ASSUMED, {"note": "Cohen-Macaulay with minimal multiplicity"})
    rep = main_theorem_report(R, pair, greg, 2, window=8)
    assert rep["hypothesis_checks"]["dim_ok"] and not rep["hypothesis_checks"]["failures"]
    assert (rep["s_mult"], rep["t_mult"]) == (3, 3)
    sizes = [m["multiplicity_or_length"] for m in rep["family"]]
    assert sizes == [3, 6, 9]
    assert all(m["matches_rs_plus_t"] and m["ses_verified"] for m in rep["family"])
    assert all(m["resolution_period"] == 2 for m in rep["family"])
    nus = [v["nu"] for v in rep["s_invariant"]["nu_values"]]
    assert len(nus) == 5 and all(a < b for a, b in zip(nus, nus[1:]))
    assert rep["s_invariant"]["verdict"].startswith("EvidenceInfinite")
    return f"multiplicities {sizes}, nu(m^j) = {nus}"


def criterion_7():
    R = ring("main2_q.toml")
    pair = is_exact_zerodivisor_pair(R, "z", "w")
    rep = main_theorem_report(R, pair, None, 2, window=8)
    sizes = [m["multiplicity_or_length"] for m in rep["family"]]
    assert sizes == [3 * r + 3 for r in range(3)]
    assert all(m["matches_rs_plus_t"] and m["ses_verified"] for m in rep["family"])
    assert "r*s + t" in rep["index_convention"]
    return f"multiplicities {sizes} = 3r + 3"


def criterion_8():
    import test_properties as props
    suites = [getattr(props, name) for name in dir(props) if name.startswith("test_")]
    for suite in suites:
        suite()
    return f"{len(suites)} property suites, 100 cases each"


CRITERIA = [
    (1, "exact zerodivisor fixtures", criterion_1, 5),
    (2, "G-regularity certificates", criterion_2, 5),
    (3, "Artinian suite over F2", criterion_3, 30),
    (4, "F5 family separation", criterion_4, 30),
    (5, "reduction 12 = 9 + 3", criterion_5, 30),
    (6, "graded fixture, multiplicities 3, 6, 9", criterion_6, 180),
    (7, "second graded fixture, 3r + 3", criterion_7, 180),
    (8, "property suites", criterion_8, 600),
]


def run_criterion(number, title, check, limit):
    start = time.perf_counter()
    try:
        detail, ok = check(), True
    except Exception as exc:
        detail, ok = f"{type(exc).__name__}: {exc}", False
    elapsed = time.perf_counter() - start
    if ok and elapsed > limit:
        ok, detail = False, f"{detail}; took {elapsed:.1f}s, limit {limit}s"
    return ok, f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.2f}s) - {detail}"


@pytest.mark.parametrize("number, title, check, limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, limit, capsys):
    ok, line = run_criterion(number, title, check, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
