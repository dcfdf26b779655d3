"""Extensions of (R/(x))^n by R/(y) presented by T-matrices.

For an exact zerodivisor pair {x, y} and a_1..a_n in R,

    T(x, y, a_1..a_n) = [[x         a_1]
                         [   ...    ... ]
                         [       x  a_n]
                         [          y  ]]

presents an extension 0 -> (R/(x))^n -> M -> R/(y) -> 0.  When the images of
the a_i minimally generate an n-generated ideal of R/(x, y) (and R/(x) is
G-regular) the module M is indecomposable: a splitting would give M a second
presentation T(x, y, 0, b_1..b_{n-1}), and comparing the n-th Fitting ideals
(the ideal of entries) would bound that ν by n-1.  Perturbing a_1 by r*b
yields modules separated by their n-th Fitting ideals whenever the residues
of the parameters differ.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .errors import (
    DimensionDeficit,
    FitError,
    InputError,
    NothingToReduce,
    PremiseError,
    Refusal,
    WindowError,
    WitnessRefusal,
)
from .groebner import Ideal, colon_by_ideal, ideal_equal, ideal_member
from .homalg import (
    RMatrix,
    cokernel_module,
    compare_modules,
    fitting_generators,
    fitting_ideal,
    is_indecomposable_bruteforce,
    minimal_free_resolution,
    module_hilbert_values,
    module_length,
    module_multiplicity,
)
from .homalg.endo import DEFAULT_BUDGET, NOT_ISOMORPHIC
from .homalg.engine import Engine, infer_twists
from .linalg import Echelon, intersection_dim
from .ring import (
    ASSUMED,
    EzdPair,
    GRegularityCertificate,
    QuotientRing,
    g_regularity_certificate,
    is_exact_zerodivisor_pair,
    nu_of_ideal,
    residue,
)

CERTIFIED = "Certified"
CONDITIONAL = "Conditional"
UNCERTIFIED = "Uncertified"


def _engine_window(R, window):
    return None if R.is_artinian else window


# --------------------------------------------------------------------------
# T-matrices


@dataclass(frozen=True, eq=False)
class TMatrix:
    pair: EzdPair
    a: tuple
    matrix: RMatrix
    row_degrees: Optional[tuple] = None
    conditions: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.pair.ring

    @property
    def x(self):
        return self.pair.x

    @property
    def y(self):
        return self.pair.y

    @property
    def n(self):
        return len(self.a)

    def module(self):
        return cokernel_module(self.ring, self.matrix, self.row_degrees)

    def companion(self) -> RMatrix:
        """T(y, x, -a): composes to zero with T on both sides."""
        return _t_matrix(self.ring, self.y, self.x, [-ai for ai in self.a])

    def label(self):
        args = [str(self.x), str(self.y)] + [str(ai) for ai in self.a]
        return "T(" + ", ".join(args) + ")"

    def __str__(self):
        return str(self.matrix)


def _t_matrix(R, x, y, a) -> RMatrix:
    n = len(a)
    rows = []
    for i in range(n):
        row = [0] * (n + 1)
        row[i] = x
        row[n] = a[i]
        rows.append(row)
    rows.append([0] * n + [y])
    return RMatrix(R, rows, n + 1)


def _t_twists(pair, a):
    """Generator degrees making T homogeneous: e_{n+1} = 0, e_i = deg y - deg a_i."""
    R = pair.ring
    if not R.is_graded:
        return None
    elems = [pair.x, pair.y, *a]
    if not all(e.is_homogeneous() for e in elems):
        return None
    dy = pair.y.degree()
    return tuple((dy - ai.degree()) if not ai.is_zero() else 0 for ai in a) + (0,)


def build_t_matrix(pair: EzdPair, a: Sequence) -> TMatrix:
    if not isinstance(pair, EzdPair):
        raise InputError("build_t_matrix needs a verified EzdPair")
    R = pair.ring
    a = tuple(R.element(ai) for ai in a)
    # a_i must lie in ((x) : (0:y)); for an exact pair (0:y) = (x) so this is all of R
    xi = R.ideal_of([pair.x])
    colon = colon_by_ideal(xi, R.annihilator(pair.y))
    conditions = {"colon_is_unit": colon.is_unit(),
                  "a_in_colon": all(colon.contains(ai.rep) for ai in a)}
    if not conditions["a_in_colon"]:
        raise PremiseError("some a_i is outside ((x):(0:y))")
    matrix = _t_matrix(R, pair.x, pair.y, a)
    twists = _t_twists(pair, a)
    return TMatrix(pair, a, matrix, twists, conditions)


# --------------------------------------------------------------------------
# the short exact sequence 0 -> (R/(x))^n -> M -> R/(y) -> 0


@dataclass(frozen=True)
class SesVerification:
    verified: bool
    checks: dict
    engine: str
    failed: tuple = ()
    lengths: Optional[dict] = None
    note: Optional[str] = None

    def to_dict(self):
        out = {"verified": self.verified, "engine": self.engine, "checks": self.checks}
        if self.failed:
            out["failed"] = list(self.failed)
        if self.lengths:
            out["lengths"] = self.lengths
        if self.note:
            out["note"] = self.note
        return out


def verify_ses_structure(T: TMatrix, window: Optional[int] = 8) -> SesVerification:
    """Check the extension structure of coker T slot by slot.

    (i)   the last coordinate maps im T into (y), so M -> R/(y) is a surjection;
    (ii)  its kernel is generated by e_1..e_n: y e_{n+1} R lies in im T + (R^n + 0);
    (iii) (R/(x))^n -> kernel is injective: x e_i lie in im T and
          (R^n + 0) ∩ im T has the dimension of x R^n in every slot.
    """
    R = T.ring
    win = _engine_window(R, window)
    if win is not None and T.row_degrees is None:
        raise InputError("the graded engine needs homogeneous x, y and a_i")
    eng = Engine(R, win)
    n = T.n
    A = T.matrix
    rows = T.row_degrees or (0,) * (n + 1)
    cols = infer_twists(R, [A], rows)[1] if T.row_degrees is not None else (0,) * (n + 1)
    key = eng.key(rows)
    y_ideal = R.ideal_of([T.y])
    checks = {}
    checks["surjection"] = all(y_ideal.contains(A[n, j].rep) for j in range(n + 1))
    im = eng.image(A.column_terms(), cols, rows)
    y_vec = tuple({} for _ in range(n)) + (T.y.rep._terms,)
    dy = T.y.degree() + rows[n]
    x_vecs = [tuple((T.x.rep._terms if j == i else {}) for j in range(n + 1)) for i in range(n)]
    gen_ok = inj_ok = True
    x_in_image = True
    for slot in eng.slots(rows):
        U = im[slot]
        base = [{(j, m): R.field.one} for j in range(n) for m in eng.multipliers(rows[j], slot)]
        Rn = Echelon(R.field, key, base)
        both = U.copy()
        both.extend(base)
        for m in eng.multipliers(dy, slot):
            if not both.contains(eng.coords(eng.mul_vec(m, y_vec))):
                gen_ok = False
        xR = Echelon(R.field, key)
        for i, v in enumerate(x_vecs):
            for m in eng.multipliers(rows[i] + T.x.degree(), slot):
                c = eng.coords(eng.mul_vec(m, v))
                xR.add(c)
                if not U.contains(c):
                    x_in_image = False
        if intersection_dim(Rn, U) != xR.rank:
            inj_ok = False
    checks["kernel_generated"] = gen_ok
    checks["injective"] = inj_ok and x_in_image
    failed = tuple(k for k, v in checks.items() if not v)
    lengths = None
    if R.is_artinian:
        M = T.module()
        lx = module_length(cokernel_module(R, [[T.x]]))
        ly = module_length(cokernel_module(R, [[T.y]]))
        lengths = {"M": module_length(M), "R/(x)": lx, "R/(y)": ly,
                   "additive": module_length(M) == n * lx + ly}
    note = "n = 0: the kernel is zero and M = R/(y)" if n == 0 else None
    return SesVerification(not failed, checks, "exact" if win is None else f"graded(D={win})",
                           failed, lengths, note)


# --------------------------------------------------------------------------
# s(x, y)


EXACTLY = "ExactlyK"
AT_LEAST = "AtLeastK"
EVIDENCE_INFINITE = "EvidenceInfinite"


@dataclass(frozen=True)
class SInvariantEstimate:
    pair: EzdPair
    nu_values: tuple  # (description, power j, nu)
    lower_bound: int
    verdict: str
    value: Optional[int] = None
    justification: Optional[str] = None
    growth: Optional[dict] = None

    def label(self):
        if self.verdict == EXACTLY:
            return f"ExactlyK({self.value})"
        if self.verdict == AT_LEAST:
            return f"AtLeastK({self.lower_bound})"
        return f"EvidenceInfinite(degree {self.growth['degree']})"

    def to_dict(self):
        out = {"verdict": self.label(),
               "nu_values": [{"ideal": d, "power": j, "nu": v} for d, j, v in self.nu_values]}
        if self.justification:
            out["justification"] = self.justification
        if self.growth:
            out["growth"] = self.growth
        return out


def _growth_degree(values):
    """Smallest d with constant d-th differences (at least two points agreeing)."""
    seq = list(values)
    for d in range(len(values)):
        if len(seq) >= 2 and len(set(seq)) == 1:
            return d
        seq = [b - a for a, b in zip(seq, seq[1:])]
    return None


def residue_pair_ring(pair: EzdPair) -> QuotientRing:
    return pair.ring.quotient([pair.x, pair.y])


def _power_nu(Rbar, j):
    if Rbar.is_graded:
        return Rbar.hilbert_function(j)
    from .poly import monomials_of_degree
    gens = [Rbar.base.monomial(m) for m in monomials_of_degree(Rbar.nvars, j)]
    return nu_of_ideal(Rbar, gens)


def s_invariant(pair: EzdPair, ideals: Optional[Sequence] = None, power_window: int = 5) -> SInvariantEstimate:
    """Estimate s(x, y) = sup ν_{R/(x,y)} of images of ideals of R."""
    if not isinstance(pair, EzdPair):
        raise InputError("s_invariant needs a verified EzdPair")
    R = pair.ring
    Rbar = residue_pair_ring(pair)
    table = []
    for label_elems in ideals or ():
        label, elems = label_elems
        imgs = [Rbar.element(R.element(e).rep) for e in elems]
        table.append((label, 1, nu_of_ideal(Rbar, imgs)))
    powers = [(f"m^{j}", j, _power_nu(Rbar, j)) for j in range(1, power_window + 1)]
    table.extend(powers)
    if not table:
        return SInvariantEstimate(pair, (), 0, AT_LEAST)
    square_zero = Rbar.is_artinian and Rbar.top_degree <= 1 and Rbar.is_graded
    if not Rbar.is_graded and Rbar.is_artinian:
        square_zero = _power_nu(Rbar, 2) == 0 and Rbar.length == 1 + _power_nu(Rbar, 1)
    if square_zero:
        e = Rbar.length - 1
        value = max(1, e)
        if e == 0:
            table.append(("R/(x,y)", 0, 1))
        lower = max(v for _, _, v in table)
        why = (f"R/(x,y) has m^2 = 0, so every subspace of m is an ideal; "
               f"s = max(1, dim_k m) = {value}")
        return SInvariantEstimate(pair, tuple(table), lower, EXACTLY, value, why)
    lower = max(v for _, _, v in table)
    vals = [v for _, _, v in powers]
    increasing = len(vals) >= 2 and all(a < b for a, b in zip(vals, vals[1:]))
    if increasing:
        deg = _growth_degree(vals)
        if deg is not None and deg >= 1:
            growth = {"degree": deg, "analytic_spread_estimate": deg + 1,
                      "dim_residue_ring": Rbar.dim}
            return SInvariantEstimate(pair, tuple(table), lower, EVIDENCE_INFINITE, growth=growth)
    return SInvariantEstimate(pair, tuple(table), lower, AT_LEAST)


# --------------------------------------------------------------------------
# witnesses


def find_witnesses(pair: EzdPair, n: int, max_power: int = 12) -> list:
    """n homogeneous elements whose images minimally generate an ideal of R/(x,y).

    Takes the first n standard monomials of degree j in R/(x,y) (descending
    in the monomial order) for the least j with at least n of them.
    """
    if n < 0:
        raise InputError("n must be nonnegative")
    if n == 0:
        return []
    R = pair.ring
    Rbar = residue_pair_ring(pair)
    best = 0
    top = Rbar.top_degree if Rbar.is_artinian else max_power
    for j in range(1, top + 1):
        monos = Rbar.basis_in_degree(j)
        best = max(best, len(monos))
        if len(monos) >= n:
            chosen = [R.element(R.base.monomial(m)) for m in monos[:n]]
            if nu_of_ideal(Rbar, [c.rep for c in chosen]) == n:
                return chosen
    raise WitnessRefusal(f"no {n} elements with ν = {n} found in R/(x,y); "
                         f"largest ν of a power of the maximal ideal reached is {best}", bound=best)


# --------------------------------------------------------------------------
# indecomposability


@dataclass(frozen=True)
class IndecomposabilityCertificate:
    premises: dict
    verdict: str
    method: str
    note: Optional[str] = None
    fitting_generators: tuple = ()

    def to_dict(self):
        out = {"verdict": self.verdict, "method": self.method, "premises": self.premises}
        if self.note:
            out["note"] = self.note
        return out


def certify_indecomposable(T: TMatrix, greg: GRegularityCertificate, window: Optional[int] = 8,
                           ses: Optional[SesVerification] = None) -> IndecomposabilityCertificate:
    R = T.ring
    ses = ses or verify_ses_structure(T, window)
    if not ses.verified:
        raise PremiseError(f"extension structure failed: {', '.join(ses.failed)}")
    Rbar = residue_pair_ring(T.pair)
    n = T.n
    nu = nu_of_ideal(Rbar, [ai.rep for ai in T.a]) if n else 0
    if nu != n:
        raise PremiseError(f"ν over R/(x,y) of the a_i is {nu}, not {n}")
    M = T.module()
    fitt = fitting_ideal(M, n)
    # the n-th Fitting ideal of an (n+1)-square matrix is its ideal of entries
    expected = R.ideal_of(([T.x] if n else []) + [T.y, *T.a])
    fitt_ok = ideal_equal(fitt, expected)
    premises = {
        "pair_verified": True,
        "g_regularity": greg.verdict,
        "nu_witness": {"nu": nu, "n": n},
        "fitting_n_equals_entries": fitt_ok,
        "ses_verified": True,
    }
    if not fitt_ok:
        raise PremiseError("n-th Fitting ideal differs from (x, y, a_1..a_n)")
    gens = tuple(fitting_generators(M, n))
    if n == 0:
        return IndecomposabilityCertificate(premises, CERTIFIED, "cyclic",
                                            "R/(y) is cyclic over a local ring", gens)
    if greg.certified:
        return IndecomposabilityCertificate(premises, CERTIFIED, "fitting-invariant", None, gens)
    if greg.verdict == ASSUMED:
        note = f"conditional on assumed G-regularity of R/(x): {greg.evidence.get('note', '')}"
        return IndecomposabilityCertificate(premises, CONDITIONAL, "fitting-invariant", note, gens)
    return IndecomposabilityCertificate(premises, UNCERTIFIED, "fitting-invariant",
                                        "G-regularity of R/(x) is not established", gens)


# --------------------------------------------------------------------------
# families


@dataclass(frozen=True, eq=False)
class FamilyMember:
    r: object
    t_matrix: TMatrix
    module: object
    fitting_n: Ideal
    fitting_generators: tuple
    ses: SesVerification
    certificate: IndecomposabilityCertificate
    size: Optional[int] = None
    size_kind: str = "length"
    resolution_period: Optional[int] = None
    bruteforce: Optional[str] = None

    def to_dict(self):
        out = {
            "r": str(self.r),
            "fitting_generators": list(self.fitting_generators),
            "multiplicity_or_length": self.size,
            "ses_verified": self.ses.verified,
            "indecomposable": {"verdict": self.certificate.verdict, "method": self.certificate.method},
            "resolution_period": self.resolution_period,
        }
        if self.certificate.note:
            out["indecomposable"]["note"] = self.certificate.note
        return out


def _module_size(M, R, window):
    if R.is_artinian:
        return module_length(M), "length"
    return module_multiplicity(M, window), "multiplicity"


def _member(R, pair, a, r, greg, window, steps, bruteforce, budget):
    T = build_t_matrix(pair, a)
    ses = verify_ses_structure(T, window)
    cert = certify_indecomposable(T, greg, window, ses)
    M = T.module()
    size, kind = _module_size(M, R, window)
    period = None
    if steps:
        res = minimal_free_resolution(M, steps, _engine_window(R, window), T.companion())
        period = res.period
    brute = None
    if bruteforce and R.is_artinian:
        brute = is_indecomposable_bruteforce(M, budget).verdict
    return FamilyMember(r, T, M, fitting_ideal(M, T.n), cert.fitting_generators, ses, cert,
                        size, kind, period, brute)


@dataclass(frozen=True)
class Family:
    members: tuple
    separation: tuple  # (p, q, verdict string)

    @property
    def pairwise_distinct(self):
        return all(v.startswith(NOT_ISOMORPHIC) for _, _, v, distinct in self.separation if distinct)


def generate_family(pair: EzdPair, n: int, witnesses: Sequence, r_values: Sequence,
                    window: Optional[int] = 8, greg: Optional[GRegularityCertificate] = None,
                    steps: int = 0, bruteforce: bool = False, budget: int = DEFAULT_BUDGET) -> Family:
    """Members coker T(x, y, a_1 + r b, a_2..a_n) for r in r_values."""
    R = pair.ring
    if n < 1:
        raise InputError("a family needs n >= 1")
    if len(witnesses) != n + 1:
        raise InputError(f"expected n + 1 = {n + 1} witnesses (a_1..a_n, b), got {len(witnesses)}")
    wit = [R.element(w) for w in witnesses]
    Rbar = residue_pair_ring(pair)
    nu = nu_of_ideal(Rbar, [w.rep for w in wit])
    if nu != n + 1:
        raise PremiseError(f"ν over R/(x,y) of the witnesses is {nu}, not n + 1 = {n + 1}")
    if greg is None:
        greg = g_regularity_certificate(R.quotient([pair.x]))
    *a, b = wit
    members = []
    for r in r_values:
        r = R.element(r)
        a_r = [a[0] + r * b] + a[1:]
        members.append(_member(R, pair, a_r, r, greg, window, steps, bruteforce, budget))
    win = _engine_window(R, window)
    separation = []
    for p, q in combinations(members, 2):
        distinct = residue(p.r) != residue(q.r)
        verdict = compare_modules(p.module, q.module, win, budget)
        separation.append((str(p.r), str(q.r), str(verdict), distinct))
    return Family(tuple(members), tuple(separation))


# --------------------------------------------------------------------------
# splitting off R/(x)


@dataclass(frozen=True)
class Reduction:
    reduced: TMatrix
    removed_index: int
    transcript: tuple
    certificate: object
    conservation: dict


def _fmt(e):
    s = str(e)
    return f"({s})" if any(ch in s for ch in "+- ") else s


def reduce_decomposable_t(T: TMatrix, window: Optional[int] = 8) -> Reduction:
    """Split R/(x) off coker T when ν of the a_i over R/(x,y) is below n.

    With a_i = c x + d y + sum_j b_j a_j (j != i), the operations
        last column -= c * column i
        row i       -= d * last row
        row i       -= b_j * row j
        column j    += b_j * column i
    turn T into (x) ⊕ T(x, y, a without a_i).
    """
    R = T.ring
    n = T.n
    Rbar = residue_pair_ring(T.pair)
    nu = nu_of_ideal(Rbar, [ai.rep for ai in T.a]) if n else 0
    if nu == n:
        raise NothingToReduce(f"ν over R/(x,y) of the a_i equals n = {n}; nothing to split off")
    x, y = T.x, T.y
    for i in reversed(range(n)):
        others = [j for j in range(n) if j != i]
        labelled = [("c", x), ("d", y)] + [(j, T.a[j]) for j in others]
        nonzero = [(lab, e) for lab, e in labelled if not e.is_zero()]
        ideal = Ideal(R.base, [e.rep for _, e in nonzero] + list(R.relations))
        ok, cert = ideal_member(T.a[i].rep, ideal, certificate=True)
        if ok:
            break
    else:
        raise NothingToReduce("no a_i lies in the ideal generated by x, y and the others")
    coeffs = {lab: R.element(cf) for (lab, _), cf in zip(nonzero, cert.cofactors)}
    c = coeffs.get("c", R.zero())
    d = coeffs.get("d", R.zero())
    b = {j: coeffs.get(j, R.zero()) for j in others}
    A = T.matrix
    last = n
    transcript = [f"a_{i + 1} = " + " + ".join(
        [f"{_fmt(c)}*{_fmt(x)}", f"{_fmt(d)}*{_fmt(y)}"]
        + [f"{_fmt(b[j])}*{_fmt(T.a[j])}" for j in others])]
    A = A.add_col_multiple(last, i, -c)
    transcript.append(f"col{last + 1} -= {_fmt(c)}*col{i + 1}")
    A = A.add_row_multiple(i, last, -d)
    transcript.append(f"row{i + 1} -= {_fmt(d)}*row{last + 1}")
    for j in others:
        A = A.add_row_multiple(i, j, -b[j])
        transcript.append(f"row{i + 1} -= {_fmt(b[j])}*row{j + 1}")
    for j in others:
        A = A.add_col_multiple(j, i, b[j])
        transcript.append(f"col{j + 1} += {_fmt(b[j])}*col{i + 1}")
    reduced = build_t_matrix(T.pair, [T.a[j] for j in others])
    keep = others + [last]
    block_ok = (A.submatrix(keep, keep) == reduced.matrix and A[i, i] == x
                and all(A[i, j].is_zero() for j in keep) and all(A[j, i].is_zero() for j in keep))
    if not block_ok:
        raise ArithmeticError(f"reduction did not reach block form: {A}")
    transcript.append(f"result: ({x}) ⊕ {reduced.label()}")
    conservation = _conservation(T, reduced, i, window)
    return Reduction(reduced, i, tuple(transcript), cert, conservation)


def _conservation(T, reduced, i, window):
    R = T.ring
    Rx = cokernel_module(R, [[T.x]],
                         None if T.row_degrees is None else (T.row_degrees[i],))
    if R.is_artinian:
        before = module_length(T.module())
        after = module_length(reduced.module())
        split = module_length(Rx)
        return {"kind": "length", "before": before, "after": after, "summand": split,
                "holds": before == after + split}
    hv = lambda M: dict(module_hilbert_values(M, window))
    before, after, split = hv(T.module()), hv(reduced.module()), hv(Rx)
    degrees = sorted(set(before) | set(after) | set(split))
    holds = all(before.get(d, 0) == after.get(d, 0) + split.get(d, 0) for d in degrees)
    return {"kind": "hilbert", "before": [before.get(d, 0) for d in degrees],
            "after": [after.get(d, 0) for d in degrees],
            "summand": [split.get(d, 0) for d in degrees], "holds": holds}


# --------------------------------------------------------------------------
# the report


def main_theorem_report(R: QuotientRing, pair: EzdPair, greg_x: Optional[GRegularityCertificate],
                        r_max: int, window: int = 8, steps: int = 6, power_window: int = 5,
                        budget: int = DEFAULT_BUDGET) -> dict:
    """For r = 0..r_max: an extension of r copies of R/(x) by R/(y), its
    multiplicity (or length) against r*s + t, certificate and period."""
    if not isinstance(pair, EzdPair):
        pair = is_exact_zerodivisor_pair(R, *pair)
    Rx = R.quotient([pair.x])
    greg = greg_x or g_regularity_certificate(Rx)
    Rbar = residue_pair_ring(pair)
    dim_bar = Rbar.dim
    hypotheses = {"dim_ok": dim_bar >= 2, "dim_residue_ring": dim_bar,
                  "g_regular": greg.verdict}
    failures = []
    if dim_bar < 2:
        failures.append(f"dim R/(x,y) = {dim_bar} < 2: infinitely many witnesses are not guaranteed")
    if greg.verdict == ASSUMED:
        hypotheses["assumptions"] = [f"G-regularity of R/(x): {greg.evidence.get('note', '')}"]
    elif not greg.certified:
        failures.append(f"G-regularity of R/(x) is {greg.verdict}")
    hypotheses["failures"] = failures
    sinv = s_invariant(pair, power_window=power_window)
    s_mult, _ = _module_size(cokernel_module(R, [[pair.x]]), R, window)
    t_mult, _ = _module_size(cokernel_module(R, [[pair.y]]), R, window)
    family = []
    for r in range(r_max + 1):
        entry = {"r": str(r)}
        try:
            a = find_witnesses(pair, r)
            m = _member(R, pair, a, r, greg, window, steps, False, budget)
            entry = m.to_dict()
            entry["r"] = str(r)
            entry["expected"] = r * s_mult + t_mult
            entry["matches_rs_plus_t"] = m.size == r * s_mult + t_mult
        except (Refusal, WindowError, FitError, DimensionDeficit) as exc:
            entry["refused"] = f"{type(exc).__name__}: {exc}"
        family.append(entry)
    return {
        "ring": R.describe(),
        "pair": pair.summary(),
        "greg": greg.to_dict(),
        "s_invariant": sinv.to_dict(),
        "hypothesis_checks": hypotheses,
        "s_mult": s_mult,
        "t_mult": t_mult,
        "family": family,
        "index_convention": "member r extends r copies of R/(x) by R/(y); "
                            "its expected multiplicity is r*s + t",
    }
