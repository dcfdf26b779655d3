"""Exactness checks and minimal free resolutions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from ..errors import CompositionNonzero, InputError, WindowError
from .engine import Engine, infer_twists
from .matrix import RMatrix
from .module import FPModule, minimal_presentation


def _as_matrix(R, m):
    return m if isinstance(m, RMatrix) else RMatrix(R, m)


def verify_exact_pair(d1, d2, window: Optional[int] = None, ring=None) -> bool:
    """True iff im d2 = ker d1 (within the window for the graded engine).

    The composition d1*d2 must vanish; otherwise `CompositionNonzero`.
    """
    R = ring or (d1.ring if isinstance(d1, RMatrix) else None)
    if R is None:
        raise InputError("pass RMatrix arguments or a ring")
    d1, d2 = _as_matrix(R, d1), _as_matrix(R, d2)
    if d1.ncols != d2.nrows:
        raise InputError(f"shapes {d1.shape} and {d2.shape} do not compose")
    comp = d1 * d2
    if not comp.is_zero():
        raise CompositionNonzero(f"d1*d2 = {comp} is not zero")
    eng = Engine(R, window)
    if window is None:
        if R.is_graded and d1.is_homogeneous() and d2.is_homogeneous():
            _, mid, last = infer_twists(R, [d1, d2])
        else:
            mid, last = (0,) * d1.ncols, (0,) * d2.ncols
    else:
        _, mid, last = infer_twists(R, [d1, d2])
    ker = eng.kernel(d1.column_terms(), mid)
    im = eng.image(d2.column_terms(), last, mid)
    return all(ker[s].rank == im[s].rank for s in ker)


@dataclass(frozen=True)
class ResolutionSegment:
    differentials: tuple
    twists: tuple
    minimality: tuple
    periodicity_report: dict = field(default_factory=dict)
    terminated: bool = False

    @property
    def period(self):
        return self.periodicity_report.get("period")

    @property
    def betti(self):
        if not self.differentials:
            return (len(self.twists[0]),)
        return tuple([self.differentials[0].nrows] + [d.ncols for d in self.differentials])

    def compositions_vanish(self) -> bool:
        return all((a * b).is_zero() for a, b in zip(self.differentials, self.differentials[1:]))

    def to_dict(self):
        return {
            "differentials": [d.to_lists() for d in self.differentials],
            "betti": list(self.betti),
            "minimal": list(self.minimality),
            "period": self.period,
            "terminated": self.terminated,
        }


def _matrix_from_generators(R, eng, gens, rank):
    cols = []
    for _, v in gens:
        vec = eng.vector(v, rank)
        cols.append([R.element(R.base.from_terms(c)) for c in vec])
    return RMatrix.from_columns(R, cols, rank)


def _same_up_to_row_order(a: RMatrix, b: RMatrix) -> bool:
    if a.shape != b.shape:
        return False
    rows = list(b.entries)
    for r in a.entries:
        if r not in rows:
            return False
        rows.remove(r)
    return True


def _repeats(diffs, p):
    """d_{i+p} = d_i for all computed i.

    d_1 is expressed in the caller's basis of F_0 while every later free
    module carries a canonical basis, so d_1 is matched up to row order.
    """
    if len(diffs) <= p:
        return False
    if not _same_up_to_row_order(diffs[0], diffs[p]):
        return False
    return all(diffs[i] == diffs[i + p] for i in range(1, len(diffs) - p))


def _detect_period(diffs):
    for p in (1, 2):
        if _repeats(diffs, p):
            return p, True
    return None, False


def minimal_free_resolution(M: FPModule, steps: int = 6, window: Optional[int] = None,
                            companion: Optional[RMatrix] = None) -> ResolutionSegment:
    """First `steps` differentials of a minimal free resolution of M.

    Each differential is the canonical minimal generating set of the previous
    kernel, so a periodic resolution repeats entrywise.  With a `companion`
    matrix C the report also verifies exactness of (d1, C) and (C, d1).
    """
    R = M.ring
    if steps < 1:
        raise InputError("steps must be positive")
    if window is not None and M.row_degrees is None:
        raise InputError("the graded engine needs a homogeneous presentation")
    M = minimal_presentation(M)
    eng = Engine(R, window)
    tw0 = M.twists()
    if window is not None:
        need = M.presentation.max_entry_degree() + 2
        if window < need:
            raise WindowError(f"truncation window {window} is below max entry degree + 2 = {need}",
                              degree_reached=window)
    if not M.rank:
        return ResolutionSegment((), ((),), (), {"period": None, "entrywise": False}, True)
    eng.check_window(tw0, "F_0")
    # d1: canonical minimal generators of the image of the presentation
    A = M.presentation
    im = eng.image(A.column_terms(), M.col_twists(), tw0)
    gens = eng.min_generators(im, tw0)
    diffs: List[RMatrix] = []
    twists = [tuple(tw0)]
    terminated = False
    while gens and len(diffs) < steps:
        d = _matrix_from_generators(R, eng, gens, len(twists[-1]))
        diffs.append(d)
        twists.append(tuple(g[0] for g in gens))
        if len(diffs) == steps:
            break
        eng.check_window(twists[-1], f"F_{len(diffs)}")
        ker = eng.kernel(d.column_terms(), twists[-1])
        gens = eng.min_generators(ker, twists[-1])
    if not gens:
        terminated = True
    period, entrywise = _detect_period(diffs)
    report = {"period": period, "entrywise": entrywise}
    if companion is not None:
        C = _as_matrix(R, companion)
        T = A if A.shape == C.shape else diffs[0] if diffs else A
        ok = (T.shape == C.shape and T.nrows == T.ncols
              and verify_exact_pair(T, C, window) and verify_exact_pair(C, T, window))
        report["companion_verified"] = bool(ok)
        if report["period"] is None and ok and not terminated:
            report["period"] = 2
    minimality = tuple(d.is_minimal() for d in diffs)
    return ResolutionSegment(tuple(diffs), tuple(twists), minimality, report, terminated)
