"""Finitely presented modules: cokernels, lengths, Hilbert data, Fitting ideals."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from ..errors import DimensionDeficit, FitError, InputError, WindowError
from ..groebner import Ideal
from .engine import Engine, infer_twists
from .matrix import RMatrix


@dataclass(frozen=True, eq=False)
class FPModule:
    """coker(R^cols --presentation--> R^rows)."""

    ring: object
    presentation: RMatrix
    row_degrees: Optional[tuple] = None
    col_degrees: Optional[tuple] = None

    @property
    def rank(self):
        """Rank of the free cover (number of generators in this presentation)."""
        return self.presentation.nrows

    @property
    def is_minimal(self):
        return self.presentation.is_minimal()

    @property
    def is_graded(self):
        return self.row_degrees is not None

    def same_presentation(self, other: "FPModule"):
        return (self.presentation == other.presentation
                and self.row_degrees == other.row_degrees)

    def twists(self):
        return self.row_degrees if self.row_degrees is not None else (0,) * self.rank

    def col_twists(self):
        if self.col_degrees is not None:
            return self.col_degrees
        return (0,) * self.presentation.ncols

    def __repr__(self):
        return f"FPModule(coker {self.presentation})"


def cokernel_module(R, matrix, row_degrees: Optional[Sequence[int]] = None) -> FPModule:
    """The module presented by `matrix` (rows = generators, columns = relations).

    In a graded ring with homogeneous entries the twists are inferred; pass
    `row_degrees` to fix the degrees of the generators.
    """
    if not isinstance(matrix, RMatrix):
        matrix = RMatrix(R, matrix)
    elif matrix.ring is not R and matrix.ring != R:
        raise InputError("matrix is over a different ring")
    rows = cols = None
    if R.is_graded and matrix.is_homogeneous():
        try:
            rows, cols = infer_twists(R, [matrix], row_degrees)
        except InputError:
            if row_degrees is not None:
                raise
            rows = cols = None
    elif row_degrees is not None:
        raise InputError("row degrees need a homogeneous presentation over a graded ring")
    return FPModule(R, matrix, rows, cols)


def free_module(R, rank: int = 1, degrees=None) -> FPModule:
    return cokernel_module(R, RMatrix(R, [[] for _ in range(rank)], 0), degrees or (0,) * rank)


def direct_sum(*modules: FPModule) -> FPModule:
    R = modules[0].ring
    A = RMatrix.block_diag(R, *(m.presentation for m in modules))
    graded = all(m.row_degrees is not None for m in modules)
    if graded:
        rows = tuple(d for m in modules for d in m.row_degrees)
        cols = tuple(d for m in modules for d in m.col_degrees)
        return FPModule(R, A, rows, cols)
    return FPModule(R, A)


def engine_for(M: FPModule, window=None) -> Engine:
    R = M.ring
    if window is None:
        return Engine(R, None)
    if M.row_degrees is None:
        raise InputError("the graded engine needs a homogeneous presentation")
    return Engine(R, window)


def _check_window(M, window):
    if window is None:
        return
    need = M.presentation.max_entry_degree() + 2
    if window < need:
        raise WindowError(f"truncation window {window} is below max entry degree + 2 = {need}",
                          degree_reached=window)


# --------------------------------------------------------------------------
# unit stripping


def minimal_presentation(M: FPModule) -> FPModule:
    """Remove unit entries by elementary operations.

    At a unit u = A[i][j]: A'[k][l] = A[k][l] - A[k][j] u^-1 A[i][l], dropping
    row i and column j.  The cokernel is unchanged.
    """
    A = M.presentation
    rows = M.row_degrees
    cols = M.col_degrees
    while True:
        hit = A.unit_entry()
        if hit is None:
            break
        i, j = hit
        uinv = A[i, j].inverse()
        pivot_row = A.row(i)
        new = []
        for k in range(A.nrows):
            if k == i:
                continue
            f = A[k, j] * uinv
            new.append([A[k, l] - f * pivot_row[l] for l in range(A.ncols) if l != j])
        A = RMatrix(M.ring, new, A.ncols - 1)
        if rows is not None:
            rows = rows[:i] + rows[i + 1:]
            cols = cols[:j] + cols[j + 1:]
    return FPModule(M.ring, A, rows, cols)


# --------------------------------------------------------------------------
# sizes


def image_spaces(M: FPModule, engine: Engine):
    A = M.presentation
    return engine.image(A.column_terms(), M.col_twists(), M.twists())


def module_length(M: FPModule) -> int:
    """dim_k M over an Artinian ring, exactly."""
    if not M.ring.is_artinian:
        raise InputError("length needs an Artinian ring")
    if not M.rank:
        return 0
    eng = Engine(M.ring)
    im = image_spaces(M, eng)[None]
    return M.rank * M.ring.length - im.rank


def module_hilbert_values(M: FPModule, window: int) -> List[tuple]:
    """(d, dim_k M_d) for d from min(0, lowest twist) to `window`."""
    if M.row_degrees is None:
        raise InputError("Hilbert values need a homogeneous presentation")
    eng = Engine(M.ring, window)
    tw = M.twists()
    im = image_spaces(M, eng) if tw else {}
    lo = min([0, *tw])
    out = []
    for d in range(lo, window + 1):
        total = eng.slot_dim(tw, d) if tw else 0
        out.append((d, total - (im[d].rank if d in im else 0)))
    return out


def module_multiplicity(M: FPModule, window: int = 8, cap: int = 64) -> int:
    """Multiplicity of M normalized at dim R.

    Fits the tail of the Hilbert function; the window is doubled (up to
    `cap`) until the fit validates.  A module of smaller dimension than R
    raises `DimensionDeficit`.
    """
    R = M.ring
    if R.is_artinian and M.row_degrees is None:
        return module_length(M)
    dim = R.dim
    D = window
    while True:
        values = [v for _, v in module_hilbert_values(M, D)]
        if dim == 0:
            if len(values) >= 2 and not any(values[-2:]):
                return sum(values)
        elif len(values) >= dim + 3:
            diffs = [values[-(dim + 3):]]
            for _ in range(dim):
                prev = diffs[-1]
                diffs.append([b - a for a, b in zip(prev, prev[1:])])
            if not any(diffs[dim]):
                e = diffs[dim - 1][-1]
                if e == 0:
                    raise DimensionDeficit(f"module dimension is below dim R = {dim}")
                if e < 0:
                    raise FitError(f"fitted leading coefficient {e} is negative")
                return e
        if D * 2 > cap:
            raise FitError(f"Hilbert function did not fit a polynomial of degree {dim - 1} "
                           f"by degree {D}")
        D *= 2


# --------------------------------------------------------------------------
# Fitting ideals


def fitting_ideal(M: FPModule, j: int) -> Ideal:
    """Fitt_j(M) as an ideal of the polynomial ring (contains the relations)."""
    if j < 0:
        raise InputError("Fitting index must be nonnegative")
    R = M.ring
    A = M.presentation
    k = A.nrows - j
    if k <= 0:
        return Ideal(R.base, [R.base.one()])
    minors = [m.rep for m in A.minors(k) if not m.is_zero()]
    return R.ideal + minors


def fitting_generators(M: FPModule, j: int) -> List[str]:
    """Canonical printable generators of Fitt_j(M) modulo the relations.

    Normal forms of the reduced Groebner basis, smallest first, dropping any
    that lie in the ideal of the relations and the ones already kept; printed
    in descending order.
    """
    R = M.ring
    I = fitting_ideal(M, j)
    cands = sorted((R.nf(g) for g in I.gb), key=lambda p: R.base.key(p.lm) if p else ())
    kept = []
    for r in cands:
        if r.is_zero():
            continue
        if not (R.ideal + kept).contains(r):
            kept.append(r)
    kept.sort(key=lambda p: R.base.key(p.lm), reverse=True)
    return [str(r) for r in kept]


def truncated_kernel(R, matrix, window: Optional[int] = None,
                     row_degrees: Optional[Sequence[int]] = None) -> Dict:
    """Kernel of the map given by `matrix`, slot by slot.

    Returns slot -> list of kernel vectors (tuples of ring elements); the
    single exact slot is keyed ``None``.
    """
    if not isinstance(matrix, RMatrix):
        matrix = RMatrix(R, matrix)
    if window is None:
        eng = Engine(R)
        cols = (0,) * matrix.ncols
        rows = (0,) * matrix.nrows
        if R.is_graded and matrix.is_homogeneous():
            rows, cols = infer_twists(R, [matrix], row_degrees)
    else:
        need = matrix.max_entry_degree() + 2
        if window < need:
            raise WindowError(f"truncation window {window} is below max entry degree + 2 = {need}",
                              degree_reached=window)
        eng = Engine(R, window)
        rows, cols = infer_twists(R, [matrix], row_degrees)
    spaces = eng.kernel(matrix.column_terms(), cols, rows)
    out = {}
    for slot, ech in spaces.items():
        out[slot] = [tuple(R.element(R.base.from_terms(comp)) for comp in eng.vector(v, matrix.ncols))
                     for v in ech.basis()]
    return out
