"""Finitely presented modules over quotient rings."""
from .endo import (
    Comparison,
    DecompositionVerdict,
    EndAlgebra,
    Hom,
    KModule,
    compare_modules,
    endomorphism_algebra,
    hom_space,
    is_indecomposable_bruteforce,
    verify_idempotent,
)
from .engine import Engine, infer_twists
from .matrix import RMatrix
from .module import (
    FPModule,
    cokernel_module,
    direct_sum,
    fitting_generators,
    fitting_ideal,
    free_module,
    minimal_presentation,
    module_hilbert_values,
    module_length,
    module_multiplicity,
    truncated_kernel,
)
from .resolution import ResolutionSegment, minimal_free_resolution, verify_exact_pair

__all__ = [
    "Comparison", "DecompositionVerdict", "EndAlgebra", "Engine", "FPModule", "Hom",
    "KModule", "RMatrix", "ResolutionSegment", "cokernel_module", "compare_modules",
    "direct_sum", "endomorphism_algebra", "fitting_generators", "fitting_ideal",
    "free_module", "hom_space", "infer_twists", "is_indecomposable_bruteforce",
    "minimal_free_resolution", "minimal_presentation", "module_hilbert_values",
    "module_length", "module_multiplicity", "truncated_kernel", "verify_exact_pair",
    "verify_idempotent",
]
