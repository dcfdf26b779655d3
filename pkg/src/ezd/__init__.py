"""Totally reflexive modules from exact zerodivisor pairs over quotient rings."""
from .errors import (
    EzdError,
    InputError,
    NotExactPair,
    ParseError,
    PremiseError,
    Refusal,
    WindowError,
    WitnessRefusal,
)
from .fields import QQ, PrimeField, field_from_spec
from .groebner import Ideal
from .poly import PolyRing, Polynomial
from .ring import (
    EzdPair,
    QuotientRing,
    g_regularity_certificate,
    is_exact_zerodivisor_pair,
    make_quotient_ring,
    nu_of_ideal,
)
from .homalg import (
    RMatrix,
    cokernel_module,
    compare_modules,
    fitting_ideal,
    is_indecomposable_bruteforce,
    minimal_free_resolution,
    module_length,
    module_multiplicity,
    verify_exact_pair,
)
from .brauer_thrall import (
    build_t_matrix,
    certify_indecomposable,
    find_witnesses,
    generate_family,
    main_theorem_report,
    reduce_decomposable_t,
    s_invariant,
    verify_ses_structure,
)

__version__ = "0.1.0"

__all__ = [
    "EzdError", "InputError", "NotExactPair", "ParseError", "PremiseError", "Refusal",
    "WindowError", "WitnessRefusal",
    "QQ", "PrimeField", "field_from_spec", "Ideal", "PolyRing", "Polynomial",
    "EzdPair", "QuotientRing", "g_regularity_certificate", "is_exact_zerodivisor_pair",
    "make_quotient_ring", "nu_of_ideal",
    "RMatrix", "cokernel_module", "compare_modules", "fitting_ideal",
    "is_indecomposable_bruteforce", "minimal_free_resolution", "module_length",
    "module_multiplicity", "verify_exact_pair",
    "build_t_matrix", "certify_indecomposable", "find_witnesses", "generate_family",
    "main_theorem_report", "reduce_decomposable_t", "s_invariant", "verify_ses_structure",
]
