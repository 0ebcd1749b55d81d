"""Exact arithmetic of Lorentz maps of the 2-torus.

Admissibility of boost parameters, spectra of admissible light speeds via the
Pell equation, and the hyperbolic dynamics of the resulting torus maps.
"""
from ._kernels import BACKEND
from .arith import (
    DomainError,
    QuadraticSurd,
    gcd,
    is_perfect_square,
    isqrt,
    parse_rational,
    parse_surd,
    surd_mul,
)
from .dynamics import (
    EigenData,
    OrbitStats,
    PeriodSearchError,
    RationalPoint,
    TorusAutomorphism,
    apply_point,
    eigen,
    eigen_residual,
    is_anosov,
    matrix_from_triple,
    matrix_order_mod,
    orbit,
    orbit_sample,
    period_of,
)
from .params import (
    Family,
    Inadmissible,
    InvalidTriple,
    ParamPair,
    Triple,
    family_triple,
    is_admissible_c,
    mnp_from_pair,
    pair_from_triple,
    triple_check,
    triple_from_V,
)
from .pell import (
    CFExpansion,
    Convergent,
    PellSolution,
    brute_force_min_solution,
    cf_sqrt,
    convergents,
    pell_compose,
    pell_min_solution,
    pell_power,
    pell_powers,
    pell_solutions,
    scan_min_solution,
)
from .spectra import (
    Spectrum,
    SpectrumTerm,
    accumulation_report,
    brute_force_spectra,
    closer_than,
    minimal_triple,
    spectrum,
    spectrum_index,
)

__version__ = "0.1.0"
