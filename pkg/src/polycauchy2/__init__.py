"""Exact arithmetic for the level-2 poly-Cauchy sequence and its convolution identities.

The package computes the sequence C_{2n}^(k) and the level-2 triangle [[n, m]]
by several independent routes, and mechanically verifies the closed-form
convolution identities that relate them, all over exact rationals.
"""

from .convolution import (
    CheckRow,
    ConjecturePolynomial,
    ConvolutionSpec,
    IDENTITY_NAMES,
    IdentityReport,
    conjecture_prefactor,
    convolve,
    extract_conjecture_polynomials,
    verify_identity,
)
from .exact import (
    HarmonicCache,
    Rational,
    binomial,
    double_factorial,
    harmonic,
    multinomial,
    rational_from_text,
    rational_to_text,
)
from .polycauchy import (
    DEFAULT_SERIES_ORDER,
    IntegralCheck,
    PolyCauchyTable,
    composition_series,
    integral_representation_check,
    level1_by_formula,
    level1_by_series,
    level2_by_formula,
    level2_by_series,
)
from .series import BUILTIN_SERIES_NAMES, Series, builtin_series
from .stirling import (
    CentralFactorialTriangle,
    FormulaCheck,
    Level2Triangle,
    StirlingTriangle,
    central_factorial_even,
    central_factorial_triangle,
    closed_form_fixtures,
    level2_by_classical_combination,
    level2_by_recurrence,
    level2_by_rising_factorial,
    level2_by_symmetric_sum,
    stirling1,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Rational",
    "rational_to_text",
    "rational_from_text",
    "binomial",
    "multinomial",
    "double_factorial",
    "harmonic",
    "HarmonicCache",
    "Series",
    "builtin_series",
    "BUILTIN_SERIES_NAMES",
    "StirlingTriangle",
    "Level2Triangle",
    "CentralFactorialTriangle",
    "stirling1",
    "level2_by_recurrence",
    "level2_by_rising_factorial",
    "level2_by_symmetric_sum",
    "level2_by_classical_combination",
    "central_factorial_triangle",
    "central_factorial_even",
    "closed_form_fixtures",
    "FormulaCheck",
    "level2_by_formula",
    "level2_by_series",
    "level1_by_formula",
    "level1_by_series",
    "PolyCauchyTable",
    "IntegralCheck",
    "integral_representation_check",
    "DEFAULT_SERIES_ORDER",
    "composition_series",
    "ConvolutionSpec",
    "convolve",
    "CheckRow",
    "IdentityReport",
    "verify_identity",
    "IDENTITY_NAMES",
    "ConjecturePolynomial",
    "extract_conjecture_polynomials",
    "conjecture_prefactor",
]
