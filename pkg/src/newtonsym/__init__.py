"""Exact Newton interpolation of symmetric polynomials on grids.

The package constructs the normalized interpolation basis P_mu for a grid
of knot values, implements the closed forms of the three exactly solvable
grid families, tests grids for the extra-vanishing (perfectness) property,
and classifies windows of values into the perfect-grid families.  All
arithmetic is exact: rationals, multivariate rational functions, and
quadratic field extensions.
"""

from .errors import (
    DegenerateGrid,
    DenominatorVanishes,
    DivisionByZero,
    ExactFieldError,
    InconsistentWindow,
    IndeterminateTuple,
    IndexOutOfRange,
    MalformedTableau,
    MixedContext,
    NotPerfectWindow,
    ParseError,
    WrongFamily,
    ZeroPolynomial,
)
from .exactfield import (
    QQ,
    ParamPoly,
    QuadExtElem,
    QuadraticExtension,
    RatFunc,
    Rational,
    RationalField,
    RationalFunctionField,
    format_scalar,
    invert,
    is_zero,
    parse_scalar,
    poly_gcd,
    rational_sqrt,
    sqrt_in_field,
)
from .partitions import (
    Partition,
    ReverseTableau,
    cells,
    conjugate,
    contains,
    enumerate_partitions,
    enumerate_reverse_tableaux,
    format_partition,
    is_horizontal_strip,
    length,
    parse_partition,
    part,
    size,
    tableau_to_chain,
)
from .sympoly import SymPoly
from .grids import (
    AlternatingFamily,
    E1Family,
    E2Family,
    ExplicitFamily,
    Grid,
    GridFamily,
    MacdonaldFamily,
    NondegeneracyReport,
    QuadraticFamily,
    SplitGeometricFamily,
    UniversalFamily,
    Window,
    grid_from_json,
    load_grid,
    load_window,
    window_from_json,
)
from .newton import (
    InterpolationProblem,
    NewtonExpansion,
    check_restriction_identity,
    check_shift_identity,
    expand,
    interpolation_basis,
    interpolation_polynomial,
    normalization_value,
    solve,
)
from .closedform import (
    factorial_monomial,
    factorial_schur_det,
    factorial_schur_tableaux,
    macdonald_tableaux,
    psi_weight,
)
from .perfect import (
    VanishingReport,
    extra_vanishing_check,
    is_perfect_up_to,
    term_vanishes,
)
from .classify import (
    AlternatingTuple,
    Classification,
    F,
    GeometricTuple,
    QuadraticTuple,
    classify_tuple,
    classify_window,
    extend_window,
    g0,
    g1,
    g2,
    g3,
    verify_recurrences,
)

__version__ = "0.1.0"
