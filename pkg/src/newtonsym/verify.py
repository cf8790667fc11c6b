"""The cross-checking identity suite behind the ``verify`` command.

Each check exercises one of the exact identities the library is built on,
over universal (fully symbolic) or sampled rational grids, and returns a
(name, passed, detail) triple.  Everything is exact; a single failed
comparison fails the check.
"""

from __future__ import annotations

from fractions import Fraction

from .classify import F, g0, g1, g2, g3
from .closedform import factorial_schur_det, factorial_schur_tableaux, macdonald_tableaux
from .exactfield import QQ, RationalFunctionField
from .grids import Grid, MacdonaldFamily, UniversalFamily
from .newton import (
    check_restriction_identity,
    check_shift_identity,
    expand,
    interpolation_polynomial,
)
from .partitions import enumerate_partitions

SAMPLE_I = dict(a=1, b=2, c=3, q=Fraction(2, 3), t=Fraction(5, 7))

#: The printed coefficient polynomials of the universal cubic expansion,
#: over the common denominator (u02-u10)*(u01-u10).
UNIVERSAL_CUBIC_COEFFS = {
    (2, 1): (
        "u02*u00-u02*u10+u02*u01-u02*u11-u00*u10+u00*u01-u00*u11"
        "+u10^2-u10*u01+u10*u11-u01*u11+u11^2"
    ),
    (2, 0): (
        "u02^2*u10-u02^2*u01-u02*u00*u01+u02*u10*u01+u02*u10*u11-u02*u01^2"
        "+u00*u10*u11-u10^3-u10^2*u11+u10*u01^2+u10*u01*u11-u10*u11^2"
    ),
    (1, 1): (
        "-(u02+u10+u01+u11)"  # times the (2,1) coefficient; expanded below
    ),
    (1, 0): (
        "u02^2*u00*u01-u02^2*u10^2-u02^2*u10*u11+u02^2*u01^2+u02*u00*u01^2"
        "+u02*u10^3-u02*u10^2*u01-u02*u10*u01*u11-u00*u10^2*u11-u00*u10*u11^2"
        "+u10^3*u01+u10^3*u11-u10^2*u01^2+u10^2*u11^2-u10*u01^2*u11+u10*u11^3"
    ),
    (): (
        "-u02^2*u00*u01^2+u02^2*u10^2*u01+u02^2*u10^2*u11-u02^2*u10*u01^2"
        "-u02*u10^3*u01-u02*u10^3*u11+u02*u10^2*u01^2+u02*u10^2*u01*u11"
        "+u00*u10^2*u11^2-u10^3*u01*u11+u10^2*u01^2*u11-u10^2*u11^3"
    ),
}


def _universal(n: int, jmax: int) -> Grid:
    return Grid(UniversalFamily(n, jmax), n)


def _gen(grid: Grid, i: int, j: int):
    return grid.value(i, j)


def check_f_collapse() -> tuple:
    """The three collapse identities of the five-point function."""
    S = RationalFunctionField(["z", "u", "v", "w"])
    z, u, v, w = S.gens()
    ok = (F(z, u, v, z, w) == v
          and F(u, u, v, v, w) == w
          and F(u, u + z, v, v - z, w) == w + z)
    return ("five-point-collapse", ok, "F(z,u,v,z,w)=v; F(u,u,v,v,w)=w; shifted pair")


def check_window_recurrences() -> tuple:
    """Both window recurrences, symbolically in the five grid parameters."""
    P = RationalFunctionField(["a", "b", "c", "q", "t"])
    a, b, c, q, t = P.gens()
    fam = MacdonaldFamily(P, a, b, c, q, t)
    grid = Grid(fam, 3)
    v = grid.value
    ok = True
    for i in range(2):
        for j in range(2):
            ok = ok and v(i + 1, j + 2) == F(v(i, j), v(i + 1, j), v(i, j + 1),
                                             v(i + 1, j + 1), v(i, j + 2))
    for j in range(2):
        ok = ok and v(2, j + 1) == F(v(0, j), v(0, j + 1), v(1, j),
                                     v(1, j + 1), v(2, j))
    # the quadratic degeneration, symbolically as well
    Q = RationalFunctionField(["al", "be", "bp", "ga"])
    al, be, bp, ga = Q.gens()
    from .grids import QuadraticFamily

    qgrid = Grid(QuadraticFamily(Q, al, be, bp, ga), 2)
    v = qgrid.value
    for j in range(2):
        ok = ok and v(1, j + 2) == F(v(0, j), v(1, j), v(0, j + 1),
                                     v(1, j + 1), v(0, j + 2))
        ok = ok and v(2, j + 1) == F(v(0, j), v(0, j + 1), v(1, j),
                                     v(1, j + 1), v(2, j))
    return ("window-recurrences", ok, "forced values on symbolic geometric and quadratic grids")


def check_cubic_evaluation() -> tuple:
    """P_(3) at the knot of (2,2) on the universal two-row grid equals the
    printed product form."""
    grid = _universal(1, 3)
    s = grid.value
    val = interpolation_polynomial(grid, (3,)).eval(grid.knot((2, 2)))
    bracket = (s(0, 0) * s(0, 2) - s(0, 0) * s(1, 1) - s(0, 1) ** 2
               + s(0, 1) * s(1, 0) + s(0, 1) * s(1, 2) - s(0, 2) * s(1, 1)
               - s(1, 0) * s(1, 2) + s(1, 1) ** 2)
    eps = (s(1, 2) - s(1, 1)) * (s(1, 2) - s(1, 0)) / (s(0, 1) - s(1, 0))
    return ("universal-cubic-evaluation", val == eps * bracket,
            "P[3] at the (2,2) knot, two rows")


def check_quadratic_evaluation() -> tuple:
    """P_(2) at the knot of (1,1,1) on the universal three-row grid equals
    the printed product form."""
    grid = _universal(2, 2)
    s = grid.value
    val = interpolation_polynomial(grid, (2,)).eval(grid.knot((1, 1, 1)))
    bracket = (s(1, 0) * s(2, 1) - s(0, 1) * s(2, 1) + s(1, 1) ** 2
               - s(1, 1) * s(0, 0) + s(0, 1) * s(1, 0) - s(1, 0) ** 2
               + s(0, 0) * s(2, 0) - s(1, 1) * s(2, 0))
    eps = (s(2, 1) - s(2, 0)) / (s(1, 0) - s(0, 1))
    return ("universal-quadratic-evaluation", val == eps * bracket,
            "P[2] at the (1,1,1) knot, three rows")


def check_quartic_determination() -> tuple:
    """After forcing row 1, column 2 by the recurrence, P_(4) at the (3,2)
    knot factors through the linear relation that determines row 0,
    column 3."""
    grid = _universal(1, 4)
    s = grid.value
    val = interpolation_polynomial(grid, (4,)).eval(grid.knot((3, 2)))
    forced = F(s(0, 0), s(1, 0), s(0, 1), s(1, 1), s(0, 2))
    val = val.substitute({"u12": forced})
    linear = (s(0, 3) * g1(s(1, 0), s(0, 1), s(1, 1))
              - g0(s(0, 0), s(1, 0), s(0, 1), s(1, 1), s(0, 2)))
    eps = ((s(0, 3) - s(0, 2)) * (forced - s(1, 1)) * (forced - s(1, 0))
           / ((s(0, 2) - s(1, 0)) * (s(1, 0) - s(0, 1)) ** 2))
    return ("universal-quartic-determination",
            val == eps * (s(0, 0) - s(1, 1)) * linear,
            "P[4] at the (3,2) knot factors through the column-3 relation")


def check_third_row_determination() -> tuple:
    """Row 2, column 0 of a sampled geometric grid satisfies the printed
    linear relation."""
    grid = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2)
    v = grid.value
    args = (v(0, 0), v(1, 0), v(0, 1), v(1, 1), v(0, 2))
    ok = v(2, 0) * g2(*args) == g3(*args)
    grid2 = Grid(MacdonaldFamily(QQ, Fraction(-1, 2), Fraction(3, 4),
                                 Fraction(7, 5), Fraction(5, 2), Fraction(3, 8)), 2)
    v = grid2.value
    args = (v(0, 0), v(1, 0), v(0, 1), v(1, 1), v(0, 2))
    ok = ok and v(2, 0) * g2(*args) == g3(*args)
    return ("third-row-determination", ok, "row 2 values from the first six")


def check_restriction_and_shift() -> tuple:
    """The row-restriction and column-shift identities, universal and sampled."""
    ok = True
    uni = _universal(1, 4)
    for mu in enumerate_partitions(3, 2):
        if len(mu) < 2:
            ok = ok and check_restriction_identity(uni, mu)
        else:
            ok = ok and check_shift_identity(uni, mu)
    sample = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 2)
    for mu in enumerate_partitions(3, 3):
        if len(mu) < 3:
            ok = ok and check_restriction_identity(sample, mu)
        else:
            ok = ok and check_shift_identity(sample, mu)
    return ("restriction-and-shift", ok, "normalization matches both reductions")


def check_factorial_schur() -> tuple:
    """Determinant form == tableau form == solver on a diagonal grid."""
    from .grids import E2Family

    grid = Grid(E2Family(QQ, lambda k: Fraction(2 * k * k + 5 * k, 3)), 1)
    ok = True
    for mu in enumerate_partitions(3, 2):
        det = factorial_schur_det(grid, mu)
        ok = (ok and det == factorial_schur_tableaux(grid, mu)
              and det == interpolation_polynomial(grid, mu))
    return ("factorial-schur-equality", ok, "all three routes agree")


def check_macdonald_tableaux() -> tuple:
    """Weighted tableau sum == solver on a sampled geometric grid."""
    grid = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 1)
    ok = all(macdonald_tableaux(grid, mu) == interpolation_polynomial(grid, mu)
             for mu in enumerate_partitions(3, 2))
    return ("macdonald-tableaux-equality", ok, "weighted tableau sum matches the solver")


def check_universal_cubic_expansion() -> tuple:
    """The universal P_(3) expansion matches the printed coefficients."""
    grid = _universal(1, 3)
    field = grid.field
    poly = interpolation_polynomial(grid, (3,))
    den = (grid.value(0, 2) - grid.value(1, 0)) * (grid.value(0, 1) - grid.value(1, 0))
    ok = poly.coefficient((3,)) == field.one
    c21 = field.parse(UNIVERSAL_CUBIC_COEFFS[(2, 1)])
    expected = {
        (2, 1): c21,
        (2,): field.parse(UNIVERSAL_CUBIC_COEFFS[(2, 0)]),
        (1, 1): -(grid.value(0, 2) + grid.value(1, 0)
                  + grid.value(0, 1) + grid.value(1, 1)) * c21,
        (1,): field.parse(UNIVERSAL_CUBIC_COEFFS[(1, 0)]),
        (): field.parse(UNIVERSAL_CUBIC_COEFFS[()]),
    }
    for key, num in expected.items():
        ok = ok and poly.coefficient(key) == num / den
    ok = ok and set(poly.coeffs) == set(expected) | {(3,)}
    return ("universal-cubic-expansion", ok, "golden coefficients over the printed denominator")


def check_expansion_roundtrip() -> tuple:
    """Expanding a polynomial and reassembling it is the identity."""
    grid = Grid(MacdonaldFamily(QQ, **SAMPLE_I), 1)
    from .sympoly import SymPoly

    f = (SymPoly.monomial_sym(QQ, 2, (2,)) + SymPoly.monomial_sym(QQ, 2, (1, 1)).scale(3)
         + SymPoly.monomial_sym(QQ, 2, (1,)).scale(Fraction(-1, 2)) + 7)
    coeffs = expand(grid, f).coefficients
    rebuilt = SymPoly.zero(QQ, 2)
    for mu, c in coeffs.items():
        rebuilt = rebuilt + interpolation_polynomial(grid, mu).scale(c)
    return ("expansion-roundtrip", rebuilt == f, "triangular expansion reassembles exactly")


ALL_CHECKS = (
    check_f_collapse,
    check_window_recurrences,
    check_cubic_evaluation,
    check_quadratic_evaluation,
    check_quartic_determination,
    check_third_row_determination,
    check_restriction_and_shift,
    check_factorial_schur,
    check_macdonald_tableaux,
    check_universal_cubic_expansion,
    check_expansion_roundtrip,
)


def run_suite() -> list[tuple]:
    """Run every identity check; returns (name, passed, detail) triples."""
    return [check() for check in ALL_CHECKS]
