"""Newton interpolation of symmetric polynomials on a grid.

``solve`` produces, for targets phi defined on all partitions lam with
|lam| <= d and at most n+1 parts, the unique symmetric polynomial f of
degree <= d with f(knot(lam)) = phi(lam).  The recursion splits f as

    f = ext(f1) + f2 * prod_i (x_i - value(n, 0)),

where f1 interpolates the targets with last part 0 on the grid without its
last row, and f2 interpolates corrected targets on the column-shifted grid
with degree budget d - (n + 1) (the product has n + 1 factors).  Base
cases: one variable reduces to divided differences, degree 0 to a
constant.

``interpolation_polynomial`` builds the basis element P_mu: it vanishes at
every knot lam with |lam| <= |mu|, lam != mu, has degree exactly |mu|, and
takes at its own knot the value

    prod over diagram cells (i, j) of mu of
        value(i, mu_i) - value(mu'_j - 1, j),

the normalization that makes the row-restriction and column-shift
identities below hold as exact equalities (each factor is a difference
that non-degeneracy keeps nonzero).

``expand`` writes any symmetric polynomial in the P_mu basis by triangular
elimination and verifies the expansion by exact reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from . import partitions
from .errors import DegenerateGrid
from .exactfield import invert, is_zero
from .grids import Grid
from .partitions import Partition, conjugate, enumerate_partitions, part
from .sympoly import SymPoly


@dataclass(frozen=True)
class InterpolationProblem:
    """A grid, a degree bound, and one target value per index partition."""

    grid: Grid
    degree: int
    targets: Mapping[Partition, object]

    def index_set(self) -> list[Partition]:
        return enumerate_partitions(self.degree, self.grid.n + 1)


@dataclass(frozen=True)
class NewtonExpansion:
    """Coefficients of a polynomial on the P_mu basis of one grid."""

    grid: Grid
    coefficients: dict

    def sorted_items(self):
        return [(lam, self.coefficients[lam])
                for lam in sorted(self.coefficients,
                                  key=lambda l: (sum(l), tuple(-p for p in l)))]


def solve(problem: InterpolationProblem) -> SymPoly:
    """Solve the interpolation problem; unique with degree <= the bound."""
    grid = problem.grid
    targets = {partitions.normalize(lam): grid.field.coerce(v)
               for lam, v in problem.targets.items()}
    for lam in problem.index_set():
        if lam not in targets:
            raise ValueError(f"missing target for partition {lam}")
    return _solve(grid, problem.degree, targets.__getitem__)


def _solve(grid: Grid, d: int, phi: Callable[[Partition], object]) -> SymPoly:
    field = grid.field
    n = grid.n
    nvars = n + 1
    if d <= 0:
        return SymPoly.constant(field, nvars, phi(()))
    if n == 0:
        return _solve_univariate(grid, d, phi)

    inner = grid.restrict_rows(n - 1)
    f1 = _solve(inner, d, phi)
    pivot = grid.value(n, 0)
    f1_ext = f1.ext(pivot)

    d2 = d - nvars
    if d2 < 0:
        return f1_ext

    shifted = grid.shift_j(1)

    def phi2(nu: Partition):
        lam = tuple(p + 1 for p in nu) + (1,) * (nvars - len(nu))
        point = tuple(grid.value(i, part(lam, i)) for i in range(nvars))
        denom = field.one
        for i in range(nvars):
            denom = denom * grid.require_nondegenerate_difference(i, lam[i], n, 0)
        return (phi(lam) - f1_ext.eval(point)) * invert(denom)

    f2 = _solve(shifted, d2, phi2)
    return f1_ext + _vanishing_product(field, nvars, pivot) * f2


def _vanishing_product(field, nvars: int, pivot) -> SymPoly:
    """prod_{i=0}^{nvars-1} (x_i - pivot) as a SymPoly."""
    raw = {(0,) * nvars: field.one}
    for i in range(nvars):
        new = {}
        for exps, c in raw.items():
            up = list(exps)
            up[i] += 1
            up = tuple(up)
            new[up] = new.get(up, field.zero) + c
            key = exps
            new[key] = new.get(key, field.zero) + c * (-pivot)
        raw = new
    return SymPoly.from_monomials(field, nvars, raw)


def _solve_univariate(grid: Grid, d: int, phi) -> SymPoly:
    """Divided differences through the knots value(0, 0..d)."""
    field = grid.field
    ys = [grid.value(0, k) for k in range(d + 1)]
    table = [field.coerce(phi((k,) if k else ())) for k in range(d + 1)]
    coeffs = [table[0]]
    for level in range(1, d + 1):
        nxt = []
        for k in range(d + 1 - level):
            diff = grid.require_nondegenerate_difference(0, k + level, 0, k)
            nxt.append((table[k + 1] - table[k]) * invert(diff))
        table = nxt
        coeffs.append(table[0])
    result = SymPoly.zero(field, 1)
    basis = SymPoly.constant(field, 1, 1)
    for k in range(d + 1):
        result = result + basis.scale(coeffs[k])
        if k < d:
            basis = basis * SymPoly(field, 1, {(1,): field.one, (): -ys[k]})
    return result


def normalization_value(grid: Grid, mu) -> object:
    """prod over cells (i, j) of mu of value(i, mu_i) - value(mu'_j - 1, j).

    Every factor is one of the differences non-degeneracy keeps nonzero;
    a zero factor raises DegenerateGrid.
    """
    mu = partitions.normalize(mu)
    if len(mu) > grid.n + 1:
        raise ValueError(f"partition {mu} is longer than {grid.n + 1}")
    conj = conjugate(mu)
    result = grid.field.one
    for i, j in partitions.cells(mu):
        # the checked difference is value(mu'_j - 1, j) - value(i, mu_i)
        result = result * (-grid.require_nondegenerate_difference(
            conj[j] - 1, j, i, mu[i]))
    return result


def interpolation_polynomial(grid: Grid, mu) -> SymPoly:
    """The normalized Newton interpolation polynomial P_mu for this grid."""
    mu = partitions.normalize(mu)
    d = sum(mu)
    target = normalization_value(grid, mu)
    phi = {lam: grid.field.zero for lam in enumerate_partitions(d, grid.n + 1)}
    phi[mu] = target
    poly = solve(InterpolationProblem(grid, d, phi))
    assert poly.degree() == d, "interpolation polynomial must have full degree"
    return poly


def interpolation_basis(grid: Grid, max_size: int) -> dict:
    """All P_mu with |mu| <= max_size, keyed by mu."""
    return {mu: interpolation_polynomial(grid, mu)
            for mu in enumerate_partitions(max_size, grid.n + 1)}


def expand(grid: Grid, f: SymPoly) -> NewtonExpansion:
    """Write f as sum c_mu P_mu by triangular elimination.

    Processes partitions in order of increasing size; P_nu vanishes at the
    knot of mu whenever |mu| <= |nu| and mu != nu, so each coefficient is
    determined by earlier ones.  The result is verified by exact
    reconstruction before returning.
    """
    if f.nvars != grid.n + 1:
        raise ValueError(f"polynomial has {f.nvars} variables, grid has {grid.n + 1}")
    field = grid.field
    degree = f.degree()
    if degree < 0:
        return NewtonExpansion(grid, {})
    basis = interpolation_basis(grid, degree)
    order = enumerate_partitions(degree, grid.n + 1)
    coeffs: dict[Partition, object] = {}
    for mu in order:
        knot = grid.knot(mu)
        value = f.eval(knot)
        for nu, c in coeffs.items():
            if sum(nu) < sum(mu):
                value = value - c * basis[nu].eval(knot)
        value = value * invert(normalization_value(grid, mu))
        if not is_zero(value):
            coeffs[mu] = value
    rebuilt = SymPoly.zero(field, f.nvars)
    for mu, c in coeffs.items():
        rebuilt = rebuilt + basis[mu].scale(c)
    if rebuilt != f:
        raise DegenerateGrid("expansion failed to reconstruct the input exactly")
    return NewtonExpansion(grid, coeffs)


def check_shift_identity(grid: Grid, mu) -> bool:
    """P_mu(x) == P_{mu - (1,...,1)}(x; column-shifted grid) * prod(x_i - value(n, 0)).

    Applies when mu has n+1 nonzero parts.
    """
    mu = partitions.normalize(mu)
    n = grid.n
    if part(mu, n) <= 0:
        raise ValueError("shift identity needs every part positive")
    left = interpolation_polynomial(grid, mu)
    reduced = tuple(p - 1 for p in mu)
    right = interpolation_polynomial(grid.shift_j(1), reduced)
    pivot = grid.value(n, 0)
    product = _vanishing_product(grid.field, n + 1, pivot)
    return left == right * product


def check_restriction_identity(grid: Grid, mu) -> bool:
    """Substituting x_n = value(n, 0) in P_mu gives P_mu for the grid
    without its last row.  Applies when mu has at most n parts.
    """
    mu = partitions.normalize(mu)
    n = grid.n
    if len(mu) > n:
        raise ValueError("restriction identity needs the last part zero")
    if n == 0:
        raise ValueError("need at least two rows")
    left = interpolation_polynomial(grid, mu).restrict(grid.value(n, 0))
    right = interpolation_polynomial(grid.restrict_rows(n - 1), mu)
    return left == right
