"""Closed-form constructors for the exactly solvable grid families.

Each constructor produces the same polynomial as the interpolation solver
on its family of grids, by a direct formula instead of triangular solving:

* ``factorial_monomial`` (family E1): the symmetrized products
  prod (x_i - gamma_j) over diagram rows;
* ``factorial_schur_det`` / ``factorial_schur_tableaux`` (family E2): the
  ratio of a shifted alternant by the Vandermonde determinant, and the
  equivalent sum over reverse tableaux;
* ``macdonald_tableaux`` (family I): the interpolation Macdonald
  polynomial as a tableau sum whose terms carry the two-parameter weight
  psi from Macdonald, "Symmetric Functions and Hall Polynomials" VI.6-7,
  taken at (q, 1/t).

The tableau sums share one term shape: the term of a reverse tableau T is
prod over diagram cells (i, j) of (x_{T(i,j)} - value(i + T(i,j), j)).
The solver-equality tests are the ground truth for the weight
normalization.
"""

from __future__ import annotations

from typing import Mapping

from . import partitions
from .errors import WrongFamily
from .exactfield import invert, is_zero
from .grids import Grid
from .partitions import (
    Partition,
    ReverseTableau,
    conjugate,
    enumerate_reverse_tableaux,
    part,
    tableau_to_chain,
)
from .sympoly import SymPoly, monomials_mul, orbit


def _require_family(grid: Grid, tag: str, who: str) -> None:
    actual = grid.family.tag
    if actual != tag:
        raise WrongFamily(f"{who} needs a family {tag} grid, got {actual}")


def _linear_factor_product(field, nvars: int, factors) -> dict:
    """Raw map of prod (x_{var} - value) over (var, value) pairs."""
    raw = {(0,) * nvars: field.one}
    for var, value in factors:
        new: dict[tuple, object] = {}
        for exps, c in raw.items():
            up = list(exps)
            up[var] += 1
            up = tuple(up)
            new[up] = new.get(up, field.zero) + c
            low = c * (-value)
            new[exps] = new.get(exps, field.zero) + low
        raw = {e: c for e, c in new.items() if not is_zero(c)}
    return raw


def factorial_monomial(grid: Grid, mu) -> SymPoly:
    """Family E1 interpolation polynomial.

    Sums, over the distinct arrangements tau of the parts of mu on the
    variables, the products prod_i prod_{j < tau_i} (x_i - gamma_j); the
    arrangement sum realizes the symmetrization divided by the stabilizer
    size.
    """
    _require_family(grid, "E1", "factorial_monomial")
    mu = partitions.normalize(mu)
    field = grid.field
    nvars = grid.n + 1
    if len(mu) > nvars:
        raise ValueError(f"partition {mu} is longer than {nvars}")
    total: dict[tuple, object] = {}
    for arrangement in orbit(mu, nvars):
        factors = [(i, grid.value(i, j))
                   for i, k in enumerate(arrangement) for j in range(k)]
        raw = _linear_factor_product(field, nvars, factors)
        for exps, c in raw.items():
            total[exps] = total.get(exps, field.zero) + c
    total = {e: c for e, c in total.items() if not is_zero(c)}
    return SymPoly.from_monomials(field, nvars, total)


def _tableau_term_raw(grid: Grid, tab: ReverseTableau) -> dict:
    """Raw map of prod over cells (i, j) of (x_{T(i,j)} - value(i+T(i,j), j))."""
    nvars = grid.n + 1
    factors = [(entry, grid.value(i + entry, j)) for i, j, entry in tab.entries()]
    return _linear_factor_product(grid.field, nvars, factors)


def factorial_schur_tableaux(grid: Grid, mu) -> SymPoly:
    """Family E2 interpolation polynomial as a sum over reverse tableaux."""
    _require_family(grid, "E2", "factorial_schur_tableaux")
    return _tableau_sum(grid, mu, lambda tab: grid.field.one)


def _tableau_sum(grid: Grid, mu, weight) -> SymPoly:
    mu = partitions.normalize(mu)
    field = grid.field
    nvars = grid.n + 1
    total: dict[tuple, object] = {}
    for tab in enumerate_reverse_tableaux(mu, grid.n):
        w = weight(tab)
        if is_zero(w):
            continue
        raw = _tableau_term_raw(grid, tab)
        for exps, c in raw.items():
            v = c * w
            total[exps] = total.get(exps, field.zero) + v
    total = {e: c for e, c in total.items() if not is_zero(c)}
    return SymPoly.from_monomials(field, nvars, total)


def factorial_schur_det(grid: Grid, mu) -> SymPoly:
    """Family E2 interpolation polynomial as alternant over Vandermonde.

    Row i, column j of the alternant is
    (x_i - gamma_{-n}) (x_i - gamma_{-n+1}) ... (x_i - gamma_{mu_j - j - 1});
    the quotient by prod_{i<j} (x_i - x_j) is exact (asserted).
    """
    _require_family(grid, "E2", "factorial_schur_det")
    mu = partitions.normalize(mu)
    field = grid.field
    n = grid.n
    nvars = n + 1
    if len(mu) > nvars:
        raise ValueError(f"partition {mu} is longer than {nvars}")
    gamma = grid.family.gamma

    columns = []
    for j in range(nvars):
        top = part(mu, j) - j - 1
        columns.append([gamma(m) for m in range(-n, top + 1)])

    det: dict[tuple, object] = {}
    for perm, sign in _signed_permutations(nvars):
        raw = {(0,) * nvars: field.coerce(sign)}
        for i in range(nvars):
            factors = [(i, v) for v in columns[perm[i]]]
            raw = monomials_mul(raw, _linear_factor_product(field, nvars, factors))
        for exps, c in raw.items():
            det[exps] = det.get(exps, field.zero) + c
    det = {e: c for e, c in det.items() if not is_zero(c)}

    vandermonde = {(0,) * nvars: field.one}
    for i in range(nvars):
        for j in range(i + 1, nvars):
            factor = {}
            up_i = tuple(1 if k == i else 0 for k in range(nvars))
            up_j = tuple(1 if k == j else 0 for k in range(nvars))
            factor[up_i] = field.one
            factor[up_j] = -field.one
            vandermonde = monomials_mul(vandermonde, factor)

    quotient = _raw_exact_div(field, det, vandermonde)
    assert quotient is not None, "alternant must be divisible by the Vandermonde"
    return SymPoly.from_monomials(field, nvars, quotient)


def _signed_permutations(n: int):
    def go(prefix, remaining, sign):
        if not remaining:
            yield tuple(prefix), sign
            return
        for k, v in enumerate(remaining):
            yield from go(prefix + [v], remaining[:k] + remaining[k + 1:],
                          sign if k % 2 == 0 else -sign)

    yield from go([], list(range(n)), 1)


def _raw_exact_div(field, num: Mapping[tuple, object], den: Mapping[tuple, object]):
    """Exact division of raw monomial maps under graded-lex order."""
    if not num:
        return {}
    rem = dict(num)
    dlead = max(den, key=lambda e: (sum(e), e))
    dcoef = den[dlead]
    dinv = invert(dcoef)
    quot: dict[tuple, object] = {}
    while rem:
        rlead = max(rem, key=lambda e: (sum(e), e))
        shift = tuple(a - b for a, b in zip(rlead, dlead))
        if any(s < 0 for s in shift):
            return None
        q = rem[rlead] * dinv
        quot[shift] = q
        for e, v in den.items():
            key = tuple(a + b for a, b in zip(shift, e))
            w = rem.get(key, field.zero) - q * v
            if is_zero(w):
                rem.pop(key, None)
            else:
                rem[key] = w
    return quot


# ---------------------------------------------------------------------------
# Macdonald tableau weights


def _arm(lam: Partition, i: int, j: int) -> int:
    return lam[i] - j - 1


def _leg(lam: Partition, i: int, j: int) -> int:
    return conjugate(lam)[j] - i - 1


def _strip_weight(lam: Partition, mu: Partition, q, t, one):
    """psi_{lam/mu}(q, t) for a horizontal strip lam/mu.

    Product over cells s of mu lying in a row that meets the strip but in
    a column that does not, of b_mu(s)/b_lam(s), where
    b_nu(s) = (1 - q^arm * t^(leg+1)) / (1 - q^(arm+1) * t^leg).
    """
    strip_rows = set()
    strip_cols = set()
    for i in range(len(lam)):
        for j in range(part(mu, i), lam[i]):
            strip_rows.add(i)
            strip_cols.add(j)
    if not strip_rows:
        return one
    result = one
    for i, j in partitions.cells(mu):
        if i in strip_rows and j not in strip_cols:
            num = (1 - q ** _arm(mu, i, j) * t ** (_leg(mu, i, j) + 1)) * \
                  (1 - q ** (_arm(lam, i, j) + 1) * t ** _leg(lam, i, j))
            den = (1 - q ** (_arm(mu, i, j) + 1) * t ** _leg(mu, i, j)) * \
                  (1 - q ** _arm(lam, i, j) * t ** (_leg(lam, i, j) + 1))
            result = result * num * invert(den)
    return result


def psi_weight(tab: ReverseTableau, q, t):
    """The tableau weight psi_T(q, 1/t).

    Factors T into its chain of horizontal strips and multiplies the
    per-strip weights from Macdonald VI.6 at parameters (q, 1/t); the
    result is a product of factors (1 - q^a t^(-l)) with a, l >= 0.  The
    solver-equality acceptance test certifies this normalization.
    """
    n = max((v for _, _, v in tab.entries()), default=0)
    chain = tableau_to_chain(tab, n)
    t_inv = invert(t)
    one = q ** 0
    result = one
    for above, below in zip(chain, chain[1:]):
        if above != below:
            result = result * _strip_weight(above, below, q, t_inv, one)
    return result


def macdonald_tableaux(grid: Grid, mu) -> SymPoly:
    """Family I interpolation polynomial as a weighted tableau sum.

    Sum over reverse tableaux T on mu of
    psi_T(q, 1/t) * prod over cells (i, j) of (x_{T(i,j)} - value(i+T(i,j), j)).
    """
    _require_family(grid, "I", "macdonald_tableaux")
    q = grid.family.q
    t = grid.family.t
    return _tableau_sum(grid, mu, lambda tab: psi_weight(tab, q, t))
