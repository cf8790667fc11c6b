"""Independent brute-force oracles used to cross-check the fast paths.

Everything here is deliberately written from first principles (nested
loops, dense linear algebra, direct definitions) and stays independent of
the library code paths it checks.
"""

from fractions import Fraction
from itertools import permutations, product

from newtonsym import Grid, ExplicitFamily, QQ, SymPoly, invert, is_zero


def naive_partitions(max_size, max_len):
    """All partitions with size <= max_size, length <= max_len, by filtering
    every tuple over {0, ..., max_size}."""
    found = {()}
    if max_len > 0 and max_size > 0:
        for tup in product(range(max_size + 1), repeat=max_len):
            if sum(tup) <= max_size and all(a >= b for a, b in zip(tup, tup[1:])):
                found.add(tuple(p for p in tup if p))
    return found


def brute_reverse_tableaux(mu, n):
    """All reverse tableaux on mu by filtering every raw filling."""
    cells = [(i, j) for i, p in enumerate(mu) for j in range(p)]
    out = []
    for values in product(range(n + 1), repeat=len(cells)):
        entry = dict(zip(cells, values))
        ok = True
        for (i, j), v in entry.items():
            if (i, j + 1) in entry and entry[(i, j + 1)] > v:
                ok = False
                break
            if (i + 1, j) in entry and entry[(i + 1, j)] >= v:
                ok = False
                break
        if ok:
            out.append(tuple(tuple(entry[(i, j)] for j in range(p))
                             for i, p in enumerate(mu)))
    return out


def raw_expand(poly):
    """Expand a SymPoly into {exponent vector: coefficient} directly from
    the orbit definition (independent of the library's converter)."""
    out = {}
    for lam, c in poly.coeffs.items():
        padded = tuple(lam) + (0,) * (poly.nvars - len(lam))
        for exps in set(permutations(padded)):
            out[exps] = c
    return out


def raw_mul_collect(f, g):
    """Multiply two SymPoly via raw monomials and re-collect representatives."""
    fa, ga = raw_expand(f), raw_expand(g)
    acc = {}
    for ea, ca in fa.items():
        for eb, cb in ga.items():
            key = tuple(a + b for a, b in zip(ea, eb))
            acc[key] = acc.get(key, f.field.zero) + ca * cb
    coeffs = {}
    for exps, c in acc.items():
        lam = tuple(sorted(exps, reverse=True))
        if lam == exps and not is_zero(c):
            coeffs[tuple(p for p in lam if p)] = c
    return SymPoly(f.field, f.nvars, coeffs)


def dense_interpolation_solve(grid, degree, targets, index):
    """Solve the full interpolation linear system by Gaussian elimination.

    Unknowns are the coefficients on every monomial symmetric function
    m_lam with |lam| <= degree; one equation per index partition.
    """
    field = grid.field
    nvars = grid.n + 1
    cols = len(index)
    rows = []
    for nu in index:
        knot = grid.knot(nu)
        row = [SymPoly.monomial_sym(field, nvars, lam).eval(knot) for lam in index]
        row.append(field.coerce(targets[nu]))
        rows.append(row)
    for col in range(cols):
        piv = None
        for r in range(col, len(rows)):
            if not is_zero(rows[r][col]):
                piv = r
                break
        assert piv is not None, "singular interpolation system"
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = invert(rows[col][col])
        rows[col] = [v * inv for v in rows[col]]
        for r in range(len(rows)):
            if r != col and not is_zero(rows[r][col]):
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return SymPoly(field, nvars, {lam: rows[k][cols] for k, lam in enumerate(index)})


def random_rational_grid(rng, n, jmax):
    """An explicit grid with pairwise distinct random rational values
    (all-distinct implies non-degeneracy)."""
    while True:
        values = {}
        seen = set()
        for i in range(n + 1):
            for j in range(jmax + 1):
                v = Fraction(rng.randint(-60, 60), rng.randint(1, 8))
                values[(i, j)] = v
                seen.add(v)
        if len(seen) == (n + 1) * (jmax + 1):
            return Grid(ExplicitFamily(QQ, values), n)


def random_fraction(rng, lo=-9, hi=9, max_den=6, nonzero=False):
    while True:
        v = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if not nonzero or v != 0:
            return v
