"""Window classification: fitting grid families to finite value tables.

Perfect grids satisfy two three-term recurrences that determine the whole
table from a small seed; ``F`` is the rational function driving both, and
``extend_window`` completes a partial table with them.  ``classify_window``
decides which family a complete window belongs to:

1. the two elementary patterns are matched first (all rows equal; values
   constant on diagonals), since degenerate families also satisfy the
   generic equations;
2. otherwise the first four values of row 0 are split by
   ``classify_tuple`` into geometric / quadratic / sign-alternating type,
   which fixes the row parameters;
3. the two leading values of row 1 then pin the remaining parameter (two
   quadratic roots, disambiguated by the second value), selecting between
   family I and its degenerations II, IIIa/b/c, IV;
4. the fitted family regenerates the full window, and only an exact match
   is returned.

Geometric fits solve s = q + 1/q from the linear recurrence the row
satisfies and build q as a root of x^2 - s x + 1, descending to the base
field when the discriminant is a square and otherwise reporting
parameters in a quadratic extension.  No numeric root finding occurs
anywhere; windows are exact and there is no tolerance.

Family I windows determine (a, b, c, q, t) only up to
(q, t, b, c) -> (1/q, 1/t, c, b); rational fits are canonicalized to
|q| > 1.  Two-row IIIb windows determine only alpha + alpha',
alpha - alpha' - beta' and beta; the fit reports the member with
beta' = 0 and records the determined combinations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .errors import (
    DegenerateGrid,
    IndeterminateTuple,
    InconsistentWindow,
    NotPerfectWindow,
)
from .exactfield import (
    QQ,
    QuadraticExtension,
    invert,
    is_zero,
    sqrt_in_field,
)
from .grids import (
    AlternatingFamily,
    E1Family,
    E2Family,
    Grid,
    GridFamily,
    MacdonaldFamily,
    QuadraticFamily,
    SplitGeometricFamily,
    Window,
)

#: The minimal seed for two-row classification: row 0 up to column 3 and
#: row 1 up to column 1.
SEED_CELLS = ((0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (0, 3))


def F(y1, y2, y3, y4, y5):
    """The five-point rational function behind the window recurrences.

    (y4^2 - y4 y1 - y4 y5 + y2 y3 + y1 y5 - y3^2) / (y2 - y3).
    """
    return (y4 * y4 - y4 * y1 - y4 * y5 + y2 * y3 + y1 * y5 - y3 * y3) * invert(y2 - y3)


def g0(y1, y2, y3, y4, y5):
    """Constant part of the linear relation determining row 0, column 3."""
    return (y1 * y4 * y2 - y1 * y4 * y5 - y1 * y2 * y5 + y1 * y5 ** 2
            + y3 ** 2 * y4 + y3 ** 2 * y2 - y3 ** 2 * y5 - y3 * y4 ** 2
            - y3 * y4 * y2 - y3 * y2 ** 2 + y3 * y5 ** 2 + y4 ** 2 * y5
            + y4 * y2 * y5 - y4 * y5 ** 2 + y2 ** 2 * y5 - y2 * y5 ** 2)


def g1(y2, y3, y4):
    """Leading coefficient of the same relation: (y3 - y2)(y3 - y4)."""
    return (y3 - y2) * (y3 - y4)


def g2(y1, y2, y3, y4, y5):
    """Leading coefficient of the relation determining row 2, column 0."""
    return y4 * y5 - y4 * y3 + y2 * y1 - y2 * y3 - y1 * y5 + y3 * y3


def g3(y1, y2, y3, y4, y5):
    """Constant part of the relation determining row 2, column 0."""
    return (y4 ** 3 - y4 ** 2 * y2 - y4 ** 2 * y1 - y4 ** 2 * y3 - y4 * y2 ** 2
            + y4 * y2 * y1 + y4 * y2 * y5 + 2 * y4 * y2 * y3 + y4 * y1 * y3
            - y4 * y3 ** 2 + y2 ** 3 - y2 ** 2 * y5 - y2 ** 2 * y3
            + y2 * y5 * y3 - y2 * y3 ** 2 - y1 * y3 * y5 + y3 ** 3)


# ---------------------------------------------------------------------------
# window extension


def extend_window(seed: Mapping[tuple, object], n: int, jmax: int, field=None) -> Window:
    """Complete a partial table on rows 0..n, columns 0..jmax.

    Seed values are copied; missing cells are filled by whichever of the
    recurrences (forward and reversed, along rows and down columns) has
    all five inputs present with a nonzero divisor.  Once complete, every
    recurrence instance is re-checked; any mismatch raises
    ``InconsistentWindow``, signalling that the seed cannot come from a
    perfect grid.
    """
    if field is None:
        field = QQ
    known = {(int(i), int(j)): field.coerce(v) for (i, j), v in seed.items()}
    for (i, j) in known:
        if not (0 <= i <= n and 0 <= j <= jmax):
            raise ValueError(f"seed cell {(i, j)} outside the requested window")

    # each rule: (target offset, list of five source offsets)
    rules = [
        ((1, 2), [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)]),
        ((2, 1), [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]),
        ((0, 0), [(1, 2), (0, 2), (1, 1), (0, 1), (1, 0)]),
        ((0, 0), [(2, 1), (2, 0), (1, 1), (1, 0), (0, 1)]),
    ]

    def attempt(base_i: int, base_j: int, rule) -> bool:
        (ti, tj), sources = rule
        target = (base_i + ti, base_j + tj)
        if target in known or not (0 <= target[0] <= n and 0 <= target[1] <= jmax):
            return False
        args = []
        for (di, dj) in sources:
            cell = (base_i + di, base_j + dj)
            if cell not in known:
                return False
            args.append(known[cell])
        if args[1] == args[2]:
            return False
        known[target] = F(*args)
        return True

    changed = True
    while changed:
        changed = False
        for i in range(n + 1):
            for j in range(jmax + 1):
                for rule in rules:
                    if attempt(i, j, rule):
                        changed = True
    for i in range(n + 1):
        for j in range(jmax + 1):
            if (i, j) not in known:
                raise InconsistentWindow(
                    f"seed does not determine cell {(i, j)}")
    window = Window.from_values(
        field, [[known[(i, j)] for j in range(jmax + 1)] for i in range(n + 1)])
    verify_recurrences(window)
    return window


def verify_recurrences(window: Window) -> None:
    """Check both recurrences at every applicable position of a window."""
    v = window.value
    for i in range(window.n):
        for j in range(window.jmax - 1):
            if v(i + 1, j) == v(i, j + 1):
                continue
            got = F(v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1), v(i, j + 2))
            if got != v(i + 1, j + 2):
                raise InconsistentWindow(
                    f"row recurrence fails at base {(i, j)}")
    for i in range(window.n - 1):
        for j in range(window.jmax):
            if v(i, j + 1) == v(i + 1, j):
                continue
            got = F(v(i, j), v(i, j + 1), v(i + 1, j), v(i + 1, j + 1), v(i + 2, j))
            if got != v(i + 2, j + 1):
                raise InconsistentWindow(
                    f"column recurrence fails at base {(i, j)}")


# ---------------------------------------------------------------------------
# four-value classification


@dataclass(frozen=True)
class GeometricTuple:
    """w_j = a + b q^j + c q^{-j} with q != 0, +-1."""

    a: object
    b: object
    c: object
    q: object
    field: object  # the field containing q (base or a quadratic extension)


@dataclass(frozen=True)
class QuadraticTuple:
    """w_j = alpha + beta j + gamma beta^2 j^2."""

    alpha: object
    beta: object
    gamma: object


@dataclass(frozen=True)
class AlternatingTuple:
    """w_j = alpha + (-1)^j (alpha' + beta j)."""

    alpha: object
    alpha_prime: object
    beta: object


def classify_tuple(w0, w1, w2, w3, field=None):
    """Split a 4-tuple with w1 != w2 into its unique progression type.

    The three types are mutually exclusive: the tuple satisfies a linear
    recurrence with characteristic roots (1, q, 1/q), and the two linear
    conditions w0 - 3 w1 + 3 w2 - w3 == 0 and w0 + w1 - w2 - w3 == 0 are
    exactly the degenerate root patterns q == 1 and q == -1.
    """
    if field is None:
        field = QQ
    w0, w1, w2, w3 = (field.coerce(w) for w in (w0, w1, w2, w3))
    if w1 == w2:
        raise IndeterminateTuple("the two middle values must differ")
    if is_zero(w0 - 3 * w1 + 3 * w2 - w3):
        # quadratic: alpha + beta j + gamma beta^2 j^2
        first = w1 - w0
        half_second = (w0 - 2 * w1 + w2) * invert(field.coerce(2))
        beta = first - half_second
        if is_zero(beta):
            raise NotPerfectWindow(
                "row values are quadratic with no linear part; outside every family")
        gamma = half_second * invert(beta) ** 2
        return QuadraticTuple(w0, beta, gamma)
    if is_zero(w0 + w1 - w2 - w3):
        beta = (w2 - w0) * invert(field.coerce(2))
        alpha = (w0 + w1 + beta) * invert(field.coerce(2))
        return AlternatingTuple(alpha, w0 - alpha, beta)
    s = (w3 - w0) * invert(w2 - w1) - 1
    disc = s * s - 4
    root = sqrt_in_field(field, disc)
    if root is not None:
        q = (s + root) * invert(field.coerce(2))
        q_field = field
        qs = [q, invert(q)]
        if isinstance(q, Fraction):
            qs.sort(key=abs, reverse=True)
        q = qs[0]
    else:
        q_field = QuadraticExtension(field, s, 1)
        q = q_field.gen()
        w0, w1, w2, w3 = (q_field.coerce(w) for w in (w0, w1, w2, w3))
    qi = invert(q)
    # eliminate a from consecutive differences and solve 2x2 for (b, c)
    m00, m01 = q - 1, qi - 1
    m10, m11 = q * q - q, qi * qi - qi
    r0, r1 = w1 - w0, w2 - w1
    det = m00 * m11 - m01 * m10
    b = (r0 * m11 - r1 * m01) * invert(det)
    c = (m00 * r1 - m10 * r0) * invert(det)
    a = w0 - b - c
    if a + b * q ** 3 + c * qi ** 3 != w3:
        raise NotPerfectWindow("row values satisfy no three-term progression")
    return GeometricTuple(a, b, c, q, q_field)


# ---------------------------------------------------------------------------
# window classification


@dataclass
class Classification:
    """A fitted family, its row count, and the verification status."""

    family: GridFamily
    n: int
    symmetry: str = ""
    residual: str = "exact match"
    determined: Optional[dict] = None  # the pinned combinations (IIIb, two rows)

    def grid(self) -> Grid:
        return Grid(self.family, self.n)

    def to_json(self) -> dict:
        doc = self.grid().to_json()
        doc["symmetry"] = self.symmetry
        doc["residual"] = self.residual
        fam_field = self.family.field
        if isinstance(fam_field, QuadraticExtension):
            doc["extension"] = fam_field.minimal_polynomial_str()
        if self.determined is not None:
            field = self.family.field
            doc["determined"] = {k: field.format(v) for k, v in self.determined.items()}
        return doc


def classify_window(window: Window) -> Classification:
    """Fit a grid family to a complete non-degenerate window.

    The window must contain rows 0 and 1 up to column 3.  The returned
    family regenerates the window exactly; when nothing does, the window
    cannot come from a perfect grid and ``NotPerfectWindow`` is raised.
    """
    if window.n < 1 or window.jmax < 3:
        raise ValueError("classification needs rows 0..1 and columns 0..3")
    bad = window.first_degeneracy()
    if bad is not None:
        raise DegenerateGrid(f"window values coincide at {bad[:2]} and {bad[2:]}",
                             witness=bad)
    field = window.field
    v = window.value

    # elementary patterns first: degenerate families satisfy the generic
    # equations too, so the most specific test must win
    if all(v(i, j) == v(0, j) for i in range(1, window.n + 1)
           for j in range(window.jmax + 1)):
        fam = E1Family(field, [v(0, j) for j in range(window.jmax + 1)])
        return _verified(window, fam, "E1 windows determine their column values")
    if all(v(i, j) == v(i + 1, j + 1) for i in range(window.n)
           for j in range(window.jmax)):
        gamma = {}
        for k in range(-window.n, window.jmax + 1):
            i = -k if k < 0 else 0
            gamma[k] = v(i, k + i)
        fam = E2Family(field, gamma)
        return _verified(window, fam, "E2 windows determine their diagonal values")

    fit = classify_tuple(v(0, 0), v(0, 1), v(0, 2), v(0, 3), field)
    if isinstance(fit, GeometricTuple):
        return _classify_geometric(window, fit)
    if isinstance(fit, QuadraticTuple):
        return _classify_quadratic(window, fit)
    return _classify_alternating(window, fit)


def _verified(window: Window, family: GridFamily, symmetry: str,
              determined: Optional[dict] = None) -> Classification:
    grid = Grid(family, window.n)
    for i in range(window.n + 1):
        for j in range(window.jmax + 1):
            if grid.value(i, j) != window.value(i, j):
                raise NotPerfectWindow(
                    f"fitted family {family.tag} disagrees with the window at {(i, j)}")
    return Classification(family, window.n, symmetry, "exact match", determined)


def _classify_geometric(window: Window, fit: GeometricTuple) -> Classification:
    field = fit.field
    v = lambda i, j: field.coerce(window.value(i, j))
    a, b, c, q = fit.a, fit.b, fit.c, fit.q
    if is_zero(b) and is_zero(c):
        raise NotPerfectWindow("constant row in a geometric fit")
    if is_zero(b):
        # swap to the symmetric representative with c == 0
        a, b, c, q = a, c, b, invert(q)
    w10, w11 = v(1, 0), v(1, 1)
    if is_zero(c):
        # row 1 is a + b t q^{+-j}: t from column 0, the sign from column 1
        t = (w10 - a) * invert(b)
        if is_zero(t):
            raise NotPerfectWindow("row 1 starts at the geometric center value")
        if w11 == a + b * q * t:
            fam = MacdonaldFamily(field, a, b, c, q, t)
            fam, note = _canonical_macdonald(fam)
            return _verified(window, fam, note)
        if w11 == a + b * t * invert(q):
            if window.n > 1:
                raise NotPerfectWindow(
                    "split geometric rows cannot extend past two rows")
            fam = SplitGeometricFamily(field, a, b, b * t, q)
            return _verified(window, fam, "split geometric windows are rigid")
        raise NotPerfectWindow("row 1 fits no geometric continuation")
    # bc != 0: t is a root of b t^2 + (a - w10) t + c == 0
    t = None
    disc = (a - w10) ** 2 - 4 * b * c
    root = sqrt_in_field(field, disc)
    if root is not None:
        for cand in ((w10 - a + root) * invert(2 * b), (w10 - a - root) * invert(2 * b)):
            if is_zero(cand):
                continue
            if w11 == a + b * q * cand + c * invert(q * cand):
                t = cand
                break
    else:
        ext = QuadraticExtension(field, (w10 - a) * invert(b), c * invert(b))
        t0 = ext.gen()
        a, b, c, q = (ext.coerce(x) for x in (a, b, c, q))
        field = ext
        for cand in (t0, c * invert(b * t0)):
            if w11 == a + b * q * cand + c * invert(q * cand):
                t = cand
                break
    if t is None:
        raise NotPerfectWindow("row 1 fits no geometric continuation")
    fam = MacdonaldFamily(field, a, b, c, q, t)
    fam, note = _canonical_macdonald(fam)
    return _verified(window, fam, note)


def _canonical_macdonald(fam: MacdonaldFamily):
    note = "parameters determined up to (q,t,b,c) -> (1/q,1/t,c,b)"
    if isinstance(fam.q, Fraction) and abs(fam.q) < 1:
        fam = MacdonaldFamily(fam.field, fam.a, fam.c, fam.b,
                              invert(fam.q), invert(fam.t))
        note += "; reported with |q| > 1"
    return fam, note


def _classify_quadratic(window: Window, fit: QuadraticTuple) -> Classification:
    field = window.field
    v = window.value
    alpha, beta, gamma = fit.alpha, fit.beta, fit.gamma
    w10, w11 = v(1, 0), v(1, 1)
    if is_zero(gamma):
        # row 0 is linear; row 1 slope separates II (gamma = 0) from IIIb
        beta_prime = w10 - alpha
        if w11 == alpha + beta + beta_prime:
            fam = QuadraticFamily(field, alpha, beta, beta_prime, gamma)
            return _verified(window, fam, "parameters unique")
        if w11 == w10 - beta:
            return _classify_sign_flip_rows(window, alpha, beta)
        raise NotPerfectWindow("row 1 fits no linear continuation")
    disc = 1 + 4 * gamma * (w10 - alpha)
    root = sqrt_in_field(field, disc)
    candidates = []
    if root is not None:
        inv2g = invert(2 * gamma)
        candidates = [(root - 1) * inv2g, (-root - 1) * inv2g]
    else:
        ext = QuadraticExtension(field, -invert(gamma), (alpha - w10) * invert(gamma))
        bp = ext.gen()
        alpha, beta, gamma = (ext.coerce(x) for x in (alpha, beta, gamma))
        w11 = ext.coerce(w11)
        field = ext
        candidates = [bp, -bp - invert(gamma)]
    for beta_prime in candidates:
        if w11 == alpha + beta + beta_prime + gamma * (beta + beta_prime) ** 2:
            fam = QuadraticFamily(field, alpha, beta, beta_prime, gamma)
            return _verified(window, fam, "parameters unique")
    raise NotPerfectWindow("row 1 fits no quadratic continuation")


def _classify_sign_flip_rows(window: Window, row_alpha, beta) -> Classification:
    """Fit the row-alternating family: value = alpha + (-1)^i (alpha'+beta j+beta' i).

    Two-row windows determine only alpha + alpha', alpha - alpha' - beta'
    and beta; the fit pins beta' = 0.  With three or more rows all four
    parameters are unique.
    """
    field = window.field
    v = window.value
    half = invert(field.coerce(2))
    w00, w10 = v(0, 0), v(1, 0)
    if window.n == 1:
        beta_prime = field.zero
        alpha = (w00 + w10) * half
        alpha_prime = w00 - alpha
        determined = {
            "alpha+alpha'": w00,
            "alpha-alpha'-beta'": w10,
            "beta": beta,
        }
        note = ("two-row windows determine only alpha+alpha', "
                "alpha-alpha'-beta' and beta; beta' pinned to 0")
    else:
        beta_prime = (v(2, 0) - w00) * half
        alpha = (w00 + w10 + beta_prime) * half
        alpha_prime = w00 - alpha
        determined = None
        note = "parameters unique"
    fam = AlternatingFamily(field, "b", alpha, alpha_prime, beta, beta_prime)
    return _verified(window, fam, note, determined)


def _classify_alternating(window: Window, fit: AlternatingTuple) -> Classification:
    field = window.field
    v = window.value
    alpha, alpha_prime, beta = fit.alpha, fit.alpha_prime, fit.beta
    w10, w11 = v(1, 0), v(1, 1)
    # variant a: column signs only; row 1 repeats the sign of row 0
    beta_prime = w10 - alpha - alpha_prime
    if w11 == alpha - (alpha_prime + beta + beta_prime):
        fam = AlternatingFamily(field, "a", alpha, alpha_prime, beta, beta_prime)
        return _verified(window, fam, "parameters unique")
    # variant c: checkerboard signs; row 1 flips against row 0
    beta_prime = alpha - alpha_prime - w10
    if w11 == alpha + alpha_prime + beta + beta_prime:
        fam = AlternatingFamily(field, "c", alpha, alpha_prime, beta, beta_prime)
        return _verified(window, fam, "parameters unique")
    raise NotPerfectWindow("row 1 fits no sign-alternating continuation")
