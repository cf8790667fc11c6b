"""Grids: value tables indexed by (row, column), families, and windows.

A grid assigns a scalar to every (i, j) with 0 <= i <= n and j >= 0; rows
correspond to variables and columns to part sizes.  The knot attached to a
partition lam is the vector (value(0, lam_0), ..., value(n, lam_n)).

The families with closed-form values:

* ``E1``   value(i, j) = gamma_j              (constant down each column)
* ``E2``   value(i, j) = gamma_{j-i}          (constant on diagonals)
* ``I``    value(i, j) = a + b q^j t^i + c q^{-j} t^{-i}
* ``II``   value(i, j) = alpha + B + gamma B^2,  B = beta j + beta' i
* ``IIIa/b/c``  value(i, j) = alpha + e^j e'^i (alpha' + beta j + beta' i)
                with (e, e') = (-1,1), (1,-1), (-1,-1)
* ``IV``   two rows only: alpha + beta q^j and alpha + beta' q^{-j}
* ``Universal``  fresh field generators u_{ij}
* ``Explicit``   a stored finite table

Non-degeneracy means value(i, j) != value(i2, j2) whenever i >= i2 and
j < j2; it is exactly the condition that makes the interpolation problem
uniquely solvable, and it is checked on a finite window plus, for families
I, II and IV, via the closed parameter conditions that certify all columns
at once.

Grid JSON encoding (the only grid file format):
``{"family": "I", "n": 2, "params": {"a": "1", "b": "2", ...}}``; E1/E2
list finitely many values with an explicit window bound; Explicit grids
list their window; Universal states its window bound.  All scalars use the
field's text encoding over the rationals.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from . import partitions
from .errors import DegenerateGrid, IndexOutOfRange, ParseError, WrongFamily
from .exactfield import (
    QQ,
    RationalField,
    RationalFunctionField,
    format_scalar,
    is_zero,
)


class GridFamily:
    """Base class: a closed-form rule (i, j) -> scalar plus metadata."""

    tag = "?"

    def __init__(self, field):
        self.field = field

    def value(self, i: int, j: int):
        raise NotImplementedError

    def max_row(self) -> Optional[int]:
        """Largest usable row index, or None when unbounded."""
        return None

    def max_col(self) -> Optional[int]:
        return None

    def shifted_cols(self, k: int) -> Optional["GridFamily"]:
        """The family describing (i, j) -> value(i, j + k), if closed."""
        return None

    def shifted_rows(self, l: int) -> Optional["GridFamily"]:
        """The family describing (i, j) -> value(i + l, j), if closed."""
        return None

    def params_json(self) -> Optional[dict]:
        """Family-specific JSON fields, or None when a table is needed."""
        return None

    def parameter_violations(self, n: int) -> list[str]:
        """Failures of the closed non-degeneracy conditions (I, II, IV)."""
        return []


class E1Family(GridFamily):
    """value(i, j) = gamma_j for a sequence of pairwise distinct values."""

    tag = "E1"

    def __init__(self, field, gamma):
        super().__init__(field)
        self._gamma = _sequence_accessor(field, gamma, two_sided=False)
        self._bound = len(gamma) - 1 if isinstance(gamma, (list, tuple)) else None

    def gamma(self, j: int):
        return self._gamma(j)

    def value(self, i, j):
        return self._gamma(j)

    def max_col(self):
        return self._bound

    def shifted_cols(self, k):
        f = E1Family(self.field, lambda j, g=self._gamma, k=k: g(j + k))
        f._bound = None if self._bound is None else self._bound - k
        return f

    def shifted_rows(self, l):
        return self

    def params_json(self):
        if self._bound is None:
            return None
        return {"values": [format_scalar(self._gamma(j)) for j in range(self._bound + 1)]}


class E2Family(GridFamily):
    """value(i, j) = gamma_{j-i} for a two-sided sequence."""

    tag = "E2"

    def __init__(self, field, gamma):
        super().__init__(field)
        self._gamma = _sequence_accessor(field, gamma, two_sided=True)
        if isinstance(gamma, Mapping):
            keys = sorted(int(k) for k in gamma)
            self._range = (keys[0], keys[-1]) if keys else (0, -1)
        else:
            self._range = None

    def gamma(self, k: int):
        return self._gamma(k)

    def value(self, i, j):
        return self._gamma(j - i)

    def shifted_cols(self, k):
        f = E2Family(self.field, lambda m, g=self._gamma, k=k: g(m + k))
        return f

    def shifted_rows(self, l):
        f = E2Family(self.field, lambda m, g=self._gamma, l=l: g(m - l))
        return f

    def params_json(self):
        if self._range is None:
            return None
        lo, hi = self._range
        return {"values": {str(k): format_scalar(self._gamma(k)) for k in range(lo, hi + 1)}}


class MacdonaldFamily(GridFamily):
    """Family I: value(i, j) = a + b q^j t^i + c q^{-j} t^{-i}."""

    tag = "I"

    def __init__(self, field, a, b, c, q, t):
        super().__init__(field)
        self.a = field.coerce(a)
        self.b = field.coerce(b)
        self.c = field.coerce(c)
        self.q = field.coerce(q)
        self.t = field.coerce(t)
        if is_zero(self.q) or is_zero(self.t):
            raise ValueError("family I needs q != 0 and t != 0")

    def value(self, i, j):
        w = self.q ** j * self.t ** i
        return self.a + self.b * w + self.c * w ** -1

    def shifted_cols(self, k):
        return MacdonaldFamily(self.field, self.a, self.b * self.q ** k,
                               self.c * self.q ** -k, self.q, self.t)

    def shifted_rows(self, l):
        return MacdonaldFamily(self.field, self.a, self.b * self.t ** l,
                               self.c * self.t ** -l, self.q, self.t)

    def params_json(self):
        return {"params": {k: format_scalar(getattr(self, k)) for k in "abcqt"}}

    def parameter_violations(self, n):
        out = []
        for l in range(n + 1):
            k = scalar_power_matching(self.q, self.t ** l)
            if k is not None:
                out.append(f"q^{k} = t^{l}")
        if not is_zero(self.b):
            for l in range(2 * n + 1):
                k = scalar_power_matching(self.q, self.c / (self.b * self.t ** l))
                if k is not None:
                    out.append(f"b*q^{k}*t^{l} = c")
        elif is_zero(self.c):
            out.append("b = c = 0 makes all values equal")
        return out


class QuadraticFamily(GridFamily):
    """Family II: value(i, j) = alpha + B + gamma B^2 with B = beta j + beta' i."""

    tag = "II"

    def __init__(self, field, alpha, beta, beta_prime, gamma):
        super().__init__(field)
        self.alpha = field.coerce(alpha)
        self.beta = field.coerce(beta)
        self.beta_prime = field.coerce(beta_prime)
        self.gamma = field.coerce(gamma)

    def value(self, i, j):
        lin = self.beta * j + self.beta_prime * i
        return self.alpha + lin + self.gamma * lin * lin

    def shifted_cols(self, k):
        # scale != 0 whenever the parameter conditions hold (k' = 2k, l = 0)
        scale = 1 + 2 * self.gamma * self.beta * k
        if is_zero(scale):
            return None
        return QuadraticFamily(
            self.field,
            self.alpha + self.beta * k + self.gamma * (self.beta * k) ** 2,
            self.beta * scale,
            self.beta_prime * scale,
            self.gamma / scale ** 2,
        )

    def shifted_rows(self, l):
        scale = 1 + 2 * self.gamma * self.beta_prime * l
        if is_zero(scale):
            return None
        return QuadraticFamily(
            self.field,
            self.alpha + self.beta_prime * l + self.gamma * (self.beta_prime * l) ** 2,
            self.beta * scale,
            self.beta_prime * scale,
            self.gamma / scale ** 2,
        )

    def params_json(self):
        return {"params": {
            "alpha": format_scalar(self.alpha),
            "beta": format_scalar(self.beta),
            "beta_prime": format_scalar(self.beta_prime),
            "gamma": format_scalar(self.gamma),
        }}

    def parameter_violations(self, n):
        out = []
        if is_zero(self.beta):
            return ["beta = 0 makes each row constant"]
        for l in range(n + 1):
            k = _integer_ratio(self.beta_prime * l, self.beta)
            if k is not None and k > 0:
                out.append(f"{k}*beta = {l}*beta'")
        if not is_zero(self.gamma):
            for l in range(2 * n + 1):
                target = -1 / self.gamma - self.beta_prime * l
                k = _integer_ratio(target, self.beta)
                if k is not None and k > 0:
                    out.append(f"gamma*({k}*beta+{l}*beta') = -1")
        return out


class AlternatingFamily(GridFamily):
    """Family III: value(i, j) = alpha + e^j e'^i (alpha' + beta j + beta' i).

    Variants a, b, c take (e, e') = (-1, 1), (1, -1), (-1, -1).
    """

    tag = "III"
    _SIGNS = {"a": (-1, 1), "b": (1, -1), "c": (-1, -1)}

    def __init__(self, field, variant, alpha, alpha_prime, beta, beta_prime):
        super().__init__(field)
        if variant not in self._SIGNS:
            raise ValueError(f"variant must be one of a, b, c: {variant!r}")
        self.variant = variant
        self.alpha = field.coerce(alpha)
        self.alpha_prime = field.coerce(alpha_prime)
        self.beta = field.coerce(beta)
        self.beta_prime = field.coerce(beta_prime)

    @property
    def tag_full(self) -> str:
        return "III" + self.variant

    def value(self, i, j):
        e, ep = self._SIGNS[self.variant]
        sign = (e ** (j % 2)) * (ep ** (i % 2))
        lin = self.alpha_prime + self.beta * j + self.beta_prime * i
        return self.alpha + sign * lin

    def shifted_cols(self, k):
        e, _ = self._SIGNS[self.variant]
        s = e ** (k % 2)
        return AlternatingFamily(
            self.field, self.variant, self.alpha,
            s * (self.alpha_prime + self.beta * k), s * self.beta, s * self.beta_prime,
        )

    def shifted_rows(self, l):
        _, ep = self._SIGNS[self.variant]
        s = ep ** (l % 2)
        return AlternatingFamily(
            self.field, self.variant, self.alpha,
            s * (self.alpha_prime + self.beta_prime * l), s * self.beta, s * self.beta_prime,
        )

    def params_json(self):
        return {"variant": self.variant, "params": {
            "alpha": format_scalar(self.alpha),
            "alpha_prime": format_scalar(self.alpha_prime),
            "beta": format_scalar(self.beta),
            "beta_prime": format_scalar(self.beta_prime),
        }}


class SplitGeometricFamily(GridFamily):
    """Family IV, two rows: alpha + beta q^j and alpha + beta' q^{-j}."""

    tag = "IV"

    def __init__(self, field, alpha, beta, beta_prime, q):
        super().__init__(field)
        self.alpha = field.coerce(alpha)
        self.beta = field.coerce(beta)
        self.beta_prime = field.coerce(beta_prime)
        self.q = field.coerce(q)
        if is_zero(self.q):
            raise ValueError("family IV needs q != 0")
        if is_zero(self.beta) or is_zero(self.beta_prime):
            raise ValueError("family IV needs beta != 0 and beta' != 0")

    def max_row(self):
        return 1

    def value(self, i, j):
        if i == 0:
            return self.alpha + self.beta * self.q ** j
        if i == 1:
            return self.alpha + self.beta_prime * self.q ** -j
        raise IndexOutOfRange(f"family IV has two rows, got row {i}")

    def shifted_cols(self, k):
        return SplitGeometricFamily(self.field, self.alpha, self.beta * self.q ** k,
                                    self.beta_prime * self.q ** -k, self.q)

    def shifted_rows(self, l):
        if l == 0:
            return self
        if l == 1:
            return E1Family(self.field,
                            lambda j: self.alpha + self.beta_prime * self.q ** -j)
        return None

    def params_json(self):
        return {"params": {
            "alpha": format_scalar(self.alpha),
            "beta": format_scalar(self.beta),
            "beta_prime": format_scalar(self.beta_prime),
            "q": format_scalar(self.q),
        }}

    def parameter_violations(self, n):
        out = []
        k = scalar_power_matching(self.q, self.field.coerce(1))
        if k is not None:
            out.append(f"q^{k} = 1")
        k = scalar_power_matching(self.q, self.beta_prime / self.beta)
        if k is not None:
            out.append(f"q^{k} = beta'/beta")
        return out


class UniversalFamily(GridFamily):
    """Fresh field generators u_{ij} on a declared window."""

    tag = "Universal"

    def __init__(self, n: int, jmax: int, field: Optional[RationalFunctionField] = None,
                 row_offset: int = 0, col_offset: int = 0):
        if n < 0 or jmax < 0:
            raise ValueError("need n >= 0 and jmax >= 0")
        if n + row_offset > 9 or jmax + col_offset > 9:
            raise ValueError("universal parameter names support indices up to 9")
        if field is None:
            field = RationalFunctionField(
                f"u{i}{j}" for i in range(n + row_offset + 1)
                for j in range(jmax + col_offset + 1)
            )
        super().__init__(field)
        self.n = n
        self.jmax = jmax
        self.row_offset = row_offset
        self.col_offset = col_offset

    def max_row(self):
        return self.n

    def max_col(self):
        return self.jmax

    def value(self, i, j):
        if j > self.jmax:
            raise IndexOutOfRange(
                f"universal grid declared with jmax={self.jmax}, got column {j}")
        return self.field.gen(f"u{i + self.row_offset}{j + self.col_offset}")

    def shifted_cols(self, k):
        return UniversalFamily(self.n, self.jmax - k, self.field,
                               self.row_offset, self.col_offset + k)

    def shifted_rows(self, l):
        return UniversalFamily(self.n - l, self.jmax, self.field,
                               self.row_offset + l, self.col_offset)

    def params_json(self):
        return {"jmax": self.jmax}


class ExplicitFamily(GridFamily):
    """A finite stored table."""

    tag = "Explicit"

    def __init__(self, field, table: Mapping[tuple, object]):
        super().__init__(field)
        self.table = {(int(i), int(j)): field.coerce(v) for (i, j), v in table.items()}

    def max_row(self):
        return max(i for i, _ in self.table)

    def max_col(self):
        return max(j for _, j in self.table)

    def value(self, i, j):
        try:
            return self.table[(i, j)]
        except KeyError:
            raise IndexOutOfRange(f"explicit grid has no value at {(i, j)}") from None

    def shifted_cols(self, k):
        return ExplicitFamily(self.field, {(i, j - k): v for (i, j), v in self.table.items()
                                           if j >= k})

    def shifted_rows(self, l):
        return ExplicitFamily(self.field, {(i - l, j): v for (i, j), v in self.table.items()
                                           if i >= l})

    def params_json(self):
        return {"table": {f"{i},{j}": format_scalar(v)
                          for (i, j), v in sorted(self.table.items())}}


def _sequence_accessor(field, gamma, two_sided: bool) -> Callable[[int], object]:
    if callable(gamma):
        return lambda k: field.coerce(gamma(k))
    if isinstance(gamma, Mapping):
        table = {int(k): field.coerce(v) for k, v in gamma.items()}

        def from_map(k: int):
            try:
                return table[k]
            except KeyError:
                raise IndexOutOfRange(f"sequence has no value at {k}") from None

        return from_map
    values = [field.coerce(v) for v in gamma]

    def from_list(k: int):
        if k < 0 or k >= len(values):
            raise IndexOutOfRange(f"sequence has no value at {k}")
        return values[k]

    if two_sided:
        raise ValueError("two-sided sequences need a mapping or callable")
    return from_list


def scalar_power_matching(q, target) -> Optional[int]:
    """The k > 0 with q^k == target, or None.

    Exact for rationals.  For other scalar types the search is cut off at
    a fixed exponent bound, which suffices for the symbolic parameters the
    package constructs.
    """
    if isinstance(q, Fraction) and isinstance(target, Fraction):
        if q == 0 or target == 0:
            return None
        if abs(q) == 1:
            for k in (1, 2):
                if q ** k == target:
                    return k
            return None
        # |q|^k is strictly monotone, so at most one candidate exists
        k = 1
        qk = q
        while True:
            if qk == target:
                return k
            if abs(q) > 1 and abs(qk) > abs(target):
                return None
            if abs(q) < 1 and abs(qk) < abs(target):
                return None
            k += 1
            qk *= q
            if k > 64 + target.numerator.bit_length() + target.denominator.bit_length():
                return None
    for k in range(1, 33):
        if q ** k == target:
            return k
    return None


def _integer_ratio(x, y) -> Optional[int]:
    """The integer k with x == k*y, or None (y must be nonzero)."""
    if is_zero(y):
        return None
    r = x / y
    if isinstance(r, Fraction):
        return int(r) if r.denominator == 1 else None
    # symbolic scalar: probe a modest range
    for k in range(-64, 65):
        if r == k:
            return k
    return None


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NondegeneracyReport:
    """Outcome of a non-degeneracy check on a finite window."""

    passed: bool
    jcut: int
    violation: Optional[tuple] = None          # (i, j, i2, j2) with equal values
    condition_failures: tuple = ()

    def __bool__(self):
        return self.passed


class Grid:
    """A family plus a row count, with a memoized value table.

    The memo is the only mutable state and behaves as a pure cache; a lock
    keeps concurrent readers consistent.
    """

    def __init__(self, family: GridFamily, n: int):
        if n < 0:
            raise ValueError("need n >= 0")
        limit = family.max_row()
        if limit is not None and n > limit:
            raise ValueError(f"family {family.tag} supports rows 0..{limit}")
        self.family = family
        self.n = n
        self._memo: dict[tuple, object] = {}
        self._lock = threading.Lock()

    @property
    def field(self):
        return self.family.field

    def value(self, i: int, j: int):
        if not (0 <= i <= self.n) or j < 0:
            raise IndexOutOfRange(f"grid index {(i, j)} outside rows 0..{self.n}")
        key = (i, j)
        memo = self._memo
        if key in memo:
            return memo[key]
        v = self.family.value(i, j)
        with self._lock:
            memo.setdefault(key, v)
        return memo[key]

    def knot(self, lam) -> tuple:
        """The evaluation point (value(0, lam_0), ..., value(n, lam_n))."""
        lam = partitions.normalize(lam)
        if len(lam) > self.n + 1:
            raise IndexOutOfRange(f"partition {lam} is longer than {self.n + 1}")
        return tuple(self.value(i, partitions.part(lam, i)) for i in range(self.n + 1))

    # -- index-shift views ---------------------------------------------------

    def shift_j(self, k: int) -> "Grid":
        """The grid (i, j) -> value(i, j + k)."""
        if k < 0:
            raise ValueError("column shift must be >= 0")
        if k == 0:
            return self
        fam = self.family.shifted_cols(k)
        if fam is None:
            fam = _OffsetFamily(self.family, 0, k)
        return Grid(fam, self.n)

    def restrict_rows(self, m: int) -> "Grid":
        """The same values on rows 0..m only."""
        if not (0 <= m <= self.n):
            raise IndexOutOfRange(f"row bound {m} outside 0..{self.n}")
        return Grid(self.family, m)

    def shift_rows(self, l: int) -> "Grid":
        """The grid (i, j) -> value(i + l, j) on rows 0..n-l."""
        if not (0 <= l <= self.n):
            raise IndexOutOfRange(f"row shift {l} outside 0..{self.n}")
        if l == 0:
            return self
        fam = self.family.shifted_rows(l)
        if fam is None:
            fam = _OffsetFamily(self.family, l, 0)
        return Grid(fam, self.n - l)

    # -- checks ---------------------------------------------------------------

    def check_nondegenerate(self, jcut: int) -> NondegeneracyReport:
        """Verify value(i, j) != value(i2, j2) for i >= i2, 0 <= j < j2 <= jcut.

        For families I, II and IV the closed parameter conditions are
        evaluated as well; they certify every column, not just the window.
        """
        if jcut < 1:
            raise ValueError("jcut must be >= 1")
        failures = tuple(self.family.parameter_violations(self.n))
        violation = None
        for j2 in range(1, jcut + 1):
            for j in range(j2):
                for i2 in range(self.n + 1):
                    for i in range(i2, self.n + 1):
                        if self.value(i, j) == self.value(i2, j2):
                            violation = (i, j, i2, j2)
                            break
                    if violation:
                        break
                if violation:
                    break
            if violation:
                break
        return NondegeneracyReport(not failures and violation is None,
                                   jcut, violation, failures)

    def require_nondegenerate_difference(self, i, j, i2, j2):
        """The difference value(i, j) - value(i2, j2), raising when zero.

        Callers pass index pairs that non-degeneracy promises distinct
        (one pair dominates in row and is dominated in column), so a zero
        difference certifies degeneracy.
        """
        d = self.value(i, j) - self.value(i2, j2)
        if is_zero(d):
            raise DegenerateGrid(
                f"grid values coincide at {(i, j)} and {(i2, j2)}",
                witness=(i, j, i2, j2),
            )
        return d

    def window(self, jmax: int) -> "Window":
        return Window.from_grid(self, jmax)

    # -- serialization ----------------------------------------------------------

    def to_json(self, jmax: Optional[int] = None) -> dict:
        doc = self.family.params_json()
        tag = getattr(self.family, "tag_full", self.family.tag)
        if doc is None:
            if jmax is None:
                raise ValueError("this grid serializes as a table; pass jmax")
            doc = ExplicitFamily(self.field, {
                (i, j): self.value(i, j)
                for i in range(self.n + 1) for j in range(jmax + 1)
            }).params_json()
            tag = "Explicit"
        doc = dict(doc)
        doc["family"] = tag
        doc["n"] = self.n
        return {"family": doc.pop("family"), "n": doc.pop("n"), **doc}

    def __repr__(self):
        return f"Grid({getattr(self.family, 'tag_full', self.family.tag)}, n={self.n})"


class _OffsetFamily(GridFamily):
    """Index-shifted view over another family (internal fallback)."""

    def __init__(self, base: GridFamily, di: int, dj: int):
        super().__init__(base.field)
        self.base = base
        self.di = di
        self.dj = dj

    @property
    def tag(self):
        return self.base.tag

    def value(self, i, j):
        return self.base.value(i + self.di, j + self.dj)

    def max_row(self):
        m = self.base.max_row()
        return None if m is None else m - self.di

    def max_col(self):
        m = self.base.max_col()
        return None if m is None else m - self.dj

    def shifted_cols(self, k):
        return _OffsetFamily(self.base, self.di, self.dj + k)

    def shifted_rows(self, l):
        return _OffsetFamily(self.base, self.di + l, self.dj)


@dataclass(frozen=True)
class Window:
    """A complete finite rectangle of grid values."""

    n: int
    jmax: int
    values: tuple  # values[i][j]
    field: object

    @classmethod
    def from_grid(cls, grid: Grid, jmax: int) -> "Window":
        rows = tuple(
            tuple(grid.value(i, j) for j in range(jmax + 1))
            for i in range(grid.n + 1)
        )
        return cls(grid.n, jmax, rows, grid.field)

    @classmethod
    def from_values(cls, field, rows: Sequence[Sequence]) -> "Window":
        vals = tuple(tuple(field.coerce(v) for v in row) for row in rows)
        if not vals or len({len(r) for r in vals}) != 1:
            raise ValueError("window rows must be nonempty and of equal length")
        return cls(len(vals) - 1, len(vals[0]) - 1, vals, field)

    def value(self, i: int, j: int):
        if not (0 <= i <= self.n and 0 <= j <= self.jmax):
            raise IndexOutOfRange(f"window index {(i, j)} outside the table")
        return self.values[i][j]

    def first_degeneracy(self) -> Optional[tuple]:
        for j2 in range(1, self.jmax + 1):
            for j in range(j2):
                for i2 in range(self.n + 1):
                    for i in range(i2, self.n + 1):
                        if self.values[i][j] == self.values[i2][j2]:
                            return (i, j, i2, j2)
        return None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "jmax": self.jmax,
            "rows": [[format_scalar(v) for v in row] for row in self.values],
        }


# ---------------------------------------------------------------------------
# grid JSON files


def grid_from_json(doc: Mapping, field=None) -> Grid:
    """Build a grid from its JSON description (rational scalars)."""
    try:
        tag = doc["family"]
        n = int(doc["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad grid description: {exc}") from None
    if field is None:
        field = QQ
    parse = field.parse

    def params(*names):
        try:
            raw = doc["params"]
            return [parse(raw[name]) for name in names]
        except KeyError as exc:
            raise ParseError(f"grid family {tag} needs parameter {exc}") from None

    if tag == "E1":
        try:
            values = [parse(v) for v in doc["values"]]
        except KeyError:
            raise ParseError("family E1 needs a values list") from None
        fam = E1Family(field, values)
    elif tag == "E2":
        try:
            values = {int(k): parse(v) for k, v in doc["values"].items()}
        except (KeyError, AttributeError, ValueError):
            raise ParseError("family E2 needs a values map {index: value}") from None
        fam = E2Family(field, values)
    elif tag == "I":
        fam = MacdonaldFamily(field, *params("a", "b", "c", "q", "t"))
    elif tag == "II":
        fam = QuadraticFamily(field, *params("alpha", "beta", "beta_prime", "gamma"))
    elif tag.startswith("III") and len(tag) == 4:
        fam = AlternatingFamily(field, tag[3],
                                *params("alpha", "alpha_prime", "beta", "beta_prime"))
    elif tag == "IV":
        fam = SplitGeometricFamily(field, *params("alpha", "beta", "beta_prime", "q"))
    elif tag == "Universal":
        try:
            jmax = int(doc["jmax"])
        except (KeyError, ValueError):
            raise ParseError("universal grid needs a jmax bound") from None
        fam = UniversalFamily(n, jmax)
    elif tag == "Explicit":
        try:
            table = {}
            for key, v in doc["table"].items():
                i, _, j = key.partition(",")
                table[(int(i), int(j))] = parse(v)
        except (KeyError, AttributeError, ValueError):
            raise ParseError("explicit grid needs a table {'i,j': value}") from None
        fam = ExplicitFamily(field, table)
    else:
        raise ParseError(f"unknown grid family {tag!r}")
    return Grid(fam, n)


def load_grid(path: str) -> Grid:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read grid file {path}: {exc}") from None
    return grid_from_json(doc)


def window_from_json(doc: Mapping, field=None) -> Window:
    if field is None:
        field = QQ
    try:
        rows = [[field.parse(v) for v in row] for row in doc["rows"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad window description: {exc}") from None
    return Window.from_values(field, rows)


def load_window(path: str) -> Window:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read window file {path}: {exc}") from None
    return window_from_json(doc)
