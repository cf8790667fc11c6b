"""Symmetric polynomials in a fixed number of variables, monomial basis.

A ``SymPoly`` stores its coefficients on the monomial symmetric functions
m_lam (lam a partition with at most ``nvars`` parts); the same partition
tuples index both basis elements and interpolation knots.  Arithmetic
expands orbits into raw monomials and re-collects, which is exact and
cheap at the sizes interpolation needs.

The two basis-change maps used by the interpolation recursion live here:

* ``ext(pivot)`` rewrites the polynomial in the shifted monomial basis
  m_nu(x - pivot), reads the same expansion in one more variable, and
  rewrites back; it preserves degree and satisfies
  ``ext(f)(x0, ..., x_{n-1}, pivot) == f(x0, ..., x_{n-1})``.
* ``restrict(pivot)`` substitutes the last variable by ``pivot``; the
  degree never grows.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Mapping, Sequence

from . import partitions
from .errors import MixedContext, ZeroPolynomial
from .exactfield import is_zero


@lru_cache(maxsize=None)
def orbit(lam: tuple, nvars: int) -> tuple[tuple, ...]:
    """Distinct exponent vectors obtained by permuting lam padded to nvars."""
    padded = lam + (0,) * (nvars - len(lam))
    return tuple(sorted(set(permutations(padded))))


class SymPoly:
    """Symmetric polynomial, coefficients on the m_lam basis."""

    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field, nvars: int, coeffs: Mapping[tuple, object]):
        self.field = field
        self.nvars = nvars
        clean = {}
        for lam, c in coeffs.items():
            lam = partitions.normalize(lam)
            if len(lam) > nvars:
                raise ValueError(f"key {lam} has more than {nvars} parts")
            if not is_zero(c):
                clean[lam] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field, nvars: int) -> SymPoly:
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars: int, value) -> SymPoly:
        return cls(field, nvars, {(): field.coerce(value)})

    @classmethod
    def monomial_sym(cls, field, nvars: int, lam) -> SymPoly:
        """The monomial symmetric function m_lam."""
        return cls(field, nvars, {partitions.normalize(lam): field.coerce(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(sum(lam) for lam in self.coeffs)

    def coefficient(self, lam) -> object:
        return self.coeffs.get(partitions.normalize(lam), self.field.zero)

    def _check(self, other: SymPoly) -> None:
        if self.nvars != other.nvars:
            raise MixedContext(f"variable counts differ: {self.nvars} vs {other.nvars}")
        if self.field is not other.field:
            raise MixedContext("symmetric polynomials over different fields")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, SymPoly):
            self._check(other)
            acc = dict(self.coeffs)
            for lam, c in other.coeffs.items():
                acc[lam] = acc.get(lam, self.field.zero) + c
            return SymPoly(self.field, self.nvars, acc)
        return self.__add__(SymPoly.constant(self.field, self.nvars, other))

    __radd__ = __add__

    def __neg__(self):
        return SymPoly(self.field, self.nvars, {l: -c for l, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.constant(self.field, self.nvars, other)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, scalar) -> SymPoly:
        scalar = self.field.coerce(scalar)
        if is_zero(scalar):
            return SymPoly.zero(self.field, self.nvars)
        return SymPoly(self.field, self.nvars,
                       {l: c * scalar for l, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            self._check(other)
            raw = monomials_mul(self.to_monomials(), other.to_monomials())
            return SymPoly.from_monomials(self.field, self.nvars, raw)
        return self.scale(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = SymPoly.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            other = SymPoly.constant(self.field, self.nvars, other)
        if self.nvars != other.nvars:
            return False
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[l] == other.coeffs[l] for l in self.coeffs)

    __hash__ = None

    # -- raw monomial conversions ---------------------------------------------

    def to_monomials(self) -> dict[tuple, object]:
        """Expand into {exponent vector: coefficient} over all orbits."""
        raw: dict[tuple, object] = {}
        for lam, c in self.coeffs.items():
            for exps in orbit(lam, self.nvars):
                raw[exps] = c
        return raw

    @classmethod
    def from_monomials(cls, field, nvars: int, raw: Mapping[tuple, object]) -> SymPoly:
        """Collect a symmetric raw-monomial map into the m basis.

        Reads the coefficient at each orbit's representative (exponents
        sorted decreasingly); the input must be symmetric.
        """
        coeffs = {}
        for exps, c in raw.items():
            lam = tuple(sorted(exps, reverse=True))
            if lam == exps:
                coeffs[partitions.normalize(lam)] = c
        return cls(field, nvars, coeffs)

    # -- evaluation -----------------------------------------------------------

    def eval(self, point: Sequence) -> object:
        """Exact value at a point (one scalar per variable)."""
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, need {self.nvars}")
        point = [self.field.coerce(v) for v in point]
        total = self.field.zero
        for lam, c in self.coeffs.items():
            m_val = self.field.zero
            for exps in orbit(lam, self.nvars):
                term = self.field.one
                for v, e in zip(point, exps):
                    if e:
                        term = term * v ** e
                m_val = m_val + term
            total = total + c * m_val
        return total

    # -- structure maps ---------------------------------------------------------

    def _shifted_basis(self, pivot) -> dict[tuple, object]:
        """Coefficients of self on the basis m_nu(x - pivot)."""
        raw = self.to_monomials()
        shifted = _shift_monomials(self.field, raw, -self.field.coerce(pivot))
        out = {}
        for exps, c in shifted.items():
            lam = tuple(sorted(exps, reverse=True))
            if lam == exps:
                out[partitions.normalize(lam)] = c
        return out

    def ext(self, pivot) -> SymPoly:
        """Degree-preserving extension to one more variable.

        Each shifted monomial symmetric function m_nu(x - pivot) in nvars
        variables maps to m_nu(x - pivot) in nvars + 1 variables.
        """
        pivot = self.field.coerce(pivot)
        shifted = self._shifted_basis(pivot)
        raw: dict[tuple, object] = {}
        for nu, c in shifted.items():
            for exps in orbit(nu, self.nvars + 1):
                raw[exps] = c
        unshifted = _shift_monomials(self.field, raw, pivot)
        return SymPoly.from_monomials(self.field, self.nvars + 1, unshifted)

    def restrict(self, pivot) -> SymPoly:
        """Substitute the last variable by pivot."""
        if self.nvars == 0:
            raise ValueError("no variable left to restrict")
        pivot = self.field.coerce(pivot)
        raw = self.to_monomials()
        out: dict[tuple, object] = {}
        for exps, c in raw.items():
            head, last = exps[:-1], exps[-1]
            v = c * pivot ** last if last else c
            if head in out:
                out[head] = out[head] + v
            else:
                out[head] = v
        out = {e: c for e, c in out.items() if not is_zero(c)}
        return SymPoly.from_monomials(self.field, self.nvars - 1, out)

    def top_component(self) -> SymPoly:
        """The homogeneous part of top degree."""
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no top component")
        d = self.degree()
        return SymPoly(self.field, self.nvars,
                       {l: c for l, c in self.coeffs.items() if sum(l) == d})

    def x0_coefficient(self, power: int) -> SymPoly:
        """Coefficient of x0^power, a symmetric polynomial in the others."""
        if self.nvars == 0:
            raise ValueError("no variables")
        raw = self.to_monomials()
        out: dict[tuple, object] = {}
        for exps, c in raw.items():
            if exps[0] == power:
                out[exps[1:]] = c
        return SymPoly.from_monomials(self.field, self.nvars - 1, out)

    # -- presentation ------------------------------------------------------------

    def sorted_items(self) -> list[tuple[tuple, object]]:
        """(partition, coefficient) pairs in the canonical partition order."""
        return [(lam, self.coeffs[lam])
                for lam in sorted(self.coeffs, key=lambda l: (sum(l), tuple(-p for p in l)))]

    def __repr__(self):
        if not self.coeffs:
            return "SymPoly(0)"
        bits = [f"m{list(l)}: {c}" for l, c in self.sorted_items()]
        return "SymPoly(" + ", ".join(bits) + ")"


def monomials_mul(a: Mapping[tuple, object], b: Mapping[tuple, object]) -> dict:
    """Convolve two raw-monomial maps."""
    acc: dict[tuple, object] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            v = ca * cb
            if key in acc:
                acc[key] = acc[key] + v
            else:
                acc[key] = v
    return {e: c for e, c in acc.items() if not is_zero(c)}


def _shift_monomials(field, raw: Mapping[tuple, object], delta) -> dict[tuple, object]:
    """Rewrite sum c * x^e as a raw map in the variables x + delta.

    Substitutes x_i = (x_i + delta) - delta and expands binomially.
    """
    if is_zero(delta):
        return {e: c for e, c in raw.items() if not is_zero(c)}
    out: dict[tuple, object] = {}
    minus = -delta
    pow_cache = {0: field.one}

    def mpow(k: int):
        if k not in pow_cache:
            pow_cache[k] = minus ** k
        return pow_cache[k]

    for exps, c in raw.items():
        # expand prod_i (y_i - delta)^{e_i} where y = x + delta
        parts = [(tuple(), c)]
        for i, e in enumerate(exps):
            if e == 0:
                continue
            new = []
            for prefix_exps, coef in parts:
                for k in range(e + 1):
                    w = coef * (comb(e, k) * mpow(e - k))
                    new.append((prefix_exps + ((i, k),), w))
            parts = new
        for placed, coef in parts:
            key = [0] * len(exps)
            for i, k in placed:
                key[i] = k
            key_t = tuple(key)
            if key_t in out:
                out[key_t] = out[key_t] + coef
            else:
                out[key_t] = coef
    return {e: c for e, c in out.items() if not is_zero(c)}
