"""Exact coefficient arithmetic.

Three field contexts are provided:

* ``RationalField`` -- arbitrary-precision rationals (``fractions.Fraction``);
* ``RationalFunctionField`` -- fractions of sparse multivariate polynomials
  in named parameters, with rational coefficients;
* ``QuadraticExtension`` -- elements a0 + a1*theta over any base field,
  with theta reduced by theta^2 = s*theta - p.

All values are immutable after construction; operations allocate fresh
results, so scalars may be shared freely between threads.  Every scalar in
one computation must come from one field context (rationals embed into
every context automatically); mixing two distinct contexts raises
``MixedContext``.

Rational-function equality is cross-multiplicative (p/q == r/s iff
p*s == r*q as polynomials), so fractions are never required to be in
lowest terms.  Denominators are held as products of primitive polynomial
factors: sums take a factorwise lcm and products cancel matching factors
by trial division, which keeps the chained additions of interpolation
from squaring denominators.  ``RatFunc.reduced(canonical=True)``
additionally divides out the full polynomial gcd; that is the one
expensive normalization and it is never needed for correctness.

Text encoding (used by the command line tool and golden files, round-trips
bit-exactly):

* rationals print as ``p/q`` with ``/q`` omitted when q == 1;
* polynomials print as sign-joined terms like ``3*u00^2*q-1/2*u01+5``,
  terms in descending graded-lexicographic order of the declared
  variable list;
* rational functions print as ``(num)/(den)``, or as a bare polynomial
  when the denominator is 1.
"""

from __future__ import annotations

import heapq
import math
import re
import threading
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    DenominatorVanishes,
    DivisionByZero,
    MixedContext,
    ParseError,
)

Rational = Fraction

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"\d+(/\d+)?")


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None if x is not a square."""
    if x < 0:
        return None
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


def _trim(exps: tuple) -> tuple:
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


def _pad(exps: tuple, width: int) -> tuple:
    if len(exps) == width:
        return exps
    return exps + (0,) * (width - len(exps))


class PolynomialRing:
    """Shared context for sparse polynomials over Q in named variables.

    The variable order is the declaration order and fixes the graded
    lexicographic term order used for printing.  A ring may only grow
    (``add_names`` appends), which keeps previously built exponent
    vectors valid; growth is guarded by a lock so grids that mint
    parameters on demand stay safe under concurrent readers.
    """

    __slots__ = ("_names", "_index", "_lock", "zero", "one")

    def __init__(self, names: Iterable[str] = ()):
        self._names: list[str] = []
        self._index: dict[str, int] = {}
        self._lock = threading.Lock()
        self.add_names(names)
        self.zero = ParamPoly(self, {}, Fraction(0))
        self.one = ParamPoly(self, {(): 1}, Fraction(1))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    @property
    def width(self) -> int:
        return len(self._names)

    def add_names(self, names: Iterable[str]) -> None:
        with self._lock:
            for name in names:
                if not _NAME_RE.fullmatch(name):
                    raise ParseError(f"bad variable name {name!r}")
                if name not in self._index:
                    self._index[name] = len(self._names)
                    self._names.append(name)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    def const(self, value) -> ParamPoly:
        value = Fraction(value)
        if value == 0:
            return self.zero
        return ParamPoly(self, {(): 1}, value)

    def gen(self, name: str) -> ParamPoly:
        i = self.index_of(name)
        exps = (0,) * i + (1,)
        return ParamPoly(self, {exps: 1}, Fraction(1))

    def poly(self, raw: Mapping[tuple, object]) -> ParamPoly:
        """Build a polynomial from {exponent tuple: coefficient}."""
        return _make_poly(self, {e: Fraction(c) for e, c in raw.items()})

    def __repr__(self):
        return f"PolynomialRing({list(self._names)!r})"


def _make_poly(ring: PolynomialRing, raw: Mapping[tuple, Fraction]) -> ParamPoly:
    """Normalize a {exponents: Fraction} map into content * primitive form."""
    cleaned: dict[tuple, Fraction] = {}
    for exps, coeff in raw.items():
        if coeff == 0:
            continue
        exps = _trim(tuple(exps))
        prev = cleaned.get(exps)
        coeff = coeff if prev is None else prev + coeff
        if coeff == 0:
            cleaned.pop(exps, None)
        else:
            cleaned[exps] = coeff
    if not cleaned:
        return ring.zero
    denom_lcm = 1
    for c in cleaned.values():
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = {e: c.numerator * (denom_lcm // c.denominator) for e, c in cleaned.items()}
    return _normalize_ints(ring, ints, Fraction(1, denom_lcm))


def _normalize_ints(ring: PolynomialRing, acc: dict, content: Fraction) -> ParamPoly:
    if not acc:
        return ring.zero
    acc = {_trim(e): v for e, v in acc.items()}
    g = 0
    for v in acc.values():
        g = math.gcd(g, v)
    lead = max(acc, key=_grlex_key)
    if acc[lead] < 0:
        g = -g
    if g != 1:
        acc = {e: v // g for e, v in acc.items()}
    return ParamPoly(ring, acc, content * g)


class ParamPoly:
    """Sparse multivariate polynomial over Q.

    Stored as ``content * sum(terms[e] * x^e)`` where the term coefficients
    are integers with gcd 1 and positive leading (graded-lex) coefficient;
    the rational ``content`` carries sign and scale.  Exponent tuples drop
    trailing zeros.  The representation is canonical, so ``==`` is
    structural and polynomials can serve as dictionary keys.
    """

    __slots__ = ("ring", "terms", "content")

    def __init__(self, ring: PolynomialRing, terms: dict, content: Fraction):
        self.ring = ring
        self.terms = terms
        self.content = content

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not e for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.content * next(iter(self.terms.values()))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _width(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in descending graded-lex order, coefficients rationalized."""
        width = self._width()
        order = sorted(self.terms, key=lambda e: _grlex_key(_pad(e, width)), reverse=True)
        return [(e, self.content * self.terms[e]) for e in order]

    def sort_key(self) -> tuple:
        """A total order on canonical polynomials (for deterministic output)."""
        return (self.degree(), len(self.terms), tuple(sorted(self.terms.items())),
                self.content)

    # -- arithmetic ------------------------------------------------------

    def _check_ring(self, other: "ParamPoly") -> None:
        if self.ring is not other.ring:
            raise MixedContext("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        self._check_ring(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        ca, cb = self.content, other.content
        lcm = ca.denominator * cb.denominator // math.gcd(ca.denominator, cb.denominator)
        ma = ca.numerator * (lcm // ca.denominator)
        mb = cb.numerator * (lcm // cb.denominator)
        acc: dict[tuple, int] = {e: ma * v for e, v in self.terms.items()}
        for e, v in other.terms.items():
            w = acc.get(e, 0) + mb * v
            if w:
                acc[e] = w
            elif e in acc:
                del acc[e]
        return _normalize_ints(self.ring, acc, Fraction(1, lcm))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        if self.is_zero():
            return self
        return ParamPoly(self.ring, self.terms, -self.content)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0 or self.is_zero():
                return self.ring.zero
            return ParamPoly(self.ring, self.terms, self.content * c)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        self._check_ring(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero
        width = max(self._width(), other._width())
        a = {_pad(e, width): v for e, v in self.terms.items()}
        b = {_pad(e, width): v for e, v in other.terms.items()}
        if len(a) > len(b):
            a, b = b, a
        acc: dict[tuple, int] = {}
        for ea, va in a.items():
            for eb, vb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                w = acc.get(key, 0) + va * vb
                if w:
                    acc[key] = w
                elif key in acc:
                    del acc[key]
        # product of primitive polynomials is primitive (Gauss), and the
        # leading graded-lex coefficient is the product of positive leads
        return ParamPoly(self.ring, {_trim(e): v for e, v in acc.items()},
                         self.content * other.content)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if self.ring is not other.ring:
            return False
        return self.content == other.content and self.terms == other.terms

    def __hash__(self):
        return hash((self.content, frozenset(self.terms.items())))

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, bindings: Mapping[str, Fraction]) -> Fraction:
        """Fully evaluate at rational values; every used variable is bound."""
        names = self.ring.names
        total = Fraction(0)
        for exps, coef in self.terms.items():
            term = Fraction(coef)
            for i, e in enumerate(exps):
                if e:
                    name = names[i]
                    if name not in bindings:
                        raise ParseError(f"unbound variable {name!r}")
                    term *= Fraction(bindings[name]) ** e
            total += term
        return total * self.content

    def substitute_scalars(self, values: Sequence) -> object:
        """Evaluate with arbitrary scalar values (one per ring variable).

        Entries may be None for variables that do not occur.
        """
        total = None
        for exps, coef in self.terms.items():
            term = None
            for i, e in enumerate(exps):
                if e:
                    v = values[i]
                    if v is None:
                        raise ParseError(f"unbound variable {self.ring.names[i]!r}")
                    f = v ** e
                    term = f if term is None else term * f
            part = Fraction(coef) if term is None else term * Fraction(coef)
            total = part if total is None else total + part
        if total is None:
            return Fraction(0)
        return total * self.content

    # -- division and gcd --------------------------------------------------

    def exact_div(self, divisor: "ParamPoly") -> Optional["ParamPoly"]:
        """Exact quotient self / divisor, or None when it does not divide."""
        self._check_ring(divisor)
        if divisor.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return self.ring.zero
        if self.degree() < divisor.degree():
            return None
        width = max(self._width(), divisor._width())
        rem = {_pad(e, width): v for e, v in self.terms.items()}
        div = {_pad(e, width): v for e, v in divisor.terms.items()}
        dlead = max(div, key=_grlex_key)
        dcoef = div[dlead]
        quot: dict[tuple, int] = {}
        while rem:
            rlead = max(rem, key=_grlex_key)
            shift = tuple(a - b for a, b in zip(rlead, dlead))
            if any(s < 0 for s in shift):
                return None
            q, r = divmod(rem[rlead], dcoef)
            if r:
                return None
            quot[shift] = q
            for e, v in div.items():
                key = tuple(a + b for a, b in zip(shift, e))
                w = rem.get(key, 0) - q * v
                if w:
                    rem[key] = w
                elif key in rem:
                    del rem[key]
        return _normalize_ints(self.ring, quot, self.content / divisor.content)

    def primitive_part(self) -> "ParamPoly":
        if self.is_zero():
            return self
        return ParamPoly(self.ring, self.terms, Fraction(1))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"ParamPoly({format_poly(self)})"


def poly_gcd(a: ParamPoly, b: ParamPoly) -> ParamPoly:
    """Primitive gcd of two polynomials (positive leading coefficient).

    Primitive polynomial-remainder-sequence algorithm; intended for the
    optional canonical reduction, not for hot paths.
    """
    a._check_ring(b)
    if a.is_zero():
        return b.primitive_part() if not b.is_zero() else a.ring.zero
    if b.is_zero():
        return a.primitive_part()
    width = max(a._width(), b._width())
    ta = {_pad(e, width): v for e, v in a.terms.items()}
    tb = {_pad(e, width): v for e, v in b.terms.items()}
    g = _gcd_terms(ta, tb, width)
    return _normalize_ints(a.ring, g, Fraction(1)).primitive_part()


def _terms_mul(a: dict, b: dict) -> dict:
    acc: dict[tuple, int] = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            w = acc.get(key, 0) + va * vb
            if w:
                acc[key] = w
            elif key in acc:
                del acc[key]
    return acc


def _terms_sub(a: dict, b: dict) -> dict:
    acc = dict(a)
    for e, v in b.items():
        w = acc.get(e, 0) - v
        if w:
            acc[e] = w
        elif e in acc:
            del acc[e]
    return acc


def _terms_primitive(t: dict) -> dict:
    g = 0
    for v in t.values():
        g = math.gcd(g, v)
    if g > 1:
        return {e: v // g for e, v in t.items()}
    return dict(t)


def _int_content(t: dict) -> int:
    g = 0
    for v in t.values():
        g = math.gcd(g, v)
    return g


def _gcd_terms(a: dict, b: dict, width: int) -> dict:
    if not a:
        return _terms_primitive(b)
    if not b:
        return _terms_primitive(a)
    main = None
    for i in range(width):
        if any(e[i] for e in a) or any(e[i] for e in b):
            main = i
            break
    if main is None:
        return {(0,) * width: 1}
    if all(sum(e) == e[main] for e in a) and all(sum(e) == e[main] for e in b):
        return _gcd_univariate(a, b, main, width)
    return _gcd_recursive(a, b, main, width)


def _gcd_univariate(a: dict, b: dict, main: int, width: int) -> dict:
    fa = {e[main]: v for e, v in a.items()}
    fb = {e[main]: v for e, v in b.items()}
    ca, cb = _int_content(fa), _int_content(fb)
    fa = {k: v // ca for k, v in fa.items()}
    fb = {k: v // cb for k, v in fb.items()}
    while fb:
        db = max(fb)
        lb = fb[db]
        while fa and max(fa) >= db:
            da = max(fa)
            la = fa[da]
            g = math.gcd(la, lb)
            ml, ma = lb // g, la // g
            fa = {k: v * ml for k, v in fa.items()}
            for k, v in fb.items():
                key = k + da - db
                w = fa.get(key, 0) - ma * v
                if w:
                    fa[key] = w
                elif key in fa:
                    del fa[key]
        c = _int_content(fa)
        if c > 1:
            fa = {k: v // c for k, v in fa.items()}
        fa, fb = fb, fa
    return _terms_primitive(
        {tuple(k if i == main else 0 for i in range(width)): v for k, v in fa.items()}
    )


def _gcd_recursive(a: dict, b: dict, main: int, width: int) -> dict:
    def split(t: dict) -> dict[int, dict]:
        out: dict[int, dict] = {}
        for e, v in t.items():
            k = e[main]
            rest = tuple(x if i != main else 0 for i, x in enumerate(e))
            out.setdefault(k, {})[rest] = v
        return out

    def join(coeffs: dict[int, dict]) -> dict:
        out: dict[tuple, int] = {}
        for k, sub in coeffs.items():
            for e, v in sub.items():
                key = tuple(x if i != main else k for i, x in enumerate(e))
                out[key] = out.get(key, 0) + v
        return {e: v for e, v in out.items() if v}

    def content_of(coeffs: dict[int, dict]) -> dict:
        c: dict = {}
        for sub in coeffs.values():
            c = _gcd_terms(c, sub, width) if c else _terms_primitive(sub)
            if c == {(0,) * width: 1}:
                break
        return c

    def divide_coeffs(coeffs: dict[int, dict], d: dict) -> dict[int, dict]:
        out = {}
        for k, sub in coeffs.items():
            q = _terms_exact_div(sub, d)
            assert q is not None
            out[k] = q
        return out

    fa, fb = split(a), split(b)
    ca, cb = content_of(fa), content_of(fb)
    fa = divide_coeffs(fa, ca)
    fb = divide_coeffs(fb, cb)
    cg = _gcd_terms(ca, cb, width)
    while fb:
        da, db = max(fa), max(fb)
        if da < db:
            fa, fb = fb, fa
            da, db = db, da
        lb = fb[db]
        rem = fa
        while rem and max(rem) >= db:
            dr = max(rem)
            lr = rem[dr]
            new: dict[int, dict] = {}
            for k, sub in rem.items():
                if k == dr:
                    continue
                new[k] = _terms_mul(sub, lb)
            for k, sub in fb.items():
                if k == db:
                    continue
                key = k + dr - db
                prod = _terms_mul(sub, lr)
                new[key] = _terms_sub(new.get(key, {}), prod)
            rem = {k: v for k, v in new.items() if v}
        if rem:
            c = content_of(rem)
            rem = divide_coeffs(rem, c)
        fa, fb = fb, rem
    result = _terms_mul(join(fa), cg)
    return _terms_primitive(result)


def _terms_exact_div(num: dict, den: dict) -> Optional[dict]:
    if not num:
        return {}
    rem = dict(num)
    dlead = max(den, key=_grlex_key)
    dcoef = den[dlead]
    quot: dict[tuple, int] = {}
    while rem:
        rlead = max(rem, key=_grlex_key)
        shift = tuple(a - b for a, b in zip(rlead, dlead))
        if any(s < 0 for s in shift):
            return None
        q, r = divmod(rem[rlead], dcoef)
        if r:
            return None
        quot[shift] = q
        for e, v in den.items():
            key = tuple(a + b for a, b in zip(shift, e))
            w = rem.get(key, 0) - q * v
            if w:
                rem[key] = w
            elif key in rem:
                del rem[key]
    return quot


# ---------------------------------------------------------------------------
# rational functions


class RatFunc:
    """Fraction of polynomials with a factored denominator.

    The denominator is a product of primitive non-constant polynomials
    with positive leading coefficients, held as {factor: power}; all
    rational content lives in the numerator.  Construction cancels any
    factor that divides the numerator exactly, so chained sums and
    products of interpolation values never pile up spurious factors.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: "RationalFunctionField", num: ParamPoly, den=None):
        factors: dict[ParamPoly, int] = {}
        if den is None:
            pass
        elif isinstance(den, ParamPoly):
            if den.is_zero():
                raise DivisionByZero("zero denominator")
            num = num * (1 / den.content)
            den = den.primitive_part()
            if not den.is_constant():
                factors[den] = 1
        else:
            factors = {f: k for f, k in den.items() if k}
        if num.is_zero():
            factors = {}
        elif factors:
            cancelled = {}
            for f in sorted(factors, key=ParamPoly.sort_key):
                k = factors[f]
                while k:
                    q = num.exact_div(f)
                    if q is None:
                        break
                    num = q
                    k -= 1
                if k:
                    cancelled[f] = k
            factors = cancelled
        self.field = field
        self.num = num
        self.den = factors

    # -- denominator helpers ---------------------------------------------

    def den_poly(self) -> ParamPoly:
        """The denominator expanded to a single polynomial."""
        out = self.field.ring.one
        for f, k in sorted(self.den.items(), key=lambda kv: kv[0].sort_key()):
            out = out * f ** k
        return out

    def is_polynomial(self) -> bool:
        return not self.den

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is not self.field:
                raise MixedContext("rational functions from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.field, self.field.ring.const(other))
        if isinstance(other, ParamPoly):
            if other.ring is not self.field.ring:
                raise MixedContext("polynomial from a different ring")
            return RatFunc(self.field, other)
        return None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.field, self.num + o.num, dict(self.den))
        lcm = dict(self.den)
        for f, k in o.den.items():
            if lcm.get(f, 0) < k:
                lcm[f] = k
        left = self.num
        for f, k in lcm.items():
            extra = k - self.den.get(f, 0)
            if extra:
                left = left * f ** extra
        right = o.num
        for f, k in lcm.items():
            extra = k - o.den.get(f, 0)
            if extra:
                right = right * f ** extra
        return RatFunc(self.field, left + right, lcm)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.field = self.field
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = dict(self.den)
        for f, k in o.den.items():
            den[f] = den.get(f, 0) + k
        return RatFunc(self.field, self.num * o.num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        num = self.field.ring.const(1 / self.num.content)
        for f, k in self.den.items():
            num = num * f ** k
        prim = self.num.primitive_part()
        den = {} if prim.is_constant() else {prim: 1}
        return RatFunc(self.field, num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__mul__(o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__mul__(self.inverse())

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc(self.field, self.num ** k,
                      {f: p * k for f, p in self.den.items()} if k else {})
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        mine = dict(self.den)
        theirs = dict(o.den)
        for f in list(mine):
            if f in theirs:
                c = min(mine[f], theirs[f])
                mine[f] -= c
                theirs[f] -= c
        left = self.num
        for f, k in theirs.items():
            if k:
                left = left * f ** k
        right = o.num
        for f, k in mine.items():
            if k:
                right = right * f ** k
        return left == right

    __hash__ = None  # equality is cross-multiplicative, not structural

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- normalization -----------------------------------------------------

    def reduced(self, canonical: bool = False) -> "RatFunc":
        """Re-normalize; with canonical=True divide out the full gcd."""
        if not canonical or not self.den:
            return RatFunc(self.field, self.num, dict(self.den))
        den = self.den_poly()
        g = poly_gcd(self.num, den)
        if g.is_constant():
            return RatFunc(self.field, self.num, dict(self.den))
        num = self.num.primitive_part().exact_div(g)
        den = den.exact_div(g)
        assert num is not None and den is not None
        return RatFunc(self.field, num * self.num.content, den)

    # -- evaluation ----------------------------------------------------------

    def specialize(self, bindings: Mapping[str, Fraction]) -> Fraction:
        """Ring-homomorphism image under variable -> rational bindings."""
        value = self.num.evaluate(bindings)
        for f, k in self.den.items():
            fv = f.evaluate(bindings)
            if fv == 0:
                raise DenominatorVanishes(f"denominator factor {format_poly(f)} vanishes")
            value /= fv ** k
        return value

    def substitute(self, bindings: Mapping[str, object]) -> "RatFunc":
        """Substitute scalars (RatFunc or rational) for some variables."""
        values: list = []
        for i, name in enumerate(self.field.ring.names):
            if name in bindings:
                v = bindings[name]
                if isinstance(v, (int, Fraction)):
                    v = self.field.coerce(v)
                values.append(v)
            else:
                values.append(self.field.gen_by_index(i))
        out = self.field.coerce(self.num.substitute_scalars(values))
        for f, k in self.den.items():
            fv = self.field.coerce(f.substitute_scalars(values))
            if fv.is_zero():
                raise DenominatorVanishes("denominator vanishes under substitution")
            out = out * fv.inverse() ** k
        return out

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"RatFunc({format_scalar(self)})"


# ---------------------------------------------------------------------------
# field contexts


class RationalField:
    """The rationals as an explicit field context."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise MixedContext(f"cannot coerce {type(x).__name__} into the rationals")

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}: {exc}") from None

    def format(self, x) -> str:
        return str(self.coerce(x))

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()


class RationalFunctionField:
    """Field of fractions of a polynomial ring over Q."""

    def __init__(self, names: Iterable[str] = ()):
        self.ring = PolynomialRing(names)
        self.zero = RatFunc(self, self.ring.zero)
        self.one = RatFunc(self, self.ring.one)

    @property
    def names(self) -> tuple[str, ...]:
        return self.ring.names

    def add_names(self, names: Iterable[str]) -> None:
        self.ring.add_names(names)

    def gen(self, name: str) -> RatFunc:
        return RatFunc(self, self.ring.gen(name))

    def gen_by_index(self, i: int) -> RatFunc:
        return self.gen(self.ring.names[i])

    def gens(self) -> tuple[RatFunc, ...]:
        return tuple(self.gen(n) for n in self.ring.names)

    def coerce(self, x) -> RatFunc:
        if isinstance(x, RatFunc):
            if x.field is not self:
                raise MixedContext("rational function from another field")
            return x
        if isinstance(x, ParamPoly):
            if x.ring is not self.ring:
                raise MixedContext("polynomial from another ring")
            return RatFunc(self, x)
        if isinstance(x, (int, Fraction)):
            return RatFunc(self, self.ring.const(x))
        raise MixedContext(f"cannot coerce {type(x).__name__} into {self!r}")

    def parse(self, text: str) -> RatFunc:
        return parse_scalar(self, text)

    def format(self, x) -> str:
        return format_scalar(self.coerce(x))

    def __repr__(self):
        names = ",".join(self.ring.names)
        return f"RationalFunctionField({names})"


class QuadExtElem:
    """Element a0 + a1*theta of a quadratic extension."""

    __slots__ = ("ext", "a0", "a1")

    def __init__(self, ext: "QuadraticExtension", a0, a1):
        self.ext = ext
        self.a0 = a0
        self.a1 = a1

    def _coerce(self, other):
        if isinstance(other, QuadExtElem):
            if other.ext is self.ext:
                return other
            try:
                # an element further down the base chain embeds here
                return self.ext.coerce(other)
            except MixedContext:
                # an element of a wider tower containing this field is
                # lifted by the reflected operation; anything else is a
                # genuine context mix
                if _tower_contains(other.ext, self.ext):
                    return None
                raise
        if isinstance(other, (int, Fraction, RatFunc, ParamPoly)):
            return self.ext.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.ext, self.a0 + o.a0, self.a1 + o.a1)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElem(self.ext, -self.a0, -self.a1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s, p = self.ext.s, self.ext.p
        a0, a1, b0, b1 = self.a0, self.a1, o.a0, o.a1
        cross = a1 * b1
        return QuadExtElem(
            self.ext,
            a0 * b0 - cross * p,
            a0 * b1 + a1 * b0 + cross * s,
        )

    __rmul__ = __mul__

    def norm(self):
        """a0^2 + a0*a1*s + a1^2*p, the product with the conjugate."""
        return self.a0 * self.a0 + self.a0 * self.a1 * self.ext.s + self.a1 * self.a1 * self.ext.p

    def conjugate(self):
        return QuadExtElem(self.ext, self.a0 + self.a1 * self.ext.s, -self.a1)

    def inverse(self):
        n = self.norm()
        if _scalar_is_zero(n):
            raise DivisionByZero("element has zero norm")
        c = self.conjugate()
        return QuadExtElem(self.ext, c.a0 / n, c.a1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__mul__(o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__mul__(self.inverse())

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ext.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a0 == o.a0 and self.a1 == o.a1

    __hash__ = None  # components may themselves be unhashable fractions

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self) -> bool:
        return _scalar_is_zero(self.a0) and _scalar_is_zero(self.a1)

    def in_base(self):
        """The base-field value when a1 == 0, else None."""
        if _scalar_is_zero(self.a1):
            return self.a0
        return None

    def __str__(self):
        return self.ext.format(self)

    def __repr__(self):
        return f"QuadExtElem({self.ext.format(self)})"


def _tower_contains(outer, inner) -> bool:
    """True when ``inner`` appears in the base chain of extension ``outer``."""
    base = getattr(outer, "base", None)
    while base is not None:
        if base is inner:
            return True
        base = getattr(base, "base", None)
    return False


class QuadraticExtension:
    """Base field extended by a root theta of x^2 - s*x + p."""

    def __init__(self, base, s, p):
        self.base = base
        self.s = base.coerce(s)
        self.p = base.coerce(p)
        self.zero = QuadExtElem(self, base.zero, base.zero)
        self.one = QuadExtElem(self, base.one, base.zero)

    def gen(self) -> QuadExtElem:
        return QuadExtElem(self, self.base.zero, self.base.one)

    def coerce(self, x) -> QuadExtElem:
        if isinstance(x, QuadExtElem) and x.ext is self:
            return x
        # anything the base accepts (including elements of a base that is
        # itself an extension) embeds with zero theta component
        return QuadExtElem(self, self.base.coerce(x), self.base.zero)

    def format(self, x) -> str:
        x = self.coerce(x)
        f0 = self.base.format(x.a0)
        f1 = self.base.format(x.a1)
        if _scalar_is_zero(x.a1):
            return f0
        return f"({f0})+({f1})*theta"

    def minimal_polynomial_str(self) -> str:
        return f"theta^2-({self.base.format(self.s)})*theta+({self.base.format(self.p)})"

    def __repr__(self):
        return f"QuadraticExtension({self.minimal_polynomial_str()})"


Scalar = Union[Fraction, RatFunc, QuadExtElem]
Field = Union[RationalField, RationalFunctionField, QuadraticExtension]


def _scalar_is_zero(x) -> bool:
    if isinstance(x, Fraction):
        return x == 0
    return x.is_zero()


def is_zero(x) -> bool:
    """Exact zero test for any scalar."""
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def invert(x):
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(x)
    return x.inverse()


def sqrt_in_field(field, x):
    """A square root of x inside the given field context, or None.

    Supports rationals exactly, and quadratic extensions whose radicand
    lies in the base field.  Classification uses this to report rational
    parameters whenever a discriminant is a perfect square, and falls
    back to a fresh extension otherwise.
    """
    if isinstance(field, RationalField):
        return rational_sqrt(field.coerce(x))
    if isinstance(field, QuadraticExtension):
        x = field.coerce(x)
        base_val = x.in_base()
        if base_val is not None:
            r = sqrt_in_field(field.base, base_val)
            if r is not None:
                return field.coerce(r)
            # try y*(theta - s/2): its square is y^2*(s^2 - 4p)/4
            disc = field.s * field.s - 4 * field.p
            if not _scalar_is_zero(disc):
                y2 = 4 * base_val / disc
                y = sqrt_in_field(field.base, y2)
                if y is not None:
                    half_s = field.s / 2
                    return QuadExtElem(field, -y * half_s, y)
        return None
    return None


# ---------------------------------------------------------------------------
# text encoding


def format_poly(p: ParamPoly) -> str:
    if p.is_zero():
        return "0"
    names = p.ring.names
    chunks: list[str] = []
    for exps, coef in p.sorted_terms():
        factors = [
            f"{names[i]}^{e}" if e > 1 else names[i]
            for i, e in enumerate(exps)
            if e
        ]
        mag = -coef if coef < 0 else coef
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if not chunks:
            chunks.append(("-" if coef < 0 else "") + body)
        else:
            chunks.append(("-" if coef < 0 else "+") + body)
    return "".join(chunks)


def format_scalar(x) -> str:
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, RatFunc):
        if x.is_polynomial():
            return format_poly(x.num)
        return f"({format_poly(x.num)})/({format_poly(x.den_poly())})"
    if isinstance(x, QuadExtElem):
        return x.ext.format(x)
    raise TypeError(f"not a scalar: {type(x).__name__}")


def parse_poly(field: RationalFunctionField, text: str) -> ParamPoly:
    """Parse the sign-joined term encoding produced by ``format_poly``."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ParseError("empty polynomial")
    terms: list[tuple[int, str]] = []
    sign, start = 1, 0
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        start = 1
    pos = start
    cur: list[str] = []
    while pos < len(text):
        ch = text[pos]
        if ch in "+-":
            terms.append((sign, "".join(cur)))
            sign = -1 if ch == "-" else 1
            cur = []
        else:
            cur.append(ch)
        pos += 1
    terms.append((sign, "".join(cur)))
    raw: dict[tuple, Fraction] = {}
    for sgn, body in terms:
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coef = Fraction(sgn)
        exps = [0] * field.ring.width
        for part in body.split("*"):
            if not part:
                raise ParseError(f"empty factor in {text!r}")
            if part[0].isdigit():
                if not _NUMBER_RE.fullmatch(part):
                    raise ParseError(f"bad number {part!r}")
                coef *= Fraction(part)
            else:
                if "^" in part:
                    name, _, exp = part.partition("^")
                    try:
                        e = int(exp)
                    except ValueError:
                        raise ParseError(f"bad exponent in {part!r}") from None
                else:
                    name, e = part, 1
                if not _NAME_RE.fullmatch(name):
                    raise ParseError(f"bad variable {name!r}")
                i = field.ring.index_of(name)
                exps[i] += e
        key = tuple(exps)
        raw[key] = raw.get(key, Fraction(0)) + coef
    return field.ring.poly(raw)


def parse_scalar(field, text: str):
    """Parse the scalar text encoding in the given field context."""
    if isinstance(field, RationalField):
        return field.parse(text)
    if isinstance(field, RationalFunctionField):
        text = text.strip()
        if text.startswith("("):
            m = re.fullmatch(r"\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)", text)
            if not m:
                raise ParseError(f"bad rational function {text!r}")
            num = parse_poly(field, m.group("num"))
            den = parse_poly(field, m.group("den"))
            return RatFunc(field, num, den)
        return RatFunc(field, parse_poly(field, text))
    raise ParseError(f"no text encoding for {field!r}")
