"""Exception types shared across the package."""


class ExactFieldError(Exception):
    """Base class for coefficient-field errors."""


class MixedContext(ExactFieldError):
    """Two scalars from different field contexts met in one operation."""


class DivisionByZero(ExactFieldError, ZeroDivisionError):
    """Division or inversion of an exact zero."""


class DenominatorVanishes(ExactFieldError):
    """A specialization sent a denominator to zero."""


class ParseError(ValueError):
    """A text encoding (scalar, partition, grid file) failed to parse."""


class GridError(Exception):
    """Base class for grid errors."""


class IndexOutOfRange(GridError, IndexError):
    """Grid value requested outside the grid's domain."""


class WrongFamily(GridError):
    """A closed-form constructor was handed a grid of the wrong family."""


class DegenerateGrid(GridError):
    """A grid value coincidence forbidden by the interpolation setup.

    Carries the witnessing quadruple (i, j, i2, j2) when known: the grid
    takes equal values at (i, j) and (i2, j2) with i >= i2 and j < j2.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedTableau(ValueError):
    """A filling violated the reverse-tableau inequalities."""


class ZeroPolynomial(ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class NotPerfectWindow(Exception):
    """No grid family reproduces the given window of values."""


class InconsistentWindow(Exception):
    """Window values contradict the recurrences forced by extra vanishing."""


class IndeterminateTuple(Exception):
    """The four-value classifier needs its two middle values distinct."""
