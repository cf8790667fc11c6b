"""Extra-vanishing testing: the bounded perfectness predicate.

A non-degenerate grid is perfect when every interpolation polynomial P_mu
vanishes at the knot of every partition lam that does not contain mu --
vanishing beyond the defining conditions.  The artifact can only certify
this up to a finite degree, so the predicate is ``is_perfect_up_to``; the
closed families are expected to pass at every bound, while generic grids
fail already at small degrees.

``term_vanishes`` checks the stronger termwise statement behind the
tableau sum formulas: for any reverse tableau T on mu and any partition
lam not containing mu, some factor value(T(i,j), lam_{T(i,j)}) -
value(i + T(i,j), j) is zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import partitions
from .exactfield import is_zero
from .grids import Grid
from .newton import interpolation_polynomial
from .partitions import Partition, ReverseTableau, contains, enumerate_partitions, part


@dataclass
class VanishingReport:
    """Result of an extra-vanishing sweep up to a degree bound."""

    grid: Grid
    degree: int
    checked: list = dc_field(default_factory=list)     # (mu, lam) pairs examined
    violations: list = dc_field(default_factory=list)  # (mu, lam, value), value != 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        head = (f"extra vanishing up to degree {self.degree}: "
                f"{len(self.checked)} pairs checked, {len(self.violations)} violations")
        lines = [head]
        for mu, lam, value in self.violations:
            lines.append(
                f"  P{partitions.format_partition(mu)} at knot of "
                f"{partitions.format_partition(lam)} = {value}"
            )
        return "\n".join(lines)


def extra_vanishing_check(grid: Grid, degree: int, jobs: int = 1) -> VanishingReport:
    """Evaluate every P_mu at every knot lam with |mu|, |lam| <= degree.

    Pairs with |lam| <= |mu| vanish by the defining interpolation
    conditions and are asserted, not reported; the report covers the pairs
    with |lam| > |mu| and mu not contained in lam, where extra vanishing
    is the perfectness claim.
    """
    index = enumerate_partitions(degree, grid.n + 1)
    report = VanishingReport(grid, degree)

    def examine(mu: Partition):
        poly = interpolation_polynomial(grid, mu)
        rows = []
        for lam in index:
            if lam == mu:
                continue
            value = poly.eval(grid.knot(lam))
            if sum(lam) <= sum(mu):
                assert is_zero(value), (
                    f"defining condition failed at mu={mu}, lam={lam}")
                continue
            if contains(mu, lam):
                continue
            rows.append((mu, lam, value))
        return rows

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(examine, index))
    else:
        results = [examine(mu) for mu in index]
    for rows in results:
        for mu, lam, value in rows:
            report.checked.append((mu, lam))
            if not is_zero(value):
                report.violations.append((mu, lam, value))
    return report


def is_perfect_up_to(grid: Grid, degree: int, jobs: int = 1) -> bool:
    """Bounded perfectness: no extra-vanishing violations up to degree."""
    return extra_vanishing_check(grid, degree, jobs=jobs).passed


def term_vanishes(tab: ReverseTableau, lam, grid: Grid) -> bool:
    """True iff the tableau term evaluated at the knot of lam has a zero factor.

    The factor at cell (i, j) is
    value(T(i,j), lam_{T(i,j)}) - value(i + T(i,j), j).
    """
    lam = partitions.normalize(lam)
    if len(lam) > grid.n + 1:
        raise ValueError(f"partition {lam} is longer than {grid.n + 1}")
    for i, j, entry in tab.entries():
        factor = grid.value(entry, part(lam, entry)) - grid.value(i + entry, j)
        if is_zero(factor):
            return True
    return False
