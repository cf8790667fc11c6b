"""Partitions, diagrams and reverse tableaux, with parts indexed from 0.

A partition is a plain tuple of weakly decreasing positive integers
(trailing zeros are trimmed); ``part(lam, i)`` reads 0 beyond the stored
length.  Its diagram is the cell set {(i, j) : 0 <= j <= lam[i] - 1}, rows
indexed by i.

A reverse tableau on shape mu with entries in {0, ..., n} decreases
strictly down each column (T(i, j) > T(i+1, j)) and weakly along each row
(T(i, j) >= T(i, j+1)).  Slicing a reverse tableau at successive entry
thresholds yields a chain of shapes whose consecutive differences are
horizontal strips.

Text encoding: a partition prints as its comma-separated part list in
square brackets, e.g. ``[3,1]``; the empty partition is ``[]``.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import MalformedTableau, ParseError

Partition = tuple


def normalize(parts: Sequence[int]) -> Partition:
    """Validate weak decrease and trim trailing zeros."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """The i-th part, reading 0 beyond the stored length."""
    return lam[i] if i < len(lam) else 0


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """Diagram cells (i, j), row-major."""
    for i, p in enumerate(lam):
        for j in range(p):
            yield (i, j)


def conjugate(lam: Partition) -> Partition:
    """Column lengths of the diagram: lam'[j] = #{i : lam[i] > j}."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff mu[i] <= lam[i] for every i (diagram inclusion)."""
    return all(part(mu, i) <= part(lam, i) for i in range(len(mu)))


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """True iff mu is contained in lam with at most one new cell per column."""
    if not contains(mu, lam):
        return False
    return all(part(lam, i + 1) <= part(mu, i) for i in range(len(lam)))


def enumerate_partitions(max_size: int, max_len: int) -> list[Partition]:
    """All partitions with size <= max_size and length <= max_len.

    Ordered by size, then descending lexicographically within one size.
    """
    by_size: list[list[Partition]] = [[] for _ in range(max_size + 1)]

    def gen(remaining: int, bound: int, slots: int, prefix: list[int]):
        by_size[sum(prefix)].append(tuple(prefix))
        if remaining == 0 or slots == 0:
            return
        for p in range(min(bound, remaining), 0, -1):
            prefix.append(p)
            gen(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    if max_size >= 0:
        gen(max_size, max_size, max_len, [])
    out: list[Partition] = []
    for bucket in by_size:
        out.extend(sorted(bucket, reverse=True))
    return out


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"partition must look like [3,1]: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        parts = [int(x) for x in body.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}: {exc}") from None
    try:
        return normalize(parts)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


class ReverseTableau:
    """A reverse tableau: shape, plus one entry per diagram cell."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape: Partition, rows: Sequence[Sequence[int]]):
        self.shape = normalize(shape)
        self.rows = tuple(tuple(r) for r in rows)
        if tuple(len(r) for r in self.rows) != self.shape:
            raise MalformedTableau(f"rows {self.rows} do not fill shape {self.shape}")
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if j + 1 < len(row) and row[j + 1] > v:
                    raise MalformedTableau(f"row {i} increases at column {j}")
                if i + 1 < len(self.rows) and j < len(self.rows[i + 1]):
                    if self.rows[i + 1][j] >= v:
                        raise MalformedTableau(
                            f"column {j} does not decrease between rows {i}, {i + 1}"
                        )

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """(i, j, entry) triples, row-major."""
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                yield (i, j, v)

    def __eq__(self, other):
        return isinstance(other, ReverseTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ReverseTableau({self.rows!r})"


def enumerate_reverse_tableaux(mu: Partition, n: int) -> list[ReverseTableau]:
    """All reverse tableaux on mu with entries in {0, ..., n}.

    Deterministic order: entry vectors (read row-major) increase
    lexicographically.
    """
    mu = normalize(mu)
    if len(mu) > n + 1:
        return []
    cells_rm = list(cells(mu))
    out: list[ReverseTableau] = []
    entries: dict[tuple[int, int], int] = {}

    def fill(k: int):
        if k == len(cells_rm):
            rows = [[entries[(i, j)] for j in range(p)] for i, p in enumerate(mu)]
            out.append(ReverseTableau(mu, rows))
            return
        i, j = cells_rm[k]
        hi = n
        if j > 0:
            hi = min(hi, entries[(i, j - 1)])
        if i > 0:
            hi = min(hi, entries[(i - 1, j)] - 1)
        for v in range(hi + 1):
            entries[(i, j)] = v
            fill(k + 1)
            del entries[(i, j)]

    fill(0)
    return out


def tableau_to_chain(tab: ReverseTableau, n: int) -> list[Partition]:
    """Shapes of {cells with entry >= k} for k = 0, ..., n+1.

    The chain descends from the tableau's shape to the empty partition and
    every consecutive difference is a horizontal strip (asserted).
    """
    chain: list[Partition] = []
    for k in range(n + 2):
        row_counts = [sum(1 for v in row if v >= k) for row in tab.rows]
        if any(a < b for a, b in zip(row_counts, row_counts[1:])):
            raise MalformedTableau("threshold slice is not a partition shape")
        chain.append(normalize(row_counts))
    for above, below in zip(chain, chain[1:]):
        if not is_horizontal_strip(above, below):
            raise MalformedTableau("threshold slices are not horizontal strips")
    return chain
