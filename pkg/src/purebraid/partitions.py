"""Integer partitions, Young diagrams and standard Young tableaux."""

from __future__ import annotations

from collections import Counter
from functools import reduce
from math import factorial, gcd
from typing import Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Doubles as a cycle type: ``a(j)`` counts parts equal to ``j`` and ``m`` is
    the lcm of the parts, i.e. the order of any permutation of this type.
    """

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        """Build from parts in any order (zeros dropped)."""
        return cls(sorted((p for p in parts if p), reverse=True))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    def a(self, j: int) -> int:
        return sum(1 for p in self if p == j)

    @property
    def multiplicities(self) -> dict:
        return dict(Counter(self))

    @property
    def m(self) -> int:
        return reduce(lambda x, y: x * y // gcd(x, y), self, 1)

    @property
    def sign(self) -> int:
        """Sign of a permutation of this cycle type."""
        return -1 if sum(p - 1 for p in self) % 2 else 1

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition([sum(1 for p in self if p > i) for i in range(self[0])])

    def cells(self) -> list:
        """Cells ``(row, col)`` of the Young diagram, 1-based."""
        return [(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]


def partitions_of(n: int) -> list:
    """All partitions of ``n`` in reverse-lexicographic order, starting with ``(n)``."""
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def hook_dimension(shape: Sequence[int]) -> int:
    """Number of standard tableaux of the given shape (hook length formula)."""
    shape = Partition(shape)
    conj = shape.conjugate()
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(shape.n) // hooks


class StandardTableau:
    """A standard Young tableau stored row-major."""

    __slots__ = ("rows", "shape", "_row_of")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.shape = Partition([len(r) for r in self.rows])
        n = self.shape.n
        self._row_of = {}
        for i, row in enumerate(self.rows):
            for x in row:
                self._row_of[x] = i + 1
        if sorted(self._row_of) != list(range(1, n + 1)) or len(self._row_of) != n:
            raise ValueError(f"entries must be exactly 1..{n}: {self.rows}")
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if j + 1 < len(row) and not x < row[j + 1]:
                    raise ValueError(f"row {i + 1} is not increasing: {row}")
                if i + 1 < len(self.rows) and j < len(self.rows[i + 1]) and not x < self.rows[i + 1][j]:
                    raise ValueError(f"column {j + 1} is not increasing")

    @property
    def n(self) -> int:
        return self.shape.n

    def row_of(self, k: int) -> int:
        return self._row_of[k]

    def first_column(self) -> tuple:
        return tuple(row[0] for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"StandardTableau({[list(r) for r in self.rows]})"

    def to_json(self) -> list:
        return [list(r) for r in self.rows]


def enumerate_syt(shape: Sequence[int]) -> Iterator[StandardTableau]:
    """Yield every standard tableau of ``shape`` exactly once.

    Backtracking: entry ``k`` goes at the end of any row that is not full and
    is strictly shorter than the row above it.
    """
    shape = Partition(shape)
    n = shape.n
    rows = [[] for _ in shape]

    def place(k):
        if k > n:
            yield StandardTableau(rows)
            return
        for i, cap in enumerate(shape):
            if len(rows[i]) < cap and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                yield from place(k + 1)
                rows[i].pop()

    yield from place(1)


def descent_set(tableau: StandardTableau) -> frozenset:
    """``{k : k+1 sits in a row strictly below k}``."""
    return frozenset(k for k in range(1, tableau.n) if tableau.row_of(k + 1) > tableau.row_of(k))


def hook_tableau(n: int, column: Sequence[int]) -> StandardTableau:
    """Tableau of hook shape ``(n - len(column) + 1, 1, ..., 1)`` with the given first column.

    ``column`` must start with 1 and be strictly increasing.
    """
    column = list(column)
    if not column or column[0] != 1 or any(a >= b for a, b in zip(column, column[1:])):
        raise ValueError(f"first column must be 1 < ... increasing, got {column}")
    if column[-1] > n:
        raise ValueError(f"column entry {column[-1]} exceeds n={n}")
    rest = [x for x in range(1, n + 1) if x not in set(column)]
    return StandardTableau([[1] + rest] + [[x] for x in column[1:]])
