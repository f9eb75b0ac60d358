"""
Standard Young tableaux of straight and skew shape (English convention: row 1
on top), their descent sets, and Robinson-Schensted insertion.

>>> t = StandardTableau.parse("1 2 3 4 7 / 5 6")
>>> sorted(tab_des(t)), tab_ldes(t)
([4], 4)
>>> len(list(syt_enumerate(SkewShape.parse("(6,4)/(5,2)"))))
3
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Sequence

from .perm_core import Permutation, PositionSet

__all__ = [
    "Shape", "SkewShape", "StandardTableau", "SizeGuardError",
    "partitions", "syt_enumerate", "syt_count",
    "tab_des", "tab_ldes", "tab_first_descent",
    "rotate_180", "rsk", "rsk_inverse",
]

MAX_SYT_SIZE = 25


class SizeGuardError(ValueError):
    """Raised when an enumeration request exceeds MAX_SYT_SIZE cells."""


@dataclass(frozen=True, slots=True, order=True)
class Shape:
    """An integer partition; trailing zeros are dropped on construction."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(p for p in self.parts if p != 0)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def row(self, i: int) -> int:
        """Length of row i (0-based); 0 past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def contains(self, other: "Shape") -> bool:
        return len(other) <= len(self) and all(
            b <= self.row(i) for i, b in enumerate(other.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    return tuple(int(t) for t in text.split(",") if t.strip()) if text else ()


@dataclass(frozen=True, slots=True)
class SkewShape:
    outer: Shape
    inner: Shape = Shape(())

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} does not fit inside {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        """Parse ``(6,4)/(5,2)`` or a straight shape ``(5,2)``."""
        outer, _, inner = text.partition("/")
        return cls(Shape(_parse_parts(outer)), Shape(_parse_parts(inner)))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return not self.inner.parts

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}" if self.inner.parts else str(self.outer)


@dataclass(frozen=True, slots=True)
class StandardTableau:
    """A standard filling; ``rows[i]`` lists the entries of row i, left to right.

    For skew shapes the rows hold only the cells of outer/inner, so row i
    starts in column ``shape.inner.row(i)``.
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        outer, inner = self.shape.outer, self.shape.inner
        if len(rows) > len(outer) or any(
                len(r) != outer.row(i) - inner.row(i) for i, r in enumerate(rows)) \
                or sum(map(len, rows)) != self.shape.size:
            raise ValueError(f"rows {rows} do not fill {self.shape}")
        if sorted(x for r in rows for x in r) != list(range(1, self.shape.size + 1)):
            raise ValueError(f"entries of {rows} are not 1..{self.shape.size}")
        cell = self._cells()
        for (i, j), v in cell.items():
            right, below = cell.get((i, j + 1)), cell.get((i + 1, j))
            if (right is not None and right < v) or (below is not None and below < v):
                raise ValueError(f"{rows} is not standard")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "StandardTableau":
        rows = tuple(tuple(r) for r in rows if r)
        return cls(SkewShape(Shape(tuple(len(r) for r in rows))), rows)

    @classmethod
    def parse(cls, text: str) -> "StandardTableau":
        return cls.from_rows([[int(t) for t in row.split()] for row in text.split("/")])

    def _cells(self) -> dict[tuple[int, int], int]:
        inner = self.shape.inner
        return {(i, inner.row(i) + j): v
                for i, r in enumerate(self.rows) for j, v in enumerate(r)}

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def height(self) -> int:
        return sum(1 for r in self.rows if r)

    def row_of(self) -> list[int]:
        """row_of()[v] is the (0-based) row containing entry v; index 0 unused."""
        where = [0] * (self.size + 1)
        for i, r in enumerate(self.rows):
            for v in r:
                where[v] = i
        return where

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for r in self.rows for v in r)

    def __str__(self) -> str:
        return " / ".join(" ".join(map(str, r)) for r in self.rows)


def partitions(n: int, max_part: int | None = None) -> list[Shape]:
    """Partitions of n in reverse-lexicographic order, (n) first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [Shape(())]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Shape((first,) + rest.parts))
    return out


def _check_size(shape: SkewShape) -> None:
    if shape.size > MAX_SYT_SIZE:
        raise SizeGuardError(f"{shape} has {shape.size} cells (limit {MAX_SYT_SIZE})")


def syt_enumerate(shape: SkewShape | Shape) -> Iterator[StandardTableau]:
    """Yield every SYT of ``shape`` in lexicographic order of the row-reading word."""
    if isinstance(shape, Shape):
        shape = SkewShape(shape)
    _check_size(shape)
    outer, inner = shape.outer, shape.inner
    nrows = len(outer)
    lengths = [inner.row(i) for i in range(nrows)]  # filled prefix of each row
    rows: list[list[int]] = [[] for _ in range(nrows)]
    found: list[tuple[tuple[int, ...], ...]] = []

    def place(v: int) -> None:
        if v > shape.size:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i in range(nrows):
            j = lengths[i]
            if j < outer.row(i) and (i == 0 or lengths[i - 1] > j):
                lengths[i] += 1
                rows[i].append(v)
                place(v + 1)
                rows[i].pop()
                lengths[i] -= 1

    place(1)
    found.sort(key=lambda rs: tuple(v for r in rs for v in r))
    for rs in found:
        yield StandardTableau(shape, rs)


def syt_count(shape: SkewShape | Shape) -> int:
    return sum(1 for _ in syt_enumerate(shape))


def tab_des(t: StandardTableau) -> PositionSet:
    """Entries i such that i+1 lies in a strictly lower row."""
    where = t.row_of()
    return PositionSet.of((i for i in range(1, t.size) if where[i + 1] > where[i]),
                          max(t.size - 1, 0))


def tab_ldes(t: StandardTableau) -> int:
    return tab_des(t).max()


def tab_first_descent(t: StandardTableau) -> int:
    """Smallest descent; the tableau size when there is none."""
    des = list(tab_des(t))
    return des[0] if des else t.size


def rotate_180(s: SkewShape, n: int) -> SkewShape:
    """Rotate a two-row skew shape inside the 2 x n box: (a,b)/(c,d) -> (n-d,n-c)/(n-b,n-a)."""
    if len(s.outer) > 2:
        raise ValueError(f"{s} has more than two rows")
    a, b = s.outer.row(0), s.outer.row(1)
    c, d = s.inner.row(0), s.inner.row(1)
    if a > n:
        raise ValueError(f"{s} does not fit in a 2 x {n} box")
    return SkewShape(Shape((n - d, n - c)), Shape((n - b, n - a)))


def rsk(p: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """Row-insertion Robinson-Schensted: returns (insertion P, recording Q)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(p.word, 1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[j], x = x, row[j]
            r += 1
    return StandardTableau.from_rows(P), StandardTableau.from_rows(Q)


def rsk_inverse(P: StandardTableau, Q: StandardTableau) -> Permutation:
    """Undo rsk by reverse bumping, removing the cells of Q in decreasing order."""
    if not (P.shape.is_straight and Q.shape.is_straight) or P.shape != Q.shape:
        raise ValueError(f"shape mismatch: {P.shape} vs {Q.shape}")
    rows = [list(r) for r in P.rows]
    where = Q.row_of()
    word = [0] * P.size
    for step in range(P.size, 0, -1):
        r = where[step]
        x = rows[r].pop()
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            j = bisect_left(row, x) - 1
            row[j], x = x, row[j]
        word[step - 1] = x
        while rows and not rows[-1]:
            rows.pop()
    return Permutation(tuple(word))
