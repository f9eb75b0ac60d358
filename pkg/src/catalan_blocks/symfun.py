"""
Degree-n quasi-symmetric functions in the fundamental basis F_{n,D}, Schur
expansion by exact elimination, and Schur-positivity certificates.

A fundamental basis element F_{n,D} is never evaluated; it is just the index
D, a subset of [n-1] stored as a bit mask (bit i-1 <-> element i).

>>> from .perm_core import Permutation
>>> v = q_of([Permutation.parse("21"), Permutation.parse("12")])
>>> schur_expand(v)
SchurVector(degree=2, coeffs={(2): 1, (1,1): 1})
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .perm_core import (
    Permutation, PositionSet, _des_mask, block_number, enumerate_avoiders,
    ides, imaj, inverse, ldes,
)
from .tableaux import Shape, StandardTableau, partitions, syt_enumerate

__all__ = [
    "QSymVector", "SchurVector", "NotSymmetric", "PositivityCertificate",
    "q_of", "schur_basis_vector", "schur_expand", "is_schur_positive",
    "restricted_character_image", "check_pair", "STATISTICS",
]


def _set_of(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for i in elements:
        mask |= 1 << (i - 1)
    return mask


@dataclass(frozen=True)
class QSymVector:
    """Integer combination of F_{n,D}; ``coeffs`` maps D's mask to its coefficient."""

    degree: int
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        limit = 1 << max(self.degree - 1, 0)
        clean = {}
        for mask, c in self.coeffs.items():
            if not 0 <= mask < limit:
                raise ValueError(f"set {_set_of(mask)} is not inside [{self.degree - 1}]")
            if c:
                clean[mask] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_sets(cls, degree: int, coeffs: Mapping[Iterable[int], int]) -> "QSymVector":
        return cls(degree, {_mask_of(d): c for d, c in coeffs.items()})

    def __getitem__(self, d) -> int:
        mask = d if isinstance(d, int) else _mask_of(d)
        return self.coeffs.get(mask, 0)

    def __add__(self, other: "QSymVector") -> "QSymVector":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return QSymVector(self.degree, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymVector):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, tuple(self.coeffs.items())))

    def total(self) -> int:
        return sum(self.coeffs.values())

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "coeffs": [{"set": list(_set_of(m)), "c": c} for m, c in self.coeffs.items()]}

    def __repr__(self) -> str:
        body = ", ".join(f"{{{','.join(map(str, _set_of(m)))}}}: {c}"
                         for m, c in self.coeffs.items())
        return f"QSymVector(degree={self.degree}, coeffs={{{body}}})"


@dataclass(frozen=True)
class SchurVector:
    """Rational combination of Schur functions s_λ, λ a partition of ``degree``."""

    degree: int
    coeffs: Mapping[Shape, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for shape in self.coeffs:
            if shape.size != self.degree:
                raise ValueError(f"{shape} is not a partition of {self.degree}")
        clean = {s: Fraction(c) for s, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), reverse=True)))

    def __getitem__(self, shape) -> Fraction:
        if not isinstance(shape, Shape):
            shape = Shape(tuple(shape))
        return self.coeffs.get(shape, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "coeffs": [{"shape": list(s.parts), "c": f"{c.numerator}/{c.denominator}"}
                           for s, c in self.coeffs.items()]}

    def __repr__(self) -> str:
        body = ", ".join(f"{s}: {c}" for s, c in self.coeffs.items())
        return f"SchurVector(degree={self.degree}, coeffs={{{body}}})"


@dataclass(frozen=True)
class NotSymmetric:
    """Returned by schur_expand for vectors outside the span of Schur functions.

    ``witness`` is a pair of subsets: either D and its reflection n - D when
    their coefficients differ (every symmetric function has equal ones), or the
    smallest subset with nonzero residual after elimination, repeated.
    """

    degree: int
    witness: tuple[tuple[int, ...], tuple[int, ...]]
    coefficients: tuple[int, int]

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class PositivityCertificate:
    positive: bool
    expansion: SchurVector | NotSymmetric
    offending: tuple[Shape, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.positive


def q_of(perms: Iterable[Permutation], degree: int | None = None) -> QSymVector:
    """Q(A) = sum of F_{n, Des(π)} over the multiset A.

    ``degree`` is only needed for an empty multiset.
    """
    counts: Counter[int] = Counter()
    n = degree
    for p in perms:
        if n is None:
            n = p.n
        elif p.n != n:
            raise ValueError(f"mixed sizes {n} and {p.n}")
        counts[_des_mask(p.word)] += 1
    if n is None:
        raise ValueError("degree required for an empty multiset")
    return QSymVector(n, counts)


def _tableau_des_mask(t: StandardTableau, upto: int) -> int:
    where = t.row_of()
    mask = 0
    for i in range(1, min(t.size, upto + 1)):
        if where[i + 1] > where[i]:
            mask |= 1 << (i - 1)
    return mask


@lru_cache(maxsize=None)
def schur_basis_vector(shape: Shape) -> QSymVector:
    """s_λ in the fundamental basis: one F_{n,Des(T)} per T in SYT(λ)."""
    n = shape.size
    return QSymVector(n, Counter(_tableau_des_mask(t, n - 1) for t in syt_enumerate(shape)))


def restricted_character_image(shape: Shape, m: int) -> QSymVector:
    """Frobenius image of χ^shape restricted to S_m: sum of F_{m, Des(T) ∩ [m-1]}."""
    if not 0 <= m <= shape.size:
        raise ValueError(f"m={m} outside 0..{shape.size}")
    return QSymVector(m, Counter(_tableau_des_mask(t, m - 1) for t in syt_enumerate(shape)))


@dataclass(frozen=True)
class _Solver:
    """Exact left-inverse of the Schur-to-fundamental matrix of one degree."""

    shapes: tuple[Shape, ...]
    pivots: tuple[int, ...]                  # one subset mask per shape
    inverse: tuple[tuple[Fraction, ...], ...]  # inverse of the pivot submatrix
    rows: tuple[QSymVector, ...]


@lru_cache(maxsize=None)
def _solver(n: int) -> _Solver:
    shapes = tuple(partitions(n))  # reverse-lexicographic
    rows = tuple(schur_basis_vector(s) for s in shapes)
    ncols = 1 << max(n - 1, 0)
    # Row-reduce a working copy to choose pivot columns in increasing mask order.
    work = [[Fraction(r[m]) for m in range(ncols)] for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        pr = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        piv = work[rank][col]
        work[rank] = [x / piv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    if rank != len(shapes):
        raise ArithmeticError(f"Schur functions of degree {n} are dependent")
    # Square system M[λ][pivot]; invert by Gauss-Jordan on [M^T | I].
    size = len(shapes)
    aug = [[Fraction(rows[j][pivots[i]]) for j in range(size)]
           + [Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for c in range(size):
        pr = next(i for i in range(c, size) if aug[i][c])
        aug[c], aug[pr] = aug[pr], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(size):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    inv = tuple(tuple(r[size:]) for r in aug)
    return _Solver(shapes, tuple(pivots), inv, rows)


def schur_expand(v: QSymVector) -> SchurVector | NotSymmetric:
    """Expand ``v`` in Schur functions, or report that it is not symmetric."""
    n = v.degree
    # Reflection test: symmetric functions are fixed by F_{n,D} -> F_{n,n-D}.
    for mask, c in v.coeffs.items():
        refl = _mask_of(n - i for i in _set_of(mask))
        if v[refl] != c:
            a, b = sorted((mask, refl))
            return NotSymmetric(n, (_set_of(a), _set_of(b)), (v[a], v[b]))
    if n == 0:
        return SchurVector(0, {Shape(()): Fraction(v[0])} if v[0] else {})
    sol = _solver(n)
    rhs = [Fraction(v[m]) for m in sol.pivots]
    coeffs = [sum(sol.inverse[i][j] * rhs[j] for j in range(len(rhs)))
              for i in range(len(rhs))]
    residual: dict[int, Fraction] = defaultdict(Fraction)
    for mask, c in v.coeffs.items():
        residual[mask] += c
    for c, row in zip(coeffs, sol.rows):
        if c:
            for mask, x in row.coeffs.items():
                residual[mask] -= c * x
    bad = sorted(m for m, r in residual.items() if r)
    if bad:
        return NotSymmetric(n, (_set_of(bad[0]), _set_of(bad[0])), (v[bad[0]], v[bad[0]]))
    return SchurVector(n, dict(zip(sol.shapes, coeffs)))


def is_schur_positive(v: QSymVector) -> PositivityCertificate:
    """Certify that ``v`` is a nonnegative integer combination of Schur functions."""
    expansion = schur_expand(v)
    if isinstance(expansion, NotSymmetric):
        return PositivityCertificate(False, expansion)
    for shape, c in expansion.coeffs.items():
        if c < 0 or c.denominator != 1:
            return PositivityCertificate(False, expansion, (shape, c))
    return PositivityCertificate(True, expansion)


STATISTICS: dict[str, Callable[[Permutation], int]] = {
    "bl": block_number,
    "ldes_inverse": lambda p: ldes(inverse(p)),
    "ides": ides,
    "imaj": imaj,
}


def check_pair(patterns: Iterable[Permutation], stat: str, n: int) -> dict[int, PositivityCertificate]:
    """Schur-positivity of each level set {π ∈ S_n(patterns) : stat(π) = k}."""
    try:
        f = STATISTICS[stat]
    except KeyError:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {sorted(STATISTICS)}") from None
    levels: dict[int, list[Permutation]] = defaultdict(list)
    for p in enumerate_avoiders(n, list(patterns)):
        levels[f(p)].append(p)
    return {k: is_schur_positive(q_of(levels[k], n)) for k in sorted(levels)}
