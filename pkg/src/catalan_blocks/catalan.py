"""Catalan numbers, the ballot triangle C(n, k), and powers of x*c(x)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = ["catalan", "ballot", "gf_coefficients", "CatalanTable", "catalan_table"]


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) - comb(2 * n, n + 1)


def ballot(n: int, k: int) -> int:
    """The k-fold Catalan number C(n, k), coefficient of x^n in (x c(x))^k."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0:
        return int(n == 0)
    return comb(2 * n - k - 1, n - 1) - comb(2 * n - k - 1, n)


def gf_coefficients(k: int, n_max: int) -> list[int]:
    """Coefficients of x^0 .. x^n_max in (x c(x))^k by truncated convolution."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n_max < 0:
        return []
    d = [0] + [catalan(i) for i in range(n_max)]  # x c(x)
    out = [1] + [0] * n_max
    for _ in range(k):
        out = [sum(out[i] * d[j - i] for i in range(j + 1)) for j in range(n_max + 1)]
    return out


@dataclass(frozen=True)
class CatalanTable:
    n_max: int
    C: tuple[int, ...]
    triangle: tuple[tuple[int, ...], ...]  # triangle[n][k] = C(n, k), 0 <= k <= n

    def to_tsv(self) -> str:
        """Rows n = 0..n_max, columns k = 0..n_max; blank above the diagonal."""
        head = "n\\k\t" + "\t".join(str(k) for k in range(self.n_max + 1))
        lines = [head]
        for n, row in enumerate(self.triangle):
            cells = [str(c) for c in row] + [""] * (self.n_max - n)
            lines.append(f"{n}\t" + "\t".join(cells))
        return "\n".join(lines) + "\n"


def catalan_table(n_max: int) -> CatalanTable:
    return CatalanTable(
        n_max=n_max,
        C=tuple(catalan(n) for n in range(n_max + 1)),
        triangle=tuple(tuple(ballot(n, k) for k in range(n + 1)) for n in range(n_max + 1)),
    )
