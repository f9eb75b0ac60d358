"""
Permutations in one-line notation and their elementary statistics.

Positions and values are 1-indexed throughout, so ``Permutation.parse("312")``
is the permutation sending 1 -> 3, 2 -> 1, 3 -> 2.

>>> p = Permutation.parse("31254786")
>>> sorted(ltr_set(p)), sorted(des_set(p)), block_number(p)
([1, 4, 6, 7], [1, 4, 7], 3)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "PositionSet", "ParseError",
    "identity", "cycle", "inverse", "left_multiply", "direct_sum",
    "des_set", "ltr_set", "ldes", "ides", "imaj",
    "avoids", "find_321", "block_number", "blocks",
    "enumerate_avoiders", "fold_direct_sum",
]


class ParseError(ValueError):
    """Raised for text that does not describe a permutation."""


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of [n] stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"3 1 2"`` or, for n <= 9, contiguous digits ``"312"``."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            if any(ch.isspace() or ch == "," for ch in text):
                word = tuple(int(tok) for tok in text.replace(",", " ").split())
            else:
                word = tuple(int(ch) for ch in text)
        except ValueError as exc:
            raise ParseError(f"cannot parse permutation {text!r}") from exc
        try:
            return cls(word)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def position(self, value: int) -> int:
        """The position holding ``value`` (1-indexed), i.e. p^{-1}(value)."""
        return self.word.index(value) + 1

    def __str__(self) -> str:
        return " ".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


@dataclass(frozen=True, slots=True)
class PositionSet:
    """A subset of [universe] encoded as a bit mask (bit i-1 <-> element i)."""

    mask: int
    universe: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.universe:
            raise ValueError(f"mask {self.mask:#b} exceeds universe [{self.universe}]")

    @classmethod
    def of(cls, elements: Iterable[int], universe: int) -> "PositionSet":
        mask = 0
        for i in elements:
            if not 1 <= i <= universe:
                raise ValueError(f"{i} not in [{universe}]")
            mask |= 1 << (i - 1)
        return cls(mask, universe)

    def __iter__(self) -> Iterator[int]:
        m, i = self.mask, 1
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 1 and bool(self.mask >> (i - 1) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def max(self) -> int:
        """Largest element, 0 for the empty set."""
        return self.mask.bit_length()

    def reflect(self) -> "PositionSet":
        """The set {u + 1 - i}, u = universe + 1 (so D -> n - D inside [n-1])."""
        return PositionSet.of((self.universe + 1 - i for i in self), self.universe)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def cycle(n: int, *entries: int) -> Permutation:
    """The cycle (a1 a2 ... ar) in S_n: a1 -> a2 -> ... -> ar -> a1."""
    word = list(range(1, n + 1))
    for a, b in zip(entries, entries[1:] + entries[:1]):
        word[a - 1] = b
    return Permutation(tuple(word))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.word, 1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def left_multiply(c: Permutation, p: Permutation) -> Permutation:
    """Return c∘p, i.e. relabel the values of ``p`` through ``c``."""
    if c.n != p.n:
        raise ValueError(f"size mismatch: {c.n} != {p.n}")
    return Permutation(tuple(c.word[v - 1] for v in p.word))


def direct_sum(p: Permutation, q: Permutation) -> Permutation:
    m = p.n
    return Permutation(p.word + tuple(v + m for v in q.word))


def _des_mask(word: Sequence[int]) -> int:
    mask = 0
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            mask |= 1 << i
    return mask


def _ltr_mask(word: Sequence[int]) -> int:
    mask, top = 0, 0
    for i, v in enumerate(word):
        if v > top:
            top = v
            mask |= 1 << i
    return mask


def des_set(p: Permutation) -> PositionSet:
    return PositionSet(_des_mask(p.word), max(p.n - 1, 0))


def ltr_set(p: Permutation) -> PositionSet:
    return PositionSet(_ltr_mask(p.word), p.n)


def ldes(p: Permutation) -> int:
    """Last descent of ``p``; 0 for the identity."""
    return _des_mask(p.word).bit_length()


def _inverse_word(word: Sequence[int]) -> list[int]:
    inv = [0] * len(word)
    for i, v in enumerate(word, 1):
        inv[v - 1] = i
    return inv


def ides(p: Permutation) -> int:
    return _des_mask(_inverse_word(p.word)).bit_count()


def imaj(p: Permutation) -> int:
    return sum(PositionSet(_des_mask(_inverse_word(p.word)), max(p.n - 1, 0)))


def find_321(word: Sequence[int]) -> tuple[int, int, int] | None:
    """Positions (i, j, k) of some 321 occurrence, or None.

    Single pass: a value is a potential middle letter once something larger
    precedes it; a later value below the largest such middle closes a 321.
    """
    top_pos = 0
    mid_pos = 0  # position of the largest middle candidate so far
    for k, v in enumerate(word, 1):
        if mid_pos and v < word[mid_pos - 1]:
            j = mid_pos
            i = next(i for i in range(1, j) if word[i - 1] > word[j - 1])
            return i, j, k
        if top_pos and v < word[top_pos - 1]:
            if not mid_pos or v > word[mid_pos - 1]:
                mid_pos = k
        else:
            top_pos = k
    return None


def _contains(word: Sequence[int], pattern: Sequence[int], last_fixed: bool = False) -> bool:
    """Backtracking containment; with ``last_fixed`` the occurrence must end at word[-1]."""
    m, n = len(pattern), len(word)
    if m == 0:
        return True
    if m > n:
        return False
    chosen: list[int] = []

    def consistent(v: int) -> bool:
        j = len(chosen)
        return all((pattern[t] < pattern[j]) == (chosen[t] < v) for t in range(j))

    def search(start: int) -> bool:
        j = len(chosen)
        if j == m:
            return True
        if last_fixed and j == m - 1:
            v = word[-1]
            if consistent(v) and (m == 1 or start <= n - 1):
                return True
            return False
        stop = n - (m - j) + 1
        if last_fixed:
            stop = min(stop, n - 1)
        for i in range(start, stop):
            v = word[i]
            if consistent(v):
                chosen.append(v)
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def avoids(p: Permutation | Sequence[int], pattern: Permutation | Sequence[int]) -> bool:
    """True iff no subsequence of ``p`` is order-isomorphic to ``pattern``."""
    word = p.word if isinstance(p, Permutation) else tuple(p)
    pat = pattern.word if isinstance(pattern, Permutation) else tuple(pattern)
    if pat == (3, 2, 1):
        return find_321(word) is None
    return not _contains(word, pat)


def block_number(p: Permutation) -> int:
    """Number of i with {p(1), ..., p(i)} = [i]."""
    count, top = 0, 0
    for i, v in enumerate(p.word, 1):
        if v > top:
            top = v
        if top == i:
            count += 1
    return count


def blocks(p: Permutation) -> list[Permutation]:
    """The ⊕-irreducible summands of ``p``, left to right."""
    out, start, top = [], 0, 0
    for i, v in enumerate(p.word, 1):
        top = max(top, v)
        if top == i:
            out.append(Permutation(tuple(x - start for x in p.word[start:i])))
            start = i
    return out


def _as_patterns(pattern) -> list[tuple[int, ...]]:
    if isinstance(pattern, Permutation):
        return [pattern.word]
    pats = list(pattern)
    if pats and isinstance(pats[0], int):
        return [tuple(pats)]
    return [q.word if isinstance(q, Permutation) else tuple(q) for q in pats]


def enumerate_avoiders(n: int, pattern) -> Iterator[Permutation]:
    """Yield the permutations of [n] avoiding ``pattern`` in lexicographic order.

    ``pattern`` is a single Permutation (or word) or a collection of them; a
    permutation is yielded when it avoids every one.  Words are grown one letter
    at a time and a prefix that already contains a pattern is never extended.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    pats = _as_patterns(pattern)
    only_321 = pats == [(3, 2, 1)]
    word: list[int] = []
    used = [False] * (n + 1)

    def extend(top: int, mid: int) -> Iterator[Permutation]:
        if len(word) == n:
            yield Permutation(tuple(word))
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if only_321:
                if v < mid:
                    continue
                new_top, new_mid = (top, max(mid, v)) if v < top else (v, mid)
            else:
                new_top = new_mid = 0
            word.append(v)
            if only_321 or not any(_contains(word, q, last_fixed=True) for q in pats):
                used[v] = True
                yield from extend(new_top, new_mid)
                used[v] = False
            word.pop()

    yield from extend(0, 0)


def fold_direct_sum(parts: Iterable[Permutation]) -> Permutation:
    return reduce(direct_sum, parts, Permutation(()))
