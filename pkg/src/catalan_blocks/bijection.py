"""
The recursive bijection f_n on 321-avoiding permutations sending block number
k to last inverse descent n - k while keeping the left-to-right maxima.

At each level i (from n down to 2) the current word π_i falls in one case:

* A: i is the last letter.  Delete it; on the way back append i.
* B: i sits right of i-1 but not last.  Delete i; on the way back reinsert it
  at the same position and swap the values i-k-1 and i-k.
* C: i-1 is the last letter (and i is left of it).  Swap the values i-1 and i,
  delete the now-final i; on the way back append i and relabel values through
  the cycle (i-k, i-k+1, ..., i).

Here k is the block number of π_i at that level.

>>> from .perm_core import Permutation
>>> str(f_map(Permutation.parse("31254786")))
'4 1 2 6 3 7 8 5'
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .perm_core import Permutation, block_number, cycle, find_321, left_multiply

__all__ = ["TraceStep", "DomainError", "f_map", "f_inverse", "trace",
           "format_trace", "trace_to_json"]


class DomainError(ValueError):
    """Input permutation is outside S_n(321)."""

    def __init__(self, p: Permutation, positions: tuple[int, int, int]):
        self.permutation = p
        self.positions = positions
        super().__init__(f"{p} contains 321 at positions {positions}")


@dataclass(frozen=True)
class TraceStep:
    level: int
    case_label: str  # "A", "B", "C" or "base"
    deleted_from: int | None  # where letter `level` was removed (and later reinserted)
    cycle_applied: tuple[int, ...] | None
    pi_i: Permutation
    f_i: Permutation

    def to_line(self) -> str:
        cyc = "(" + " ".join(map(str, self.cycle_applied)) + ")" if self.cycle_applied else "-"
        return f"level={self.level} case={self.case_label} cycle={cyc} pi={self.pi_i} f={self.f_i}"

    def to_json(self) -> dict:
        return {"level": self.level, "case": self.case_label,
                "deleted_from": self.deleted_from,
                "cycle": list(self.cycle_applied) if self.cycle_applied else None,
                "pi": list(self.pi_i.word), "f": list(self.f_i.word)}


def _require_321_avoiding(p: Permutation) -> None:
    hit = find_321(p.word)
    if hit is not None:
        raise DomainError(p, hit)


def _relabel(word: tuple[int, ...], c: tuple[int, ...]) -> tuple[int, ...]:
    """Apply the cycle c to the values of word (left multiplication)."""
    return left_multiply(cycle(len(word), *c), Permutation(word)).word


def trace(p: Permutation) -> list[TraceStep]:
    """Per-level record of f_map(p), listed from level n down to the base level 1."""
    if p.n == 0:
        raise ValueError("f_n is defined for n >= 1")
    _require_321_avoiding(p)
    # Descend: collect (case, position, cycle, π_i).
    descent = []
    word = p.word
    for i in range(p.n, 1, -1):
        k = block_number(Permutation(word))
        pos_i = word.index(i) + 1
        pos_prev = word.index(i - 1) + 1
        if pos_i == i:
            case, cyc, nxt = "A", None, word[:-1]
        elif pos_prev < pos_i:
            case, cyc = "B", (i - k - 1, i - k)
            nxt = word[:pos_i - 1] + word[pos_i:]
        else:
            case, cyc = "C", tuple(range(i - k, i + 1))
            swapped = tuple(i if v == i - 1 else i - 1 if v == i else v for v in word)
            nxt = swapped[:-1]
        descent.append((i, case, i if case == "C" else pos_i, cyc, Permutation(word)))
        word = nxt
    # Ascend: rebuild f_i from f_{i-1}.
    f = (1,)
    images = {1: Permutation(f)}
    for i, case, pos_i, cyc, _ in reversed(descent):
        if case == "A":
            f = f + (i,)
        elif case == "B":
            f = _relabel(f[:pos_i - 1] + (i,) + f[pos_i - 1:], cyc)
        else:
            f = _relabel(f + (i,), cyc)
        images[i] = Permutation(f)
    steps = [TraceStep(i, case, pos_i, cyc, pi, images[i])
             for i, case, pos_i, cyc, pi in descent]
    steps.append(TraceStep(1, "base", None, None, Permutation((1,)), images[1]))
    return steps


def f_map(p: Permutation) -> Permutation:
    """The image f_n(p) of a 321-avoiding permutation."""
    return trace(p)[0].f_i


def _ldes_of_inverse(word: tuple[int, ...]) -> int:
    # i is a descent of the inverse iff value i+1 appears before value i
    pos = [0] * (len(word) + 1)
    for j, v in enumerate(word):
        pos[v] = j
    return max((i for i in range(1, len(word)) if pos[i + 1] < pos[i]), default=0)


def f_inverse(s: Permutation) -> Permutation:
    """The unique 321-avoiding p with f_map(p) == s."""
    if s.n == 0:
        raise ValueError("f_n is defined for n >= 1")
    _require_321_avoiding(s)
    # Descend on the image side, undoing each level's relabelling.
    undo = []
    word = s.word
    for i in range(s.n, 1, -1):
        pos_i = word.index(i) + 1
        if pos_i == i:
            undo.append(("A", pos_i))
            word = word[:-1]
            continue
        k = i - _ldes_of_inverse(word)
        if k == i - 1 or word.index(i - k + 1) < word.index(i - k - 1):
            back = tuple(range(i, i - k - 1, -1))  # inverse of (i-k ... i)
            word = _relabel(word, back)
            if word[-1] != i:
                raise AssertionError(f"case C recovery failed at level {i}: {word}")
            undo.append(("C", i))
            word = word[:-1]
        else:
            word = _relabel(word, (i - k - 1, i - k))
            undo.append(("B", pos_i))
            word = word[:pos_i - 1] + word[pos_i:]
        if find_321(word) is not None:
            raise AssertionError(f"non-321-avoiding intermediate {word} at level {i - 1}")
    # Ascend: reinsert letters on the source side.
    w = (1,)
    for i, (case, pos_i) in zip(range(2, s.n + 1), reversed(undo)):
        if case == "A":
            w = w + (i,)
        elif case == "B":
            w = w[:pos_i - 1] + (i,) + w[pos_i - 1:]
        else:
            w = tuple(i if v == i - 1 else i - 1 if v == i else v for v in w + (i,))
    return Permutation(w)


def format_trace(steps: list[TraceStep]) -> str:
    return "\n".join(step.to_line() for step in steps)


def trace_to_json(steps: list[TraceStep]) -> str:
    return json.dumps([step.to_json() for step in steps])
