"""
Exhaustive verification runs.  Each ``check_*`` function handles one size n
and returns one VerificationReport per claim; the ``verify_*`` wrappers sweep
n = 1..n_max, optionally across worker processes.
"""

from __future__ import annotations

import os
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from typing import Callable, Iterator

from .bijection import f_map
from .catalan import ballot
from .perm_core import (
    Permutation, _des_mask, _ltr_mask, block_number, enumerate_avoiders, inverse, ldes,
)
from .symfun import (
    NotSymmetric, QSymVector, check_pair, is_schur_positive, q_of,
    restricted_character_image, schur_basis_vector, schur_expand,
)
from .tableaux import Shape, SkewShape, partitions, rotate_180, syt_count, syt_enumerate, tab_ldes

__all__ = [
    "VerificationReport", "MAX_WITNESSES", "LIMITS",
    "check_equidist", "check_schur", "check_cardinalities", "check_hilbert", "check_pairs",
    "verify_equidist", "verify_schur", "verify_cardinalities", "verify_hilbert", "verify_pairs",
    "equidist_fibers", "bl_level_sets", "ldes_level_sets", "hilbert_polynomials",
]

MAX_WITNESSES = 20
THREADS_ENV = "CATALAN_BLOCKS_THREADS"

S321 = Permutation((3, 2, 1))


@dataclass
class VerificationReport:
    claim_id: str
    n_range: tuple[int, int]
    status: str  # "pass" | "fail"
    counterexample: object = None
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        d = asdict(self)
        d["n_range"] = list(self.n_range)
        return d


def _report(claim: str, n: int, start: float, witnesses: list) -> VerificationReport:
    return VerificationReport(
        claim_id=claim, n_range=(n, n),
        status="fail" if witnesses else "pass",
        counterexample=witnesses[:MAX_WITNESSES] if witnesses else None,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


def _fiber_diff(left: Counter, right: Counter) -> list[dict]:
    out = []
    for key in sorted(set(left) | set(right)):
        if left[key] != right[key]:
            out.append({"key": list(key), "left": left[key], "right": right[key]})
    return out


def _avoiders(n: int) -> list[Permutation]:
    return list(enumerate_avoiders(n, S321))


# ---------------------------------------------------------------------------
# equi-distribution of bl and n - ldes(inverse)

def equidist_fibers(n: int, refine: str = "ltr") -> tuple[dict, dict]:
    """Group S_n(321) by (set, position of n, statistic) on each side.

    ``refine`` picks the set: "ltr" for left-to-right maxima, "des" for
    descents.  Returns two dicts key -> list of permutations; the left side
    uses bl, the right side n - ldes(inverse).
    """
    set_mask = _ltr_mask if refine == "ltr" else _des_mask
    left, right = defaultdict(list), defaultdict(list)
    for p in _avoiders(n):
        base = (set_mask(p.word), p.position(n))
        left[base + (block_number(p),)].append(p)
        right[base + (n - ldes(inverse(p)),)].append(p)
    return dict(left), dict(right)


def check_equidist(n: int) -> list[VerificationReport]:
    reports = []
    for claim, refine in (("equidist-ltr", "ltr"), ("equidist-des", "des")):
        start = time.perf_counter()
        left, right = equidist_fibers(n, refine)
        diff = _fiber_diff(Counter({k: len(v) for k, v in left.items()}),
                           Counter({k: len(v) for k, v in right.items()}))
        reports.append(_report(claim, n, start, diff))
    # the bijection itself realises the Ltr-refined identity fiberwise
    start = time.perf_counter()
    bad = []
    for p in _avoiders(n):
        s = f_map(p)
        if (_ltr_mask(s.word) != _ltr_mask(p.word) or s.position(n) != p.position(n)
                or n - ldes(inverse(s)) != block_number(p)):
            bad.append({"pi": str(p), "f": str(s)})
    reports.append(_report("equidist-bijection", n, start, bad))
    return reports


# ---------------------------------------------------------------------------
# Schur positivity of the block-number level sets

def bl_level_sets(n: int) -> dict[int, list[Permutation]]:
    """k -> Bl_{n,k}, for 1 <= k <= n."""
    out: dict[int, list[Permutation]] = {k: [] for k in range(1, n + 1)}
    for p in _avoiders(n):
        out[block_number(p)].append(p)
    return out


def ldes_level_sets(n: int) -> dict[int, list[Permutation]]:
    """j -> L_{n,j} = {p in S_n(321) : ldes(p^-1) = j}, for 0 <= j <= n - 1."""
    out: dict[int, list[Permutation]] = {j: [] for j in range(n)}
    for p in _avoiders(n):
        out[ldes(inverse(p))].append(p)
    return out


def expected_image(n: int, k: int) -> QSymVector:
    """Frobenius image of χ^{(n-1,n-k)} restricted to S_n, or s_(n) when k = n."""
    if k == n:
        return schur_basis_vector(Shape((n,)))
    return restricted_character_image(Shape((n - 1, n - k)), n)


def check_schur(n: int) -> list[VerificationReport]:
    start = time.perf_counter()
    bad = []
    for k, level in bl_level_sets(n).items():
        q = q_of(level, n)
        if q != expected_image(n, k):
            bad.append({"k": k, "reason": "image mismatch", "Q": q.to_json(),
                        "expected": expected_image(n, k).to_json()})
            continue
        cert = is_schur_positive(q)
        if not cert:
            bad.append({"k": k, "reason": "not Schur-positive", "detail": repr(cert.expansion)})
            continue
        expansion = cert.expansion
        if k == n:
            if dict(expansion.coeffs) != {Shape((n,)): 1}:
                bad.append({"k": k, "reason": "expected s_(n)", "got": expansion.to_json()})
            continue
        for lam in partitions(n):
            c = expansion[lam]
            if len(lam) >= 3:
                want = 0
            else:
                m = lam.row(1)
                ldes_count = sum(1 for t in syt_enumerate(lam) if tab_ldes(t) == n - k)
                if 1 <= m <= n - k:
                    skew = SkewShape(Shape((n - 1, n - k)), lam)
                    want = syt_count(skew)
                    if syt_count(rotate_180(skew, n)) != want:
                        bad.append({"k": k, "shape": list(lam.parts), "reason": "rotation count"})
                else:
                    want = 0
                if ldes_count != want:
                    bad.append({"k": k, "shape": list(lam.parts), "reason": "ldes count",
                                "ldes_count": ldes_count, "skew_count": want})
            if c != want:
                bad.append({"k": k, "shape": list(lam.parts), "coefficient": str(c),
                            "expected": want})
    return [_report("schur-positivity", n, start, bad)]


# ---------------------------------------------------------------------------
# cardinalities

def check_cardinalities(n: int) -> list[VerificationReport]:
    start = time.perf_counter()
    by_bl, by_ldes = Counter(), Counter()
    for p in _avoiders(n):
        by_bl[block_number(p)] += 1
        by_ldes[n - ldes(inverse(p))] += 1
    bad = []
    for k in range(1, n + 1):
        row = {"bl": by_bl[k], "ldes_inverse": by_ldes[k],
               "syt": syt_count(Shape((n - 1, n - k))), "ballot": ballot(n, k)}
        if len(set(row.values())) != 1:
            bad.append({"k": k, **row})
    return [_report("cardinalities", n, start, bad)]


# ---------------------------------------------------------------------------
# Hilbert-series restatement

def hilbert_polynomials(n: int) -> tuple[list[int], list[int]]:
    """Coefficient lists of sum q^(n - bl(p)) and sum q^ldes(p) over S_n(321)."""
    a, b = [0] * n, [0] * n
    for p in _avoiders(n):
        a[n - block_number(p)] += 1
        b[ldes(p)] += 1
    return a, b


def check_hilbert(n: int) -> list[VerificationReport]:
    start = time.perf_counter()
    a, b = hilbert_polynomials(n)
    bad = []
    if a != b:
        bad.append({"n_minus_bl": a, "ldes": b})
    for k in range(1, n + 1):
        if a[n - k] != ballot(n, k):
            bad.append({"k": k, "coefficient": a[n - k], "ballot": ballot(n, k)})
    return [_report("hilbert", n, start, bad)]


# ---------------------------------------------------------------------------
# pattern-statistic pairs

PAIRS: dict[str, tuple[tuple[Permutation, ...], str]] = {
    "pair-321-bl": ((S321,), "bl"),
    "pair-123-ides": ((Permutation((1, 2, 3)),), "ides"),
    "pair-132-312-imaj": ((Permutation((1, 3, 2)), Permutation((3, 1, 2))), "imaj"),
}


def check_pairs(n: int) -> list[VerificationReport]:
    reports = []
    for claim, (patterns, stat) in PAIRS.items():
        start = time.perf_counter()
        bad = []
        for k, cert in check_pair(patterns, stat, n).items():
            if not cert:
                bad.append({"value": k, "expansion": repr(cert.expansion)})
            elif not cert.expansion.is_integral():
                bad.append({"value": k, "reason": "non-integral certificate"})
        reports.append(_report(claim, n, start, bad))
    if n == 3:
        # The checker must be able to fail: Q({213}) alone is not symmetric.
        start = time.perf_counter()
        verdict = schur_expand(q_of([Permutation((2, 1, 3))]))
        bad = [] if isinstance(verdict, NotSymmetric) else [{"unexpected": repr(verdict)}]
        reports.append(_report("pair-negative-control", n, start, bad))
    return reports


# ---------------------------------------------------------------------------
# sweeps

LIMITS: dict[str, tuple[int, int, Callable[[int], list[VerificationReport]]]] = {
    # name: (default n_max, hard upper guard, per-n checker)
    "equidist": (10, 11, check_equidist),
    "schur": (8, 9, check_schur),
    "cardinalities": (10, 10, check_cardinalities),
    "hilbert": (10, 10, check_hilbert),
    "pairs": (7, 8, check_pairs),
}


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, min(int(raw), os.cpu_count() or 1))
    except ValueError:
        return 1


def iter_reports(name: str, n_max: int, threads: int | None = None) -> Iterator[VerificationReport]:
    """Yield reports for n = 1..n_max as they complete."""
    _, guard, checker = LIMITS[name]
    if not 1 <= n_max <= guard:
        raise ValueError(f"{name}: n_max must be in 1..{guard}, got {n_max}")
    threads = thread_count() if threads is None else threads
    if threads <= 1:
        for n in range(1, n_max + 1):
            yield from checker(n)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(checker, n) for n in range(n_max, 0, -1)]
        for fut in as_completed(futures):
            yield from fut.result()


def _sweep(name: str, n_max: int | None) -> list[VerificationReport]:
    return list(iter_reports(name, LIMITS[name][0] if n_max is None else n_max))


def verify_equidist(n_max: int | None = None) -> list[VerificationReport]:
    return _sweep("equidist", n_max)


def verify_schur(n_max: int | None = None) -> list[VerificationReport]:
    return _sweep("schur", n_max)


def verify_cardinalities(n_max: int | None = None) -> list[VerificationReport]:
    return _sweep("cardinalities", n_max)


def verify_hilbert(n_max: int | None = None) -> list[VerificationReport]:
    return _sweep("hilbert", n_max)


def verify_pairs(n_max: int | None = None) -> list[VerificationReport]:
    return _sweep("pairs", n_max)
