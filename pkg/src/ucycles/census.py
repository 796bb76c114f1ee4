"""Cycle counts of the equitable overlap graphs.

Every vertex of the equitable graph has in- and out-degree 1, and the
successor of edge w is w rotated left by one, so the cycles are rotation
classes. A word of minimal period d lies on a cycle of length d, and d is
always even. With b_d the number of length-d cycles,

    sum over even d | k of d * b_d = C(k, k/2)

which determines b_k from the b_d of the smaller even divisors; the total
cycle count a_k is the sum of all b_d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import NamedTuple

from .classes import ClassSpec
from .errors import ConsistencyError, InvalidArgument
from .graph import build, decompose_cycles


def even_divisors(k: int) -> list[int]:
    return [d for d in range(2, k + 1, 2) if k % d == 0]


def _check_k(k) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 2 or k % 2:
        raise InvalidArgument(f"census needs an even integer k >= 2, got {k!r}")


@lru_cache(maxsize=None)
def full_cycles(k: int) -> int:
    """b_k: number of cycles of length exactly k."""
    proper = sum(d * full_cycles(d) for d in even_divisors(k) if d < k)
    q, rem = divmod(comb(k, k // 2) - proper, k)
    if rem:
        raise ConsistencyError(f"non-exact division computing b_{k}: remainder {rem}")
    return q


@dataclass(frozen=True)
class CensusReport:
    k: int
    a_k: int
    b_k: int
    divisor_detail: dict[int, int]  # even divisor d of k -> b_d
    equitable_count: int

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "equitable_count": self.equitable_count,
            "a_k": self.a_k,
            "b_k": self.b_k,
            "divisor_detail": {str(d): b for d, b in self.divisor_detail.items()},
        }


def census(k: int) -> CensusReport:
    _check_k(k)
    detail = {d: full_cycles(d) for d in even_divisors(k)}
    return CensusReport(k, sum(detail.values()), detail[k], detail, comb(k, k // 2))


def census_table(max_k: int) -> list[CensusReport]:
    _check_k(max_k)
    return [census(k) for k in range(2, max_k + 1, 2)]


class CrossCheck(NamedTuple):
    ok: bool
    predicted: dict[int, int]  # cycle length -> count from the recursion
    observed: dict[int, int]  # cycle length -> count from decomposing the graph


def cross_check(k: int) -> CrossCheck:
    report = census(k)
    decomposition = decompose_cycles(build(ClassSpec("equitable", k, 2)))
    observed = decomposition.length_histogram
    predicted = {d: b for d, b in report.divisor_detail.items() if b}
    ok = (
        decomposition.total_cycles == report.a_k
        and observed.get(k, 0) == report.b_k
        and all(observed.get(d, 0) == b for d, b in report.divisor_detail.items())
        and set(observed) <= set(report.divisor_detail)
    )
    return CrossCheck(ok, predicted, observed)


def format_table(reports: list[CensusReport]) -> str:
    header = ("k", "C(k,k/2)", "a_k", "b_k")
    rows = [tuple(str(x) for x in (r.k, r.equitable_count, r.a_k, r.b_k)) for r in reports]
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows]
    return "\n".join(lines)
