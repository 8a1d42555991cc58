"""Exact counts of 0-1 matrices with prescribed row and column sums.

s(alpha, beta) is the number of subsets A of a k x l grid whose row
multiplicities are alpha and column multiplicities beta; equivalently the
number of simple bipartite graphs on labelled vertex sets with the given
degree sequences.  Two independent routes are provided:

* s_bruteforce: exhaustive row-by-row enumeration of column subsets.  It
  exists purely as an oracle and refuses grids above a cell limit.

* s_count: a memoized dynamic program.  Rows are consumed largest-first;
  the state is the suffix of unplaced rows together with the multiset of
  residual column sums, kept sorted so that column symmetry collapses.
  A row of size r is placed by choosing, for every group of columns with
  equal residual value, how many of them receive a 1; each choice
  contributes a product of binomial coefficients.

Feasibility (s > 0) is exactly the Gale-Ryser criterion, which is used
both as the public gale_ryser_feasible predicate and internally to cut
dead subtrees out of the dynamic program.

Everything here is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import MutableMapping

from .errors import LimitError
from .partitions import Partition, dominates

__all__ = [
    "DEFAULT_CELL_LIMIT",
    "s_bruteforce",
    "s_count",
    "gale_ryser_feasible",
    "CountingMemo",
]

# s_bruteforce guard: an 8x8 grid is the largest the oracle should face.
DEFAULT_CELL_LIMIT = 64

MemoKey = tuple[tuple[int, ...], tuple[int, ...]]


class CountingMemo(dict):
    """A memo table that counts lookups, for cache-effectiveness reports.

    Plain dicts work too; this subclass only adds hit/miss counters.
    Concurrent use is safe under the idempotent-insert contract: every
    writer stores the same value for a given key.
    """

    def __init__(self) -> None:
        super().__init__()
        self.hits = 0
        self.misses = 0

    def get(self, key, default=None):
        value = super().get(key, default)
        if value is default:
            self.misses += 1
        else:
            self.hits += 1
        return value

    @property
    def lookups(self) -> int:
        return self.hits + self.misses

    @property
    def hit_rate(self) -> float:
        return self.hits / self.lookups if self.lookups else 0.0


def gale_ryser_feasible(alpha: Partition, beta: Partition) -> bool:
    """True iff some 0-1 matrix has row sums alpha and column sums beta.

    Classical criterion: the weights agree and the conjugate of alpha
    dominates beta.  Equivalent to s_count(alpha, beta) > 0.
    """
    if alpha.n != beta.n:
        return False
    return dominates(alpha.transpose(), beta)


def s_bruteforce(
    alpha: Partition,
    beta: Partition,
    *,
    cell_limit: int = DEFAULT_CELL_LIMIT,
) -> int:
    """Count by exhaustive enumeration, row by row over column subsets.

    Only a testing oracle; refuses grids with more than cell_limit cells.
    """
    rows, cols = alpha.parts, beta.parts
    if sum(rows) != sum(cols):
        return 0
    if len(rows) * len(cols) > cell_limit:
        raise LimitError(
            f"{len(rows)}x{len(cols)} grid exceeds the brute-force cell "
            f"limit {cell_limit}"
        )
    residual = list(cols)

    def place(i: int) -> int:
        if i == len(rows):
            return 1 if not any(residual) else 0
        open_cols = [j for j, c in enumerate(residual) if c > 0]
        if rows[i] > len(open_cols):
            return 0
        total = 0
        for chosen in combinations(open_cols, rows[i]):
            for j in chosen:
                residual[j] -= 1
            total += place(i + 1)
            for j in chosen:
                residual[j] += 1
        return total

    return place(0)


def s_count(
    alpha: Partition,
    beta: Partition,
    memo: MutableMapping[MemoKey, int] | None = None,
) -> int:
    """Exact s(alpha, beta) via the memoized dynamic program.

    A fresh memo table is used per call unless one is supplied; passing a
    shared table makes batch fills (whole matrices) share subproblems.
    """
    if alpha.n != beta.n:
        return 0
    if memo is None:
        memo = {}
    return _count(alpha.parts, beta.parts, memo)


def _conjugate_dominates(rows: tuple[int, ...], cols: tuple[int, ...]) -> bool:
    # Gale-Ryser on raw tuples with equal sums: conj(rows) >= cols.
    # With equal weights the prefix condition can only fail at positions
    # up to len(cols).
    conj_prefix = 0
    col_prefix = 0
    for i in range(len(cols)):
        conj_prefix += sum(1 for r in rows if r > i)
        col_prefix += cols[i]
        if conj_prefix < col_prefix:
            return False
    return True


def _groups(cols: tuple[int, ...]) -> list[tuple[int, int]]:
    # run-length encoding of a weakly decreasing tuple: [(value, count)]
    out = []
    i = 0
    while i < len(cols):
        j = i
        while j < len(cols) and cols[j] == cols[i]:
            j += 1
        out.append((cols[i], j - i))
        i = j
    return out


def _count(
    rows: tuple[int, ...],
    cols: tuple[int, ...],
    memo: MutableMapping[MemoKey, int],
) -> int:
    # invariant: sum(rows) == sum(cols), cols weakly decreasing, all > 0
    if not rows:
        return 1
    if rows[0] > len(cols) or cols[0] > len(rows):
        return 0
    key = (rows, cols)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if not _conjugate_dominates(rows, cols):
        memo[key] = 0
        return 0

    r, rest = rows[0], rows[1:]
    groups = _groups(cols)
    suffix_capacity = [0] * (len(groups) + 1)
    for gi in range(len(groups) - 1, -1, -1):
        suffix_capacity[gi] = suffix_capacity[gi + 1] + groups[gi][1]
    total = 0

    def distribute(gi: int, need: int, ways: int, acc: list[int]) -> None:
        nonlocal total
        if need == 0:
            tail = list(acc)
            for value, count in groups[gi:]:
                tail.extend([value] * count)
            total += ways * _count(
                rest, tuple(c for c in tail if c > 0), memo
            )
            return
        if gi == len(groups):
            return
        value, count = groups[gi]
        low = max(0, need - suffix_capacity[gi + 1])
        for take in range(low, min(count, need) + 1):
            # decremented columns come after the untouched ones, keeping
            # the tuple weakly decreasing without a sort
            distribute(
                gi + 1,
                need - take,
                ways * comb(count, take),
                acc + [value] * (count - take) + [value - 1] * take,
            )

    distribute(0, r, 1, [])
    memo[key] = total
    return total
