"""Integer partitions and compositions.

Generation in a canonical total order, conjugation, the dominance partial
order, and the text/JSON forms used everywhere else in the library.

The canonical order on P(n) is descending lexicographic on part sequences,
so (n) comes first and (1,...,1) last.  It is a linear extension of the
dominance order, which is what makes the transition matrices triangular.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import LimitError, PartitionParseError, WeightMismatchError

__all__ = [
    "MAX_N",
    "Partition",
    "Composition",
    "partitions_of",
    "transpose",
    "dominates",
    "PartitionOrder",
    "canonical_key",
    "parse_partition",
    "format_partition",
    "dominance_covers",
]

# Default guard for partitions_of; p(40) = 37338 is still cheap, anything
# much larger deserves an explicit opt-in.
MAX_N = 40


class Partition:
    """A weakly decreasing sequence of positive integers.

    Value-semantic and immutable: equality and hashing go through the part
    tuple.  The empty partition is the unique partition of weight 0.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        """Weight: the sum of the parts."""
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self._parts) + ")"

    def transpose(self) -> "Partition":
        """Conjugate partition: part i of the result counts parts >= i+1."""
        if not self._parts:
            return Partition()
        return Partition(
            sum(1 for p in self._parts if p >= i)
            for i in range(1, self._parts[0] + 1)
        )


class Composition:
    """An ordered sequence of positive integers; order is significant."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Composition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("composition", self._parts))

    def __repr__(self) -> str:
        return f"Composition({self._parts!r})"

    def sort(self) -> Partition:
        """The partition obtained by sorting the parts."""
        return Partition(sorted(self._parts, reverse=True))


def transpose(alpha: Partition) -> Partition:
    return alpha.transpose()


def _descending(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    # yields part tuples in descending lexicographic order
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, *, max_n: int | None = MAX_N) -> list[Partition]:
    """All partitions of n, in canonical (descending lexicographic) order."""
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    if max_n is not None and n > max_n:
        raise LimitError(f"weight {n} exceeds the configured guard max_n={max_n}")
    return [Partition(t) for t in _descending(n, n)]


def dominates(alpha: Partition, beta: Partition) -> bool:
    """True iff every prefix sum of alpha is >= the one of beta.

    Only partitions of equal weight are comparable; anything else raises.
    """
    a, b = alpha.parts, beta.parts
    if sum(a) != sum(b):
        raise WeightMismatchError(
            f"cannot compare {alpha} (weight {sum(a)}) with {beta} (weight {sum(b)})"
        )
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def canonical_key(alpha: Partition) -> tuple[int, ...]:
    """Sort key realizing the canonical order among partitions of one weight."""
    return tuple(-p for p in alpha.parts)


class PartitionOrder:
    """The canonical bijection between P(n) and {0, ..., p(n)-1}.

    Index 0 is (n); the order refines dominance, so dominates(a, b) with
    a != b implies index(a) < index(b).
    """

    __slots__ = ("n", "partitions", "_index")

    def __init__(self, n: int, *, max_n: int | None = MAX_N):
        self.n = n
        self.partitions = tuple(partitions_of(n, max_n=max_n))
        self._index = {p: i for i, p in enumerate(self.partitions)}

    def index(self, alpha: Partition) -> int:
        if alpha.n != self.n:
            raise WeightMismatchError(
                f"{alpha} has weight {alpha.n}, this order indexes P({self.n})"
            )
        return self._index[alpha]

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.partitions)

    def __getitem__(self, i: int) -> Partition:
        return self.partitions[i]

    def __contains__(self, alpha: object) -> bool:
        return alpha in self._index

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PartitionOrder):
            return self.n == other.n
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PartitionOrder", self.n))

    def __repr__(self) -> str:
        return f"PartitionOrder(n={self.n}, size={len(self.partitions)})"


def parse_partition(text: str, *, strict: bool = True) -> Partition:
    """Parse a comma-separated part list such as "3,2,1".

    The empty string denotes the empty partition of weight 0.  In strict
    mode the parts must already be weakly decreasing; in lenient mode they
    are sorted.
    """
    s = text.strip()
    if not s:
        return Partition()
    parts = []
    for token in s.split(","):
        token = token.strip()
        if not token:
            raise PartitionParseError(f"empty part in {text!r}")
        try:
            value = int(token)
        except ValueError:
            raise PartitionParseError(f"part {token!r} is not an integer") from None
        if value < 1:
            raise PartitionParseError(f"part {value} is not positive in {text!r}")
        parts.append(value)
    if strict:
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise PartitionParseError(
                    f"parts not weakly decreasing in {text!r} (strict mode)"
                )
    else:
        parts.sort(reverse=True)
    return Partition(parts)


def format_partition(alpha: Partition) -> str:
    """Inverse of parse_partition: "3,2,1"; empty string for weight 0."""
    return ",".join(str(p) for p in alpha.parts)


def _one_box_moves(alpha: Partition) -> list[Partition]:
    # all partitions obtained from alpha by moving a single box strictly down
    parts = alpha.parts
    k = len(parts)
    out = []
    seen = set()
    for i in range(k):
        for j in range(i + 1, k + 1):
            moved = list(parts)
            moved[i] -= 1
            if j < k:
                moved[j] += 1
            else:
                moved.append(1)
            # validity is checked on the raw row sequence: a zero row above
            # a positive one is not a shape, only trailing zeros may drop
            if all(moved[t] >= moved[t + 1] for t in range(len(moved) - 1)):
                cand = Partition(p for p in moved if p > 0)
                if cand != alpha and cand not in seen:
                    seen.add(cand)
                    out.append(cand)
    return out


def dominance_covers(alpha: Partition) -> list[Partition]:
    """Partitions covered by alpha in the dominance order (Hasse edges).

    Every covering relation moves a single box down; among the one-box
    moves the covers are the dominance-maximal results.
    """
    candidates = _one_box_moves(alpha)
    covers = []
    for beta in candidates:
        if not any(
            gamma != beta and dominates(gamma, beta) for gamma in candidates
        ):
            covers.append(beta)
    covers.sort(key=canonical_key)
    return covers
