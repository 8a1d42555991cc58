"""Shared test utilities: independent oracles and hypothesis strategies."""

from hypothesis import strategies as st

from bipart import Partition, dominates


def partition_counts(limit: int) -> list[int]:
    """p(0..limit) via the pentagonal-number recurrence.

    Independent of the generator under test, which materializes lists.
    """
    p = [0] * (limit + 1)
    p[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = 1 if k % 2 else -1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def covers_by_transitive_reduction(order) -> set[tuple[Partition, Partition]]:
    """Hasse edges of dominance on one P(n), the slow exhaustive way."""
    parts = list(order)
    strictly_above = {
        (a, b) for a in parts for b in parts if a != b and dominates(a, b)
    }
    edges = set()
    for a, b in strictly_above:
        if not any(
            (a, c) in strictly_above and (c, b) in strictly_above for c in parts
        ):
            edges.add((a, b))
    return edges


def partitions(max_part: int = 8, max_len: int = 6) -> st.SearchStrategy[Partition]:
    """Arbitrary partitions built by sorting random part lists."""
    return st.lists(
        st.integers(1, max_part), min_size=0, max_size=max_len
    ).map(lambda xs: Partition(sorted(xs, reverse=True)))


def partitions_of_weight(n: int) -> st.SearchStrategy[Partition]:
    """A partition of exactly n, sampled from the full list."""
    from bipart import partitions_of

    return st.sampled_from(partitions_of(n))
