"""Pairing and transition matrices over P(n), exact inversion, conversions.

Rows and columns are laid out in the canonical order of PartitionOrder.
Three matrix kinds exist:

* S: the pairing matrix S[alpha][beta] = s(alpha, beta), symmetric;
* M: the transition matrix M[alpha][beta] = s(alpha, transpose(beta)),
  lower-unitriangular in canonical order because its (alpha, beta) entry
  vanishes unless beta dominates alpha and its diagonal is all ones;
* Minv: the exact integer inverse of an M.

Coefficient vectors come in two sides, "c" and "d", tied together by
d = M(n) . c and back by forward substitution.  The wavefront of a vector
is the unique dominance-maximal partition in its support, when unique.

Matrix fills call the counting module cell by cell with one shared memo
table, optionally fanning rows out over a thread pool; the workers only
share that idempotent table, so the result is identical for any worker
count.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, MutableMapping

from .counting import MemoKey, s_count
from .errors import (
    AmbiguousMaximumError,
    LimitError,
    UnitDiagonalError,
    WeightMismatchError,
)
from .partitions import (
    Partition,
    PartitionOrder,
    canonical_key,
    dominates,
    format_partition,
    parse_partition,
)

__all__ = [
    "DEFAULT_MAX_N",
    "MATRIX_KINDS",
    "TransitionMatrix",
    "CoefficientVector",
    "pairing_matrix",
    "transition_matrix",
    "invert_unitriangular",
    "d_from_c",
    "c_from_d",
    "WavefrontReport",
    "wavefront",
    "TriangularReport",
    "verify_triangular",
    "matrix_to_json",
    "matrix_from_json",
    "matrix_to_csv",
    "vector_to_json",
    "vector_from_json",
]

# Guard for matrix construction; p(25) = 1958 keeps dense fills tractable.
DEFAULT_MAX_N = 25

MATRIX_KINDS = ("S", "M", "Minv")


@dataclass(frozen=True)
class TransitionMatrix:
    n: int
    order: PartitionOrder
    entries: tuple[tuple[int, ...], ...]
    kind: str

    def entry(self, alpha: Partition, beta: Partition) -> int:
        return self.entries[self.order.index(alpha)][self.order.index(beta)]

    @property
    def size(self) -> int:
        return len(self.order)

    def __repr__(self) -> str:
        return f"TransitionMatrix(n={self.n}, kind={self.kind}, size={self.size})"


class CoefficientVector:
    """Sparse exact-integer vector over P(n), tagged side "c" or "d".

    Zero values are dropped; absent keys mean zero.  d-side vectors coming
    from actual representations are nonnegative, but negatives are legal
    inputs everywhere (the conversions are linear maps).
    """

    __slots__ = ("n", "side", "values")

    def __init__(self, n: int, side: str, values: Mapping[Partition, int] | None = None):
        if side not in ("c", "d"):
            raise ValueError(f"side must be 'c' or 'd', got {side!r}")
        if n < 0:
            raise ValueError(f"weight must be nonnegative, got {n}")
        cleaned: dict[Partition, int] = {}
        for key, value in (values or {}).items():
            if not isinstance(key, Partition):
                raise TypeError(f"keys must be Partition, got {key!r}")
            if key.n != n:
                raise WeightMismatchError(
                    f"key {key} has weight {key.n}, vector is over P({n})"
                )
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"values must be int, got {value!r}")
            if value != 0:
                cleaned[key] = value
        self.n = n
        self.side = side
        self.values = cleaned

    def __getitem__(self, alpha: Partition) -> int:
        return self.values.get(alpha, 0)

    def is_zero(self) -> bool:
        return not self.values

    def negative_support(self) -> list[Partition]:
        """Keys carrying negative values, in canonical order."""
        return sorted((k for k, v in self.values.items() if v < 0), key=canonical_key)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CoefficientVector):
            return (
                self.n == other.n
                and self.side == other.side
                and self.values == other.values
            )
        return NotImplemented

    def __repr__(self) -> str:
        body = ", ".join(
            f"{k}: {v}"
            for k, v in sorted(self.values.items(), key=lambda kv: canonical_key(kv[0]))
        )
        return f"CoefficientVector(n={self.n}, side={self.side}, {{{body}}})"


def _fill(
    n: int,
    kind: str,
    max_n: int | None,
    memo: MutableMapping[MemoKey, int] | None,
    threads: int,
) -> TransitionMatrix:
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    if max_n is not None and n > max_n:
        raise LimitError(f"weight {n} exceeds the configured guard max_n={max_n}")
    order = PartitionOrder(n, max_n=max_n)
    parts = order.partitions
    table = {} if memo is None else memo

    if kind == "S":
        # support: s(a, b) > 0 iff transpose(a) dominates b
        conjugates = {a: a.transpose() for a in parts}

        def row(i: int) -> tuple[int, ...]:
            a = parts[i]
            at = conjugates[a]
            return tuple(
                s_count(a, b, table) if dominates(at, b) else 0 for b in parts
            )

    else:
        # kind M: entry (a, b) vanishes unless b dominates a
        conjugates = {b: b.transpose() for b in parts}

        def row(i: int) -> tuple[int, ...]:
            a = parts[i]
            return tuple(
                s_count(a, conjugates[b], table) if dominates(b, a) else 0
                for b in parts
            )

    if threads > 1 and len(parts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = tuple(pool.map(row, range(len(parts))))
    else:
        entries = tuple(row(i) for i in range(len(parts)))
    return TransitionMatrix(n=n, order=order, entries=entries, kind=kind)


def pairing_matrix(
    n: int,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    memo: MutableMapping[MemoKey, int] | None = None,
    threads: int = 1,
) -> TransitionMatrix:
    """S(n) with S[alpha][beta] = s(alpha, beta), in canonical order."""
    return _fill(n, "S", max_n, memo, threads)


def transition_matrix(
    n: int,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    memo: MutableMapping[MemoKey, int] | None = None,
    threads: int = 1,
) -> TransitionMatrix:
    """M(n) with M[alpha][beta] = s(alpha, transpose(beta)); unitriangular."""
    return _fill(n, "M", max_n, memo, threads)


def invert_unitriangular(matrix: TransitionMatrix) -> TransitionMatrix:
    """Exact integer inverse of a lower-unitriangular M, by forward substitution."""
    if matrix.kind != "M":
        raise ValueError(f"can only invert kind 'M' matrices, got {matrix.kind!r}")
    m = matrix.entries
    p = len(m)
    for i in range(p):
        if m[i][i] != 1:
            raise UnitDiagonalError(
                f"diagonal entry at {matrix.order[i]} is {m[i][i]}, not 1"
            )
    inverse = [[1 if i == j else 0 for j in range(p)] for i in range(p)]
    for j in range(p):
        for i in range(j + 1, p):
            acc = 0
            for k in range(j, i):
                if m[i][k]:
                    acc += m[i][k] * inverse[k][j]
            inverse[i][j] = -acc
    return TransitionMatrix(
        n=matrix.n,
        order=matrix.order,
        entries=tuple(tuple(r) for r in inverse),
        kind="Minv",
    )


def d_from_c(
    c: CoefficientVector,
    matrix: TransitionMatrix | None = None,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    memo: MutableMapping[MemoKey, int] | None = None,
) -> CoefficientVector:
    """Apply d_alpha = sum over beta of M[alpha][beta] * c_beta.

    Without a prebuilt matrix only the columns meeting the support of c
    are computed, which is much cheaper for sparse input.
    """
    if c.side != "c":
        raise ValueError(f"expected a c-side vector, got side {c.side!r}")
    order = matrix.order if matrix is not None else PartitionOrder(c.n, max_n=max_n)
    if matrix is not None:
        if matrix.kind != "M":
            raise ValueError(f"d_from_c needs a kind 'M' matrix, got {matrix.kind!r}")
        if matrix.n != c.n:
            raise WeightMismatchError(
                f"matrix is over P({matrix.n}), vector over P({c.n})"
            )
    table = {} if memo is None else memo
    out: dict[Partition, int] = {}
    for beta, coeff in c.values.items():
        if matrix is not None:
            j = order.index(beta)
            column = [matrix.entries[i][j] for i in range(len(order))]
        else:
            bt = beta.transpose()
            column = [
                s_count(alpha, bt, table) if dominates(beta, alpha) else 0
                for alpha in order
            ]
        for alpha, value in zip(order, column):
            if value:
                out[alpha] = out.get(alpha, 0) + coeff * value
    return CoefficientVector(c.n, "d", out)


def c_from_d(
    d: CoefficientVector,
    matrix: TransitionMatrix | None = None,
    *,
    max_n: int | None = DEFAULT_MAX_N,
    memo: MutableMapping[MemoKey, int] | None = None,
) -> CoefficientVector:
    """Invert the system: solve M . c = d exactly by forward substitution.

    Accepts a prebuilt matrix of kind M (solved against) or Minv (applied
    directly); builds M(n) when none is given.
    """
    if d.side != "d":
        raise ValueError(f"expected a d-side vector, got side {d.side!r}")
    if matrix is None:
        matrix = transition_matrix(d.n, max_n=max_n, memo=memo)
    if matrix.n != d.n:
        raise WeightMismatchError(f"matrix is over P({matrix.n}), vector over P({d.n})")
    order = matrix.order
    p = len(order)
    rhs = [0] * p
    for key, value in d.values.items():
        rhs[order.index(key)] = value

    if matrix.kind == "Minv":
        solution = [
            sum(matrix.entries[i][j] * rhs[j] for j in range(p) if rhs[j])
            for i in range(p)
        ]
    elif matrix.kind == "M":
        m = matrix.entries
        solution = [0] * p
        for i in range(p):
            acc = rhs[i]
            for k in range(i):
                if m[i][k] and solution[k]:
                    acc -= m[i][k] * solution[k]
            solution[i] = acc
    else:
        raise ValueError(f"c_from_d needs kind 'M' or 'Minv', got {matrix.kind!r}")
    return CoefficientVector(
        d.n, "c", {order[i]: v for i, v in enumerate(solution) if v}
    )


@dataclass(frozen=True)
class WavefrontReport:
    partition: Partition
    coefficient: int

    @property
    def unit(self) -> bool:
        return self.coefficient == 1


def wavefront(vector: CoefficientVector) -> WavefrontReport:
    """The unique dominance-maximal partition in the support, if unique.

    Vectors coming from irreducible objects have a unique maximum with
    coefficient one; arbitrary vectors may not, in which case this raises
    AmbiguousMaximumError rather than picking arbitrarily.
    """
    support = list(vector.values)
    if not support:
        raise ValueError("the zero vector has no wavefront")
    maxima = [
        k
        for k in support
        if not any(other != k and dominates(other, k) for other in support)
    ]
    if len(maxima) > 1:
        maxima.sort(key=canonical_key)
        listing = ", ".join(str(m) for m in maxima)
        raise AmbiguousMaximumError(
            f"support has incomparable dominance-maximal partitions: {listing}"
        )
    top = maxima[0]
    return WavefrontReport(partition=top, coefficient=vector.values[top])


@dataclass
class TriangularReport:
    """Outcome of the structural check of a transition matrix.

    A pass requires all of: unit diagonal, zero entries wherever the
    column partition fails to dominate the row partition, and strictly
    positive entries wherever it does dominate.
    """

    n: int
    bad_diagonal: list[tuple[Partition, int]] = field(default_factory=list)
    bad_zero: list[tuple[Partition, Partition, int]] = field(default_factory=list)
    bad_positive: list[tuple[Partition, Partition, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.bad_diagonal or self.bad_zero or self.bad_positive)

    def summary(self) -> str:
        if self.passed:
            return f"PASS: M({self.n}) is unitriangular with the expected support"
        lines = [f"FAIL: M({self.n})"]
        for alpha, value in self.bad_diagonal:
            lines.append(f"  diagonal at {alpha} is {value}, expected 1")
        for alpha, beta, value in self.bad_zero:
            lines.append(
                f"  entry ({alpha}, {beta}) is {value}, expected 0 "
                f"({beta} does not dominate {alpha})"
            )
        for alpha, beta, value in self.bad_positive:
            lines.append(
                f"  entry ({alpha}, {beta}) is {value}, expected > 0 "
                f"({beta} dominates {alpha})"
            )
        return "\n".join(lines)


def verify_triangular(matrix: TransitionMatrix) -> TriangularReport:
    """Check unit diagonal and the dominance support pattern of a kind-M matrix."""
    if matrix.kind != "M":
        raise ValueError(f"verify_triangular expects kind 'M', got {matrix.kind!r}")
    order = matrix.order
    report = TriangularReport(n=matrix.n)
    for i, alpha in enumerate(order):
        for j, beta in enumerate(order):
            value = matrix.entries[i][j]
            if i == j:
                if value != 1:
                    report.bad_diagonal.append((alpha, value))
            elif dominates(beta, alpha):
                if value <= 0:
                    report.bad_positive.append((alpha, beta, value))
            elif value != 0:
                report.bad_zero.append((alpha, beta, value))
    return report


def matrix_to_json(matrix: TransitionMatrix) -> str:
    """JSON with entries as decimal strings, canonical order spelled out."""
    payload = {
        "n": matrix.n,
        "order": [format_partition(p) for p in matrix.order],
        "kind": matrix.kind,
        "entries": [[str(e) for e in row] for row in matrix.entries],
    }
    return json.dumps(payload)


def matrix_from_json(text: str) -> TransitionMatrix:
    data = json.loads(text)
    n = data["n"]
    kind = data["kind"]
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    order = PartitionOrder(n, max_n=None)
    declared = [parse_partition(t) for t in data["order"]]
    if list(declared) != list(order.partitions):
        raise ValueError("order field does not match the canonical order")
    entries = tuple(tuple(int(e) for e in row) for row in data["entries"])
    if len(entries) != len(order) or any(len(r) != len(order) for r in entries):
        raise ValueError("entries are not square of the expected size")
    return TransitionMatrix(n=n, order=order, entries=entries, kind=kind)


def matrix_to_csv(matrix: TransitionMatrix) -> str:
    """CSV with a leading header row and column of partition texts."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    texts = [format_partition(p) for p in matrix.order]
    writer.writerow([matrix.kind] + texts)
    for label, row in zip(texts, matrix.entries):
        writer.writerow([label] + [str(e) for e in row])
    return buffer.getvalue()


def vector_to_json(vector: CoefficientVector) -> str:
    """JSON with values as decimal strings, keys in canonical order."""
    ordered = sorted(vector.values.items(), key=lambda kv: canonical_key(kv[0]))
    payload = {
        "n": vector.n,
        "side": vector.side,
        "values": {format_partition(k): str(v) for k, v in ordered},
    }
    return json.dumps(payload, indent=2)


def vector_from_json(text: str, *, strict_parse: bool = True) -> CoefficientVector:
    data = json.loads(text)
    try:
        n = data["n"]
        side = data["side"]
        raw = data.get("values", {})
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed coefficient vector JSON: missing {exc}") from None
    values = {}
    for key, value in raw.items():
        values[parse_partition(key, strict=strict_parse)] = int(value)
    return CoefficientVector(n, side, values)
