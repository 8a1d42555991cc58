"""Exact-integer vectors in the X and Y product bases, with their pairing.

A graded commutative ring is spanned, in each weight n, by basis elements
indexed by P(n).  Two bases are used, tagged "X" and "Y"; in either one
the product of basis elements concatenates the indexing partitions and
re-sorts.  The bilinear pairing between an X-vector and a Y-vector is

    <u, v> = sum over (alpha, beta) of u_alpha * v_beta * s(alpha, beta)

with s the 0-1 matrix count from the counting module.  No change of basis
between X and Y is defined here; the pairing is all the transition layer
needs.
"""

from __future__ import annotations

import json
from typing import Mapping, MutableMapping

from .counting import MemoKey, s_count
from .errors import BasisMismatchError, WeightMismatchError
from .matrices import CoefficientVector
from .partitions import Partition, canonical_key, format_partition, parse_partition

__all__ = [
    "BASES",
    "PshVector",
    "basis_element",
    "multiply",
    "pair",
    "vector_from_c",
    "d_by_pairing",
    "pshvector_to_json",
    "pshvector_from_json",
]

BASES = ("X", "Y")


class PshVector:
    """A sparse integer coefficient vector over P(n), tagged with a basis.

    Absent keys mean zero; zero coefficients are dropped on construction.
    Negative coefficients are allowed (this is a Grothendieck group, not a
    cone of actual representations).
    """

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n: int, basis: str, coeffs: Mapping[Partition, int] | None = None):
        if basis not in BASES:
            raise BasisMismatchError(f"unknown basis tag {basis!r}, expected one of {BASES}")
        if n < 0:
            raise ValueError(f"weight must be nonnegative, got {n}")
        cleaned: dict[Partition, int] = {}
        for key, value in (coeffs or {}).items():
            if not isinstance(key, Partition):
                raise TypeError(f"coefficient keys must be Partition, got {key!r}")
            if key.n != n:
                raise WeightMismatchError(
                    f"key {key} has weight {key.n}, vector is over P({n})"
                )
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"coefficients must be int, got {value!r}")
            if value != 0:
                cleaned[key] = value
        self.n = n
        self.basis = basis
        self.coeffs = cleaned

    def __getitem__(self, alpha: Partition) -> int:
        return self.coeffs.get(alpha, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PshVector):
            return (
                self.n == other.n
                and self.basis == other.basis
                and self.coeffs == other.coeffs
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.basis, frozenset(self.coeffs.items())))

    def __add__(self, other: "PshVector") -> "PshVector":
        if not isinstance(other, PshVector):
            return NotImplemented
        if self.basis != other.basis:
            raise BasisMismatchError(
                f"cannot add {self.basis}-vector and {other.basis}-vector"
            )
        if self.n != other.n:
            raise WeightMismatchError(
                f"cannot add vectors of weights {self.n} and {other.n}"
            )
        merged = dict(self.coeffs)
        for key, value in other.coeffs.items():
            merged[key] = merged.get(key, 0) + value
        return PshVector(self.n, self.basis, merged)

    def __neg__(self) -> "PshVector":
        return PshVector(self.n, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "PshVector") -> "PshVector":
        if not isinstance(other, PshVector):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar: int) -> "PshVector":
        if not isinstance(scalar, int) or isinstance(scalar, bool):
            return NotImplemented
        return PshVector(self.n, self.basis, {k: scalar * v for k, v in self.coeffs.items()})

    def __mul__(self, other: "PshVector") -> "PshVector":
        if isinstance(other, PshVector):
            return multiply(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{v}*{self.basis.lower()}{k}"
            for k, v in sorted(self.coeffs.items(), key=lambda kv: canonical_key(kv[0]))
        )
        return f"PshVector(n={self.n}, basis={self.basis}, [{terms}])"


def basis_element(basis: str, alpha: Partition) -> PshVector:
    """The unit vector at alpha; weight-0 gives the ring identity."""
    return PshVector(alpha.n, basis, {alpha: 1})


def multiply(u: PshVector, v: PshVector) -> PshVector:
    """Bilinear product; on basis elements it concatenates and re-sorts parts.

    Both factors must carry the same basis tag: mixing X with Y would need
    a change of basis, which is deliberately not provided.
    """
    if u.basis != v.basis:
        raise BasisMismatchError(
            f"cannot multiply {u.basis}-vector by {v.basis}-vector"
        )
    coeffs: dict[Partition, int] = {}
    for a, ca in u.coeffs.items():
        for b, cb in v.coeffs.items():
            key = Partition(sorted(a.parts + b.parts, reverse=True))
            coeffs[key] = coeffs.get(key, 0) + ca * cb
    return PshVector(u.n + v.n, u.basis, coeffs)


def pair(
    u: PshVector,
    v: PshVector,
    memo: MutableMapping[MemoKey, int] | None = None,
) -> int:
    """The pairing of an X-vector against a Y-vector, exact.

    Accepts the arguments in either order; anything else (X with X, Y with
    Y) is an error since those values are not defined by this library.
    """
    if u.basis == "Y" and v.basis == "X":
        u, v = v, u
    if not (u.basis == "X" and v.basis == "Y"):
        raise BasisMismatchError(
            f"pairing needs one X-vector and one Y-vector, got {u.basis}/{v.basis}"
        )
    if u.n != v.n:
        raise WeightMismatchError(
            f"cannot pair vectors of weights {u.n} and {v.n}"
        )
    if memo is None:
        memo = {}
    total = 0
    for a, ca in u.coeffs.items():
        for b, cb in v.coeffs.items():
            total += ca * cb * s_count(a, b, memo)
    return total


def vector_from_c(c: CoefficientVector) -> PshVector:
    """X-basis vector with coefficient c_alpha placed at transpose(alpha)."""
    if c.side != "c":
        raise ValueError(f"expected a c-side coefficient vector, got side {c.side!r}")
    return PshVector(
        c.n, "X", {alpha.transpose(): value for alpha, value in c.values.items()}
    )


def d_by_pairing(
    v: PshVector,
    alpha: Partition,
    memo: MutableMapping[MemoKey, int] | None = None,
) -> int:
    """d-coefficient at alpha of the X-vector v, via the pairing route."""
    if v.n != alpha.n:
        raise WeightMismatchError(
            f"vector has weight {v.n}, partition {alpha} has weight {alpha.n}"
        )
    return pair(v, basis_element("Y", alpha), memo)


def pshvector_to_json(v: PshVector) -> str:
    """JSON form: {"n": ..., "basis": "X"|"Y", "coeffs": {"2,1": 3, ...}}."""
    ordered = sorted(v.coeffs.items(), key=lambda kv: canonical_key(kv[0]))
    payload = {
        "n": v.n,
        "basis": v.basis,
        "coeffs": {format_partition(k): val for k, val in ordered},
    }
    return json.dumps(payload, indent=2)


def pshvector_from_json(text: str) -> PshVector:
    data = json.loads(text)
    n = data["n"]
    coeffs = {
        parse_partition(key): int(value)
        for key, value in data.get("coeffs", {}).items()
    }
    return PshVector(n, data["basis"], coeffs)
