"""Partitions, Frobenius symbols, the sets P_omega / P_nu and the phi operators.

A partition here is a nonincreasing tuple of nonnegative integers in which a
single trailing zero is allowed and counts toward the length.  ``(4, 2)`` and
``(4, 2, 0)`` are different partitions.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class Partition(tuple):
    """Immutable nonincreasing sequence of nonnegative integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be nonincreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"negative part in {parts}")
        if parts.count(0) > 1:
            raise DomainError(f"at most one zero part allowed: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def smallest(self) -> int:
        _nonempty(self)
        return self[-1]

    def with_zero(self) -> "Partition":
        """lambda^+ : append a zero part."""
        return Partition(self + (0,))

    def drop_last(self) -> "Partition":
        """lambda^- : remove the last part."""
        _nonempty(self)
        return Partition(self[:-1])

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"


def _nonempty(lam) -> None:
    if len(lam) == 0:
        raise DomainError("empty partition")


# -- serialization -----------------------------------------------------------

_TEXT = re.compile(r"^\s*\(?\s*([0-9,\s]*?)\s*\)?\s*$")


def format_partition(lam: Iterable[int]) -> str:
    return "(" + ",".join(str(p) for p in lam) + ")"


def parse_partition(text: str) -> Partition:
    """Parse ``"(a,b,c)"`` or ``"a,b,c"``."""
    m = _TEXT.match(text)
    if m is None:
        raise DomainError(f"cannot parse partition: {text!r}")
    body = m.group(1).strip().rstrip(",")
    if not body:
        return Partition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise DomainError(f"cannot parse partition: {text!r}") from None
    return Partition(parts)


def partition_to_json(lam: Partition) -> str:
    return json.dumps(list(lam))


def partition_from_json(text: str) -> Partition:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise DomainError(f"expected a JSON array of integers: {text!r}")
    return Partition(data)


# -- set membership ------------------------------------------------------------

def is_in_P_omega(lam: Partition) -> bool:
    """Unique smallest part (may be 0) and every odd part <= 2*smallest + 1."""
    _nonempty(lam)
    s = lam[-1]
    if len(lam) >= 2 and lam[-2] == s:
        return False
    return all(p <= 2 * s + 1 for p in lam if p % 2)


def is_in_P_nu(lam: Partition) -> bool:
    """Distinct parts (smallest may be 0) and every odd part < 2*smallest."""
    _nonempty(lam)
    if not lam.is_distinct():
        return False
    s = lam[-1]
    return all(p < 2 * s for p in lam if p % 2)


# -- the phi operators ------------------------------------------------------------

def phi_plus(lam: Partition) -> Partition:
    _nonempty(lam)
    return Partition.sorted(lam[:-1] + (lam[-1] + 1,))


def phi_minus(lam: Partition) -> Partition:
    _nonempty(lam)
    return _build(lam[:-1] + (lam[-1] - 1,))


def phi_plus_e(lam: Partition) -> Partition:
    _nonempty(lam)
    return Partition(p + 2 for p in lam)


def phi_minus_e(lam: Partition) -> Partition:
    _nonempty(lam)
    return _build(p - 2 for p in lam)


def phi_plus_o(lam: Partition) -> Partition:
    _nonempty(lam)
    return Partition(tuple(p + 2 for p in lam[:-1]) + (lam[-1] + 1,))


def phi_minus_o(lam: Partition) -> Partition:
    _nonempty(lam)
    return _build(tuple(p - 2 for p in lam[:-1]) + (lam[-1] - 1,))


def phi_star(lam: Partition) -> Partition:
    _nonempty(lam)
    return _build(p - 1 for p in lam)


def _build(parts: Iterable[int]) -> Partition:
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise DomainError(f"operator produced a negative part: {parts}")
    return Partition.sorted(parts)


def phi_split(lam: Partition) -> Partition:
    """phi^+_c: split a largest odd part 2k+1 into k+1 and k."""
    _nonempty(lam)
    odd = [p for p in lam if p % 2]
    if not odd:
        raise DomainError(f"no odd part in {format_partition(lam)}")
    big = max(odd)
    i = lam.index(big)
    rest = lam[:i] + lam[i + 1:]
    return Partition.sorted(rest + ((big + 1) // 2, (big - 1) // 2))


def phi_merge(lam: Partition) -> Partition:
    """phi^-_c: replace the last two parts by their sum."""
    if len(lam) < 2:
        raise DomainError(f"phi_merge needs at least two parts: {format_partition(lam)}")
    return Partition.sorted(lam[:-2] + (lam[-2] + lam[-1],))


POINTWISE = {
    "plus": phi_plus,
    "minus": phi_minus,
    "plus_e": phi_plus_e,
    "minus_e": phi_minus_e,
    "plus_o": phi_plus_o,
    "minus_o": phi_minus_o,
    "star": phi_star,
}


def phi_pointwise(kind: str, lam: Partition) -> Partition:
    try:
        op = POINTWISE[kind]
    except KeyError:
        raise DomainError(f"unknown operator kind {kind!r}") from None
    return op(lam)


# -- conjugation and Frobenius symbols --------------------------------------------

def conjugate(lam: Partition) -> Partition:
    if 0 in lam:
        raise DomainError("conjugate is undefined with a zero part")
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


@dataclass(frozen=True)
class FrobeniusSymbol:
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    durfee_side: int

    def __post_init__(self):
        for row in (self.top, self.bottom):
            if len(row) != self.durfee_side:
                raise DomainError("Frobenius rows must have durfee_side entries")
            if any(a <= b for a, b in zip(row, row[1:])) or (row and row[-1] < 0):
                raise DomainError(f"Frobenius row not strictly decreasing: {row}")

    def to_partition(self) -> Partition:
        d = self.durfee_side
        head = [self.top[i] + i + 1 for i in range(d)]
        col_lengths = [self.bottom[i] + i + 1 for i in range(d)]
        tail = []
        j = d + 1
        while True:
            k = sum(1 for c in col_lengths if c >= j)
            if k == 0:
                break
            tail.append(k)
            j += 1
        return Partition(head + tail)


def durfee_side(lam: Partition) -> int:
    return max((i for i in range(1, len(lam) + 1) if lam[i - 1] >= i), default=0)


def frobenius_symbol(lam: Partition) -> FrobeniusSymbol:
    _nonempty(lam)
    conj = conjugate(lam)
    d = durfee_side(lam)
    return FrobeniusSymbol(
        top=tuple(lam[i] - i - 1 for i in range(d)),
        bottom=tuple(conj[i] - i - 1 for i in range(d)),
        durfee_side=d,
    )


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of n (positive parts) in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest)


def partitions_with_length(n: int, k: int, max_part: int | None = None):
    """Partitions of n into exactly k positive parts."""
    if max_part is None:
        max_part = n
    if k == 0:
        if n == 0:
            yield Partition()
        return
    if n < k:
        return
    # the largest part must be at least ceil(n / k)
    for first in range(min(n - (k - 1), max_part), -(-n // k) - 1, -1):
        for rest in partitions_with_length(n - first, k - 1, first):
            yield Partition((first,) + rest)
