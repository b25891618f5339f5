"""Exact half-integer arithmetic.

Every exponent handled by the engine (segment endpoints, reducibility
points, Langlands exponents) lives in (1/2)Z.  Values are stored as the
doubled integer, so arithmetic, equality and ordering are exact with no
normalisation step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

HalfIntLike = Union["HalfInt", int]


@dataclass(frozen=True, order=True)
class HalfInt:
    """The number ``twice / 2`` with ``twice`` an integer."""

    twice: int

    def __post_init__(self) -> None:
        if not isinstance(self.twice, int):
            raise TypeError(f"twice must be int, got {type(self.twice).__name__}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.twice + _twice(other))

    __radd__ = __add__

    def __sub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(self.twice - _twice(other))

    def __rsub__(self, other: HalfIntLike) -> "HalfInt":
        return HalfInt(_twice(other) - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.twice == 2 * other
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __lt__(self, other: HalfIntLike) -> bool:
        return self.twice < _twice(other)

    def __le__(self, other: HalfIntLike) -> bool:
        return self.twice <= _twice(other)

    def __gt__(self, other: HalfIntLike) -> bool:
        return self.twice > _twice(other)

    def __ge__(self, other: HalfIntLike) -> bool:
        return self.twice >= _twice(other)

    # -- structure ----------------------------------------------------------

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def ceil(self) -> "HalfInt":
        """Smallest integer not smaller than the value."""
        return HalfInt(2 * -((-self.twice) // 2))

    def floor(self) -> "HalfInt":
        return HalfInt(2 * (self.twice // 2))

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def half_diff_integral(self, other: HalfIntLike) -> bool:
        """True when self - other is an ordinary integer."""
        return (self.twice - _twice(other)) % 2 == 0

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    __repr__ = __str__


def H(value: HalfIntLike | str) -> HalfInt:
    """Coerce an int, HalfInt or textual literal (``-3/2``, ``2``) to HalfInt."""
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int):
        return HalfInt(2 * value)
    if isinstance(value, str):
        return parse_halfint(value)
    raise TypeError(f"cannot interpret {value!r} as a half-integer")


def parse_halfint(text: str) -> HalfInt:
    body = text.strip()
    if "/" in body:
        num, _, den = body.partition("/")
        if den.strip() != "2":
            raise ValueError(f"half-integer literal must have denominator 2: {text!r}")
        return HalfInt(int(num))
    return HalfInt(2 * int(body))


def _twice(value: HalfIntLike) -> int:
    if isinstance(value, HalfInt):
        return value.twice
    if isinstance(value, int):
        return 2 * value
    raise TypeError(f"cannot mix {type(value).__name__} with HalfInt")


ZERO = H(0)
HALF = HalfInt(1)
ONE = H(1)


def hrange(lo: HalfIntLike, hi: HalfIntLike) -> list[HalfInt]:
    """Inclusive ascending run lo, lo+1, ..., hi; empty when lo > hi.

    The two endpoints must be congruent mod 1 when the run is nonempty.
    """
    lo, hi = H(lo), H(hi)
    if lo > hi:
        return []
    if (hi.twice - lo.twice) % 2 != 0:
        raise ValueError(f"range endpoints not on the same lattice: {lo}..{hi}")
    return [HalfInt(t) for t in range(lo.twice, hi.twice + 1, 2)]
