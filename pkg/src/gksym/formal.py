"""Integer-multiplicity formal sums over a canonical basis.

The Grothendieck groups R(GL), R(G) and their tensor squares are all modelled
as FormalSum instances whose keys are canonicalised basis words (or tensor
pairs of them).  Coefficients are plain Python ints, hence arbitrary
precision; zero coefficients are never stored.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator

Key = Hashable


class FormalSum:
    """An immutable-by-convention map basis-element -> nonzero integer."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Key, int] | None = None):
        self.terms: dict[Key, int] = {k: c for k, c in (terms or {}).items() if c}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "FormalSum":
        return FormalSum()

    @staticmethod
    def basis(key: Key, coeff: int = 1) -> "FormalSum":
        return FormalSum({key: coeff})

    @staticmethod
    def from_items(items: Iterable[tuple[Key, int]]) -> "FormalSum":
        acc: dict[Key, int] = {}
        for key, coeff in items:
            if coeff:
                acc[key] = acc.get(key, 0) + coeff
                if not acc[key]:
                    del acc[key]
        return FormalSum(acc)

    # -- ring-module structure -------------------------------------------

    def __add__(self, other: "FormalSum") -> "FormalSum":
        acc = dict(self.terms)
        for key, coeff in other.terms.items():
            acc[key] = acc.get(key, 0) + coeff
            if not acc[key]:
                del acc[key]
        return FormalSum(acc)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __neg__(self) -> "FormalSum":
        return FormalSum({k: -c for k, c in self.terms.items()})

    def scale(self, n: int) -> "FormalSum":
        if n == 0:
            return FormalSum()
        return FormalSum({k: n * c for k, c in self.terms.items()})

    def __mul__(self, n: int) -> "FormalSum":
        return self.scale(n)

    __rmul__ = __mul__

    # -- queries ----------------------------------------------------------

    def coeff(self, key: Key) -> int:
        return self.terms.get(key, 0)

    def items(self) -> Iterator[tuple[Key, int]]:
        return iter(self.terms.items())

    def support(self) -> list[Key]:
        return list(self.terms.keys())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def is_nonpositive(self) -> bool:
        return all(c < 0 for c in self.terms.values())

    # -- linear extension ---------------------------------------------------

    def bind(self, f: Callable[[Key], "FormalSum"]) -> "FormalSum":
        """Apply a basis->sum map and extend linearly."""
        acc: dict[Key, int] = {}
        for key, coeff in self.terms.items():
            for key2, coeff2 in f(key).terms.items():
                total = acc.get(key2, 0) + coeff * coeff2
                if total:
                    acc[key2] = total
                elif key2 in acc:
                    del acc[key2]
        return FormalSum(acc)

    def map_basis(self, f: Callable[[Key], Key]) -> "FormalSum":
        return self.bind(lambda k: FormalSum.basis(f(k)))

    def filter(self, pred: Callable[[Key], bool]) -> "FormalSum":
        return FormalSum({k: c for k, c in self.terms.items() if pred(k)})

    # -- display -----------------------------------------------------------

    def render(self, render_key: Callable[[Key], str]) -> str:
        if not self.terms:
            return "0"
        parts = sorted((render_key(k), c) for k, c in self.terms.items())
        out: list[str] = []
        for text, coeff in parts:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = text if mag == 1 else f"{mag}*{text}"
            if not out:
                out.append(body if coeff > 0 else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"FormalSum({self.terms!r})"
