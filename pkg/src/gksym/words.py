"""Canonical basis words of R(GL) and R(G).

A GL word is a multiset of segment representations (delta or zeta attached
to a segment [nu^lo rho, nu^hi rho]), stored sorted so each word has a unique
normal form.  A G word joins a GL word to an atom of the classical-group
side: either a declared cuspidal symbol or a named tempered symbol carrying
its defining description.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .halfint import H, HalfInt, HalfIntLike
from .symbols import CuspidalG, CuspidalGL, GroupFamily


class SegKind(Enum):
    DELTA = "d"
    ZETA = "z"


class InvariantError(Exception):
    """A basis word violated one of its structural invariants."""


@dataclass(frozen=True)
class SegmentRep:
    """delta or zeta attached to the segment [nu^lo rho, nu^hi rho].

    Length-one segments are the cuspidal nu^lo rho itself; there delta and
    zeta coincide and the stored kind is normalised to DELTA.
    """

    kind: SegKind
    rho: CuspidalGL
    lo: HalfInt
    hi: HalfInt

    def __post_init__(self) -> None:
        diff = self.hi - self.lo
        if diff < 0 or not diff.is_integer():
            raise InvariantError(
                f"segment [{self.lo},{self.hi}] needs hi - lo a non-negative integer"
            )
        if self.lo == self.hi and self.kind is not SegKind.DELTA:
            object.__setattr__(self, "kind", SegKind.DELTA)

    @property
    def length(self) -> int:
        return (self.hi - self.lo).as_int() + 1

    def is_cuspidal(self) -> bool:
        return self.lo == self.hi

    def exponents(self) -> list[HalfInt]:
        e, out = self.lo, []
        while e <= self.hi:
            out.append(e)
            e = e + 1
        return out

    def sort_key(self):
        return (self.kind.value, self.rho, self.lo, self.hi)

    def __lt__(self, other: "SegmentRep") -> bool:
        return self.sort_key() < other.sort_key()

    def render(self) -> str:
        if self.is_cuspidal():
            return f"nu^{self.lo} {self.rho.render()}"
        return f"{self.kind.value}([{self.lo},{self.hi};{self.rho.render()}])"

    def __str__(self) -> str:
        return self.render()


def delta(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> SegmentRep:
    return SegmentRep(SegKind.DELTA, rho, H(lo), H(hi))


def zeta(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> SegmentRep:
    return SegmentRep(SegKind.ZETA, rho, H(lo), H(hi))


def cusp(rho: CuspidalGL, e: HalfIntLike) -> SegmentRep:
    return SegmentRep(SegKind.DELTA, rho, H(e), H(e))


def seg_or_none(
    kind: SegKind, rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike
) -> Optional[SegmentRep]:
    """Build a segment, or None for an empty range (the omitted [x,y], x > y)."""
    lo, hi = H(lo), H(hi)
    if lo > hi:
        return None
    return SegmentRep(kind, rho, lo, hi)


@dataclass(frozen=True)
class GLWord:
    """A canonicalised product of segment representations (multiset)."""

    factors: tuple[SegmentRep, ...]

    @staticmethod
    def of(factors) -> "GLWord":
        return GLWord(tuple(sorted(factors, key=SegmentRep.sort_key)))

    def __mul__(self, other: "GLWord") -> "GLWord":
        return GLWord.of(self.factors + other.factors)

    @property
    def degree(self) -> int:
        return sum(f.length for f in self.factors)

    def is_one(self) -> bool:
        return not self.factors

    def render(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f.render() for f in self.factors)

    def __str__(self) -> str:
        return self.render()

    def __lt__(self, other: "GLWord") -> bool:
        return tuple(f.sort_key() for f in self.factors) < tuple(
            f.sort_key() for f in other.factors
        )


GL_ONE = GLWord(())


@dataclass(frozen=True)
class NamedTempered:
    """An opaque tempered / discrete-series symbol with its defining description.

    ``exps`` is the defining exponent string over ``rho`` (in embedding order);
    when ``flagged`` it doubles as a registered Frobenius flag, otherwise it
    only records the cuspidal support and ``note`` keeps the side condition
    that pins the symbol down.  Two atoms are equal iff all fields agree.
    """

    kind: str
    sigma: CuspidalG
    rho: Optional[CuspidalGL]
    exps: tuple[HalfInt, ...]
    tag: int = 0
    flagged: bool = True
    note: str = ""

    def support(self) -> tuple[tuple[CuspidalGL, HalfInt], ...]:
        if self.rho is None:
            return ()
        return tuple((self.rho, e) for e in self.exps)

    def flag(self) -> Optional[tuple[tuple[CuspidalGL, HalfInt], ...]]:
        if not self.flagged or self.rho is None:
            return None
        return tuple((self.rho, e) for e in self.exps)

    def render(self) -> str:
        body = ",".join(str(e) for e in self.exps)
        tag = f"#{self.tag}" if self.tag else ""
        rho = self.rho.render() if self.rho is not None else "-"
        return f"{self.kind}{tag}[{body};{rho};{self.sigma.render()}]"

    def __str__(self) -> str:
        return self.render()

    def sort_key(self):
        return (self.kind, self.sigma.label, str(self.rho), self.exps, self.tag)


GAtom = Union[CuspidalG, NamedTempered]


def atom_render(atom: GAtom) -> str:
    return atom.render()


def atom_sort_key(atom: GAtom):
    if isinstance(atom, CuspidalG):
        return (0, atom.label)
    return (1,) + atom.sort_key()


def atom_support(atom: GAtom) -> tuple[tuple[CuspidalGL, HalfInt], ...]:
    if isinstance(atom, CuspidalG):
        return ()
    return atom.support()


def atom_flag(atom: GAtom) -> Optional[tuple[tuple[CuspidalGL, HalfInt], ...]]:
    """The registered cuspidal flag ending at the atom's partial support, if any."""
    if isinstance(atom, CuspidalG):
        return ()
    return atom.flag()


def atom_base(atom: GAtom) -> CuspidalG:
    return atom if isinstance(atom, CuspidalG) else atom.sigma


@dataclass(frozen=True)
class GWord:
    """A canonical basis word of R(G): GL factors joined to a G atom."""

    gl: GLWord
    atom: GAtom

    @staticmethod
    def of(factors, atom: GAtom) -> "GWord":
        return GWord(GLWord.of(factors), atom)

    def prepend(self, gl: GLWord) -> "GWord":
        return GWord(gl * self.gl, self.atom)

    @property
    def degree(self) -> int:
        return self.gl.degree

    def render(self) -> str:
        if self.gl.is_one():
            return atom_render(self.atom)
        return f"{self.gl.render()} |x| {atom_render(self.atom)}"

    def __str__(self) -> str:
        return self.render()

    def __lt__(self, other: "GWord") -> bool:
        key = (tuple(f.sort_key() for f in self.gl.factors), atom_sort_key(self.atom))
        okey = (tuple(f.sort_key() for f in other.gl.factors), atom_sort_key(other.atom))
        return key < okey


def folded_support(word: GWord, family: GroupFamily) -> tuple:
    """Cuspidal-support multiset folded under the contragredient nu^t <-> nu^-t.

    GL symbols are folded to the lexicographically smaller of (rho, dual rho)
    with the exponent's absolute value, so words differing by factorwise
    (twisted) contragredients compare equal.
    """
    items: list[tuple[str, str]] = []

    def fold(rho: CuspidalGL, e: HalfInt) -> tuple[str, str]:
        rd = rho.dual(family)
        canon = min(rho, rd, key=lambda r: (r.label, r.bar, r.om))
        mag = e if e >= 0 else -e
        return (canon.render(), str(mag))

    for f in word.gl.factors:
        for e in f.exponents():
            items.append(fold(f.rho, e))
    for rho, e in atom_support(word.atom):
        items.append(fold(rho, e))
    items.append(("atom", atom_base(word.atom).label))
    return tuple(sorted(items))
