"""Jacquet-module comultiplication for the classical-group side.

Two independent routes compute mu* of a standard word:

* the generic fold  M*(pi) = (m (x) 1) o (dual (x) m*) o swap o m*,
  applied factorwise and joined to the atom (works for delta and zeta
  factors alike), and
* the closed-form double sum for a delta segment against an already
  expanded right-hand side (the structural formula; GSpin variant twists
  the contragredient block by the central character).

The closed form is kept as the oracle the acceptance suite replays against
the fold.  Flag queries (iterated degree-one restriction down to the
minimal Levi) are implemented directly on top of the same splitting rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .formal import FormalSum
from .glhopf import gl_dual_word, m_star_word
from .halfint import HalfInt, hrange
from .symbols import CuspidalG, CuspidalGL, GroupFamily
from .words import (
    GL_ONE,
    GLWord,
    GWord,
    GAtom,
    NamedTempered,
    SegKind,
    SegmentRep,
    seg_or_none,
)

MuTerm = tuple[GLWord, GWord]
Flag = tuple[tuple[CuspidalGL, HalfInt], ...]


class OpaqueAtomError(Exception):
    """A Jacquet-module query reached a named tempered atom with no registered
    expansion; the engine refuses to invent one."""


def mu_star_atom(atom: GAtom) -> FormalSum:
    """mu* of a bare atom: exactly 1 (x) sigma for cuspidal symbols."""
    if isinstance(atom, NamedTempered):
        raise OpaqueAtomError(f"no mu* expansion registered for opaque atom {atom}")
    return FormalSum.basis((GL_ONE, GWord(GL_ONE, atom)))


_BIG_M_CACHE: dict[tuple[GLWord, GroupFamily], FormalSum] = {}
_MU_CACHE: dict[tuple[GWord, GroupFamily], FormalSum] = {}


def clear_caches() -> None:
    _BIG_M_CACHE.clear()
    _MU_CACHE.clear()
    _FLAG_CACHE.clear()


def big_m_star(w: GLWord, family: GroupFamily) -> FormalSum:
    """M* of a GL word: sum of (gl factor sent down) (x) (gl factor kept up).

    M* = (m (x) 1) o (dual (x) m*) o swap o m*, with the family-appropriate
    contragredient on the swapped-down block.
    """
    key = (w, family)
    cached = _BIG_M_CACHE.get(key)
    if cached is not None:
        return cached
    items: list[tuple[tuple[GLWord, GLWord], int]] = []
    for (upper, lower), c in m_star_word(w).items():
        dlower = gl_dual_word(lower, family)
        for (up2, mid), c2 in m_star_word(upper).items():
            items.append(((dlower * up2, mid), c * c2))
    out = FormalSum.from_items(items)
    _BIG_M_CACHE[key] = out
    return out


def mu_star_word(w: GWord, family: GroupFamily) -> FormalSum:
    """mu* of a standard word via the generic fold: M*(gl part) joined to mu*(atom)."""
    key = (w, family)
    cached = _MU_CACHE.get(key)
    if cached is not None:
        return cached
    mu_atom = mu_star_atom(w.atom)
    items: list[tuple[MuTerm, int]] = []
    for (down, kept), c in big_m_star(w.gl, family).items():
        for (tau, rest), c2 in mu_atom.items():
            items.append(((down * tau, rest.prepend(kept)), c * c2))
    out = FormalSum.from_items(items)
    _MU_CACHE[key] = out
    return out


def mu_star_delta_rtimes(
    s: SegmentRep, target: FormalSum, family: GroupFamily
) -> FormalSum:
    """Closed-form mu* of a delta segment joined over an expanded right side.

    For the segment [lo, hi] and each term tau (x) sigma' of ``target``:

        sum_{i=lo-1}^{hi} sum_{j=i}^{hi}
            d([-i, -lo; dual rho]) x d([j+1, hi; rho]) x tau
            (x)  d([i+1, j; rho]) |x| sigma'

    with empty segments omitted and the contragredient twisted by the
    central character for the odd GSpin family.
    """
    if s.kind is not SegKind.DELTA:
        raise ValueError("closed form is stated for delta segments only")
    rho, lo, hi = s.rho, s.lo, s.hi
    rho_dual = rho.dual(family)
    items: list[tuple[MuTerm, int]] = []
    for (tau, rest), c in target.items():
        for i in hrange(lo - 1, hi):
            dual_block = seg_or_none(SegKind.DELTA, rho_dual, -i, -lo)
            for j in hrange(i, hi):
                upper = seg_or_none(SegKind.DELTA, rho, j + 1, hi)
                middle = seg_or_none(SegKind.DELTA, rho, i + 1, j)
                left = tau * GLWord.of(
                    [f for f in (dual_block, upper) if f is not None]
                )
                right = rest if middle is None else rest.prepend(GLWord((middle,)))
                items.append(((left, right), c))
    return FormalSum.from_items(items)


def mu_star_closed(w: GWord, family: GroupFamily) -> FormalSum:
    """Oracle route: iterate the closed form over the (all-delta) GL factors."""
    for f in w.gl.factors:
        if f.kind is not SegKind.DELTA:
            raise ValueError("closed-form route handles delta factors only")
    acc = mu_star_atom(w.atom)
    for f in w.gl.factors:
        acc = mu_star_delta_rtimes(f, acc, family)
    return acc


def left_degree_slice(mu: FormalSum, k: int) -> FormalSum:
    """Terms of a mu* sum whose GL tensor slot has total degree k."""
    return mu.filter(lambda term: term[0].degree == k)


def term_degree(term: MuTerm) -> int:
    left, right = term
    return left.degree + right.degree


# -- degree-one restrictions and flags ---------------------------------------


def r1_emissions(
    w: GWord, family: GroupFamily
) -> list[tuple[CuspidalGL, HalfInt, GWord, int]]:
    """The degree-one slice of mu*(w), as (symbol, exponent, remainder, coeff).

    Each factor can emit one cuspidal: a delta from its upper end (or its
    lower end dualised), a zeta from its lower end (or its upper end
    dualised).  Atoms emit nothing; opaque atoms are rejected since their
    own degree-one pieces are unknown.
    """
    if isinstance(w.atom, NamedTempered):
        raise OpaqueAtomError(f"no mu* expansion registered for opaque atom {w.atom}")
    out: list[tuple[CuspidalGL, HalfInt, GWord, int]] = []
    factors = w.gl.factors
    for idx, f in enumerate(factors):
        rest = factors[:idx] + factors[idx + 1 :]
        if f.kind is SegKind.DELTA:
            emissions = [
                (f.rho, f.hi, seg_or_none(SegKind.DELTA, f.rho, f.lo, f.hi - 1)),
                (
                    f.rho.dual(family),
                    -f.lo,
                    seg_or_none(SegKind.DELTA, f.rho, f.lo + 1, f.hi),
                ),
            ]
        else:
            emissions = [
                (f.rho, f.lo, seg_or_none(SegKind.ZETA, f.rho, f.lo + 1, f.hi)),
                (
                    f.rho.dual(family),
                    -f.hi,
                    seg_or_none(SegKind.ZETA, f.rho, f.lo, f.hi - 1),
                ),
            ]
        for sym, e, remainder in emissions:
            kept = rest if remainder is None else rest + (remainder,)
            out.append((sym, e, GWord.of(kept, w.atom), 1))
    return out


_FLAG_CACHE: dict[tuple[GWord, Flag, GAtom, GroupFamily], int] = {}


def flag_mult(w: GWord, flag: Flag, atom: GAtom, family: GroupFamily) -> int:
    """Multiplicity of the cuspidal flag (x) atom in the minimal Jacquet module."""
    if not flag:
        return 1 if (w.gl.is_one() and w.atom == atom) else 0
    key = (w, flag, atom, family)
    cached = _FLAG_CACHE.get(key)
    if cached is not None:
        return cached
    head_sym, head_exp = flag[0]
    total = 0
    for sym, e, rest, c in r1_emissions(w, family):
        if sym == head_sym and e == head_exp:
            total += c * flag_mult(rest, flag[1:], atom, family)
    _FLAG_CACHE[key] = total
    return total


def jacquet_minimal(w: GWord, family: GroupFamily, max_degree: int = 12) -> FormalSum:
    """Full flag of cuspidal exponents, as a sum of (flag, atom) pairs.

    The result does not depend on the order factors are unfolded (checked in
    the suite against an independent route through full mu* slices).
    """
    if w.degree > max_degree:
        raise ValueError(f"word of degree {w.degree} exceeds bound {max_degree}")
    if w.degree == 0:
        return FormalSum.basis(((), w.atom))
    items: list[tuple[tuple[Flag, GAtom], int]] = []
    for sym, e, rest, c in r1_emissions(w, family):
        for (flag, atom), c2 in jacquet_minimal(rest, family, max_degree).items():
            items.append(((((sym, e),) + flag, atom), c * c2))
    return FormalSum.from_items(items)


# -- multiplicity queries -----------------------------------------------------


@dataclass(frozen=True)
class MultResult:
    """An integer multiplicity plus a degree-mismatch diagnostic."""

    value: int
    degree_mismatch: bool = False

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value == other and not self.degree_mismatch
        if isinstance(other, MultResult):
            return (self.value, self.degree_mismatch) == (
                other.value,
                other.degree_mismatch,
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.degree_mismatch))


def mult_of_constituent(
    w: GWord, pattern: MuTerm | tuple[Flag, GAtom], family: GroupFamily
) -> MultResult:
    """Multiplicity of a canonical basis pattern in mu*(w) (or, for a flag
    pattern, in the minimal Jacquet module).

    Matching is at basis-word level: the pattern must be the exact canonical
    term, never an irreducible constituent of one.
    """
    left, right = pattern
    if isinstance(left, GLWord):
        if isinstance(right, (CuspidalG, NamedTempered)):
            right = GWord(GL_ONE, right)
        if left.degree + right.degree != w.degree:
            return MultResult(0, degree_mismatch=True)
        return MultResult(mu_star_word(w, family).coeff((left, right)))
    flag: Flag = left
    atom: GAtom = right.atom if isinstance(right, GWord) else right
    if len(flag) != w.degree:
        return MultResult(0, degree_mismatch=True)
    return MultResult(flag_mult(w, flag, atom, family))


def count_with_left(w: GWord, left: GLWord, family: GroupFamily) -> int:
    """Total multiplicity of terms of mu*(w) with the given exact GL slot."""
    total = 0
    for (l, _), c in mu_star_word(w, family).items():
        if l == left:
            total += c
    return total


# -- chain shadows -------------------------------------------------------------


def chain_tilings(rho: CuspidalGL, lo: HalfInt, hi: HalfInt) -> list[GLWord]:
    """All GL words tiling the segment [lo, hi] by disjoint consecutive deltas.

    These are the standard-module shadows of the single irreducible
    d([lo,hi;rho]): each tiling contains it with multiplicity one, any other
    word of the same support does not contain it at all.
    """
    exps = hrange(lo, hi)
    n = len(exps)
    if n == 0:
        return [GL_ONE]
    out: list[GLWord] = []
    for cuts in range(1 << (n - 1)):
        parts: list[SegmentRep] = []
        start = 0
        for pos in range(n - 1):
            if cuts & (1 << pos):
                parts.append(SegmentRep(SegKind.DELTA, rho, exps[start], exps[pos]))
                start = pos + 1
        parts.append(SegmentRep(SegKind.DELTA, rho, exps[start], exps[n - 1]))
        out.append(GLWord.of(parts))
    return out


def segment_shadow_mult(
    w: GWord,
    rho: CuspidalGL,
    lo: HalfInt,
    hi: HalfInt,
    right: GWord,
    family: GroupFamily,
) -> int:
    """Multiplicity of the irreducible-constituent pattern d([lo,hi]) (x) right,
    counted through its standard-module chain shadows in mu*(w)."""
    mu = mu_star_word(w, family)
    return sum(mu.coeff((tile, right)) for tile in chain_tilings(rho, lo, hi))
