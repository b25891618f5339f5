"""GL-side comultiplication and duality.

m* sends a word to a sum of tensor pairs of words; it is primitive on
cuspidals, splits a delta segment from the top and a zeta segment from the
bottom, and extends to products as an algebra homomorphism.  Empty segments
are omitted throughout.
"""

from __future__ import annotations

from .formal import FormalSum
from .halfint import H
from .symbols import CuspidalGL, GroupFamily
from .words import GL_ONE, GLWord, SegKind, SegmentRep, seg_or_none

GLPair = tuple[GLWord, GLWord]


def _pair(left: SegmentRep | None, right: SegmentRep | None) -> GLPair:
    lw = GL_ONE if left is None else GLWord((left,))
    rw = GL_ONE if right is None else GLWord((right,))
    return (lw, rw)


def m_star_segment(s: SegmentRep) -> FormalSum:
    """m* of a single segment representation.

    Delta splits keep the upper part on the left:
        sum_i  d([i+1, hi]) (x) d([lo, i]),   i = lo-1 .. hi
    and zeta splits mirror it, lower part on the left:
        sum_i  z([lo, i]) (x) z([i+1, hi]).
    """
    out: list[tuple[GLPair, int]] = []
    i = s.lo - 1
    while i <= s.hi:
        if s.kind is SegKind.DELTA:
            left = seg_or_none(SegKind.DELTA, s.rho, i + 1, s.hi)
            right = seg_or_none(SegKind.DELTA, s.rho, s.lo, i)
        else:
            left = seg_or_none(SegKind.ZETA, s.rho, s.lo, i)
            right = seg_or_none(SegKind.ZETA, s.rho, i + 1, s.hi)
        out.append((_pair(left, right), 1))
        i = i + 1
    return FormalSum.from_items(out)


def pair_product(a: GLPair, b: GLPair) -> GLPair:
    return (a[0] * b[0], a[1] * b[1])


def m_star_word(w: GLWord) -> FormalSum:
    """m* extended multiplicatively: m*(u x v) = m*(u) x m*(v)."""
    acc = FormalSum.basis((GL_ONE, GL_ONE))
    for f in w.factors:
        ms = m_star_segment(f)
        acc = acc.bind(
            lambda pair, ms=ms: ms.map_basis(lambda q: pair_product(pair, q))
        )
    return acc


def gl_dual_segment(s: SegmentRep, family: GroupFamily) -> SegmentRep:
    """Contragredient of a segment rep: [lo,hi] -> [-hi,-lo] of the dual symbol.

    The kind is preserved; for the odd GSpin family the symbol also picks up
    the central-character twist.
    """
    return SegmentRep(s.kind, s.rho.dual(family), -s.hi, -s.lo)


def gl_dual_word(w: GLWord, family: GroupFamily) -> GLWord:
    return GLWord.of(gl_dual_segment(f, family) for f in w.factors)


def zelevinsky_dual_segment(s: SegmentRep) -> SegmentRep:
    """Swap delta <-> zeta on the same segment; cuspidals are fixed points."""
    other = SegKind.ZETA if s.kind is SegKind.DELTA else SegKind.DELTA
    return SegmentRep(other, s.rho, s.lo, s.hi)


def expand_cuspidal_product(s: SegmentRep) -> FormalSum:
    """The two-term expansion nu^a rho x nu^(a+1) rho = delta + zeta.

    Given either flavour of a length-2 segment, returns the sum of the two
    single-factor words on that segment; the product word itself is
    ``cuspidal_pair_word``.
    """
    if s.length != 2:
        raise ValueError(
            f"closed expansion only exists for length-2 segments, got length {s.length}"
        )
    d = SegmentRep(SegKind.DELTA, s.rho, s.lo, s.hi)
    z = SegmentRep(SegKind.ZETA, s.rho, s.lo, s.hi)
    return FormalSum.basis(GLWord((d,))) + FormalSum.basis(GLWord((z,)))


def cuspidal_pair_word(rho: CuspidalGL, a) -> GLWord:
    """The product word nu^a rho x nu^(a+1) rho."""
    a = H(a)
    return GLWord.of(
        [
            SegmentRep(SegKind.DELTA, rho, a, a),
            SegmentRep(SegKind.DELTA, rho, a + 1, a + 1),
        ]
    )
