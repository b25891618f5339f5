"""The duality operator on standard-module words.

Two routes again:

* ``aubert_standard`` dualises each GL factor (kind swap plus negated,
  contragredient segment) and keeps the cuspidal atom, with the overall
  sign folded into a single parity, and
* ``aubert_bruteforce`` evaluates the defining alternating sum of
  induction-after-restriction over standard Levi subgroups, for words of
  cuspidal GL factors.

The brute force is normalised as  sum over compositions  (-1)^r  i o r
(r = number of GL blocks of the Levi), which differs from the textbook
alternating sum only by the constant global sign that hat-normalisation
drops; in this form it is still an involution.
"""

from __future__ import annotations

from functools import lru_cache

from .formal import FormalSum
from .glhopf import gl_dual_segment, zelevinsky_dual_segment
from .mustar import OpaqueAtomError, left_degree_slice, mu_star_word
from .symbols import CuspidalG, GroupFamily
from .words import GL_ONE, GLWord, GWord, NamedTempered


class MixedSignError(Exception):
    """A sum expected to be +/- (positive sum) had terms of both signs."""


class UnsupportedWordError(Exception):
    """Brute-force duality is only evaluated on words of cuspidal GL factors."""


def aubert_standard(w: GWord, family: GroupFamily) -> tuple[int, GWord]:
    """Factorwise dual: kind swap composed with the (twisted) contragredient.

    Returns (sign, word) with sign the parity (-1)^(total GL degree); all
    user-facing output should be the hat-normalised word.
    """
    if isinstance(w.atom, NamedTempered):
        raise OpaqueAtomError(f"cannot dualise over opaque atom {w.atom}")
    factors = [zelevinsky_dual_segment(gl_dual_segment(f, family)) for f in w.gl.factors]
    sign = -1 if w.gl.degree % 2 else 1
    return sign, GWord.of(factors, w.atom)


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """All ordered tuples of positive integers summing to n (one empty for 0)."""
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for head in range(1, n + 1):
        for tail in _compositions(n - head):
            out.append((head,) + tail)
    return tuple(out)


def aubert_bruteforce(w: GWord, family: GroupFamily, max_len: int = 4) -> FormalSum:
    """The alternating sum over standard Levis, as a signed sum of words.

    Every GL factor must be cuspidal (restriction of longer segments to
    arbitrary Levis is only available through mu* graded pieces, which is
    exactly what this routine uses; the cuspidal case is the one where the
    Levi <-> composition bookkeeping is faithful at symbol level).
    """
    if any(not f.is_cuspidal() for f in w.gl.factors):
        raise UnsupportedWordError("brute-force duality needs cuspidal GL factors")
    n = len(w.gl.factors)
    if n > max_len:
        raise UnsupportedWordError(f"word length {n} exceeds bound {max_len}")
    total = FormalSum.zero()
    for j in range(n + 1):
        for comp in _compositions(j):
            sign = -1 if len(comp) % 2 else 1
            total = total + _induce_restrict(w, comp, family).scale(sign)
    return total


def _induce_restrict(w: GWord, comp: tuple[int, ...], family: GroupFamily) -> FormalSum:
    """i_M o r_M for the standard Levi with GL blocks of the given sizes."""
    state = FormalSum.basis((GL_ONE, w))
    for k in comp:
        items = []
        for (acc, rest), c in state.items():
            for (blk, rest2), c2 in left_degree_slice(mu_star_word(rest, family), k).items():
                items.append(((acc * blk, rest2), c * c2))
        state = FormalSum.from_items(items)
    return FormalSum.from_items(
        ((rest.prepend(acc), c) for (acc, rest), c in state.items())
    )


def hat_normalize(s: FormalSum) -> FormalSum:
    """The positive representative of a +/-(positive sum)."""
    if not s:
        return s
    if s.is_nonnegative():
        return s
    if s.is_nonpositive():
        return -s
    raise MixedSignError("sum has terms of both signs after cancellation")


def hat_sign(s: FormalSum) -> int:
    if not s or s.is_nonnegative():
        return 1
    if s.is_nonpositive():
        return -1
    raise MixedSignError("sum has terms of both signs after cancellation")
