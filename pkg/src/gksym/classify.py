"""Reducibility and composition factors of the degenerate principal series.

The input is z([-b,-a;rho0]) |x| (zeta ladder of rho over sigma up to x).
After the contragredient normalisation -a <= b and the two early
irreducibility exits, a guard-ordered decision table with mutually exclusive
guards produces the factor list of the matching case.  Elided "..." runs in
the source lists are generator loops; an ascending run whose start exceeds
its end contributes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

from .halfint import H, HalfInt, HalfIntLike, hrange
from .langlands import (
    LanglandsData,
    delta_sp_atom,
    normalize_langlands,
    tau_cotempered,
    tau_half_ladder,
    tau_half_tempered,
    tau_pair_member,
    tau_unit,
    word_sp_atom,
    zeta_sp,
    standard_word_of,
)
from .symbols import ConfigurationError, CuspidalG, CuspidalGL, Duality, GroupFamily
from .words import GWord, GAtom, SegKind, SegmentRep, cusp, delta, zeta


class CoverageError(Exception):
    """No decision-table case matched a legal parameter tuple (engine bug)."""


@dataclass(frozen=True)
class DPSParams:
    """Parameters of the degenerate principal series under study."""

    family: GroupFamily
    rho: CuspidalGL
    rho0: CuspidalGL
    sigma: CuspidalG
    a: HalfInt
    b: HalfInt
    x: HalfInt

    def __post_init__(self) -> None:
        alpha = self.alpha
        if not (self.b - self.a).is_integer() or self.b < self.a:
            raise ConfigurationError(
                f"need b - a a non-negative integer, got a={self.a}, b={self.b}"
            )
        if alpha <= 0:
            raise ConfigurationError(
                f"reducibility exponent of {self.rho} must be positive, got {alpha}"
            )
        if self.x < alpha or not (self.x - alpha).is_integer():
            raise ConfigurationError(
                f"need x >= alpha with x - alpha integral, got x={self.x}, alpha={alpha}"
            )
        if self.beta < 0:
            raise ConfigurationError(f"beta must be >= 0, got {self.beta}")
        if self.same and self.beta != alpha:
            raise ConfigurationError("rho0 == rho forces beta == alpha")

    @property
    def same(self) -> bool:
        return self.rho0 == self.rho

    @property
    def alpha(self) -> HalfInt:
        return self.sigma.reducibility_of(self.rho)

    @property
    def beta(self) -> HalfInt:
        return self.sigma.reducibility_of(self.rho0)


@dataclass(frozen=True)
class Verdict:
    case_id: str
    criterion: str
    factors: tuple[LanglandsData, ...]
    swapped: bool = False

    @property
    def irreducible(self) -> bool:
        return not self.factors

    def render(self) -> str:
        if self.irreducible:
            return f"irreducible  [{self.case_id}]"
        lines = [f"{len(self.factors)} factors  [{self.case_id}]"]
        lines += [f"  {f.render()}" for f in self.factors]
        return "\n".join(lines)


def _selfdual_for_family(rho: CuspidalGL, family: GroupFamily) -> bool:
    want = Duality.ESSENTIALLY_SELF if family.twisted else Duality.SELF
    return rho.duality is want


def normalize_params(p: DPSParams) -> tuple[DPSParams, bool, Optional[str]]:
    """Swap (a,b) -> (-b,-a) when -a > b; detect the early-irreducible exits.

    Returns (params, swapped, early_case_id or None).
    """
    swapped = False
    if -p.a > p.b:
        p = replace(p, a=-p.b, b=-p.a)
        swapped = True
    if not _selfdual_for_family(p.rho0, p.family):
        return p, swapped, "early-nonselfdual"
    if not (p.a - p.beta).is_integer():
        return p, swapped, "early-offlattice"
    return p, swapped, None


# -- run builders --------------------------------------------------------------


def S(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> list[SegmentRep]:
    return [cusp(rho, c) for c in hrange(lo, hi)]


def D2(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> list[SegmentRep]:
    return [cusp(rho, c) for c in hrange(lo, hi) for _ in range(2)]


def T3(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> list[SegmentRep]:
    return [cusp(rho, c) for c in hrange(lo, hi) for _ in range(3)]


def PAIRS(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> list[SegmentRep]:
    """d([c-1, c]) for c = lo .. hi."""
    return [delta(rho, c - 1, c) for c in hrange(lo, hi)]


def ALT_DS(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> list[SegmentRep]:
    """d([c-1, c]), nu^c  for c = lo .. hi."""
    out: list[SegmentRep] = []
    for c in hrange(lo, hi):
        out += [delta(rho, c - 1, c), cusp(rho, c)]
    return out


def ALT_SD(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> list[SegmentRep]:
    """nu^(c-1), d([c-1, c])  for c = lo .. hi."""
    out: list[SegmentRep] = []
    for c in hrange(lo, hi):
        out += [cusp(rho, c - 1), delta(rho, c - 1, c)]
    return out


def SEG3(rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike) -> list[SegmentRep]:
    """d([c-2, c]) for c = lo .. hi."""
    return [delta(rho, c - 2, c) for c in hrange(lo, hi)]


# -- decision table -------------------------------------------------------------


@dataclass(frozen=True)
class _Case:
    case_id: str
    criterion: str
    guard: Callable[[DPSParams], bool]
    build: Optional[Callable[[DPSParams], list[LanglandsData]]]


def _L(parts: list[SegmentRep], atom: GAtom) -> LanglandsData:
    return normalize_langlands(parts, atom)


def _m1(e: HalfInt) -> HalfInt:
    """ceil(e) - e - 1: the top of the near-zero doubled runs."""
    return e.ceil() - e - 1


def _tau1(p: DPSParams) -> GAtom:
    return tau_unit(p.rho0, p.sigma) if p.a.is_integer() else p.sigma


def _tau2(p: DPSParams) -> GAtom:
    if p.a.is_integer():
        return tau_cotempered(p.rho0, p.beta, p.sigma)
    return tau_half_ladder(p.rho0, p.beta, p.sigma)


def _build_cases() -> list[_Case]:
    cases: list[_Case] = []

    def case(case_id: str, criterion: str, guard, build=None) -> None:
        cases.append(_Case(case_id, criterion, guard, build))

    # ---- beta = 0 -------------------------------------------------------
    def in_b0(p: DPSParams) -> bool:
        return p.beta == 0

    case(
        "beta0-irred",
        "beta = 0: irreducible iff a >= 1",
        lambda p: in_b0(p) and p.a >= 1,
    )

    def b0_lt(p: DPSParams) -> list[LanglandsData]:
        r, r0, s = p.rho, p.rho0, p.sigma
        base = S(r, -p.x, -p.alpha)
        f12 = base + S(r0, -p.b, p.a - 1) + D2(r0, p.a, -1)
        f3 = base + S(r0, -p.b, p.a - 2) + PAIRS(r0, p.a, 0)
        return [
            _L(f12, tau_pair_member(r0, s, +1)),
            _L(f12, tau_pair_member(r0, s, -1)),
            _L(f3, s),
        ]

    case(
        "beta0-neg-a-lt-b",
        "beta = 0, a <= 0, -a < b: three factors",
        lambda p: in_b0(p) and p.a <= 0 and -p.a < p.b,
        b0_lt,
    )

    def b0_eq(p: DPSParams) -> list[LanglandsData]:
        r, r0, s = p.rho, p.rho0, p.sigma
        f = S(r, -p.x, -p.alpha) + D2(r0, p.a, -1)
        return [
            _L(f, tau_pair_member(r0, s, +1)),
            _L(f, tau_pair_member(r0, s, -1)),
        ]

    case(
        "beta0-neg-a-eq-b",
        "beta = 0, a <= 0, -a = b: two factors",
        lambda p: in_b0(p) and p.a <= 0 and -p.a == p.b,
        b0_eq,
    )

    # ---- a >= 1, beta > 0 -----------------------------------------------
    def in_a1(p: DPSParams) -> bool:
        return p.beta > 0 and p.a >= 1

    def a1_same_red(p: DPSParams) -> bool:
        al = p.alpha
        return (p.a <= al - 1 <= p.b and p.b < p.x) or (p.a <= p.x + 1 and p.x < p.b)

    case(
        "age1-same-irred",
        "a >= 1, rho0 = rho: irreducible unless a<=alpha-1<=b<x or (a<=x+1 and x<b)",
        lambda p: in_a1(p) and p.same and not a1_same_red(p),
    )

    def a1_same_r1(p: DPSParams) -> list[LanglandsData]:
        r, s, al = p.rho, p.sigma, p.alpha
        f1 = S(r, -p.x, -p.b - 1) + D2(r, -p.b, -al) + S(r, -al + 1, -p.a)
        f2 = S(r, -p.x, -p.b - 2) + PAIRS(r, -p.b, -al + 1) + S(r, -al + 2, -p.a)
        return [_L(f1, s), _L(f2, s)]

    case(
        "age1-same-r1",
        "a >= 1, rho0 = rho, a <= alpha-1 <= b < x: two factors",
        lambda p: in_a1(p)
        and p.same
        and p.a <= p.alpha - 1 <= p.b
        and p.b < p.x,
        a1_same_r1,
    )

    def a1_same_r2(p: DPSParams) -> list[LanglandsData]:
        r, s, al = p.rho, p.sigma, p.alpha
        if p.a > al:
            f1 = S(r, -p.b, -p.x - 1) + D2(r, -p.x, -p.a) + S(r, -p.a + 1, -al)
            f2 = S(r, -p.b, -p.x - 2) + PAIRS(r, -p.x, -p.a + 1) + S(r, -p.a + 2, -al)
            return [_L(f1, s), _L(f2, s)]
        f1 = S(r, -p.b, -p.x - 1) + D2(r, -p.x, -al) + S(r, -al + 1, -p.a)
        f2 = S(r, -p.b, -p.x - 2) + PAIRS(r, -p.x, -al)
        return [_L(f1, s), _L(f2, word_sp_atom(r, p.a, al, s))]

    case(
        "age1-same-r2",
        "a >= 1, rho0 = rho, a <= x+1 and x < b: two factors",
        lambda p: in_a1(p) and p.same and p.a <= p.x + 1 and p.x < p.b,
        a1_same_r2,
    )

    case(
        "age1-diff-irred",
        "a >= 1, rho0 != rho: irreducible iff a > beta or b < beta",
        lambda p: in_a1(p) and not p.same and (p.a > p.beta or p.b < p.beta),
    )

    def a1_diff(p: DPSParams) -> list[LanglandsData]:
        r, r0, s = p.rho, p.rho0, p.sigma
        base = S(r, -p.x, -p.alpha)
        f1 = base + S(r0, -p.b, -p.a)
        f2 = base + S(r0, -p.b, -p.beta - 1)
        return [_L(f1, s), _L(f2, word_sp_atom(r0, p.a, p.beta, s))]

    case(
        "age1-diff-red",
        "a >= 1, rho0 != rho, a <= beta <= b: two factors",
        lambda p: in_a1(p) and not p.same and p.a <= p.beta <= p.b,
        a1_diff,
    )

    # ---- a <= 0, beta > 0 -------------------------------------------------
    def in_a0(p: DPSParams) -> bool:
        return p.beta > 0 and p.a <= 0

    def a0s(p: DPSParams) -> bool:
        return in_a0(p) and p.same

    # -a = b subfamily
    case(
        "ale0-same-sym-irred",
        "a <= 0, rho0 = rho, -a = b: irreducible iff -a <= alpha-2 or -a = x",
        lambda p: a0s(p)
        and -p.a == p.b
        and (-p.a <= p.alpha - 2 or -p.a == p.x),
    )

    def a0_sym_red(p: DPSParams) -> list[LanglandsData]:
        r, s, al = p.rho, p.sigma, p.alpha
        t1 = _tau1(p)
        f1 = S(r, -p.x, p.a - 1) + T3(r, p.a, -al) + D2(r, -al + 1, _m1(al))
        head = S(r, -p.x, p.a - 2)
        if al >= H(3) - H(1) - H(0):  # alpha >= 3/2
            pass
        if al >= HalfInt(3):  # 3/2
            f2 = head + ALT_DS(r, p.a, -al + 1) + D2(r, -al + 2, _m1(al))
            a2: GAtom = t1
        elif al == 1:
            f2 = head + ALT_DS(r, p.a, -1) + [delta(r, -1, 0)]
            a2 = s
        else:  # alpha = 1/2
            f2 = head + ALT_DS(r, p.a, HalfInt(-3)) + [delta(r, HalfInt(-3), HalfInt(-1))]
            a2 = tau_half_tempered(r, s)
        return [_L(f1, t1), _L(f2, a2)]

    case(
        "ale0-same-sym-red",
        "a <= 0, rho0 = rho, -a = b, alpha-2 < -a < x: two factors",
        lambda p: a0s(p) and -p.a == p.b and p.alpha - 2 < -p.a < p.x,
        a0_sym_red,
    )

    def a0_sym_gt(p: DPSParams) -> list[LanglandsData]:
        r, s, al = p.rho, p.sigma, p.alpha
        f1 = D2(r, p.a, -p.x - 1) + T3(r, -p.x, -al) + D2(r, -al + 1, _m1(al))
        f2 = D2(r, p.a, -p.x - 2) + ALT_SD(r, -p.x, -al) + S(r, -al, _m1(al))
        return [_L(f1, _tau1(p)), _L(f2, _tau2(p))]

    case(
        "ale0-same-sym-negagtx",
        "a <= 0, rho0 = rho, -a = b > x: two factors",
        lambda p: a0s(p) and -p.a == p.b and -p.a > p.x,
        a0_sym_gt,
    )

    # -a < b subfamily
    def a0m(p: DPSParams) -> bool:
        return a0s(p) and -p.a < p.b

    case(
        "ale0-same-irred-smallb",
        "a <= 0, rho0 = rho, -a < b: irreducible if b < alpha-1",
        lambda p: a0m(p) and p.b < p.alpha - 1,
    )
    case(
        "ale0-same-irred-beqx",
        "a <= 0, rho0 = rho, -a < b: irreducible if -a < alpha-1 and b = x",
        lambda p: a0m(p) and -p.a < p.alpha - 1 and p.b == p.x,
    )

    def a0_negagtx(p: DPSParams) -> list[LanglandsData]:
        r, al = p.rho, p.alpha
        t1, t2 = _tau1(p), _tau2(p)
        f1 = (
            S(r, -p.b, p.a - 1)
            + D2(r, p.a, -p.x - 1)
            + T3(r, -p.x, -al)
            + D2(r, -al + 1, _m1(al))
        )
        f2 = (
            S(r, -p.b, p.a - 1)
            + D2(r, p.a, -p.x - 2)
            + ALT_SD(r, -p.x, -al)
            + S(r, -al, _m1(al))
        )
        f3 = (
            S(r, -p.b, p.a - 2)
            + PAIRS(r, p.a, -p.x - 1)
            + ALT_DS(r, -p.x, -al)
            + S(r, -al + 1, _m1(al))
        )
        return [_L(f1, t1), _L(f2, t2), _L(f3, t2)]

    case(
        "ale0-same-negagtx",
        "a <= 0, rho0 = rho, x < -a < b: three factors",
        lambda p: a0m(p) and -p.a > p.x,
        a0_negagtx,
    )

    def a0_negaeqx(p: DPSParams) -> list[LanglandsData]:
        r, al = p.rho, p.alpha
        f1 = S(r, -p.b, p.a - 2) + ALT_DS(r, p.a, -al) + S(r, -al + 1, _m1(al))
        f2 = S(r, -p.b, p.a - 1) + T3(r, p.a, -al) + D2(r, -al + 1, _m1(al))
        return [_L(f1, _tau2(p)), _L(f2, _tau1(p))]

    case(
        "ale0-same-punaind-negaeqx",
        "a <= 0, rho0 = rho, -a = x < b: two factors",
        lambda p: a0m(p) and -p.a == p.x,
        a0_negaeqx,
    )

    def _pi_tail_ds(p: DPSParams, head: list[SegmentRep]) -> LanglandsData:
        """Common tail for the 'delta-then-single' secondary factors."""
        r, s, al = p.rho, p.sigma, p.alpha
        if al >= HalfInt(3):
            return _L(
                head + ALT_DS(r, p.a, -al + 1) + D2(r, -al + 2, _m1(al)), _tau1(p)
            )
        if al == 1:
            return _L(head + ALT_DS(r, p.a, -1) + [delta(r, -1, 0)], s)
        return _L(
            head + ALT_DS(r, p.a, HalfInt(-3)) + [delta(r, HalfInt(-3), HalfInt(-1))],
            tau_half_tempered(r, s),
        )

    def _pi_tail_sd(p: DPSParams, head: list[SegmentRep]) -> LanglandsData:
        """Common tail for the 'single-then-delta' secondary factors."""
        r, s, al = p.rho, p.sigma, p.alpha
        if al >= HalfInt(3):
            return _L(
                head
                + ALT_SD(r, p.a, -al + 1)
                + [cusp(r, -al + 1)]
                + D2(r, -al + 2, _m1(al)),
                _tau1(p),
            )
        if al == 1:
            return _L(head + ALT_SD(r, p.a, 0), s)
        return _L(head + ALT_SD(r, p.a, HalfInt(-1)), tau_half_tempered(r, s))

    def a0_mid_bltx(p: DPSParams) -> list[LanglandsData]:
        r, al = p.rho, p.alpha
        main = (
            S(r, -p.x, -p.b - 1)
            + D2(r, -p.b, p.a - 1)
            + T3(r, p.a, -al)
            + D2(r, -al + 1, _m1(al))
        )
        pi1 = _pi_tail_ds(p, S(r, -p.x, -p.b - 2) + PAIRS(r, -p.b, p.a - 1))
        pi2 = _pi_tail_sd(p, S(r, -p.x, -p.b - 1) + D2(r, -p.b, p.a - 2))
        return [_L(main, _tau1(p)), pi1, pi2]

    case(
        "ale0-same-mid-bltx",
        "a <= 0, rho0 = rho, alpha-1 <= -a < b < x: three factors",
        lambda p: a0m(p) and p.alpha - 1 <= -p.a and -p.a < p.x and p.b < p.x,
        a0_mid_bltx,
    )

    def a0_mid_xltb(p: DPSParams) -> list[LanglandsData]:
        r, s, al = p.rho, p.sigma, p.alpha
        main1 = (
            S(r, -p.b, -p.x - 1)
            + D2(r, -p.x, p.a - 1)
            + T3(r, p.a, -al)
            + D2(r, -al + 1, _m1(al))
        )
        main2 = (
            S(r, -p.b, -p.x - 2)
            + PAIRS(r, -p.x, p.a - 1)
            + ALT_DS(r, p.a, -al)
            + S(r, -al + 1, _m1(al))
        )
        pi1 = _pi_tail_sd(p, S(r, -p.b, -p.x - 1) + D2(r, -p.x, p.a - 2))
        head2 = S(r, -p.b, -p.x - 2) + PAIRS(r, -p.x, p.a - 2)
        if al >= HalfInt(3):
            pi2 = _L(head2 + SEG3(r, p.a, -al + 1) + S(r, -al + 2, _m1(al)), _tau2(p))
        elif al == 1:
            pi2 = _L(head2 + SEG3(r, p.a, 0), delta_sp_atom(r, 1, s))
        else:
            pi2 = _L(head2 + SEG3(r, p.a, HalfInt(1)), s)
        return [_L(main1, _tau1(p)), _L(main2, _tau2(p)), pi1, pi2]

    case(
        "ale0-same-mid-xltb",
        "a <= 0, rho0 = rho, alpha-1 <= -a < x < b: four factors",
        lambda p: a0m(p) and p.alpha - 1 <= -p.a and -p.a < p.x and p.x < p.b,
        a0_mid_xltb,
    )

    def a0_mid_beqx(p: DPSParams) -> list[LanglandsData]:
        r, al = p.rho, p.alpha
        f1 = D2(r, -p.b, p.a - 1) + T3(r, p.a, -al) + D2(r, -al + 1, _m1(al))
        pi = _pi_tail_sd(p, D2(r, -p.b, p.a - 2))
        return [_L(f1, _tau1(p)), pi]

    case(
        "ale0-same-mid-beqx",
        "a <= 0, rho0 = rho, alpha-1 <= -a < x, b = x: two factors",
        lambda p: a0m(p)
        and p.alpha - 1 <= -p.a
        and -p.a < p.x
        and p.b == p.x,
        a0_mid_beqx,
    )

    def a0_smallnega(p: DPSParams) -> list[LanglandsData]:
        r, al = p.rho, p.alpha
        t1 = _tau1(p)
        f1 = (
            S(r, -p.x, -p.b - 1)
            + D2(r, -p.b, -al)
            + S(r, -al + 1, p.a - 1)
            + D2(r, p.a, _m1(al))
        )
        f2 = (
            S(r, -p.x, -p.b - 2)
            + PAIRS(r, -p.b, -al + 1)
            + S(r, -al + 2, p.a - 1)
            + D2(r, p.a, _m1(al))
        )
        return [_L(f1, t1), _L(f2, t1)]

    case(
        "ale0-same-smallnega",
        "a <= 0, rho0 = rho, -a <= alpha-2, alpha-1 <= b < x: two factors",
        lambda p: a0m(p)
        and -p.a <= p.alpha - 2
        and p.alpha - 1 <= p.b
        and p.b < p.x,
        a0_smallnega,
    )

    def a0_punaind(p: DPSParams) -> list[LanglandsData]:
        r, al = p.rho, p.alpha
        f1 = S(r, -p.b, -p.x - 2) + PAIRS(r, -p.x, -al) + S(r, p.a, _m1(al))
        f2 = (
            S(r, -p.b, -p.x - 1)
            + D2(r, -p.x, -al)
            + S(r, -al + 1, p.a - 1)
            + D2(r, p.a, _m1(al))
        )
        return [_L(f1, _tau2(p)), _L(f2, _tau1(p))]

    case(
        "ale0-same-punaind-xltb",
        "a <= 0, rho0 = rho, -a < alpha-1, x < b: two factors",
        lambda p: a0m(p) and -p.a < p.alpha - 1 and p.x < p.b,
        a0_punaind,
    )

    # rho0 != rho
    def a0d(p: DPSParams) -> bool:
        return in_a0(p) and not p.same

    case(
        "ale0-diff-irred",
        "a <= 0, rho0 != rho: irreducible iff b < beta",
        lambda p: a0d(p) and p.b < p.beta,
    )

    def a0_diff_sym(p: DPSParams) -> list[LanglandsData]:
        r, r0, be = p.rho, p.rho0, p.beta
        base = S(r, -p.x, -p.alpha)
        f1 = base + D2(r0, -p.b, _m1(be))
        f2 = base + D2(r0, -p.b, -be) + S(r0, -be + 1, _m1(be))
        return [_L(f1, _tau1(p)), _L(f2, _tau2(p))]

    case(
        "ale0-diff-sym",
        "a <= 0, rho0 != rho, beta <= b = -a: two factors",
        lambda p: a0d(p) and p.b >= p.beta and -p.a == p.b,
        a0_diff_sym,
    )

    def a0_diff_mid(p: DPSParams) -> list[LanglandsData]:
        r, r0, be = p.rho, p.rho0, p.beta
        base = S(r, -p.x, -p.alpha)
        f1 = base + S(r0, -p.b, p.a - 1) + D2(r0, p.a, _m1(be))
        f2 = (
            base
            + S(r0, -p.b, p.a - 1)
            + D2(r0, p.a, -be)
            + S(r0, -be + 1, _m1(be))
        )
        f3 = (
            base
            + S(r0, -p.b, p.a - 2)
            + PAIRS(r0, p.a, -be)
            + S(r0, -be + 1, _m1(be))
        )
        return [_L(f1, _tau1(p)), _L(f2, _tau2(p)), _L(f3, _tau2(p))]

    case(
        "ale0-diff-mid",
        "a <= 0, rho0 != rho, beta <= -a < b: three factors",
        lambda p: a0d(p) and p.beta <= -p.a and -p.a < p.b,
        a0_diff_mid,
    )

    def a0_diff_beqbeta(p: DPSParams) -> list[LanglandsData]:
        r, r0, be = p.rho, p.rho0, p.beta
        base = S(r, -p.x, -p.alpha)
        f1 = base + S(r0, -p.b, p.a - 1) + D2(r0, p.a, _m1(be))
        f2 = base + S(r0, p.a, _m1(be))
        return [_L(f1, _tau1(p)), _L(f2, _tau2(p))]

    case(
        "ale0-diff-beqbeta",
        "a <= 0, rho0 != rho, -a < beta = b: two factors",
        lambda p: a0d(p) and -p.a < p.beta and p.b == p.beta,
        a0_diff_beqbeta,
    )

    def a0_diff_bgtbeta(p: DPSParams) -> list[LanglandsData]:
        r, r0, be = p.rho, p.rho0, p.beta
        base = S(r, -p.x, -p.alpha)
        f1 = base + S(r0, -p.b, p.a - 1) + D2(r0, p.a, _m1(be))
        f2 = base + S(r0, -p.b, -be - 1) + S(r0, p.a, _m1(be))
        return [_L(f1, _tau1(p)), _L(f2, _tau2(p))]

    case(
        "ale0-diff-bgtbeta",
        "a <= 0, rho0 != rho, -a < beta < b: two factors",
        lambda p: a0d(p) and -p.a < p.beta and p.b > p.beta,
        a0_diff_bgtbeta,
    )

    # ---- a = 1/2, beta > 0 -------------------------------------------------
    def in_ah(p: DPSParams) -> bool:
        return p.beta > 0 and p.a == HalfInt(1)

    def ahs(p: DPSParams) -> bool:
        return in_ah(p) and p.same

    case(
        "ahalf-same-irred",
        "a = 1/2, rho0 = rho: irreducible iff (alpha > 1/2 and b = x) or b < alpha-1",
        lambda p: ahs(p)
        and (
            (p.alpha > HalfInt(1) and p.b == p.x) or p.b < p.alpha - 1
        ),
    )

    def ah_xltb(p: DPSParams) -> list[LanglandsData]:
        r, s, al = p.rho, p.sigma, p.alpha
        f1 = S(r, -p.b, -p.x - 2) + PAIRS(r, -p.x, -al)
        f2 = S(r, -p.b, -p.x - 1) + D2(r, -p.x, -al) + S(r, -al + 1, HalfInt(-1))
        return [_L(f1, _tau2(p)), _L(f2, s)]

    case(
        "ahalf-same-xltb",
        "a = 1/2, rho0 = rho, alpha > 1/2, x < b: two factors",
        lambda p: ahs(p) and p.alpha > HalfInt(1) and p.x < p.b,
        ah_xltb,
    )

    def ah_bltx(p: DPSParams) -> list[LanglandsData]:
        r, s, al = p.rho, p.sigma, p.alpha
        f1 = S(r, -p.x, -p.b - 1) + D2(r, -p.b, -al) + S(r, -al + 1, HalfInt(-1))
        f2 = S(r, -p.x, -p.b - 2) + PAIRS(r, -p.b, -al + 1) + S(r, -al + 2, HalfInt(-1))
        return [_L(f1, s), _L(f2, s)]

    case(
        "ahalf-same-bltx",
        "a = 1/2, rho0 = rho, alpha > 1/2, alpha-1 <= b < x: two factors",
        lambda p: ahs(p)
        and p.alpha > HalfInt(1)
        and p.alpha - 1 <= p.b
        and p.b < p.x,
        ah_bltx,
    )

    def ah_quad(p: DPSParams) -> list[LanglandsData]:
        r, s = p.rho, p.sigma
        f1 = S(r, -p.b, -p.x - 1) + D2(r, -p.x, HalfInt(-1))
        f2 = (
            S(r, -p.b, -p.x - 2)
            + PAIRS(r, -p.x, HalfInt(-3))
            + [delta(r, HalfInt(-3), HalfInt(1))]
        )
        f3 = S(r, -p.b, -p.x - 2) + PAIRS(r, -p.x, HalfInt(-1))
        f4 = S(r, -p.b, -p.x - 1) + D2(r, -p.x, HalfInt(-3))
        return [
            _L(f1, s),
            _L(f2, s),
            _L(f3, delta_sp_atom(r, HalfInt(1), s)),
            _L(f4, tau_half_tempered(r, s)),
        ]

    case(
        "ahalf-same-quad",
        "a = 1/2, rho0 = rho, alpha = 1/2, x < b: four factors",
        lambda p: ahs(p) and p.alpha == HalfInt(1) and p.x < p.b,
        ah_quad,
    )

    def ah_blex(p: DPSParams) -> list[LanglandsData]:
        r, s = p.rho, p.sigma
        f1 = S(r, -p.x, -p.b - 1) + D2(r, -p.b, HalfInt(-3))
        f2 = S(r, -p.x, -p.b - 1) + D2(r, -p.b, HalfInt(-1))
        return [_L(f1, tau_half_tempered(r, s)), _L(f2, s)]

    case(
        "ahalf-same-blex",
        "a = 1/2, rho0 = rho, alpha = 1/2, b <= x: two factors",
        lambda p: ahs(p) and p.alpha == HalfInt(1) and p.b <= p.x,
        ah_blex,
    )

    def ahd(p: DPSParams) -> bool:
        return in_ah(p) and not p.same

    case(
        "ahalf-diff-irred",
        "a = 1/2, rho0 != rho: irreducible iff b < beta",
        lambda p: ahd(p) and p.b < p.beta,
    )

    def ah_diff(p: DPSParams) -> list[LanglandsData]:
        r, r0, s = p.rho, p.rho0, p.sigma
        base = S(r, -p.x, -p.alpha)
        f1 = base + S(r0, -p.b, HalfInt(-1))
        f2 = base + S(r0, -p.b, -p.beta - 1)
        return [_L(f1, s), _L(f2, _tau2(p))]

    case(
        "ahalf-diff-red",
        "a = 1/2, rho0 != rho, b >= beta: two factors",
        lambda p: ahd(p) and p.b >= p.beta,
        ah_diff,
    )

    return cases


_CASES = _build_cases()


def classify(p: DPSParams) -> Verdict:
    """Reducibility verdict and composition factors for the given parameters."""
    q, swapped, early = normalize_params(p)
    if early is not None:
        crit = {
            "early-nonselfdual": "irreducible: rho0 is not (essentially) self-contragredient",
            "early-offlattice": "irreducible: a - beta is not an integer",
        }[early]
        return Verdict(early, crit, (), swapped)
    matches = [c for c in _CASES if c.guard(q)]
    if len(matches) != 1:
        ids = [c.case_id for c in matches]
        raise CoverageError(
            f"decision table matched {len(matches)} cases {ids} for {q}"
        )
    case = matches[0]
    factors = () if case.build is None else tuple(case.build(q))
    return Verdict(case.case_id, case.criterion, factors, swapped)


# -- the two standard words -----------------------------------------------------


def dps_word(p: DPSParams) -> GWord:
    """The degenerate principal series as a standard word: the zeta segment
    joined over the zeta-ladder's defining cuspidal word."""
    q, _, _ = normalize_params(p)
    ladder = standard_word_of(zeta_sp(q.rho, q.x, q.sigma))
    seg = zeta(q.rho0, -q.b, -q.a)
    return ladder.prepend(GWord.of([seg], q.sigma).gl) if False else GWord.of(
        (seg,) + ladder.gl.factors, q.sigma
    )


def dual_side(p: DPSParams) -> GWord:
    """The dual generalized principal series word: d([a,b]) over the
    (family-twisted) contragredient of rho0, joined to the descending
    delta-ladder word."""
    q, _, _ = normalize_params(p)
    seg = delta(q.rho0.dual(q.family), q.a, q.b)
    ladder = standard_word_of(
        SPBuilderProxy(q.rho, q.x, q.sigma)
    )
    return GWord.of((seg,) + ladder.gl.factors, q.sigma)


def SPBuilderProxy(rho, x, sigma):
    from .langlands import delta_sp_builder

    return delta_sp_builder(rho, x, sigma)
