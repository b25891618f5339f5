"""Langlands data and the named tempered symbols the classifier emits.

L(d_1, ..., d_k; tau) is stored as a sorted tuple of negative-exponent delta
segments plus an atom.  The named atoms carry their defining exponent
strings, so leading Jacquet terms are computable whenever a defining induced
word exists; atoms pinned down only by Jacquet-module side conditions are
recorded as such and excluded from flag queries.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .halfint import H, HalfInt, HalfIntLike, hrange
from .mustar import Flag, OpaqueAtomError
from .symbols import ConfigurationError, CuspidalG, CuspidalGL
from .words import (
    GLWord,
    GWord,
    GAtom,
    NamedTempered,
    SegKind,
    SegmentRep,
    atom_base,
    atom_flag,
    atom_render,
    atom_sort_key,
    cusp,
)


class NotLanglandsError(Exception):
    """The delta string has a non-negative exponent."""


def e_of_delta(s: SegmentRep) -> HalfInt:
    """The central exponent (lo + hi)/2 of a delta segment."""
    return HalfInt((s.lo.twice + s.hi.twice) // 2)


@dataclass(frozen=True)
class LanglandsData:
    """L(deltas; tempered atom), in canonical (e-sorted) form."""

    deltas: tuple[SegmentRep, ...]
    atom: GAtom

    def render(self) -> str:
        if not self.deltas:
            return f"L(; {atom_render(self.atom)})"
        body = ", ".join(d.render() for d in self.deltas)
        return f"L({body}; {atom_render(self.atom)})"

    def __str__(self) -> str:
        return self.render()

    def sort_key(self):
        return (
            tuple(d.sort_key() for d in self.deltas),
            atom_sort_key(self.atom),
        )


def normalize_langlands(
    deltas, atom: GAtom, allow_empty: bool = True
) -> LanglandsData:
    """Sort the delta string by exponent (ties by symbol, then lower end).

    Every factor must be a delta with e < 0; idempotent on sorted input.
    """
    ds = tuple(deltas)
    for d in ds:
        if d.kind is not SegKind.DELTA:
            raise NotLanglandsError(f"{d} is not a delta segment")
        if not e_of_delta(d) < 0:
            raise NotLanglandsError(f"{d} has exponent {e_of_delta(d)} >= 0")
    if not ds and not allow_empty:
        raise NotLanglandsError("empty delta string")
    ordered = tuple(
        sorted(ds, key=lambda d: (e_of_delta(d), d.rho, d.lo, d.hi))
    )
    return LanglandsData(ordered, atom)


@dataclass(frozen=True)
class SPBuilder:
    """Builder for the one-parameter family of ladder representations over a
    fixed cuspidal pair: the unique irreducible subrepresentation of the
    descending (delta flavour) or ascending (zeta flavour) exponent word."""

    class Kind(Enum):
        DELTA_SP = "delta-sp"
        ZETA_SP = "zeta-sp"

    rho: CuspidalGL
    x: HalfInt
    sigma: CuspidalG
    kind: "SPBuilder.Kind"

    def __post_init__(self) -> None:
        alpha = self.sigma.reducibility_of(self.rho)
        if self.x < alpha or not (self.x - alpha).is_integer():
            raise ConfigurationError(
                f"builder needs x >= {alpha} with x - {alpha} integral, got x={self.x}"
            )

    @property
    def alpha(self) -> HalfInt:
        return self.sigma.reducibility_of(self.rho)

    def exps(self) -> tuple[HalfInt, ...]:
        run = hrange(self.alpha, self.x)
        if self.kind is SPBuilder.Kind.DELTA_SP:
            return tuple(reversed(run))
        return tuple(-e for e in reversed(run))


def standard_word_of(data: Union[LanglandsData, SPBuilder]) -> GWord:
    """The defining induced word of Langlands data or a builder."""
    if isinstance(data, SPBuilder):
        return GWord.of([cusp(data.rho, e) for e in data.exps()], data.sigma)
    return GWord(GLWord.of(data.deltas), data.atom)


def leading_jacquet_term(data: LanglandsData) -> tuple[Flag, CuspidalG]:
    """The cuspidal flag Frobenius extracts from the Langlands embedding.

    Each delta contributes its descending exponent string; the atom then
    contributes its registered flag.  Raises for atoms without one.
    """
    flag: list[tuple[CuspidalGL, HalfInt]] = []
    for d in data.deltas:
        e = d.hi
        while e >= d.lo:
            flag.append((d.rho, e))
            e = e - 1
    tail = atom_flag(data.atom)
    if tail is None:
        raise OpaqueAtomError(f"atom {atom_render(data.atom)} has no registered flag")
    flag.extend(tail)
    return tuple(flag), atom_base(data.atom)


# -- named tempered symbols ----------------------------------------------------


def zeta_sp(rho: CuspidalGL, x: HalfIntLike, sigma: CuspidalG) -> SPBuilder:
    return SPBuilder(rho, H(x), sigma, SPBuilder.Kind.ZETA_SP)


def delta_sp_builder(rho: CuspidalGL, x: HalfIntLike, sigma: CuspidalG) -> SPBuilder:
    return SPBuilder(rho, H(x), sigma, SPBuilder.Kind.DELTA_SP)


def delta_sp_atom(rho: CuspidalGL, x: HalfIntLike, sigma: CuspidalG) -> NamedTempered:
    """The strongly positive symbol attached to the descending word
    nu^x rho x ... x nu^alpha rho |x| sigma."""
    builder = delta_sp_builder(rho, x, sigma)
    return NamedTempered("dsp", sigma, rho, builder.exps())


def word_sp_atom(
    rho: CuspidalGL, lo: HalfIntLike, hi: HalfIntLike, sigma: CuspidalG
) -> NamedTempered:
    """The strongly positive symbol attached to the ascending word
    nu^lo rho x nu^(lo+1) rho x ... x nu^hi rho |x| sigma."""
    exps = tuple(hrange(lo, hi))
    if not exps:
        raise ConfigurationError("empty defining word for a strongly positive symbol")
    return NamedTempered("sp", sigma, rho, exps)


def tau_pair_member(rho0: CuspidalGL, sigma: CuspidalG, sign: int) -> NamedTempered:
    """One of the two tempered summands of rho0 |x| sigma at reducibility 0.

    The labelling of the two members is fixed but arbitrary; only their
    Jacquet-module side conditions distinguish them."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return NamedTempered(
        "tpair",
        sigma,
        rho0,
        (H(0),),
        tag=sign,
        note="summand of rho0 |x| sigma distinguished by its Jacquet module",
    )


def tau_unit(rho0: CuspidalGL, sigma: CuspidalG) -> NamedTempered:
    """The irreducible rho0 |x| sigma itself (reducibility exponent > 0)."""
    return NamedTempered("tunit", sigma, rho0, (H(0),))


def tau_half_ladder(rho0: CuspidalGL, beta: HalfIntLike, sigma: CuspidalG) -> NamedTempered:
    """Strongly positive symbol of nu^1/2 rho0 x nu^3/2 rho0 x ... x nu^beta rho0 |x| sigma."""
    beta = H(beta)
    exps = tuple(hrange(HalfInt(1), beta))
    if not exps:
        raise ConfigurationError(f"half ladder needs beta >= 1/2, got {beta}")
    return NamedTempered("sp", sigma, rho0, exps)


def tau_cotempered(rho0: CuspidalGL, beta: HalfIntLike, sigma: CuspidalG) -> NamedTempered:
    """The tempered summand of rho0 |x| (ladder of nu rho0 .. nu^beta rho0 over sigma)
    whose Jacquet module avoids nu rho0 (x) pi; pinned by that side condition
    only, hence excluded from flag queries."""
    beta = H(beta)
    if not beta.is_integer() or beta < 1:
        raise ConfigurationError(f"cotempered symbol needs integral beta >= 1, got {beta}")
    exps = (H(0),) + tuple(hrange(H(1), beta))
    return NamedTempered(
        "tds",
        sigma,
        rho0,
        exps,
        flagged=False,
        note="does not contain nu rho0 (x) pi in the Jacquet module",
    )


def tau_half_tempered(rho: CuspidalGL, sigma: CuspidalG) -> NamedTempered:
    """The tempered summand of d([-1/2,1/2;rho]) |x| sigma that does not embed
    in nu^1/2 rho x nu^1/2 rho |x| sigma (reducibility exponent 1/2)."""
    return NamedTempered(
        "trs",
        sigma,
        rho,
        (HalfInt(1), HalfInt(-1)),
        note="not a subrepresentation of nu^1/2 rho x nu^1/2 rho |x| sigma",
    )


def sigma_ds_member(
    rho: CuspidalGL, exps: tuple[HalfInt, ...], sigma: CuspidalG, which: int
) -> NamedTempered:
    """One of a pair of discrete-series subrepresentations distinguished only
    by Jacquet-module conditions; no registered flag."""
    return NamedTempered(
        "dsds",
        sigma,
        rho,
        exps,
        tag=which,
        flagged=False,
        note="member of a non-isomorphic discrete-series pair",
    )
