"""Cuspidal symbols and group families.

Cuspidal representations enter the engine only through an opaque label, a
duality type and (on the classical-group side) a table of reducibility
exponents.  Nothing about actual supercuspidal representations is modelled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .halfint import H, HalfInt, HalfIntLike


class GroupFamily(Enum):
    SP_EVEN = "sp-even"
    SO_ODD = "so-odd"
    GSPIN_ODD = "gspin-odd"

    @staticmethod
    def parse(text: str) -> "GroupFamily":
        for fam in GroupFamily:
            if fam.value == text.strip().lower():
                return fam
        raise ValueError(f"unknown group family {text!r}")

    @property
    def twisted(self) -> bool:
        return self is GroupFamily.GSPIN_ODD


class Duality(Enum):
    SELF = "self-dual"
    ESSENTIALLY_SELF = "essentially-self-dual"
    GENERIC = "generic"

    @staticmethod
    def parse(text: str) -> "Duality":
        key = text.strip().lower().replace("_", "-")
        aliases = {
            "self": Duality.SELF,
            "self-dual": Duality.SELF,
            "self-contragredient": Duality.SELF,
            "essentially-self-dual": Duality.ESSENTIALLY_SELF,
            "essentially-self-contragredient": Duality.ESSENTIALLY_SELF,
            "ess-self": Duality.ESSENTIALLY_SELF,
            "generic": Duality.GENERIC,
        }
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown duality {text!r}")


class ConfigurationError(Exception):
    """A symbol or parameter set violates a declared invariant."""


@dataclass(frozen=True, order=True)
class CuspidalGL:
    """A cuspidal GL symbol, possibly decorated by contragredient/character twists.

    ``bar`` marks the contragredient and ``om`` a power of the similitude
    character; both decorations collapse for (essentially) self-dual symbols,
    so they only ever show on generic ones.
    """

    label: str
    duality: Duality = Duality.SELF
    bar: bool = False
    om: int = 0

    def __post_init__(self) -> None:
        if self.duality is not Duality.GENERIC and self.bar:
            raise ConfigurationError(
                f"{self.label}: bar decoration is only meaningful for generic symbols"
            )

    def _make(self, bar: bool, om: int) -> "CuspidalGL":
        # Collapse decorations per duality type.  For essentially self-dual
        # symbols the contragredient is normalised as rho~ = rho (x) omega^-1,
        # which makes the omega-twisted dual the identity.
        if self.duality is Duality.SELF:
            return CuspidalGL(self.label, self.duality, False, om) if om else \
                CuspidalGL(self.label, self.duality)
        if self.duality is Duality.ESSENTIALLY_SELF:
            if bar:
                bar, om = False, om - 1
            return CuspidalGL(self.label, self.duality, False, om)
        return CuspidalGL(self.label, self.duality, bar, om)

    def contragredient(self) -> "CuspidalGL":
        if self.duality is Duality.SELF:
            return self._make(False, -self.om)
        return self._make(not self.bar, -self.om)

    def omega_twist(self, power: int = 1) -> "CuspidalGL":
        return self._make(self.bar, self.om + power)

    def twisted_dual(self) -> "CuspidalGL":
        """Contragredient followed by the central-character twist (GSpin duality)."""
        return self.contragredient().omega_twist()

    def dual(self, family: GroupFamily) -> "CuspidalGL":
        return self.twisted_dual() if family.twisted else self.contragredient()

    def render(self) -> str:
        out = self.label
        if self.bar:
            out += "~"
        if self.om:
            out += "*w" if self.om == 1 else f"*w^{self.om}"
        return out

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class CuspidalG:
    """A cuspidal symbol on the classical-group side.

    ``reducibility`` lists, per GL symbol, the unique nonnegative exponent s
    at which nu^s rho |x| sigma reduces.  ``omega`` names the central
    character and is present exactly for the odd GSpin family.
    """

    label: str
    family: GroupFamily
    reducibility: tuple[tuple[CuspidalGL, HalfInt], ...] = ()
    omega: str | None = None

    def __post_init__(self) -> None:
        for rho, exp in self.reducibility:
            if exp < 0:
                raise ConfigurationError(
                    f"{self.label}: reducibility exponent for {rho} must be >= 0"
                )
        if (self.omega is not None) != self.family.twisted:
            raise ConfigurationError(
                f"{self.label}: omega must be present iff the family is gspin-odd"
            )

    def reducibility_of(self, rho: CuspidalGL) -> HalfInt:
        for sym, exp in self.reducibility:
            if sym == rho:
                return exp
        raise ConfigurationError(f"no reducibility exponent declared for {rho} vs {self.label}")

    def render(self) -> str:
        return self.label

    def __str__(self) -> str:
        return self.label

    def __lt__(self, other: "CuspidalG") -> bool:
        return self.label < other.label


def make_sigma(
    label: str,
    family: GroupFamily,
    reducibility: dict[CuspidalGL, HalfIntLike],
    omega: str | None = None,
) -> CuspidalG:
    table = tuple(sorted(((rho, H(e)) for rho, e in reducibility.items())))
    return CuspidalG(label, family, table, omega)


def contragredient_symbol(rho: CuspidalGL, omega: bool = False) -> CuspidalGL:
    """The contragredient symbol, with the central-character twist when asked.

    ``omega`` must be requested exactly when the ambient family is GSpin.
    """
    return rho.twisted_dual() if omega else rho.contragredient()
