"""Reflexible regular maps on the torus via Gaussian and Eisenstein integers.

The maps {4,4}_{b,c} and {3,6}_{b,c} are quotients of the plane by a
principal ideal of Z[i] or Z[w] (w a primitive cube root of unity).  A
mirror automorphism of the universal map is a translation, so its order on
the torus is the additive order of the translation vector modulo the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Union

from .patterns import PatternReport, classify_type, dualize


@dataclass(frozen=True)
class GaussianInteger:
    """``a + b i`` with ``i^2 = -1``."""

    a: int
    b: int = 0

    def _coerce(self, other) -> GaussianInteger:
        if isinstance(other, GaussianInteger):
            return other
        if isinstance(other, int):
            return GaussianInteger(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return GaussianInteger(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GaussianInteger(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return GaussianInteger(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> GaussianInteger:
        return GaussianInteger(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b

    def exact_divide(self, d: GaussianInteger) -> GaussianInteger | None:
        """``self / d`` if it lies in Z[i], else None."""
        num, nd = self * d.conjugate(), d.norm()
        if num.a % nd or num.b % nd:
            return None
        return GaussianInteger(num.a // nd, num.b // nd)

    @classmethod
    def units(cls) -> tuple[GaussianInteger, ...]:
        return (cls(1), cls(-1), cls(0, 1), cls(0, -1))

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}i"


@dataclass(frozen=True)
class EisensteinInteger:
    """``a + b w`` with ``w^2 = -1 - w``."""

    a: int
    b: int = 0

    def _coerce(self, other) -> EisensteinInteger:
        if isinstance(other, EisensteinInteger):
            return other
        if isinstance(other, int):
            return EisensteinInteger(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return EisensteinInteger(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInteger(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
        bd = self.b * o.b
        return EisensteinInteger(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def conjugate(self) -> EisensteinInteger:
        # conj(w) = w^2 = -1 - w
        return EisensteinInteger(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def exact_divide(self, d: EisensteinInteger) -> EisensteinInteger | None:
        num, nd = self * d.conjugate(), d.norm()
        if num.a % nd or num.b % nd:
            return None
        return EisensteinInteger(num.a // nd, num.b // nd)

    @classmethod
    def units(cls) -> tuple[EisensteinInteger, ...]:
        w = cls(0, 1)
        w2 = w * w
        return (cls(1), cls(-1), w, -w, w2, -w2)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}w"


RingElement = Union[GaussianInteger, EisensteinInteger]


def ring_divides(d: RingElement, x: RingElement) -> bool:
    """True when ``x`` lies in the principal ideal ``(d)``."""
    if type(d) is not type(x):
        raise TypeError("ring_divides needs two elements of the same ring")
    if d.norm() == 0:
        raise ZeroDivisionError("ideal generator is zero")
    return x.exact_divide(d) is not None


def translation_order(v: RingElement, ideal_gen: RingElement) -> int:
    """Least ``k >= 1`` with ``k v`` in ``(ideal_gen)``."""
    if ideal_gen.norm() == 0:
        raise ZeroDivisionError("ideal generator is zero")
    if v.norm() == 0:
        raise ValueError("translation vector is zero")
    bound = ideal_gen.norm()
    for k in range(1, bound + 1):
        if ring_divides(ideal_gen, k * v):
            return k
    raise AssertionError("norm of the ideal generator always annihilates the quotient")


@dataclass(frozen=True)
class ToroidalMapId:
    family: str  # "44", "36" or "63"
    variant: str  # "b0" or "bb"
    b: int

    FAMILIES: ClassVar[tuple[str, ...]] = ("44", "36", "63")
    VARIANTS: ClassVar[tuple[str, ...]] = ("b0", "bb")

    def __post_init__(self) -> None:
        if self.family not in self.FAMILIES:
            raise ValueError(f"family must be one of {self.FAMILIES}")
        if self.variant not in self.VARIANTS:
            raise ValueError(f"variant must be one of {self.VARIANTS} (only these are reflexible)")
        if self.b < 1:
            raise ValueError("b must be positive")

    @property
    def c(self) -> int:
        return 0 if self.variant == "b0" else self.b

    @property
    def map_type(self) -> tuple[int, int]:
        return {"44": (4, 4), "36": (3, 6), "63": (6, 3)}[self.family]

    @property
    def vertices(self) -> int:
        b, c = self.b, self.c
        if self.family == "44":
            return b * b + c * c
        t = b * b + b * c + c * c
        return t if self.family == "36" else 2 * t

    @property
    def rotation_order(self) -> int:
        """Darts of the map, i.e. the order of its rotation group."""
        return self.vertices * self.map_type[1]

    def ideal(self) -> RingElement:
        if self.family == "44":
            return GaussianInteger(self.b, self.c)
        return EisensteinInteger(-self.c, self.b)

    def __str__(self) -> str:
        m, n = self.map_type
        return f"{{{m},{n}}}_{{{self.b},{self.c}}}"


# translation vectors of the mirror automorphisms, keyed by link
_SQUARE_TRANSLATIONS = {
    "01": GaussianInteger(1, 0),  # B C^-1 : z -> z + 1
    "12": GaussianInteger(0, 1),  # B^-1 C : z -> z + i
    "02": GaussianInteger(1, 1),  # B A C  : z -> z + 1 + i
}
_HEXAGONAL_TRANSLATIONS = {
    "01": EisensteinInteger(-1, 0),  # C^3 A         : z -> z - 1
    "0212": EisensteinInteger(-2, -1),  # C^3 B^2 C B^2 : z -> z - 2 - w
}


def toroidal_patterns(id: ToroidalMapId) -> list[PatternReport]:
    if id.family == "63":
        return dualize(toroidal_patterns(ToroidalMapId("36", id.variant, id.b)))
    moves = _SQUARE_TRANSLATIONS if id.family == "44" else _HEXAGONAL_TRANSLATIONS
    ideal = id.ideal()
    return [
        PatternReport(cls, link, translation_order(moves[link], ideal))
        for cls, link in classify_type(id.map_type)
    ]
