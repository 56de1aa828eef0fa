"""Links, mirror automorphisms and link indices.

Geometric points are labelled ``0`` (vertex), ``1`` (edge-centre) and ``2``
(face-centre).  A mirror's label sequence is a link repeated ``index``
times; the link is determined by the parities of the map type and the
index is the order of the corresponding mirror automorphism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .presentations import (
    DEFAULT_BUDGET,
    ROTATION_ALPHABET,
    CosetTable,
    Presentation,
    Word,
    element_order,
    enumerate_cosets,
)

LINKS = ("01", "02", "12", "0102", "0212", "010212")
CLASSES = ("P", "Q", "R")
INFINITE = math.inf


@dataclass(frozen=True, order=True)
class MapType:
    m: int
    n: int

    def __post_init__(self) -> None:
        if int(self.m) != self.m or int(self.n) != self.n or self.m < 2 or self.n < 2:
            raise ValueError(f"map type needs integers m, n >= 2, got {{{self.m},{self.n}}}")

    @property
    def parity(self) -> str:
        p = {0: "even", 1: "odd"}
        return f"{p[self.m % 2]}-{p[self.n % 2]}"

    @property
    def dual(self) -> MapType:
        return MapType(self.n, self.m)

    @property
    def curvature(self) -> str:
        s = 2 * self.m * self.n - (self.m * self.n + 2 * self.n + 2 * self.m)
        # sign of 1 - 1/2 - 1/m - 1/n
        return "spherical" if s < 0 else "euclidean" if s == 0 else "hyperbolic"

    def __str__(self) -> str:
        return f"{{{self.m},{self.n}}}"


def as_map_type(t: MapType | tuple[int, int]) -> MapType:
    return t if isinstance(t, MapType) else MapType(*t)


def canonical_link(labels: str) -> str:
    """Least rotation of ``labels`` or of its reversal."""
    if not labels:
        raise ValueError("empty label sequence")
    options = []
    for s in (labels, labels[::-1]):
        options += [s[k:] + s[:k] for k in range(len(s))]
    return min(options)


def dual_link(link: str) -> str:
    return canonical_link(link.translate(str.maketrans("02", "20")))


def split_pattern(labels: str) -> tuple[str, int]:
    """Decompose a cyclic label sequence into ``(link, repetitions)``."""
    size = len(labels)
    for p in range(1, size + 1):
        if size % p == 0 and labels == labels[:p] * (size // p):
            link = canonical_link(labels[:p])
            if link not in LINKS:
                raise ValueError(f"label sequence {labels!r} has period {link!r}, not a link")
            return link, size // p
    raise AssertionError("unreachable")


_TABLE = {
    "odd-odd": {"P": "010212", "Q": "010212", "R": "010212"},
    "odd-even": {"P": "01", "Q": "0212", "R": "0212"},
    "even-even": {"P": "01", "Q": "12", "R": "02"},
    "even-odd": {"P": "0102", "Q": "12", "R": "0102"},
}


def classify_type(t: MapType | tuple[int, int]) -> list[tuple[str, str]]:
    """Link of the mirror through each side of the base triangle."""
    row = _TABLE[as_map_type(t).parity]
    return [(c, row[c]) for c in CLASSES]


def admissible_links(t: MapType | tuple[int, int]) -> set[str]:
    return {link for _, link in classify_type(t)}


def _mirror_word_text(link: str, m: int, n: int) -> str:
    if link == "01":
        return f"C^{n // 2}A"
    if link == "02":
        return f"B^{m // 2}C^{n // 2}"
    if link == "12":
        return f"B^{m // 2}A"
    if link == "0102":
        h = (n + 1) // 2
        return f"C^{h}BC^{h}B^{m // 2}"
    if link == "0212":
        h = (m + 1) // 2
        return f"C^{n // 2}B^{h}CB^{h}"
    if link == "010212":
        hm, hn = (m + 1) // 2, (n + 1) // 2
        return f"B^{hm}CB^{hm}C^{hn}BC^{hn}"
    raise ValueError(f"unknown link {link!r}")


def mirror_automorphism_word(link: str, t: MapType | tuple[int, int]) -> Word:
    """Rotation word whose order is the link index of mirrors with ``link``."""
    t = as_map_type(t)
    if link not in LINKS:
        raise ValueError(f"unknown link {link!r}")
    if link not in admissible_links(t):
        raise ValueError(f"link {link} does not occur on maps of type {t}")
    return Word.parse(_mirror_word_text(link, t.m, t.n), ROTATION_ALPHABET)


def link_index(table: CosetTable, link: str, t: MapType | tuple[int, int]) -> int:
    return element_order(table, mirror_automorphism_word(link, t))


@dataclass(frozen=True)
class PatternReport:
    reflection_class: str
    link: str
    link_index: int | float
    mirror_count: int | None = None
    length: float | None = None

    def __post_init__(self) -> None:
        if self.reflection_class not in CLASSES:
            raise ValueError(f"reflection class must be one of {CLASSES}")
        if self.link not in LINKS:
            raise ValueError(f"unknown link {self.link!r}")
        if not (self.link_index == INFINITE or (int(self.link_index) == self.link_index >= 1)):
            raise ValueError(f"link index must be a positive integer, got {self.link_index}")

    @property
    def finite(self) -> bool:
        return self.link_index != INFINITE

    @property
    def pattern(self) -> str:
        if not self.finite:
            return f"({self.link})^inf"
        return self.link * int(self.link_index)

    @property
    def notation(self) -> str:
        k = "inf" if not self.finite else int(self.link_index)
        return f"({self.link})^{k}"


def universal_patterns(t: MapType | tuple[int, int]) -> list[PatternReport]:
    """Patterns on the universal (infinite) map of type ``t``."""
    return [PatternReport(c, link, INFINITE) for c, link in classify_type(t)]


def reports_from_table(table: CosetTable, t: MapType | tuple[int, int]) -> list[PatternReport]:
    t = as_map_type(t)
    orders: dict[str, int] = {}
    out = []
    for c, link in classify_type(t):
        if link not in orders:
            orders[link] = link_index(table, link, t)
        out.append(PatternReport(c, link, orders[link]))
    return out


def full_pattern_report(
    p: Presentation,
    t: MapType | tuple[int, int],
    budget: int = DEFAULT_BUDGET,
    strategy: str = "hlt",
) -> list[PatternReport]:
    """Enumerate the rotation group of ``p`` and report every reflection class."""
    if p.generators != ROTATION_ALPHABET:
        raise ValueError("full_pattern_report needs a rotation presentation on A, B, C")
    table = enumerate_cosets(p, (), budget, strategy)
    return reports_from_table(table, t)


_SWAP_CLASS = {"P": "Q", "Q": "P", "R": "R"}


def dualize(reports: Iterable[PatternReport]) -> list[PatternReport]:
    """Reports for the dual map: ``0 <-> 2`` in links and ``P <-> Q`` in classes."""
    out = [
        replace(r, reflection_class=_SWAP_CLASS[r.reflection_class], link=dual_link(r.link))
        for r in reports
    ]
    return sorted(out, key=lambda r: CLASSES.index(r.reflection_class))


def link_summary(reports: Sequence[PatternReport]) -> dict[str, int | float]:
    """Map each distinct link to its index.

    Raises if two classes share a link but disagree on the index.
    """
    out: dict[str, int | float] = {}
    for r in reports:
        if out.setdefault(r.link, r.link_index) != r.link_index:
            raise ValueError(f"classes with link {r.link} disagree on the index")
    return dict(sorted(out.items(), key=lambda kv: LINKS.index(kv[0])))
