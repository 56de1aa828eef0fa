"""Side lengths of hyperbolic (2, m, n)-triangles and mirror lengths.

Corners are labelled by the geometric point they sit on: 0 (vertex, angle
pi/n), 1 (edge-centre, right angle) and 2 (face-centre, angle pi/m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .patterns import LINKS, MapType, admissible_links, as_map_type, canonical_link


def arcosh(x: float) -> float:
    if x < 1.0:
        raise ValueError(f"arcosh undefined for {x} < 1")
    y = x - 1.0
    return math.log1p(y + math.sqrt(y * (x + 1.0)))


@dataclass(frozen=True)
class TriangleSides:
    len01: float
    len02: float
    len12: float
    m: float
    n: float

    def side(self, a: str, b: str) -> float:
        key = "".join(sorted(a + b))
        return {"01": self.len01, "02": self.len02, "12": self.len12}[key]

    @property
    def perimeter(self) -> float:
        return self.len01 + self.len02 + self.len12


def triangle_sides(m: float | MapType, n: float | None = None) -> TriangleSides:
    """Sides of the right triangle with angles pi/2, pi/m (face) and pi/n (vertex).

    ``m`` and ``n`` may be non-integral, which is only useful for probing the
    Euclidean limit.
    """
    if isinstance(m, MapType):
        m, n = m.m, m.n
    if n is None:
        raise TypeError("triangle_sides needs a MapType or both m and n")
    # 1/2 + 1/m + 1/n < 1, kept exact for integers
    if not m * n > 2 * (m + n):
        raise ValueError(f"type {{{m},{n}}} is not hyperbolic")
    am, an = math.pi / m, math.pi / n
    return TriangleSides(
        len01=arcosh(math.cos(am) / math.sin(an)),
        len02=arcosh(1.0 / (math.tan(am) * math.tan(an))),
        len12=arcosh(math.cos(an) / math.sin(am)),
        m=m,
        n=n,
    )


def link_length(link: str, sides: TriangleSides) -> float:
    """Length of one link: each cyclically adjacent pair contributes a side.

    Any rotation or reversal of a link is accepted.
    """
    if not link or canonical_link(link) not in LINKS:
        raise ValueError(f"unknown link {link!r}")
    k = len(link)
    return sum(sides.side(link[i], link[(i + 1) % k]) for i in range(k))


def mirror_length(link: str, index: int, t: MapType | tuple[int, int]) -> float:
    t = as_map_type(t)
    if link not in admissible_links(t):
        raise ValueError(f"link {link} does not occur on maps of type {t}")
    if index < 1:
        raise ValueError("link index must be positive")
    return index * link_length(link, triangle_sides(t))
