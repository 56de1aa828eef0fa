"""Named families of regular maps and their expected mirror patterns.

Each family constructor returns a :class:`FamilyMap` carrying a rotation
presentation, the map type and the patterns the theory predicts.  The
predictions are independent of the coset computation, so comparing the two
is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .lattice_tori import ToroidalMapId
from .patterns import (
    MapType,
    PatternReport,
    as_map_type,
    classify_type,
    dualize,
    reports_from_table,
)
from .presentations import (
    DEFAULT_BUDGET,
    ROTATION_ALPHABET,
    Presentation,
    Word,
    dual_presentation,
    element_order,
    enumerate_cosets,
    read_presentation,
)
from .presentations.triangle import extended_triangle_presentation, triangle_presentation

HURWITZ_MIRROR_WORD = "B^2CB^2C^4BC^4"


@dataclass(frozen=True)
class FamilyMap:
    name: str
    presentation: Presentation
    map_type: MapType
    expected: tuple[PatternReport, ...]
    rotation_order: int | None = None
    given_extended: Presentation | None = field(default=None, compare=False)

    def dual(self) -> FamilyMap:
        return FamilyMap(
            name=f"dual {self.name}",
            presentation=dual_presentation(self.presentation),
            map_type=self.map_type.dual,
            expected=tuple(dualize(self.expected)),
            rotation_order=self.rotation_order,
            given_extended=(
                dual_presentation(self.given_extended) if self.given_extended else None
            ),
        )

    def genus(self) -> int | None:
        if self.rotation_order is None:
            return None
        return genus_from_order(self.map_type, self.rotation_order)


def _expected(t: MapType, indices: dict[str, int]) -> tuple[PatternReport, ...]:
    return tuple(PatternReport(c, link, indices[link]) for c, link in classify_type(t))


def genus_from_order(t: MapType | tuple[int, int], rotation_group_order: int) -> int:
    """Genus of a regular map of type ``t`` whose rotation group has the given order."""
    t = as_map_type(t)
    N = rotation_group_order
    if N % t.n or N % 2 or N % t.m:
        raise ValueError(f"order {N} is not compatible with type {t}")
    chi = N // t.n - N // 2 + N // t.m
    if chi % 2 or chi > 2:
        raise ValueError(f"order {N} with type {t} gives Euler characteristic {chi}")
    return (2 - chi) // 2


def accola_maclachlan(g: int) -> FamilyMap:
    if g < 2:
        raise ValueError("Accola-Maclachlan maps need genus g >= 2")
    t = MapType(2 * g + 2, 4)
    p = triangle_presentation(t.m, t.n, "(C^-1B)^2")
    ext = extended_triangle_presentation(t.m, t.n, "(PRQR)^2")
    expected = _expected(t, {"01": 2, "02": 2, "12": 2 if g % 2 else 4})
    return FamilyMap(f"accola_maclachlan g={g}", p, t, expected, 8 * (g + 1), ext)


def wiman_I(g: int) -> FamilyMap:
    """Wiman map of type I: rotation group cyclic of order 4g+2."""
    if g < 2:
        raise ValueError("Wiman type I maps need genus g >= 2")
    t = MapType(4 * g + 2, 2 * g + 1)
    p = triangle_presentation(t.m, t.n, "BCB^-1C^-1")
    expected = _expected(t, {"12": 1, "0102": 1})
    return FamilyMap(f"wiman_I g={g}", p, t, expected, 4 * g + 2)


def wiman_II(g: int) -> FamilyMap:
    if g < 3:
        raise ValueError("Wiman type II maps need genus g >= 3")
    t = MapType(4 * g, 4)
    p = triangle_presentation(t.m, t.n, f"C^2B^{2 * g}")
    ext = extended_triangle_presentation(t.m, t.n, f"(RP)^2(QR)^{2 * g}")
    expected = _expected(t, {"01": 2, "12": 2, "02": 1})
    return FamilyMap(f"wiman_II g={g}", p, t, expected, 8 * g, ext)


def bolza() -> FamilyMap:
    """The {3,8} map on the Bolza surface (rotation group GL(2,3))."""
    t = MapType(3, 8)
    p = triangle_presentation(3, 8, "(C^4A)^2")
    return FamilyMap("bolza", p, t, _expected(t, {"01": 2, "0212": 2}), 48)


def fermat_map(n: int) -> FamilyMap:
    """The {3,2n} map on the Fermat curve of degree n.

    The extra relator makes ``C^2`` and ``A C^2 A`` commute, which is what
    cuts the triangle group down to (Z_n x Z_n) x| S_3.
    """
    if n < 2:
        raise ValueError("Fermat curves need degree n >= 2")
    t = MapType(3, 2 * n)
    p = triangle_presentation(3, 2 * n, "C^2AC^2AC^-2AC^-2A")
    idx = {"01": 3, "0212": n} if n % 2 else {"01": 4, "0212": 2}
    return FamilyMap(f"fermat n={n}", p, t, _expected(t, idx), 6 * n * n)


def hurwitz_presentation(K: int) -> Presentation:
    if K < 1:
        raise ValueError("relator power K must be >= 1")
    return triangle_presentation(3, 7, f"({HURWITZ_MIRROR_WORD})^{K}")


def toroidal_map(id: ToroidalMapId) -> FamilyMap:
    """Finite presentation of a reflexible torus map by translation relators."""
    b = id.b
    if id.family == "63":
        return toroidal_map(ToroidalMapId("36", id.variant, b)).dual()
    if id.family == "44":
        # B C^-1 and B^-1 C translate by 1 and i
        extra = f"(BC^-1)^{b}" if id.variant == "b0" else f"(BC^-1)^{b}(B^-1C)^{b}"
        p = triangle_presentation(4, 4, extra)
        idx = {"01": b, "12": b, "02": b} if id.variant == "b0" else {"01": 2 * b, "12": 2 * b, "02": b}
    else:
        # C^3 A translates by -1; conjugating by C rotates it through 60 degrees
        extra = f"(C^3A)^{b}" if id.variant == "b0" else f"(C^3A)^{b}C(C^3A)^{b}C^-1"
        p = triangle_presentation(3, 6, extra)
        idx = {"01": b, "0212": b} if id.variant == "b0" else {"01": 3 * b, "0212": b}
    t = as_map_type(id.map_type)
    return FamilyMap(f"torus {id}", p, t, _expected(t, idx), id.rotation_order)


SPHERICAL = {
    "tetrahedron": (3, 3),
    "octahedron": (3, 4),
    "cube": (4, 3),
    "icosahedron": (3, 5),
    "dodecahedron": (5, 3),
}


def spherical_map(name: str) -> FamilyMap:
    """Platonic solids plus ``hosohedron:n`` {2,n} and ``dihedron:n`` {n,2}."""
    if name in SPHERICAL:
        m, n = SPHERICAL[name]
    else:
        kind, _, k = name.partition(":")
        if kind not in ("hosohedron", "dihedron") or not k.isdigit() or int(k) < 2:
            raise ValueError(f"unknown spherical map {name!r}")
        m, n = (2, int(k)) if kind == "hosohedron" else (int(k), 2)
    t = MapType(m, n)
    order = 4 * m * n // (2 * m + 2 * n - m * n)
    return FamilyMap(name, triangle_presentation(m, n), t, (), order)


# ---------------------------------------------------------------------------
# exact matrix models


@dataclass(frozen=True)
class MatrixModP:
    """2x2 matrix ``[[a, b], [c, d]]`` over the integers mod ``p``."""

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.p)
        if self.det() == 0:
            raise ValueError("matrix is singular")

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def __mul__(self, o: MatrixModP) -> MatrixModP:
        return MatrixModP(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.p,
        )

    def inverse(self) -> MatrixModP:
        di = pow(self.det(), -1, self.p)
        return MatrixModP(self.d * di, -self.b * di, -self.c * di, self.a * di, self.p)

    def __pow__(self, k: int) -> MatrixModP:
        base = self if k >= 0 else self.inverse()
        out = MatrixModP(1, 0, 0, 1, self.p)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def order(self) -> int:
        x, k = self, 1
        while not x.is_identity():
            x, k = x * self, k + 1
        return k

    def signed(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Entries with representatives in (-p/2, p/2]."""
        h = self.p // 2

        def s(v: int) -> int:
            return v - self.p if v > h else v

        return ((s(self.a), s(self.b)), (s(self.c), s(self.d)))


def evaluate(w: Word, images: dict[str, object], identity):
    """Multiply out ``w`` under a generator assignment (left to right)."""
    out = identity
    for x in w.letters:
        g = images[w.alphabet[abs(x) - 1]]
        out = out * (g if x > 0 else g.inverse())
    return out


@dataclass(frozen=True)
class BolzaCheck:
    A: MatrixModP
    B: MatrixModP
    C: MatrixModP
    S1: MatrixModP  # C^4 B^2 C B^2
    S2: MatrixModP  # C^4 A
    order_S1: int
    order_S2: int
    reports: tuple[PatternReport, ...]


def bolza_matrix_check() -> BolzaCheck:
    A = MatrixModP(1, 1, 0, -1, 3)
    B = MatrixModP(0, -1, 1, -1, 3)
    C = B.inverse() * A
    gens = {"A": A, "B": B, "C": C}
    one = MatrixModP(1, 0, 0, 1, 3)
    S1 = evaluate(Word.parse("C^4B^2CB^2"), gens, one)
    S2 = evaluate(Word.parse("C^4A"), gens, one)
    o1, o2 = S1.order(), S2.order()
    t = MapType(3, 8)
    reports = tuple(
        PatternReport(c, link, o2 if link == "01" else o1) for c, link in classify_type(t)
    )
    return BolzaCheck(A, B, C, S1, S2, o1, o2, reports)


@dataclass(frozen=True)
class MonomialMatrix:
    """Monomial 3x3 matrix with n-th root of unity entries, up to scalars.

    Column ``j`` has its nonzero entry ``lambda**exps[j]`` in row
    ``perm[j]``.  The canonical form has ``exps[0] == 0``.
    """

    perm: tuple[int, int, int]
    exps: tuple[int, int, int]
    n: int

    def __post_init__(self) -> None:
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError("perm must be a permutation of (0, 1, 2)")
        shift = self.exps[0]
        object.__setattr__(self, "exps", tuple((e - shift) % self.n for e in self.exps))

    @classmethod
    def identity(cls, n: int) -> MonomialMatrix:
        return cls((0, 1, 2), (0, 0, 0), n)

    @classmethod
    def from_entries(cls, entries: dict[tuple[int, int], int], n: int) -> MonomialMatrix:
        """Build from ``{(row, col): exponent}`` with one entry per column."""
        perm = [0, 0, 0]
        exps = [0, 0, 0]
        for (r, c), e in entries.items():
            perm[c], exps[c] = r, e
        return cls(tuple(perm), tuple(exps), n)

    def __mul__(self, o: MonomialMatrix) -> MonomialMatrix:
        if o.n != self.n:
            raise ValueError("root orders differ")
        perm = tuple(self.perm[o.perm[j]] for j in range(3))
        exps = tuple(o.exps[j] + self.exps[o.perm[j]] for j in range(3))
        return MonomialMatrix(perm, exps, self.n)

    def inverse(self) -> MonomialMatrix:
        perm = [0, 0, 0]
        exps = [0, 0, 0]
        for j in range(3):
            perm[self.perm[j]] = j
            exps[self.perm[j]] = -self.exps[j]
        return MonomialMatrix(tuple(perm), tuple(exps), self.n)

    def __pow__(self, k: int) -> MonomialMatrix:
        base = self if k >= 0 else self.inverse()
        out = MonomialMatrix.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self == MonomialMatrix.identity(self.n)

    def order(self) -> int:
        x, k = self, 1
        while not x.is_identity():
            x, k = x * self, k + 1
        return k

    def entries(self) -> dict[tuple[int, int], int]:
        return {(self.perm[j], j): self.exps[j] for j in range(3)}


def fermat_generators(n: int) -> tuple[MonomialMatrix, MonomialMatrix, MonomialMatrix]:
    if n < 2:
        raise ValueError("Fermat curves need degree n >= 2")
    # (row, col) -> exponent of lambda; rows/cols 0-based
    A = MonomialMatrix.from_entries({(0, 1): 1, (1, 0): -1, (2, 2): 0}, n)
    B = MonomialMatrix.from_entries({(0, 1): 1, (1, 2): 0, (2, 0): 0}, n)
    C = MonomialMatrix.from_entries({(0, 2): 0, (1, 1): 0, (2, 0): -1}, n)
    return A, B, C


FERMAT_CLOSURE_CAP = 12


def closure_size(gens: Sequence, identity, cap: int | None = None) -> int:
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if cap is not None and len(seen) > cap:
                        raise ValueError(f"closure exceeds {cap} elements")
        frontier = nxt
    return len(seen)


def fermat_group_order(n: int, cap_degree: int = FERMAT_CLOSURE_CAP) -> int:
    if n > cap_degree:
        raise ValueError(f"closure enumeration capped at n <= {cap_degree}")
    A, B, C = fermat_generators(n)
    return closure_size((A, B, C), MonomialMatrix.identity(n))


def fermat_patterns(n: int) -> list[PatternReport]:
    A, B, C = fermat_generators(n)
    gens = {"A": A, "B": B, "C": C}
    one = MonomialMatrix.identity(n)
    S1 = evaluate(Word.parse(f"C^{n}B^2CB^2"), gens, one)
    S2 = evaluate(Word.parse(f"C^{n}A"), gens, one)
    order = {"0212": S1.order(), "01": S2.order()}
    return [PatternReport(c, link, order[link]) for c, link in classify_type((3, 2 * n))]


def fermat_genus(n: int) -> int:
    return (n - 1) * (n - 2) // 2


# ---------------------------------------------------------------------------
# Hurwitz quotients


@dataclass(frozen=True)
class HurwitzResult:
    K: int
    order: int
    genus: int | None
    mirror_order: int | None
    reports: tuple[PatternReport, ...]


def hurwitz_quotient(K: int, budget: int = DEFAULT_BUDGET, strategy: str = "hlt") -> HurwitzResult:
    """Adjoin ``S^K`` to the (2,3,7) triangle group and enumerate.

    ``S`` is the mirror automorphism of the Hurwitz map.  Order 1 means no
    surface exists with link index dividing ``K``.
    """
    table = enumerate_cosets(hurwitz_presentation(K), (), budget, strategy)
    if table.index == 1:
        return HurwitzResult(K, 1, None, None, ())
    t = MapType(3, 7)
    s_order = element_order(table, Word.parse(HURWITZ_MIRROR_WORD))
    return HurwitzResult(
        K,
        table.index,
        genus_from_order(t, table.index),
        s_order,
        tuple(reports_from_table(table, t)),
    )


def hurwitz_map(K: int) -> FamilyMap:
    """Hurwitz quotient as a family map (only meaningful for K = 2, 3)."""
    order = {2: 504, 3: 168}.get(K)
    t = MapType(3, 7)
    return FamilyMap(f"hurwitz K={K}", hurwitz_presentation(K), t, _expected(t, {"010212": K}), order)


# ---------------------------------------------------------------------------
# fixtures


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    m: int
    n: int
    order: int | None
    links: dict[str, int] = field(default_factory=dict)
    strategy: str = "hlt"


def read_manifest(directory: str | Path) -> dict[str, ManifestEntry]:
    """Read ``<dir>/manifest``.

    One entry per line: ``name m n order [link:index ...] [strategy=felsch]``;
    ``order`` may be ``-`` when unknown.  ``#`` starts a comment.
    """
    path = Path(directory) / "manifest"
    entries: dict[str, ManifestEntry] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        try:
            name, m, n, order, *links = line
            parsed, strategy = {}, "hlt"
            for item in links:
                if item.startswith("strategy="):
                    strategy = item.partition("=")[2]
                    if strategy not in ("hlt", "felsch"):
                        raise ValueError(strategy)
                    continue
                link, _, k = item.partition(":")
                parsed[link] = int(k)
            entries[name] = ManifestEntry(
                name, int(m), int(n), None if order == "-" else int(order), parsed, strategy
            )
        except ValueError as exc:
            raise FixtureError(f"{path}:{lineno}: malformed manifest line: {raw!r}") from exc
    return entries


def _power_relators(p: Presentation) -> dict[str, list[int]]:
    powers: dict[str, list[int]] = {g: [] for g in p.generators}
    for r in p.relators:
        gens = {abs(x) for x in r.letters}
        if len(gens) == 1:
            powers[p.generators[gens.pop() - 1]].append(len(r))
    return powers


def check_declared_type(p: Presentation, t: MapType) -> None:
    if p.generators != ROTATION_ALPHABET:
        raise FixtureError("fixture presentations must use generators A B C")
    powers = _power_relators(p)
    for g, k in (("A", 2), ("B", t.m), ("C", t.n)):
        if not any(k % e == 0 for e in powers[g]):
            raise FixtureError(f"no relator {g}^e with e dividing {k} for declared type {t}")
    abc = Word.parse("ABC").letters
    rotations = {abc[i:] + abc[:i] for i in range(3)}
    if not any(r.letters in rotations for r in p.relators):
        raise FixtureError("fixture lacks the relator ABC")


@dataclass(frozen=True)
class FixtureResult:
    presentation: Presentation
    map_type: MapType
    order: int
    genus: int
    reports: tuple[PatternReport, ...]


def fixture_map(
    path: str | Path,
    declared: MapType | tuple[int, int],
    budget: int = DEFAULT_BUDGET,
    strategy: str = "hlt",
) -> FixtureResult:
    t = as_map_type(declared)
    p = read_presentation(path)
    check_declared_type(p, t)
    table = enumerate_cosets(p, (), budget, strategy)
    for g, k in (("A", 2), ("B", t.m), ("C", t.n)):
        got = element_order(table, Word.generator(g, ROTATION_ALPHABET))
        if got != k:
            raise FixtureError(f"{g} has order {got} in the fixture group, type {t} needs {k}")
    return FixtureResult(
        p, t, table.index, genus_from_order(t, table.index), tuple(reports_from_table(table, t))
    )


FAMILIES = ("accola_maclachlan", "wiman_I", "wiman_II", "fermat", "hurwitz", "bolza", "spherical", "torus")


def family_map(family: str, param: str | int | None) -> FamilyMap:
    """Look up a family by CLI-style name and parameter string."""
    if family in ("accola_maclachlan", "am"):
        return accola_maclachlan(int(param))
    if family == "wiman_I":
        return wiman_I(int(param))
    if family == "wiman_II":
        return wiman_II(int(param))
    if family == "fermat":
        return fermat_map(int(param))
    if family == "hurwitz":
        return hurwitz_map(int(param))
    if family == "bolza":
        return bolza()
    if family == "spherical":
        return spherical_map(str(param))
    if family == "torus":
        fam, variant, b = str(param).split(",")
        return toroidal_map(ToroidalMapId(fam, variant, int(b)))
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
