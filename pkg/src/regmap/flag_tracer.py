"""Brute-force mirror tracing on the flag complex of a finite regular map.

Flags are the (2,m,n)-triangles of the barycentric subdivision, one per
element of the full automorphism group ``<P, Q, R>``.  The flag ``g``
meets ``gP``, ``gQ`` and ``gR`` across its sides:

* the P-side joins a vertex (0) and an edge-centre (1),
* the Q-side joins an edge-centre (1) and a face-centre (2),
* the R-side joins a face-centre (2) and a vertex (0).

A reflection ``t`` fixes the x-side of flag ``g`` pointwise exactly when
``t g = g x``.  The fixed sides form disjoint cycles through the corner
points; reading the corner labels around a cycle gives its pattern.  None
of this uses mirror-automorphism words, so it is an independent check on
:mod:`regmap.patterns`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .patterns import CLASSES, MapType, as_map_type, reports_from_table, split_pattern
from .presentations import (
    DEFAULT_BUDGET,
    REFLECTION_ALPHABET,
    ROTATION_ALPHABET,
    CosetTable,
    Presentation,
    Word,
    enumerate_cosets,
    extended_presentation,
)

# corner labels at the two ends of each side type
SIDE_CORNERS = {"P": ("0", "1"), "Q": ("1", "2"), "R": ("2", "0")}


class TraceError(ValueError):
    pass


def _orbits(rows: Sequence[Sequence[int]], cols: Sequence[int]) -> tuple[list[int], int]:
    n = len(rows)
    label = [-1] * n
    count = 0
    for start in range(n):
        if label[start] >= 0:
            continue
        label[start] = count
        stack = [start]
        while stack:
            g = stack.pop()
            for c in cols:
                h = rows[g][c]
                if label[h] < 0:
                    label[h] = count
                    stack.append(h)
        count += 1
    return label, count


@dataclass(frozen=True)
class FlagComplex:
    table: CosetTable
    map_type: MapType
    corner_of: dict[str, tuple[int, ...]]  # label "0"/"1"/"2" -> point id per flag
    corner_counts: dict[str, int]
    tree: tuple[tuple[int, int, int], ...]  # (flag, parent, column) in BFS order
    parity: tuple[int, ...]  # 0 for orientation-preserving flags

    @property
    def flags(self) -> int:
        return self.table.index

    @property
    def vertices(self) -> int:
        return self.corner_counts["0"]

    @property
    def edges(self) -> int:
        return self.corner_counts["1"]

    @property
    def faces(self) -> int:
        return self.corner_counts["2"]

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - self.edges + self.faces

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    def element(self, w: Word) -> int:
        return self.table.apply(0, w)

    def left_multiplication(self, t: int) -> list[int]:
        """``g -> t g`` on flags, via the breadth-first spanning tree."""
        rows = self.table.rows
        out = [0] * self.flags
        out[0] = t
        for g, parent, col in self.tree:
            out[g] = rows[out[parent]][col]
        return out


def build_flag_complex(
    p: Presentation,
    t: MapType | tuple[int, int],
    budget: int = DEFAULT_BUDGET,
    strategy: str = "hlt",
) -> FlagComplex:
    """Enumerate the full group and label every flag's corners.

    ``p`` may be the reflection presentation on P, Q, R or a rotation
    presentation on A, B, C (converted with :func:`extended_presentation`).
    """
    t = as_map_type(t)
    if p.generators == ROTATION_ALPHABET:
        p = extended_presentation(p)
    if p.generators != REFLECTION_ALPHABET:
        raise ValueError("flag complex needs a presentation on P, Q, R")
    table = enumerate_cosets(p, (), budget, strategy)
    rows = table.rows
    col = {x: table.column(x) for x in REFLECTION_ALPHABET}
    corner_of, counts = {}, {}
    for label, pair in (("0", "RP"), ("1", "PQ"), ("2", "QR")):
        ids, k = _orbits(rows, [col[pair[0]], col[pair[1]]])
        corner_of[label], counts[label] = tuple(ids), k
    N = table.index
    expected = {"0": 2 * t.n, "1": 4, "2": 2 * t.m}
    for label, size in expected.items():
        if counts[label] * size != N:
            raise TraceError(
                f"{counts[label]} corners of kind {label} in a group of order {N} "
                f"do not fit type {t}; the map is degenerate or not of this type"
            )
    tree, parity = [], [-1] * N
    parity[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for g in frontier:
            for x in REFLECTION_ALPHABET:
                h = rows[g][col[x]]
                if parity[h] < 0:
                    parity[h] = parity[g] ^ 1
                    tree.append((h, g, col[x]))
                    nxt.append(h)
        frontier = nxt
    for g in range(N):
        for x in REFLECTION_ALPHABET:
            if parity[rows[g][col[x]]] == parity[g]:
                raise TraceError("the surface is non-orientable or the map is not reflexible")
    return FlagComplex(table, t, corner_of, counts, tuple(tree), tuple(parity))


@dataclass(frozen=True)
class MirrorCycle:
    labels: str
    sides: tuple[tuple[int, str], ...]  # (flag, side type) along the cycle

    @property
    def link(self) -> str:
        return split_pattern(self.labels)[0]

    @property
    def index(self) -> int:
        return split_pattern(self.labels)[1]


@dataclass(frozen=True)
class MirrorTrace:
    reflection: Word | int
    cycles: tuple[MirrorCycle, ...]

    def dump(self) -> str:
        lines = [f"reflection {self.reflection}: {len(self.cycles)} mirror(s)"]
        for k, cyc in enumerate(self.cycles):
            sides = " ".join(f"{g}{x}" for g, x in cyc.sides)
            lines.append(f"  mirror {k}: ({cyc.link})^{cyc.index}  labels {cyc.labels}")
            lines.append(f"    sides {sides}")
        return "\n".join(lines)


def _as_element(c: FlagComplex, reflection: Word | int) -> int:
    if isinstance(reflection, Word):
        if reflection.alphabet != REFLECTION_ALPHABET:
            raise TraceError("reflections are words over P, Q, R")
        return c.element(reflection)
    return int(reflection)


def trace_mirror(c: FlagComplex, reflection: Word | int) -> MirrorTrace:
    """Trace every mirror of a reflection (a word over P, Q, R or a flag id)."""
    t = _as_element(c, reflection)
    if t == 0:
        raise TraceError("the identity fixes every point, not a mirror")
    if c.parity[t] == 0:
        raise TraceError(f"{reflection} is orientation-preserving")
    rows = c.table.rows
    if rows[t] is None or c.left_multiplication(t)[t] != 0:
        raise TraceError(f"{reflection} is not an involution")
    left = c.left_multiplication(t)
    col = {x: c.table.column(x) for x in REFLECTION_ALPHABET}

    sides: list[tuple[int, str]] = []
    ends: list[tuple[tuple[str, int], tuple[str, int]]] = []
    at: dict[tuple[str, int], list[int]] = {}
    for g in range(c.flags):
        for x in REFLECTION_ALPHABET:
            h = rows[g][col[x]]
            if g < h and left[g] == h:
                a, b = SIDE_CORNERS[x]
                u, v = (a, c.corner_of[a][g]), (b, c.corner_of[b][g])
                k = len(sides)
                sides.append((g, x))
                ends.append((u, v))
                at.setdefault(u, []).append(k)
                at.setdefault(v, []).append(k)
    for node, incident in at.items():
        if len(incident) != 2:
            raise TraceError(
                f"corner {node} carries {len(incident)} fixed sides; a mirror must pass straight through"
            )

    used = [False] * len(sides)
    cycles = []
    for start in range(len(sides)):
        if used[start]:
            continue
        node = min(ends[start])
        side = start
        labels, walk = [], []
        while not used[side]:
            used[side] = True
            labels.append(node[0])
            walk.append(sides[side])
            u, v = ends[side]
            node = v if node == u else u
            a, b = at[node]
            side = b if a == side else a
        if side != start:
            raise TraceError("mirror walk did not close up")
        cycles.append(MirrorCycle("".join(labels), tuple(walk)))
    return MirrorTrace(reflection, tuple(cycles))


@dataclass(frozen=True)
class ClassTrace:
    reflection_class: str
    link: str
    index: int
    mirror_count: int
    mirrors_of_reflection: int


def trace_class(c: FlagComplex, cls: str) -> ClassTrace:
    """Trace the mirror through the ``cls``-side of the base flag."""
    trace = trace_mirror(c, Word.generator(cls, REFLECTION_ALPHABET))
    base = next(cyc for cyc in trace.cycles if (0, cls) in cyc.sides)
    own_sides = sum(1 for _, x in base.sides if x == cls)
    total_sides = c.flags // 2
    if total_sides % own_sides:
        raise TraceError("mirrors of one class do not tile the sides of that type")
    return ClassTrace(cls, base.link, base.index, total_sides // own_sides, len(trace.cycles))


@dataclass(frozen=True)
class ClassComparison:
    reflection_class: str
    predicted: tuple[str, int]
    traced: tuple[str, int]
    mirror_count: int
    mirrors_of_reflection: int
    harnack_ok: bool

    @property
    def agree(self) -> bool:
        return self.predicted == self.traced


@dataclass(frozen=True)
class OracleComparison:
    map_type: MapType
    rotation_order: int
    genus: int
    classes: tuple[ClassComparison, ...]

    @property
    def agree(self) -> bool:
        return all(k.agree and k.harnack_ok for k in self.classes)


def verify_against_patterns(
    p: Presentation,
    t: MapType | tuple[int, int],
    budget: int = DEFAULT_BUDGET,
    strategy: str = "hlt",
) -> OracleComparison:
    """Compare traced (link, index) with the mirror-automorphism prediction."""
    t = as_map_type(t)
    if p.generators != ROTATION_ALPHABET:
        raise ValueError("verify_against_patterns needs a rotation presentation on A, B, C")
    rot = enumerate_cosets(p, (), budget, strategy)
    predicted = {r.reflection_class: (r.link, int(r.link_index)) for r in reports_from_table(rot, t)}
    c = build_flag_complex(p, t, budget, strategy)
    if c.flags != 2 * rot.index:
        raise TraceError(
            f"full group has order {c.flags}, not twice {rot.index}: the map is not reflexible"
        )
    out = []
    for cls in CLASSES:
        tr = trace_class(c, cls)
        out.append(
            ClassComparison(
                cls,
                predicted[cls],
                (tr.link, tr.index),
                tr.mirror_count,
                tr.mirrors_of_reflection,
                tr.mirrors_of_reflection <= c.genus + 1,
            )
        )
    return OracleComparison(t, rot.index, c.genus, tuple(out))
