"""Todd-Coxeter coset enumeration.

Two definition strategies are available: HLT (relator-based, the default)
and Felsch (definitions in table order, each followed by deduction
processing).  Coincidences are resolved with union-find, the smaller coset
number always surviving.  Completed tables are compressed and standardized
so the numbering is a function of the presentation and subgroup alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .parser import Presentation
from .words import Word, cyclic_reduce, free_reduce

DEFAULT_BUDGET = 1_000_000
STRATEGIES = ("hlt", "felsch")


class BudgetExceeded(RuntimeError):
    """More cosets were needed than the budget allows.

    Either the subgroup has infinite index or the budget is too small; the
    caller tells the two apart by raising the budget.
    """

    def __init__(self, budget: int) -> None:
        self.budget = budget
        super().__init__(f"coset enumeration exceeded budget of {budget} cosets")


class IncompleteTable(ValueError):
    pass


def _columns(w: Word) -> list[int]:
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in w.letters]


@dataclass(frozen=True)
class CosetTable:
    """Action of the generators on the right cosets of a subgroup.

    ``rows[c][2*i]`` is the image of coset ``c`` under generator ``i`` and
    ``rows[c][2*i + 1]`` its image under the inverse.  Coset 0 is the
    subgroup itself.
    """

    generators: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]
    subgroup: tuple[Word, ...] = ()
    complete: bool = True

    @property
    def index(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str, inverse: bool = False) -> int:
        return 2 * self.generators.index(name) + int(inverse)

    def apply(self, coset: int, w: Word) -> int:
        rows = self.rows
        for c in _columns(w):
            coset = rows[coset][c]
        return coset

    def permutation(self, w: Word) -> list[int]:
        """Image of every coset under ``w`` (cosets composed left to right)."""
        perm = list(range(len(self.rows)))
        rows = self.rows
        for c in _columns(w):
            perm = [rows[k][c] for k in perm]
        return perm

    def serialize(self) -> str:
        head = " ".join(f"{g} {g}'" for g in self.generators)
        lines = [f"# cosets {self.index}", f"# columns {head}"]
        lines += [" ".join(str(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def permutation_order(perm: Sequence[int]) -> int:
    seen = bytearray(len(perm))
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = 1
            k = perm[k]
            length += 1
        order = math.lcm(order, length)
    return order


class _Enumerator:
    def __init__(self, p: Presentation, subgroup: Sequence[Word], budget: int) -> None:
        self.ngens = len(p.generators)
        self.ncols = 2 * self.ngens
        self.budget = budget
        rels = []
        for r in p.relators:
            r = cyclic_reduce(r)
            if r:
                rels.append(_columns(r))
        self.relators = rels
        self.subgroup = [_columns(free_reduce(w)) for w in subgroup]
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.queue: list[int] = []
        self.deductions: list[tuple[int, int]] = []
        self.track = False
        # cyclic conjugates of relators and their inverses, keyed by first column
        self.conjugates: list[list[list[int]]] = [[] for _ in range(self.ncols)]

    def prepare_felsch(self) -> None:
        self.track = True
        seen = set()
        for r in self.relators:
            inv = [c ^ 1 for c in reversed(r)]
            for word in (r, inv):
                for k in range(len(word)):
                    conj = tuple(word[k:] + word[:k])
                    if conj not in seen:
                        seen.add(conj)
                        self.conjugates[conj[0]].append(list(conj))

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        n = len(self.table)
        if n >= self.budget:
            raise BudgetExceeded(self.budget)
        row = [-1] * self.ncols
        row[x ^ 1] = c
        self.table.append(row)
        self.parent.append(n)
        self.table[c][x] = n
        self.live += 1
        if self.track:
            self.deductions.append((c, x))

    def merge(self, a: int, b: int) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.live -= 1
        self.queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        self.queue = []
        self.merge(a, b)
        i = 0
        while i < len(self.queue):
            g = self.queue[i]
            i += 1
            row = table[g]
            for x in range(self.ncols):
                d = row[x]
                if d < 0:
                    continue
                ix = x ^ 1
                table[d][ix] = -1
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] >= 0:
                    self.merge(nu, table[mu][x])
                elif table[nu][ix] >= 0:
                    self.merge(mu, table[nu][ix])
                else:
                    table[mu][x] = nu
                    table[nu][ix] = mu
                    if self.track:
                        self.deductions.append((mu, x))

    def scan_and_fill(self, c: int, word: list[int]) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and table[b][word[j] ^ 1] >= 0:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                if self.track:
                    self.deductions.append((f, word[i]))
                return
            self.define(f, word[i])

    def scan(self, c: int, word: list[int]) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while i <= j and table[f][word[i]] >= 0:
            f = table[f][word[i]]
            i += 1
        if i > j:
            if f != c:
                self.coincidence(f, c)
            return
        while j >= i and table[b][word[j] ^ 1] >= 0:
            b = table[b][word[j] ^ 1]
            j -= 1
        if j < i:
            self.coincidence(f, b)
        elif i == j:
            table[f][word[i]] = b
            table[b][word[i] ^ 1] = f
            self.deductions.append((f, word[i]))

    def process_deductions(self) -> None:
        table = self.table
        while self.deductions:
            c, x = self.deductions.pop()
            if not self.alive(c):
                continue
            for conj in self.conjugates[x]:
                self.scan(c, conj)
                if not self.alive(c):
                    break
            d = table[c][x] if self.alive(c) else -1
            if d >= 0 and self.alive(d):
                for conj in self.conjugates[x ^ 1]:
                    self.scan(d, conj)
                    if not self.alive(d):
                        break

    def run_hlt(self) -> None:
        for w in self.subgroup:
            self.scan_and_fill(0, w)
        self.close_hlt(0)

    def close_hlt(self, start: int) -> None:
        c = start
        while c < len(self.table):
            if self.alive(c):
                for w in self.relators:
                    self.scan_and_fill(c, w)
                    if not self.alive(c):
                        break
                if self.alive(c):
                    row = self.table[c]
                    for x in range(self.ncols):
                        if row[x] < 0:
                            self.define(c, x)
            c += 1

    def run_felsch(self) -> None:
        self.prepare_felsch()
        for w in self.subgroup:
            self.scan_and_fill(0, w)
        self.process_deductions()
        c = 0
        while c < len(self.table):
            for x in range(self.ncols):
                if self.alive(c) and self.table[c][x] < 0:
                    self.define(c, x)
                    self.process_deductions()
                    for w in self.subgroup:
                        self.scan_and_fill(0, w)
                    self.process_deductions()
            c += 1

    def verify(self) -> bool:
        """One relator pass over every live coset; True when nothing changed."""
        before = (len(self.table), self.live)
        for c in range(len(self.table)):
            if self.alive(c):
                for w in self.relators:
                    self.scan_and_fill(c, w)
                    if not self.alive(c):
                        break
        for w in self.subgroup:
            self.scan_and_fill(0, w)
        return (len(self.table), self.live) == before and all(
            x >= 0 for c, row in enumerate(self.table) if self.alive(c) for x in row
        )

    def standardized_rows(self) -> tuple[tuple[int, ...], ...]:
        # renumber live cosets in breadth-first order from coset 0
        table = self.table
        order = [0]
        number = {0: 0}
        k = 0
        while k < len(order):
            row = table[order[k]]
            for x in range(self.ncols):
                d = self.rep(row[x])
                if d not in number:
                    number[d] = len(order)
                    order.append(d)
            k += 1
        return tuple(tuple(number[self.rep(x)] for x in table[c]) for c in order)


def enumerate_cosets(
    p: Presentation,
    subgroup_gens: Sequence[Word] = (),
    budget: int = DEFAULT_BUDGET,
    strategy: str = "hlt",
) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``subgroup_gens``.

    Raises :class:`BudgetExceeded` when more than ``budget`` cosets would
    have to be defined.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    for w in subgroup_gens:
        if w.alphabet != p.generators:
            raise ValueError(f"subgroup generator {w} is not over {p.generators}")
    e = _Enumerator(p, subgroup_gens, budget)
    if strategy == "hlt":
        e.run_hlt()
    else:
        e.run_felsch()
    e.track = False
    while not e.verify():
        e.close_hlt(0)
    return CosetTable(p.generators, e.standardized_rows(), tuple(subgroup_gens))


def group_order(
    p: Presentation, budget: int = DEFAULT_BUDGET, strategy: str = "hlt"
) -> int:
    return enumerate_cosets(p, (), budget, strategy).index


def element_order(table: CosetTable, w: Word) -> int:
    """Order of the permutation that ``w`` induces on the cosets.

    On the regular representation (trivial subgroup) this is the order of
    the group element ``w``.
    """
    if not table.complete:
        raise IncompleteTable("element order needs a complete coset table")
    if w.alphabet != table.generators:
        raise ValueError(f"word {w} is not over {table.generators}")
    return permutation_order(table.permutation(w))
