"""Reader and writer for presentation files.

Grammar (``#`` starts a comment that runs to end of line)::

    file   := ("gens" NAME* ";")  ("rels" word* ";"?)
    word   := factor+                  no whitespace outside parentheses
    factor := (NAME | "(" word ")") ("'" | "^" INT)*
    NAME   := [A-Z][0-9]*

Relators are separated by whitespace or commas.  ``X'`` and ``X^-1`` both
denote the inverse of ``X``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .words import Word, free_reduce


class PresentationError(ValueError):
    """Malformed presentation text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def with_relators(self, *extra: Word | str) -> Presentation:
        more = tuple(self.word(r) if isinstance(r, str) else r for r in extra)
        rels = self.relators + tuple(free_reduce(w) for w in more)
        return Presentation(self.generators, rels)

    def serialize(self) -> str:
        return serialize_presentation(self)

    def __str__(self) -> str:
        rels = ", ".join(str(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def _strip_comments(text: str) -> str:
    out = []
    for line in text.split("\n"):
        k = line.find("#")
        out.append(line if k < 0 else line[:k] + " " * (len(line) - k))
    return "\n".join(out)


class _Cursor:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def location(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int | None = None) -> PresentationError:
        return PresentationError(message, *self.location(pos))

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)


def _read_name(cur: _Cursor) -> str:
    start = cur.pos
    if not ("A" <= cur.peek() <= "Z"):
        raise cur.error(f"expected generator name, found {cur.peek()!r}")
    cur.pos += 1
    while cur.peek().isdigit():
        cur.pos += 1
    return cur.text[start : cur.pos]


def _read_int(cur: _Cursor) -> int:
    start = cur.pos
    if cur.peek() in "+-":
        cur.pos += 1
    digits = cur.pos
    while cur.peek().isdigit():
        cur.pos += 1
    if cur.pos == digits:
        raise cur.error("expected integer exponent", start)
    return int(cur.text[start : cur.pos])


def _read_word(cur: _Cursor, alphabet: Sequence[str], nested: bool) -> list[int]:
    letters: list[int] = []
    while True:
        if nested:
            cur.skip_space()
        c = cur.peek()
        start = cur.pos
        if c == "(":
            cur.pos += 1
            factor = _read_word(cur, alphabet, nested=True)
            if cur.peek() != ")":
                raise cur.error("expected ')'")
            cur.pos += 1
        elif "A" <= c <= "Z":
            name = _read_name(cur)
            if name not in alphabet:
                raise cur.error(f"unknown generator {name!r}", start)
            factor = [alphabet.index(name) + 1]
        elif c == "1" and not letters:
            cur.pos += 1
            factor = []
        else:
            break
        while True:
            if cur.peek() == "'":
                cur.pos += 1
                factor = [-x for x in reversed(factor)]
            elif cur.peek() == "^":
                cur.pos += 1
                e = _read_int(cur)
                if e < 0:
                    factor = [-x for x in reversed(factor)]
                factor = factor * abs(e)
            else:
                break
        letters.extend(factor)
    if nested and cur.peek() != ")":
        raise cur.error(f"unexpected character {cur.peek()!r} in word")
    return letters


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    alphabet = tuple(alphabet)
    cur = _Cursor(text.strip())
    letters = _read_word(cur, alphabet, nested=False)
    if not cur.at_end():
        raise cur.error(f"unexpected character {cur.peek()!r} in word")
    return Word(tuple(letters), alphabet)


def _read_keyword(cur: _Cursor, keyword: str) -> None:
    cur.skip_space()
    start = cur.pos
    while cur.peek().isalpha():
        cur.pos += 1
    found = cur.text[start : cur.pos]
    if found != keyword:
        raise cur.error(f"expected '{keyword}', found {found or cur.peek()!r}", start)


def parse_presentation(text: str, *, allow_free: bool = False) -> Presentation:
    """Parse presentation text.

    Relators are freely reduced; a relator that reduces to the empty word is
    rejected.  A presentation without relators is rejected unless
    ``allow_free`` is set.
    """
    cur = _Cursor(_strip_comments(text))
    _read_keyword(cur, "gens")
    gens: list[str] = []
    while True:
        cur.skip_space()
        if cur.peek() == ";":
            cur.pos += 1
            break
        if cur.at_end():
            raise cur.error("expected ';' after generator list")
        start = cur.pos
        name = _read_name(cur)
        if cur.peek() and not (cur.peek().isspace() or cur.peek() == ";"):
            raise cur.error(f"invalid generator name near {cur.peek()!r}", start)
        if name in gens:
            raise cur.error(f"duplicate generator {name!r}", start)
        gens.append(name)
    if not gens:
        raise cur.error("no generators declared")
    alphabet = tuple(gens)

    _read_keyword(cur, "rels")
    rels: list[Word] = []
    while True:
        cur.skip_space()
        c = cur.peek()
        if c in ("", ";"):
            cur.pos += 1
            break
        if c == ",":
            cur.pos += 1
            continue
        start = cur.pos
        letters = _read_word(cur, alphabet, nested=False)
        if cur.pos == start:
            raise cur.error(f"unexpected character {c!r}")
        if cur.peek() and not (cur.peek().isspace() or cur.peek() in ",;"):
            raise cur.error(f"unexpected character {cur.peek()!r} in word")
        w = free_reduce(Word(tuple(letters), alphabet))
        if not w:
            raise cur.error("relator is trivial after free reduction", start)
        rels.append(w)
    cur.skip_space()
    if not cur.at_end():
        raise cur.error("trailing input after relator list")
    if not rels and not allow_free:
        raise cur.error("empty relator list (pass allow_free=True for a free group)")
    return Presentation(alphabet, tuple(rels))


def serialize_presentation(p: Presentation) -> str:
    rels = " ".join(str(r) for r in p.relators)
    return f"gens {' '.join(p.generators)};\nrels {rels};\n"


def read_presentation(path, *, allow_free: bool = False) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), allow_free=allow_free)
