"""Words in the free group on a named alphabet.

A letter is a nonzero integer: ``k`` stands for generator ``k - 1`` and
``-k`` for its inverse (Tietze convention).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ROTATION_ALPHABET = ("A", "B", "C")
REFLECTION_ALPHABET = ("P", "Q", "R")


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet: tuple[str, ...]

    def __post_init__(self) -> None:
        n = len(self.alphabet)
        for x in self.letters:
            if x == 0 or abs(x) > n:
                raise ValueError(f"letter {x} outside alphabet {self.alphabet}")

    @classmethod
    def identity(cls, alphabet: Sequence[str]) -> Word:
        return cls((), tuple(alphabet))

    @classmethod
    def generator(cls, name: str, alphabet: Sequence[str]) -> Word:
        alphabet = tuple(alphabet)
        return cls((alphabet.index(name) + 1,), alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Sequence[str] = ROTATION_ALPHABET) -> Word:
        from .parser import parse_word

        return parse_word(text, alphabet)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def _check(self, other: Word) -> None:
        if other.alphabet != self.alphabet:
            raise ValueError("words over different alphabets")

    def __mul__(self, other: Word) -> Word:
        self._check(other)
        return Word(self.letters + other.letters, self.alphabet)

    def inverse(self) -> Word:
        return Word(tuple(-x for x in reversed(self.letters)), self.alphabet)

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k), self.alphabet)

    def substitute(self, images: dict[str, Word]) -> Word:
        """Replace every generator by the word ``images[name]``."""
        target = next(iter(images.values())).alphabet
        out: list[int] = []
        for x in self.letters:
            img = images[self.alphabet[abs(x) - 1]]
            out.extend(img.letters if x > 0 else img.inverse().letters)
        return Word(tuple(out), target)

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __str__(self) -> str:
        return format_word(self.letters, self.alphabet)

    def __repr__(self) -> str:
        return f"Word({str(self) or '1'!r})"


def free_reduce(w: Word) -> Word:
    stack: list[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return Word(tuple(stack), w.alphabet)


def cyclic_reduce(w: Word) -> Word:
    letters = free_reduce(w).letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return Word(letters[i : j + 1], w.alphabet)


def format_word(letters: Iterable[int], alphabet: Sequence[str]) -> str:
    parts: list[str] = []
    run_gen, run_exp = 0, 0
    for x in letters:
        g, s = abs(x), (1 if x > 0 else -1)
        if g == run_gen and (run_exp > 0) == (s > 0):
            run_exp += s
            continue
        if run_gen:
            parts.append(_power(alphabet[run_gen - 1], run_exp))
        run_gen, run_exp = g, s
    if run_gen:
        parts.append(_power(alphabet[run_gen - 1], run_exp))
    return "".join(parts)


def _power(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"
