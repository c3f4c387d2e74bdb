"""Weighted alphabets and words of the free monoid, with the degree-first
lexicographic (deglex) ordering.

A word compares by total degree first; on ties, letter by letter from the
left using the generator ranks, with a strict prefix counting as smaller.
Because every generator has degree >= 1 this order is monoidal and artinian.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence


class AlphabetMismatchError(ValueError):
    """Raised when values from different alphabets are combined."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    rank: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name} has degree {self.degree} < 1")

    def __repr__(self):
        return f"Generator({self.name!r}, deg={self.degree}, rank={self.rank})"


def generator_compare(a: Generator, b: Generator) -> int:
    """Total order on one alphabet: -1, 0 or +1 by rank."""
    if a.rank == b.rank:
        if a != b:
            raise AlphabetMismatchError(f"generators {a.name} and {b.name} share rank {a.rank}")
        return 0
    return -1 if a.rank < b.rank else 1


class Alphabet:
    """An ordered, weighted alphabet.  Generators are totally ordered by rank."""

    def __init__(self, generators: Iterable[Generator]):
        gens = tuple(sorted(generators, key=lambda g: g.rank))
        ranks = [g.rank for g in gens]
        if len(set(ranks)) != len(ranks):
            raise ValueError("duplicate generator ranks")
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.generators = gens
        self._by_name = {g.name: g for g in gens}
        self.empty_word = Word(())

    @classmethod
    def from_names(cls, names_degrees: Sequence[tuple[str, int]]) -> "Alphabet":
        """Build an alphabet assigning ranks by position."""
        return cls(Generator(name, deg, rank) for rank, (name, deg) in enumerate(names_degrees))

    def __len__(self):
        return len(self.generators)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __contains__(self, g: Generator) -> bool:
        return self._by_name.get(g.name) == g

    def generator(self, name: str) -> Generator:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown generator name {name!r}") from None

    def word(self, *names: str) -> "Word":
        return Word(tuple(self.generator(n) for n in names))

    def parse_word(self, text: str) -> "Word":
        """Whitespace-separated generator names; '' or '1' is the empty word."""
        text = text.strip()
        if text in ("", "1", "e"):
            return self.empty_word
        return self.word(*text.split())


class Word:
    """An element of the free monoid: a finite sequence of generators."""

    __slots__ = ("letters", "degree", "_key", "_hash")

    def __init__(self, letters: tuple[Generator, ...]):
        self.letters = letters
        self.degree = sum(g.degree for g in letters)
        self._key = (self.degree, tuple(g.rank for g in letters))
        self._hash = hash(self._key)

    def sort_key(self):
        """Deglex sort key: words compare equal iff the keys do (one alphabet)."""
        return self._key

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Word"):
        return deglex_compare(self, other) < 0

    def __le__(self, other: "Word"):
        return deglex_compare(self, other) <= 0

    def __gt__(self, other: "Word"):
        return deglex_compare(self, other) > 0

    def __ge__(self, other: "Word"):
        return deglex_compare(self, other) >= 0

    def is_empty(self) -> bool:
        return not self.letters

    def find(self, sub: "Word", start: int = 0) -> int:
        """Index of the leftmost occurrence of `sub` at or after `start`, or -1."""
        n, m = len(self.letters), len(sub.letters)
        for i in range(start, n - m + 1):
            if self.letters[i : i + m] == sub.letters:
                return i
        return -1

    def contains(self, sub: "Word") -> bool:
        return self.find(sub) >= 0

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g.name for g in self.letters)

    def __repr__(self):
        return f"Word({self})"


def word_of(*gens: Generator) -> Word:
    return Word(tuple(gens))


def concat(words: Iterable[Word]) -> Word:
    return reduce(lambda a, b: a * b, words, Word(()))


def deglex_compare(u: Word, v: Word) -> int:
    """-1, 0 or +1: degree first, then leftmost rank difference, prefix smaller."""
    if u.degree != v.degree:
        return -1 if u.degree < v.degree else 1
    for a, b in zip(u.letters, v.letters):
        c = generator_compare(a, b)
        if c:
            return c
    if len(u) == len(v):
        return 0
    return -1 if len(u) < len(v) else 1


def words_up_to_degree(alphabet: Alphabet, max_degree: int) -> list[Word]:
    """All words of degree <= max_degree, in deglex order."""
    out = [alphabet.empty_word]
    frontier = [alphabet.empty_word]
    while frontier:
        nxt = []
        for w in frontier:
            for g in alphabet:
                if w.degree + g.degree <= max_degree:
                    nxt.append(w * word_of(g))
        out.extend(nxt)
        frontier = nxt
    out.sort(key=Word.sort_key)
    return out
