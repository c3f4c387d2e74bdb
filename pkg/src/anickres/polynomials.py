"""Polynomials of the free associative algebra F_p<X*>.

A polynomial is a finite mapping from words to nonzero field elements.
Zero coefficients are dropped eagerly, so equality of the term dicts is
equality of polynomials.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .fields import PrimeField
from .words import Word


class Polynomial:
    __slots__ = ("field", "terms")

    def __init__(self, field: PrimeField, terms: dict[Word, int] | None = None):
        self.field = field
        self.terms: dict[Word, int] = {}
        if terms:
            for w, c in terms.items():
                c %= field.p
                if c:
                    self.terms[w] = c

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, field: PrimeField) -> "Polynomial":
        return cls(field)

    @classmethod
    def monomial(cls, field: PrimeField, word: Word, coeff: int = 1) -> "Polynomial":
        return cls(field, {word: coeff})

    @classmethod
    def from_terms(cls, field: PrimeField, terms: Iterable[tuple[int, Word]]) -> "Polynomial":
        acc: dict[Word, int] = {}
        for coeff, word in terms:
            acc[word] = (acc.get(word, 0) + coeff) % field.p
        return cls(field, acc)

    # structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Word]:
        return sorted(self.terms, key=Word.sort_key)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def leading_monomial(self) -> Word:
        if not self.terms:
            raise ValueError("leading monomial of the zero polynomial")
        return max(self.terms, key=Word.sort_key)

    def leading_term(self) -> tuple[Word, int]:
        lm = self.leading_monomial()
        return lm, self.terms[lm]

    # arithmetic -------------------------------------------------------
    def combine(self, coeff: int, other: "Polynomial") -> "Polynomial":
        """self + coeff * other, in canonical form."""
        if self.field != other.field:
            raise ValueError("mixed coefficient fields")
        acc = dict(self.terms)
        p = self.field.p
        for w, c in other.terms.items():
            acc[w] = (acc.get(w, 0) + coeff * c) % p
        return Polynomial(self.field, acc)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self.combine(1, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self.combine(-1, other)

    def scale(self, coeff: int) -> "Polynomial":
        return Polynomial(self.field, {w: c * coeff for w, c in self.terms.items()})

    def sandwich(self, left: Word, right: Word) -> "Polynomial":
        """left * self * right: every support word w becomes left w right."""
        return Polynomial(self.field, {left * w * right: c for w, c in self.terms.items()})

    def coefficient(self, word: Word) -> int:
        return self.terms.get(word, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=Word.sort_key, reverse=True):
            c = self.terms[w]
            if w.is_empty():
                parts.append(str(c))
            elif c == 1:
                parts.append(str(w))
            else:
                parts.append(f"{c} {w}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"
