"""JSON documents: presentation descriptions, polynomial expression
parsing, and machine-readable reports.

A presentation document either lists an explicit alphabet and relations or
names a builtin family with its parameters.  Reports serialize with sorted
keys so identical inputs give byte-identical output (timing excluded).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Optional

from .fields import PrimeField
from .kostant import (
    KostantPresentation,
    big_system,
    conjectural_system,
    small_system,
)
from .polynomials import Polynomial
from .rewriting import RewritingSystem
from .words import Alphabet, Generator


class DocumentError(ValueError):
    """Malformed presentation document or expression."""


@dataclass
class PresentationDocument:
    """Either an explicit presentation or a builtin selector."""

    p: Optional[int] = None
    alphabet: Optional[list[dict]] = None  # entries: name, degree, rank
    relations: Optional[list[list[list]]] = None  # [[coeff, [names...]], ...]
    builtin: Optional[str] = None  # "big" | "small" | "conjectural"
    params: dict = dataclass_field(default_factory=dict)

    @classmethod
    def from_json(cls, text: str) -> "PresentationDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
        return cls(
            p=data.get("p"),
            alphabet=data.get("alphabet"),
            relations=data.get("relations"),
            builtin=data.get("builtin"),
            params=data.get("params", {}),
        )

    def to_json(self) -> str:
        data: dict[str, Any] = {}
        if self.builtin:
            data["builtin"] = self.builtin
            data["params"] = self.params
        if self.p is not None:
            data["p"] = self.p
        if self.alphabet is not None:
            data["alphabet"] = self.alphabet
        if self.relations is not None:
            data["relations"] = self.relations
        return json.dumps(data, sort_keys=True, indent=2)

    def build(self) -> "LoadedPresentation":
        if self.builtin:
            return LoadedPresentation.from_builtin(self.builtin, self.params)
        if self.p is None or self.alphabet is None or self.relations is None:
            raise DocumentError("document needs either a builtin or p/alphabet/relations")
        field = PrimeField(self.p)
        seen = set()
        gens = []
        for entry in self.alphabet:
            name = entry["name"]
            if name in seen:
                raise DocumentError(f"duplicate generator name {name!r}")
            seen.add(name)
            gens.append(Generator(name, entry["degree"], entry["rank"]))
        alphabet = Alphabet(gens)
        relations = []
        for rel in self.relations:
            terms = []
            for coeff, names in rel:
                for n in names:
                    if n not in seen:
                        raise DocumentError(f"relation uses undeclared generator {n!r}")
                terms.append((coeff, alphabet.word(*names)))
            relations.append(Polynomial.from_terms(field, terms))
        system = RewritingSystem.from_relations(
            alphabet, field, [f for f in relations if not f.is_zero()]
        )
        return LoadedPresentation(system=system, document=self)


@dataclass
class LoadedPresentation:
    system: RewritingSystem
    document: PresentationDocument
    kostant: Optional[KostantPresentation] = None

    @classmethod
    def from_builtin(cls, builtin: str, params: dict) -> "LoadedPresentation":
        if builtin == "small":
            pres = small_system(params.get("l", 3))
        elif builtin == "big":
            pres = big_system(
                params.get("n", 3),
                params.get("p", 2),
                params.get("exponent_bound", 1),
            )
        elif builtin == "conjectural":
            pres = conjectural_system(
                params["variant"],
                params.get("n", 3),
                params.get("p", 2),
                params.get("index_bound", 1),
            )
        else:
            raise DocumentError(f"unknown builtin {builtin!r}")
        doc = PresentationDocument(builtin=builtin, params=dict(params))
        return cls(system=pres.system, document=doc, kostant=pres)


def parse_expression(system: RewritingSystem, text: str) -> Polynomial:
    """Sums of terms split on '+'; a term is an optional leading integer
    coefficient followed by whitespace-separated generator names; '1' (or
    'e') alone is the empty word."""
    field = system.field
    alphabet = system.alphabet
    terms = []
    for pos, chunk in enumerate(text.split("+")):
        chunk = chunk.strip()
        if not chunk:
            raise DocumentError(f"empty term at position {pos} in {text!r}")
        tokens = chunk.split()
        coeff = 1
        if tokens and _is_integer(tokens[0]):
            coeff = int(tokens[0])
            tokens = tokens[1:]
        if tokens == ["1"] or tokens == ["e"]:
            tokens = []
        names = []
        for tok in tokens:
            try:
                alphabet.generator(tok)
            except KeyError:
                raise DocumentError(
                    f"unknown generator {tok!r} in term {pos} of {text!r}"
                ) from None
            names.append(tok)
        terms.append((coeff, alphabet.word(*names)))
    return Polynomial.from_terms(field, terms)


def _is_integer(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


@dataclass
class Report:
    """A deterministic command report; `timing` is excluded from equality
    and canonical serialization."""

    command: str
    params: dict
    verdicts: dict
    tables: dict = dataclass_field(default_factory=dict)
    timing: float | None = None

    def to_json(self) -> str:
        data = {
            "command": self.command,
            "params": self.params,
            "verdicts": self.verdicts,
            "tables": self.tables,
        }
        return json.dumps(data, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(
            command=data["command"],
            params=data["params"],
            verdicts=data["verdicts"],
            tables=data.get("tables", {}),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Report)
            and self.command == other.command
            and self.params == other.params
            and self.verdicts == other.verdicts
            and self.tables == other.tables
        )
