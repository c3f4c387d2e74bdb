"""Rewriting systems in the free associative algebra: reduction to normal
form, critical pairs, completeness checking, degree-bounded completion,
interreduction and subalphabet restriction.

The reduction strategy is deterministic: the deglex-largest reducible word
of the polynomial is rewritten first, at its leftmost reducible position,
by the first matching rule in system order.  Normal forms are computed per
support word (reduction is linear in the polynomial) and memoized on the
system, which is immutable once constructed.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dataclass_field
from typing import Iterable, Optional, Sequence

from .fields import PrimeField
from .polynomials import Polynomial
from .words import Alphabet, Generator, Word


class UnorderableRelationError(ValueError):
    """A relation whose leading word does not dominate its tail."""


class SubalphabetError(ValueError):
    """Restriction hypothesis violated: a kept rule's tail leaves the subalphabet."""


class CompletionCapError(RuntimeError):
    """Completion exceeded its iteration cap; carries the partial system."""

    def __init__(self, message: str, partial: "RewritingSystem"):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class RewriteRule:
    """lhs rewrites to the polynomial rhs; lhs > every word of supp(rhs)."""

    lhs: Word
    rhs: Polynomial

    def polynomial(self) -> Polynomial:
        """The relation lhs - rhs whose rewriting rule this is."""
        return Polynomial.monomial(self.rhs.field, self.lhs).combine(-1, self.rhs)

    def __str__(self):
        return f"{self.lhs} -> {self.rhs}"


@dataclass(frozen=True)
class CriticalPair:
    """An overlap (tip = u lhs1 = lhs2 v) or inclusion (tip = u lhs1 v = lhs2)."""

    tip: Word
    rule1: int
    rule2: int
    kind: str  # "overlap" | "inclusion"
    u: Word
    v: Word


def make_rule(f: Polynomial) -> RewriteRule:
    """Orient a nonzero relation: lm(f) rewrites to the rest, made monic."""
    if f.is_zero():
        raise ValueError("cannot orient the zero relation")
    lm, lc = f.leading_term()
    if lm.is_empty():
        raise UnorderableRelationError("leading word is the empty word")
    inv = f.field.inv(lc)
    rhs = f.combine(-1, Polynomial.monomial(f.field, lm, lc)).scale(-inv)
    for w in rhs.terms:
        if not w < lm:
            raise UnorderableRelationError(f"word {w} is not below the leading word {lm}")
    return RewriteRule(lm, rhs)


class RewritingSystem:
    """An ordered collection of rewriting rules over one alphabet and field.

    Instances are immutable; the completion and interreduction operations
    return new systems.  `complete_up_to` records the tip-degree bound up to
    which all critical pairs are known to resolve (None = not checked).
    """

    def __init__(
        self,
        alphabet: Alphabet,
        field: PrimeField,
        rules: Sequence[RewriteRule],
        complete_up_to: int | float | None = None,
        known_reduced: bool = False,
    ):
        self.alphabet = alphabet
        self.field = field
        self.rules = tuple(rules)
        self.complete_up_to = complete_up_to
        self.known_reduced = known_reduced
        for r in self.rules:
            for g in r.lhs:
                if g not in alphabet:
                    raise ValueError(f"rule {r} uses generator {g.name} outside the alphabet")
        # memo tables; private, rebuilt per instance
        self._first_step: dict[Word, Optional[tuple[int, int]]] = {}
        self._nf: dict[Word, Polynomial] = {}
        self._steps: dict[Word, int] = {}
        self._max_lhs_len = max((len(r.lhs) for r in self.rules), default=0)

    @classmethod
    def from_relations(
        cls,
        alphabet: Alphabet,
        field: PrimeField,
        relations: Iterable[Polynomial],
        **kwargs,
    ) -> "RewritingSystem":
        return cls(alphabet, field, [make_rule(f) for f in relations], **kwargs)

    def with_rules(self, rules: Sequence[RewriteRule], **kwargs) -> "RewritingSystem":
        return RewritingSystem(self.alphabet, self.field, rules, **kwargs)

    def lhs_words(self) -> list[Word]:
        return [r.lhs for r in self.rules]

    # ----- single-step reduction -------------------------------------
    def first_step(self, w: Word) -> Optional[tuple[int, int]]:
        """(position, rule index) of the leftmost-first reduction of w, or None."""
        try:
            return self._first_step[w]
        except KeyError:
            pass
        found = None
        for pos in range(len(w)):
            for ridx, rule in enumerate(self.rules):
                L = len(rule.lhs)
                if w.letters[pos : pos + L] == rule.lhs.letters:
                    found = (pos, ridx)
                    break
            if found:
                break
        self._first_step[w] = found
        return found

    def is_irreducible_word(self, w: Word) -> bool:
        return self.first_step(w) is None

    def apply_step(self, w: Word, pos: int, ridx: int) -> Polynomial:
        """u * rhs * v for the occurrence of rule `ridx` at `pos` in w."""
        rule = self.rules[ridx]
        u = w[:pos]
        v = w[pos + len(rule.lhs) :]
        return rule.rhs.sandwich(u, v)

    def reduce_once(self, g: Polynomial) -> Optional[Polynomial]:
        """One deterministic rewriting step, or None if g is irreducible."""
        reducible = [w for w in g.terms if self.first_step(w) is not None]
        if not reducible:
            return None
        w = max(reducible, key=Word.sort_key)
        pos, ridx = self.first_step(w)
        coeff = g.terms[w]
        replaced = self.apply_step(w, pos, ridx)
        return g.combine(-coeff, Polynomial.monomial(self.field, w)).combine(coeff, replaced)

    # ----- normal forms ----------------------------------------------
    def _nf_word(self, w: Word) -> Polynomial:
        memo = self._nf
        if w in memo:
            return memo[w]
        stack = [w]
        while stack:
            top = stack[-1]
            if top in memo:
                stack.pop()
                continue
            step = self.first_step(top)
            if step is None:
                memo[top] = Polynomial.monomial(self.field, top)
                self._steps[top] = 0
                stack.pop()
                continue
            expansion = self.apply_step(top, *step)
            pending = [x for x in expansion.terms if x not in memo]
            if pending:
                stack.extend(pending)
                continue
            acc = Polynomial.zero(self.field)
            nsteps = 1
            for x, c in expansion:
                acc = acc.combine(c, memo[x])
                nsteps += self._steps[x]
            memo[top] = acc
            self._steps[top] = nsteps
            stack.pop()
        return memo[w]

    def normal_form(self, g: Polynomial) -> Polynomial:
        acc = Polynomial.zero(self.field)
        for w, c in g:
            acc = acc.combine(c, self._nf_word(w))
        return acc

    def normal_form_with_steps(self, g: Polynomial) -> tuple[Polynomial, int]:
        nf = self.normal_form(g)
        steps = sum(self._steps[w] for w in g.terms)
        return nf, steps

    def normal_form_word(self, w: Word) -> Polynomial:
        return self._nf_word(w)

    # ----- critical pairs --------------------------------------------
    def find_critical_pairs(self) -> list[CriticalPair]:
        return critical_pairs_between(self.rules, range(len(self.rules)), range(len(self.rules)))

    def pair_obstruction(self, cp: CriticalPair) -> Polynomial:
        f1 = self.rules[cp.rule1].rhs
        f2 = self.rules[cp.rule2].rhs
        if cp.kind == "overlap":
            # tip = u lhs1 = lhs2 v
            return f1.sandwich(cp.u, self.alphabet.empty_word).combine(
                -1, f2.sandwich(self.alphabet.empty_word, cp.v)
            )
        # tip = u lhs1 v = lhs2
        return f1.sandwich(cp.u, cp.v).combine(-1, f2)

    def is_complete(
        self, degree_bound: int | None = None
    ) -> tuple[bool, list[tuple[CriticalPair, Polynomial]]]:
        """Reduce every critical-pair obstruction; collect irreducible witnesses."""
        witnesses = []
        for cp in self.find_critical_pairs():
            if degree_bound is not None and cp.tip.degree > degree_bound:
                continue
            nf = self.normal_form(self.pair_obstruction(cp))
            if not nf.is_zero():
                witnesses.append((cp, nf))
        return (not witnesses, witnesses)

    # ----- completion ------------------------------------------------
    def complete(self, degree_bound: int, max_new_rules: int = 10_000) -> "RewritingSystem":
        """Critical-pair completion, smallest tip first, up to tip degree.

        Rules whose lhs exceeds the bound are kept; only pairs whose tip
        fits under the bound are resolved.
        """
        rules = list(self.rules)
        counter = itertools.count()
        heap: list[tuple[tuple, int, CriticalPair]] = []

        def push_pairs(pairs):
            for cp in pairs:
                if cp.tip.degree <= degree_bound:
                    heapq.heappush(heap, (cp.tip.sort_key(), next(counter), cp))

        push_pairs(critical_pairs_between(rules, range(len(rules)), range(len(rules))))
        added = 0
        while True:
            while heap:
                _, _, cp = heapq.heappop(heap)
                current = self.with_rules(rules)
                nf = current.normal_form(current.pair_obstruction(cp))
                if nf.is_zero():
                    continue
                rules.append(make_rule(nf))
                added += 1
                if added > max_new_rules:
                    raise CompletionCapError(
                        f"completion cap of {max_new_rules} new rules exceeded",
                        self.with_rules(rules),
                    )
                new = len(rules) - 1
                push_pairs(
                    critical_pairs_between(rules, range(len(rules)), [new])
                    + critical_pairs_between(rules, [new], range(len(rules)))
                )
            # re-verify: earlier resolutions used fewer rules
            result = self.with_rules(rules)
            ok, witnesses = result.is_complete(degree_bound)
            if ok:
                return self.with_rules(rules, complete_up_to=degree_bound)
            for cp, _ in witnesses:
                heapq.heappush(heap, (cp.tip.sort_key(), next(counter), cp))

    # ----- interreduction --------------------------------------------
    def interreduce(self, max_passes: int = 1_000) -> "RewritingSystem":
        """Reduce each rule modulo the others until the system is reduced."""
        rules = list(self.rules)
        for _ in range(max_passes):
            changed = False
            for i in range(len(rules)):
                others = self.with_rules(rules[:i] + rules[i + 1 :])
                nf = others.normal_form(rules[i].polynomial())
                if nf.is_zero():
                    del rules[i]
                    changed = True
                    break
                new_rule = make_rule(nf)
                if new_rule != rules[i]:
                    rules[i] = new_rule
                    changed = True
                    break
            if not changed:
                return self.with_rules(
                    rules, complete_up_to=self.complete_up_to, known_reduced=True
                )
        raise RuntimeError("interreduction did not stabilize")

    def is_reduced(self) -> bool:
        for i, rule in enumerate(self.rules):
            others = self.with_rules(self.rules[:i] + self.rules[i + 1 :])
            if not others.is_irreducible_word(rule.lhs):
                return False
            if any(not self.is_irreducible_word(w) for w in rule.rhs.terms):
                return False
        return True

    # ----- subalphabet restriction -----------------------------------
    def restrict_to_subalphabet(self, keep: Iterable[Generator]) -> "RewritingSystem":
        """Keep the rules whose lhs lies in the subalphabet; the tails must too."""
        kept_gens = set(keep)
        for g in kept_gens:
            if g not in self.alphabet:
                raise ValueError(f"generator {g.name} is not in the alphabet")
        sub = Alphabet(kept_gens)
        kept_rules = []
        for rule in self.rules:
            if all(g in kept_gens for g in rule.lhs):
                for w in rule.rhs.terms:
                    if not all(g in kept_gens for g in w):
                        raise SubalphabetError(
                            f"rule {rule} has a tail word leaving the subalphabet"
                        )
                kept_rules.append(rule)
        return RewritingSystem(
            sub,
            self.field,
            kept_rules,
            complete_up_to=self.complete_up_to,
            known_reduced=self.known_reduced,
        )

    # ----- irreducible words -----------------------------------------
    def irreducible_words(
        self, max_degree: int | None = None, max_count: int = 2_000_000
    ) -> list[Word]:
        """All rule-free words of degree <= max_degree (None = all, if finite),
        in deglex order."""
        lhs_tails = [r.lhs.letters for r in self.rules]
        out = []
        frontier = [self.alphabet.empty_word]
        while frontier:
            out.extend(frontier)
            if len(out) > max_count:
                raise RuntimeError("irreducible word enumeration exceeded its cap")
            nxt = []
            for w in frontier:
                for g in self.alphabet:
                    if max_degree is not None and w.degree + g.degree > max_degree:
                        continue
                    ext = w.letters + (g,)
                    n = len(ext)
                    if any(ext[n - len(t) :] == t for t in lhs_tails if len(t) <= n):
                        continue
                    nxt.append(Word(ext))
            frontier = nxt
        out.sort(key=Word.sort_key)
        return out

    def irreducible_counts_by_degree(
        self, max_degree: int | None = None
    ) -> dict[int, int]:
        counts: dict[int, int] = {}
        for w in self.irreducible_words(max_degree):
            counts[w.degree] = counts.get(w.degree, 0) + 1
        return counts

    def __str__(self):
        body = "; ".join(str(r) for r in self.rules)
        return f"RewritingSystem({len(self.rules)} rules over {self.field}: {body})"


def critical_pairs_between(
    rules: Sequence[RewriteRule], idx1: Iterable[int], idx2: Iterable[int]
) -> list[CriticalPair]:
    """Overlaps (tip = u lhs_{i} = lhs_{j} v) and inclusions, for i in idx1,
    j in idx2, deduplicated by (tip, rule pair, offset)."""
    pairs = []
    seen = set()
    idx2 = list(idx2)
    for i in idx1:
        m1 = rules[i].lhs
        for j in idx2:
            m2 = rules[j].lhs
            # proper overlaps: a proper suffix of lhs_j equals a proper prefix of lhs_i
            for t in range(1, min(len(m1), len(m2))):
                if m2.letters[len(m2) - t :] == m1.letters[:t]:
                    tip = Word(m2.letters + m1.letters[t:])
                    key = (i, j, "overlap", t)
                    if key not in seen:
                        seen.add(key)
                        pairs.append(
                            CriticalPair(tip, i, j, "overlap", m2[: len(m2) - t], m1[t:])
                        )
            # inclusions: lhs_i occurs inside lhs_j (proper), or equal lhs of distinct rules
            if i != j and len(m1) <= len(m2):
                if m1 == m2:
                    e = Word(())
                    pairs.append(CriticalPair(m2, i, j, "inclusion", e, e))
                    continue
                start = 0
                while True:
                    pos = m2.find(m1, start)
                    if pos < 0:
                        break
                    pairs.append(
                        CriticalPair(m2, i, j, "inclusion", m2[:pos], m2[pos + len(m1) :])
                    )
                    start = pos + 1
    return pairs
