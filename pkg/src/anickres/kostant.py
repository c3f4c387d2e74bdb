"""Presentations of the divided-power enveloping algebra of strictly
upper-triangular matrices over a prime field.

Three flavors are constructed:

* the big system over generators e_ij^(k) (all divided powers up to an
  exponent bound), whose rules multiply equal positions, commute disjoint
  ones, and straighten the two kinds of interacting position pairs;
* the small p = 2, n = 3 system over a_k = e_12^(2^k), b_k = e_23^(2^k),
  a finite reduced Groebner basis per index bound;
* two experimental conjectural systems (odd p at n = 3, and p = 2 at
  general n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .fields import PrimeField, binomial_mod_p
from .polynomials import Polynomial
from .rewriting import RewritingSystem, make_rule
from .words import Alphabet, Generator, Word, concat, word_of


class AlphabetTooSmallError(ValueError):
    """A product of divided powers leaves the truncated alphabet with a
    nonzero coefficient; raise the exponent bound (a p-power minus one
    makes the truncation close)."""


@dataclass(frozen=True)
class Position:
    """A matrix position (i, j) with 1 <= i < j <= n."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"bad position ({self.i}, {self.j})")

    @property
    def span(self) -> int:
        return self.j - self.i

    def __str__(self):
        return f"({self.i},{self.j})"


def all_positions(n: int) -> list[Position]:
    return [Position(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def default_position_order(n: int) -> list[Position]:
    """Positions in ascending order: longer spans first (smaller), then
    larger i first among equal spans."""
    if n < 2:
        raise ValueError("need n >= 2")
    return sorted(all_positions(n), key=lambda q: (-q.span, -q.i))


@dataclass
class KostantPresentation:
    """A presentation: alphabet plus rewriting system, with its parameters."""

    n: int
    p: int
    flavor: str  # "big" | "small" | "conjectural"
    system: RewritingSystem
    params: dict
    experimental: bool = False

    @property
    def alphabet(self) -> Alphabet:
        return self.system.alphabet

    @property
    def field(self) -> PrimeField:
        return self.system.field


# ---------------------------------------------------------------------
# big system
# ---------------------------------------------------------------------

def _big_alphabet(
    n: int, exponent_bound: int, position_order: Sequence[Position]
) -> tuple[Alphabet, dict[tuple[Position, int], Generator]]:
    gens = {}
    for pidx, pos in enumerate(position_order):
        for k in range(1, exponent_bound + 1):
            # descending exponent within a position: larger k, smaller rank
            rank = pidx * exponent_bound + (exponent_bound - k)
            gens[(pos, k)] = Generator(
                f"e{pos.i}{pos.j}_{k}", k * pos.span, rank
            )
    return Alphabet(gens.values()), gens


def big_system(
    n: int,
    p: int,
    exponent_bound: int,
    position_order: Optional[Sequence[Position]] = None,
) -> KostantPresentation:
    """All straightening rules on divided powers e_ij^(k), k <= exponent_bound.

    With exponent_bound = p^l - 1 the equal-position products close up
    (binomials across a p-power boundary vanish); any other bound that
    produces an out-of-alphabet product with nonzero coefficient raises
    AlphabetTooSmallError.
    """
    if n < 2 or exponent_bound < 1:
        raise ValueError("need n >= 2 and exponent_bound >= 1")
    field = PrimeField(p)
    order = list(position_order) if position_order is not None else default_position_order(n)
    if sorted(order, key=lambda q: (q.i, q.j)) != all_positions(n):
        raise ValueError("position order must enumerate every position exactly once")
    alphabet, gen_of = _big_alphabet(n, exponent_bound, order)
    rank_of_pos = {pos: idx for idx, pos in enumerate(order)}

    def e(pos: Position, k: int) -> Word:
        """The word e_pos^(k); exponent 0 is the empty word."""
        if k == 0:
            return alphabet.empty_word
        return word_of(gen_of[(pos, k)])

    relations: list[Polynomial] = []
    exps = range(1, exponent_bound + 1)

    # equal positions: e^(k) e^(r) -> C(k+r, k) e^(k+r)
    for pos in order:
        for k in exps:
            for r in exps:
                coeff = binomial_mod_p(k + r, k, p)
                lhs = e(pos, k) * e(pos, r)
                if k + r > exponent_bound:
                    if coeff:
                        raise AlphabetTooSmallError(
                            f"product e{pos.i}{pos.j}^({k})e{pos.i}{pos.j}^({r}) needs "
                            f"exponent {k + r} > bound {exponent_bound} with unit "
                            f"coefficient; use a bound of the form p^l - 1 or raise it"
                        )
                    relations.append(Polynomial.monomial(field, lhs))
                else:
                    relations.append(
                        Polynomial.from_terms(field, [(1, lhs), (-coeff, e(pos, k + r))])
                    )

    # mixed positions: lhs has the larger position first
    for P in order:
        for Q in order:
            if rank_of_pos[Q] >= rank_of_pos[P]:
                continue  # need Q strictly below P
            for k in exps:
                for r in exps:
                    lhs = e(P, k) * e(Q, r)
                    if Q.i == P.j:
                        # straightening: e_ij^(k) e_jt^(r) ->
                        #   sum_s e_jt^(r-s) e_it^(s) e_ij^(k-s)
                        t = Q.j
                        mid = Position(P.i, t)
                        terms = [(1, lhs)]
                        for s in range(min(k, r) + 1):
                            terms.append(
                                (-1, e(Q, r - s) * e(mid, s) * e(P, k - s))
                            )
                        relations.append(Polynomial.from_terms(field, terms))
                    elif Q.j == P.i:
                        # straightening: e_ij^(k) e_si^(r) ->
                        #   sum_t (-1)^t e_si^(r-t) e_sj^(t) e_ij^(k-t)
                        s0 = Q.i
                        mid = Position(s0, P.j)
                        terms = [(1, lhs)]
                        for t in range(min(k, r) + 1):
                            terms.append(
                                ((-1) ** (t + 1), e(Q, r - t) * e(mid, t) * e(P, k - t))
                            )
                        relations.append(Polynomial.from_terms(field, terms))
                    else:
                        # disjoint in the interacting sense: plain swap
                        relations.append(
                            Polynomial.from_terms(
                                field, [(1, lhs), (-1, e(Q, r) * e(P, k))]
                            )
                        )

    rules = [make_rule(f) for f in relations if not f.is_zero()]
    system = RewritingSystem(alphabet, field, rules)
    return KostantPresentation(
        n,
        p,
        "big",
        system,
        {"exponent_bound": exponent_bound, "position_order": [str(q) for q in order]},
    )


# ---------------------------------------------------------------------
# dimension formulas
# ---------------------------------------------------------------------

def pbw_dimension(n: int, p: int, l: int) -> int:
    """Total dimension of the exponent-truncated subalgebra: (p^l)^(n(n-1)/2)."""
    if l < 1:
        raise ValueError("need l >= 1")
    return (p**l) ** (n * (n - 1) // 2)


def graded_pbw_dimensions(n: int, p: int, l: int, max_degree: int) -> dict[int, int]:
    """Number of exponent tuples (k_ij), 0 <= k_ij <= p^l - 1, with
    sum k_ij (j - i) = d, for each d <= max_degree."""
    if l < 1:
        raise ValueError("need l >= 1")
    bound = p**l - 1
    counts = {0: 1}
    for pos in all_positions(n):
        nxt: dict[int, int] = {}
        for d, c in counts.items():
            for k in range(bound + 1):
                nd = d + k * pos.span
                if nd <= max_degree:
                    nxt[nd] = nxt.get(nd, 0) + c
        counts = nxt
    return counts


def graded_pbw_dimension(n: int, p: int, l: int, d: int) -> int:
    return graded_pbw_dimensions(n, p, l, d).get(d, 0)


# ---------------------------------------------------------------------
# small system (p = 2, n = 3)
# ---------------------------------------------------------------------

def small_alphabet(l: int) -> Alphabet:
    """a_0 < b_0 < a_1 < b_1 < ... < a_l < b_l with deg a_k = deg b_k = 2^k."""
    if l < 0:
        raise ValueError("need l >= 0")
    return Alphabet.from_names(
        [item for k in range(l + 1) for item in ((f"a{k}", 2**k), (f"b{k}", 2**k))]
    )


def small_relations(alphabet: Alphabet, l: int, field: PrimeField) -> list[Polynomial]:
    a = [word_of(alphabet.generator(f"a{k}")) for k in range(l + 1)]
    b = [word_of(alphabet.generator(f"b{k}")) for k in range(l + 1)]
    F = field
    rels = []
    for k in range(l + 1):
        rels.append(Polynomial.monomial(F, a[k] * a[k]))
        rels.append(Polynomial.monomial(F, b[k] * b[k]))
        rels.append(
            Polynomial.from_terms(
                F,
                [
                    (1, b[k] * a[k] * b[k] * a[k]),
                    (1, a[k] * b[k] * a[k] * b[k]),
                ],
            )
        )
        for m in range(k + 1, l + 1):
            tail_a = concat([a[k], b[k], a[k]] + a[k + 1 : m])
            tail_b = concat([b[k], a[k], b[k]] + b[k + 1 : m])
            rels.append(
                Polynomial.from_terms(F, [(1, a[m] * a[k]), (1, a[k] * a[m])])
            )
            rels.append(
                Polynomial.from_terms(F, [(1, b[m] * b[k]), (1, b[k] * b[m])])
            )
            rels.append(
                Polynomial.from_terms(
                    F, [(1, a[m] * b[k]), (1, b[k] * a[m]), (1, tail_a)]
                )
            )
            rels.append(
                Polynomial.from_terms(
                    F, [(1, b[m] * a[k]), (1, a[k] * b[m]), (1, tail_b)]
                )
            )
    return rels


def small_system(l: int) -> KostantPresentation:
    """The finite reduced Groebner basis S_l over indices 0..l (p=2, n=3)."""
    field = PrimeField(2)
    alphabet = small_alphabet(l)
    rules = [make_rule(f) for f in small_relations(alphabet, l, field)]
    system = RewritingSystem(alphabet, field, rules, known_reduced=True)
    return KostantPresentation(3, 2, "small", system, {"index_bound": l})


def verify_small_against_big(l: int) -> tuple[bool, list[Polynomial]]:
    """Map a_k -> e_12^(2^k), b_k -> e_23^(2^k) and check that every small
    relation reduces to zero in the big system with bound 2^(l+1) - 1."""
    small = small_system(l)
    big = big_system(3, 2, 2 ** (l + 1) - 1)
    e12 = {k: big.alphabet.generator(f"e12_{2**k}") for k in range(l + 1)}
    e23 = {k: big.alphabet.generator(f"e23_{2**k}") for k in range(l + 1)}

    def image_word(w: Word) -> Word:
        letters = []
        for g in w:
            kind, k = g.name[0], int(g.name[1:])
            letters.append(e12[k] if kind == "a" else e23[k])
        return Word(tuple(letters))

    failures = []
    for rule in small.system.rules:
        img = Polynomial.from_terms(
            big.field,
            [(1, image_word(rule.lhs))]
            + [(c, image_word(w)) for w, c in rule.rhs],
        )
        nf = big.system.normal_form(img)
        if not nf.is_zero():
            failures.append(nf)
    return (not failures, failures)


def frobenius_shift_check(
    l: int, j: int, degree_bound: int | None = None
) -> tuple[bool, list[Polynomial]]:
    """Shift a_k -> a_{k+j}, b_k -> b_{k+j} on the relations of the index-l
    small system and reduce the images by the index-(l+j) system."""
    if j < 1:
        raise ValueError("need j >= 1")
    src = small_system(l)
    dst = small_system(l + j)

    def shift_word(w: Word) -> Word:
        return Word(
            tuple(
                dst.alphabet.generator(f"{g.name[0]}{int(g.name[1:]) + j}")
                for g in w
            )
        )

    failures = []
    for rule in src.system.rules:
        img = Polynomial.from_terms(
            dst.field,
            [(1, shift_word(rule.lhs))] + [(c, shift_word(w)) for w, c in rule.rhs],
        )
        if degree_bound is not None and img.leading_monomial().degree > degree_bound:
            continue
        nf = dst.system.normal_form(img)
        if not nf.is_zero():
            failures.append(nf)
    return (not failures, failures)


# ---------------------------------------------------------------------
# conjectural systems (experimental)
# ---------------------------------------------------------------------

def descent_or_step_permutations(l: int) -> list[tuple[int, ...]]:
    """Permutations (i_1..i_l) of (1..l) where each successor either drops
    or rises by exactly one."""
    return [
        perm
        for perm in itertools.permutations(range(1, l + 1))
        if all(perm[s + 1] < perm[s] or perm[s + 1] == perm[s] + 1 for s in range(l - 1))
    ]


def _conjectural_alphabet(n: int, p: int, index_bound: int) -> Alphabet:
    """a_{1k} < a_{2k} < ... < a_{n-1,k} < a_{1,k+1} < ..., deg a_{ik} = p^k."""
    return Alphabet.from_names(
        [
            (f"a{i}_{k}", p**k)
            for k in range(index_bound + 1)
            for i in range(1, n)
        ]
    )


def conjectural_system(
    variant: str, n: int, p: int, index_bound: int
) -> KostantPresentation:
    """Experimental relation sets over the simple-root divided powers
    a_{ik} = e_{i,i+1}^(p^k), truncated at index k <= index_bound."""
    if index_bound < 0:
        raise ValueError("need index_bound >= 0")
    field = PrimeField(p)
    if variant == "odd_p_n3":
        if p <= 2 or n != 3:
            raise ValueError("odd_p_n3 requires p > 2 and n = 3")
        alphabet = _conjectural_alphabet(3, p, index_bound)
        a = [word_of(alphabet.generator(f"a1_{k}")) for k in range(index_bound + 1)]
        b = [word_of(alphabet.generator(f"a2_{k}")) for k in range(index_bound + 1)]
        rels = []
        for k in range(index_bound + 1):
            rels.append(Polynomial.monomial(field, concat([a[k]] * p)))
            rels.append(Polynomial.monomial(field, concat([b[k]] * p)))
            rels.append(
                Polynomial.from_terms(
                    field,
                    [
                        (1, b[k] * b[k] * a[k]),
                        (-2, b[k] * a[k] * b[k]),
                        (1, a[k] * b[k] * b[k]),
                    ],
                )
            )
            rels.append(
                Polynomial.from_terms(
                    field,
                    [
                        (1, b[k] * a[k] * a[k]),
                        (-2, a[k] * b[k] * a[k]),
                        (1, a[k] * a[k] * b[k]),
                    ],
                )
            )
            rels.append(
                Polynomial.from_terms(
                    field,
                    [
                        (1, concat([b[k] * a[k]] * p)),
                        (-1, concat([a[k] * b[k]] * p)),
                    ],
                )
            )
            for l in range(k + 1, index_bound + 1):
                tail_a = concat(
                    [a[k], b[k]] + [w for m in range(k, l) for w in [a[m]] * (p - 1)]
                )
                tail_b = concat(
                    [b[k], a[k]] + [w for m in range(k, l) for w in [b[m]] * (p - 1)]
                )
                rels.append(
                    Polynomial.from_terms(
                        field,
                        [(1, a[l] * b[k]), (-1, b[k] * a[l]), (-1, tail_a)],
                    )
                )
                rels.append(
                    Polynomial.from_terms(
                        field,
                        [(1, b[l] * a[k]), (-1, a[k] * b[l]), (-1, tail_b)],
                    )
                )
    elif variant == "p2_general_n":
        if p != 2 or n < 4:
            raise ValueError("p2_general_n requires p = 2 and n >= 4")
        alphabet = _conjectural_alphabet(n, 2, index_bound)
        gen = {
            (i, k): alphabet.generator(f"a{i}_{k}")
            for k in range(index_bound + 1)
            for i in range(1, n)
        }

        def prod(seq, k):
            return Word(tuple(gen[(i, k)] for i in seq))

        rels = []
        for k in range(index_bound + 1):
            for i in range(1, n):
                rels.append(Polynomial.monomial(field, prod([i, i], k)))
            # squared staircase products, summed over the admissible orderings
            for l in range(2, n):
                for m in range(0, n - l):
                    terms = []
                    for perm in descent_or_step_permutations(l):
                        shifted = [idx + m for idx in perm]
                        terms.append((1, prod(shifted + shifted, k)))
                    rels.append(Polynomial.from_terms(field, terms))
            # commutator relations against the interval products
            for m in range(1, n - 1):
                for i in range(1, n - m):
                    x = prod([i + m - 1], k)
                    up = prod(range(i, i + m + 1), k)
                    down = prod(range(i + m, i - 1, -1), k)
                    rels.append(
                        Polynomial.from_terms(
                            field,
                            [
                                (1, x * up),
                                (1, up * x),
                                (1, x * down),
                                (1, down * x),
                            ],
                        )
                    )
    else:
        raise ValueError(f"unknown variant {variant!r}")

    rules = [make_rule(f) for f in rels if not f.is_zero()]
    system = RewritingSystem(alphabet, field, rules)
    return KostantPresentation(
        n,
        p,
        "conjectural",
        system,
        {"variant": variant, "index_bound": index_bound},
        experimental=True,
    )
