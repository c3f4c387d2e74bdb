import pytest

from anickres.fields import PrimeField
from anickres.kostant import small_system
from anickres.polynomials import Polynomial
from anickres.rewriting import (
    RewritingSystem,
    SubalphabetError,
    UnorderableRelationError,
    make_rule,
)
from anickres.words import Alphabet


F2 = PrimeField(2)


@pytest.fixture
def x1():
    """The alphabet a0 < b0 < a1 < b1 with degrees 1, 1, 2, 2."""
    return Alphabet.from_names([("a0", 1), ("b0", 1), ("a1", 2), ("b1", 2)])


def poly(alphabet, field, *terms):
    return Polynomial.from_terms(
        field, [(c, alphabet.word(*names)) for c, names in terms]
    )


def s1_relations(alphabet):
    rows = [
        [(1, ("a0", "a0"))],
        [(1, ("b0", "b0"))],
        [(1, ("a1", "a1"))],
        [(1, ("b1", "b1"))],
        [(1, ("a1", "a0")), (1, ("a0", "a1"))],
        [(1, ("b1", "b0")), (1, ("b0", "b1"))],
        [(1, ("a1", "b0")), (1, ("b0", "a1")), (1, ("a0", "b0", "a0"))],
        [(1, ("b1", "a0")), (1, ("a0", "b1")), (1, ("b0", "a0", "b0"))],
    ]
    return [poly(alphabet, F2, *row) for row in rows]


def test_make_rule_orients(x1):
    f = poly(x1, F2, (1, ("a1", "b0")), (1, ("b0", "a1")), (1, ("a0", "b0", "a0")))
    rule = make_rule(f)
    assert rule.lhs == x1.word("a1", "b0")
    assert set(rule.rhs.terms) == {x1.word("b0", "a1"), x1.word("a0", "b0", "a0")}


def test_make_rule_monic():
    F3 = PrimeField(3)
    alphabet = Alphabet.from_names([("a0", 1)])
    rule = make_rule(poly(alphabet, F3, (2, ("a0",))))
    assert rule.lhs == alphabet.word("a0")
    assert rule.rhs.is_zero()


def test_make_rule_rejects_zero_and_unit(x1):
    with pytest.raises(ValueError):
        make_rule(Polynomial.zero(F2))
    with pytest.raises(UnorderableRelationError):
        make_rule(poly(x1, F2, (1, ())))


def test_reduce_once_deterministic(x1):
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1))
    g = poly(x1, F2, (1, ("a0", "a1", "b0", "b1")))
    h = system.reduce_once(g)
    # inside context: a0 (a1 b0) b1 -> a0 (b0 a1 + a0 b0 a0) b1
    assert h == poly(
        x1, F2, (1, ("a0", "b0", "a1", "b1")), (1, ("a0", "a0", "b0", "a0", "b1"))
    )
    assert system.reduce_once(poly(x1, F2, (1, ("a0", "b0")))) is None


def test_normal_form_matches_iterated_reduce_once(x1):
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1))
    g = poly(x1, F2, (1, ("b1", "a1", "b0", "a0")), (1, ("a0", "a0")))
    h = g
    while True:
        nxt = system.reduce_once(h)
        if nxt is None:
            break
        h = nxt
    assert system.normal_form(g) == h


def test_normal_form_unit(x1):
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1))
    e = Polynomial.monomial(F2, x1.empty_word)
    assert system.normal_form(e) == e


def test_critical_pairs_include_self_overlap():
    alphabet = Alphabet.from_names([("a0", 1)])
    system = RewritingSystem.from_relations(
        alphabet, F2, [poly(alphabet, F2, (1, ("a0", "a0")))]
    )
    pairs = system.find_critical_pairs()
    assert len(pairs) == 1
    assert pairs[0].tip == alphabet.word("a0", "a0", "a0")
    assert system.normal_form(system.pair_obstruction(pairs[0])).is_zero()
    assert system.is_complete()[0]


def test_critical_pair_tips(x1):
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1))
    tips = {cp.tip for cp in system.find_critical_pairs()}
    assert x1.word("a1", "b0", "b0") in tips


def test_pair_obstruction_value(x1):
    system = RewritingSystem.from_relations(
        x1,
        F2,
        [
            poly(x1, F2, (1, ("a1", "b0")), (1, ("b0", "a1")), (1, ("a0", "b0", "a0"))),
            poly(x1, F2, (1, ("b0", "b0"))),
        ],
    )
    cp = next(
        cp
        for cp in system.find_critical_pairs()
        if cp.tip == x1.word("a1", "b0", "b0")
    )
    expected = poly(x1, F2, (1, ("b0", "a1", "b0")), (1, ("a0", "b0", "a0", "b0")))
    assert system.pair_obstruction(cp) == expected


def test_inclusion_pair_found():
    alphabet = Alphabet.from_names([("a0", 1)])
    system = RewritingSystem.from_relations(
        alphabet,
        F2,
        [
            poly(alphabet, F2, (1, ("a0", "a0"))),
            poly(alphabet, F2, (1, ("a0", "a0", "a0"))),
        ],
    )
    kinds = {cp.kind for cp in system.find_critical_pairs()}
    assert "inclusion" in kinds


def test_completion_derives_braid(x1):
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1))
    assert not system.is_complete()[0]
    done = system.complete(8)
    assert done.is_complete()[0]
    lhss = {str(r.lhs) for r in done.interreduce().rules}
    assert "b0 a0 b0 a0" in lhss
    # the index-1 braid word is NOT a consequence of these eight relations:
    # both of its words stay irreducible in the completed system
    braid1 = poly(x1, F2, (1, ("b1", "a1", "b1", "a1")), (1, ("a1", "b1", "a1", "b1")))
    assert not done.normal_form(braid1).is_zero()
    # adjoining it by hand recovers the reference reduced basis exactly
    from anickres.rewriting import make_rule

    full = done.with_rules(list(done.rules) + [make_rule(braid1)]).complete(8)
    reference = small_system(1).system
    assert {str(r.lhs) for r in full.interreduce().rules} == {
        str(r.lhs) for r in reference.rules
    }
    assert len(full.irreducible_words()) == len(reference.irreducible_words()) == 64


def test_complete_is_identity_on_complete_systems():
    system = small_system(1).system
    done = system.complete(8)
    assert done.rules == system.rules


def test_interreduce_drops_redundant():
    alphabet = Alphabet.from_names([("a0", 1)])
    system = RewritingSystem.from_relations(
        alphabet,
        F2,
        [
            poly(alphabet, F2, (1, ("a0", "a0"))),
            poly(alphabet, F2, (1, ("a0", "a0", "a0"))),
        ],
    )
    reduced = system.interreduce()
    assert len(reduced.rules) == 1
    assert reduced.is_reduced()


def test_interreduce_identity_on_reduced():
    system = small_system(2).system
    assert system.interreduce().rules == system.rules


def test_interreduce_preserves_normal_forms(x1):
    import random

    rng = random.Random(7)
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1)).complete(8)
    reduced = system.interreduce()
    gens = list(x1)
    for _ in range(50):
        from anickres.words import Word

        w = Word(tuple(rng.choice(gens) for _ in range(rng.randint(0, 6))))
        g = Polynomial.monomial(F2, w)
        assert system.normal_form(g) == reduced.normal_form(g)


def test_restrict_to_subalphabet():
    big = small_system(3).system
    keep = [g for g in big.alphabet if g.name in ("a0", "b0", "a1", "b1")]
    sub = big.restrict_to_subalphabet(keep)
    reference = small_system(1).system
    assert set(sub.rules) == set(reference.rules)
    assert sub.is_complete()[0]


def test_restrict_violation_raises():
    # a rule over the kept letters whose tail uses a dropped letter
    alpha = Alphabet.from_names([("x", 1), ("y", 1), ("z", 1)])
    system = RewritingSystem.from_relations(
        alpha, F2, [poly(alpha, F2, (1, ("y", "x")), (1, ("z",)))]
    )
    keep = [g for g in alpha if g.name in ("x", "y")]
    with pytest.raises(SubalphabetError):
        system.restrict_to_subalphabet(keep)


def test_irreducible_words_bounded(x1):
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1)).complete(8)
    words = system.irreducible_words(max_degree=2)
    assert [str(w) for w in words] == ["1", "a0", "b0", "a0 b0", "b0 a0", "a1", "b1"]


def test_irreducible_words_degree_zero(x1):
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1))
    assert [w.is_empty() for w in system.irreducible_words(max_degree=0)] == [True]


def test_completeness_iff_dimension_match(x1):
    # incomplete system overcounts irreducible words relative to its completion
    system = RewritingSystem.from_relations(x1, F2, s1_relations(x1))
    complete = system.complete(8)
    assert len(system.irreducible_words(max_degree=8)) > len(
        complete.irreducible_words(max_degree=8)
    )
