import pytest

from anickres.anick import ModuleElement, ResolutionPrefix, chains_T2
from anickres.fields import PrimeField
from anickres.kostant import small_system
from anickres.polynomials import Polynomial
from anickres.rewriting import RewritingSystem
from anickres.words import Alphabet, Word, word_of

F2 = PrimeField(2)


@pytest.fixture(scope="module")
def prefix3():
    return ResolutionPrefix(small_system(3).system)


def single_rule_system():
    alphabet = Alphabet.from_names([("a", 1)])
    rel = Polynomial.monomial(F2, alphabet.word("a", "a"))
    return RewritingSystem.from_relations(alphabet, F2, [rel])


def test_chains_single_rule():
    system = single_rule_system()
    prefix = ResolutionPrefix(system)
    assert [str(t) for t in prefix.chains[1]] == ["a a"]
    assert [str(t) for t in prefix.chains[2]] == ["a a a"]


def test_chains_T2_requires_reduced():
    alphabet = Alphabet.from_names([("a", 1)])
    system = RewritingSystem.from_relations(
        alphabet,
        F2,
        [
            Polynomial.monomial(F2, alphabet.word("a", "a")),
            Polynomial.monomial(F2, alphabet.word("a", "a", "a")),
        ],
    )
    with pytest.raises(ValueError):
        chains_T2(system)


def test_T2_families(prefix3):
    tips = {str(t) for t in prefix3.chains[2]}
    assert "b0 a0 b0 a0 b0 a0" in tips
    assert "a2 a1 a0" in tips  # m > l > k commuting triple
    assert "a1 a1 a1" in tips  # m = l = k
    assert "a1 b0 a0 b0 a0" in tips  # skew against the braid word
    assert "b1 a1 b1 a1 a0" in tips  # braid against the skew word
    assert len(prefix3.chains[2]) == 124


def test_T2_minimality(prefix3):
    tips = prefix3.chains[2]
    for w in tips:
        assert not any(t != w and w.contains(t) for t in tips)


def test_T1_antichain(prefix3):
    t1 = prefix3.chains[1]
    for u in t1:
        for v in t1:
            if u != v:
                assert not u.contains(v)


def test_delta0(prefix3):
    A = prefix3.system.alphabet
    e = A.empty_word
    val = prefix3.delta(0, e, A.word("a0"))
    assert val == ModuleElement.basis(-1, F2, A.word("a0"), e)


def test_j1_braid(prefix3):
    A = prefix3.system.alphabet
    val = prefix3.j_map(1, A.word("b0", "a0", "b0"), A.word("a0"))
    assert val == ModuleElement.basis(1, F2, A.empty_word, A.word("b0", "a0", "b0", "a0"))


def test_j1_no_factorization(prefix3):
    A = prefix3.system.alphabet
    assert prefix3.j_map(1, A.word("a0"), A.word("b1")) is None


def test_golden_d1(prefix3):
    A = prefix3.system.alphabet
    w = A.word

    def d1(*names):
        return str(prefix3.d_generator(1, w(*names)))

    assert d1("a1", "a0") == "a1 . a0 + a0 . a1"
    assert d1("a0", "a0") == "a0 . a0"
    assert d1("a1", "b0") == "a1 . b0 + b0 . a1 + a0 b0 . a0"
    assert d1("a2", "b0") == "a2 . b0 + b0 . a2 + a0 b0 a0 . a1"
    assert d1("b0", "a0", "b0", "a0") == "b0 a0 b0 . a0 + a0 b0 a0 . b0"


def test_golden_d2(prefix3):
    A = prefix3.system.alphabet
    w = A.word

    def d2(*names):
        return str(prefix3.d_generator(2, w(*names)))

    assert d2("a1", "a0", "a0") == "a1 . a0 a0 + a0 . a1 a0"
    assert d2("a1", "b0", "b0") == "a1 . b0 b0 + b0 . a1 b0 + . b0 a0 b0 a0"
    assert (
        d2("a2", "b0", "a0", "b0", "a0")
        == "a2 . b0 a0 b0 a0 + b0 a0 b0 . a2 a0 + a0 b0 a0 . a2 b0"
    )


def test_complex_identities(prefix3):
    ok, problems = prefix3.verify_complex()
    assert ok, problems


def test_degree_preservation(prefix3):
    assert prefix3.degree_check()


def test_lift_roundtrip(prefix3):
    # d(i(f)) = f for boundaries f = d(.t)
    for t in prefix3.chains[1][:10]:
        f = prefix3.d_generator(1, t)
        lifted = prefix3.lift_i(1, f)
        assert prefix3.apply_d(1, lifted) == f


def test_lift_rejects_noncycles(prefix3):
    from anickres.anick import LiftError

    A = prefix3.system.alphabet
    bad = ModuleElement.basis(-1, F2, A.word("a0"), A.empty_word).combine(
        1, ModuleElement.basis(-1, F2, A.empty_word, A.empty_word)
    )
    with pytest.raises(LiftError):
        prefix3.lift_i(0, bad)


def test_module_element_leading():
    A = small_system(0).alphabet
    f = ModuleElement.basis(0, F2, A.word("b0"), A.word("a0")).combine(
        1, ModuleElement.basis(0, F2, A.word("a0"), A.word("b0"))
    )
    (m, t), c = f.leading()
    assert (str(m), str(t)) == ("b0", "a0")


def test_act_reexpands():
    system = small_system(0).system
    prefix = ResolutionPrefix(system)
    A = system.alphabet
    f = ModuleElement.basis(0, F2, A.word("a0"), A.word("a0"))
    # a0 * (a0 . a0) = (a0 a0) . a0 -> 0
    assert prefix.act(A.word("a0"), f).is_zero()


def test_prefix_requires_reduced():
    alphabet = Alphabet.from_names([("a", 1)])
    system = RewritingSystem.from_relations(
        alphabet,
        F2,
        [
            Polynomial.monomial(F2, alphabet.word("a", "a")),
            Polynomial.monomial(F2, alphabet.word("a", "a", "a")),
        ],
    )
    with pytest.raises(ValueError):
        ResolutionPrefix(system)
