import pytest

from anickres.words import (
    Alphabet,
    AlphabetMismatchError,
    Generator,
    Word,
    deglex_compare,
    word_of,
    words_up_to_degree,
)


@pytest.fixture
def alphabet():
    return Alphabet.from_names([("a", 1), ("b", 1), ("c", 2)])


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator("x", 0, 0)


def test_alphabet_uniqueness():
    with pytest.raises(ValueError):
        Alphabet([Generator("x", 1, 0), Generator("y", 1, 0)])
    with pytest.raises(ValueError):
        Alphabet([Generator("x", 1, 0), Generator("x", 1, 1)])


def test_alphabet_lookup(alphabet):
    assert alphabet.generator("a").degree == 1
    with pytest.raises(KeyError):
        alphabet.generator("z")
    assert len(alphabet) == 3


def test_word_degree_and_concat(alphabet):
    w = alphabet.word("a", "c", "b")
    assert w.degree == 4
    assert len(w) == 3
    v = alphabet.word("b")
    assert str(w * v) == "a c b b"
    assert (w * v).degree == 5


def test_parse_word(alphabet):
    assert alphabet.parse_word("a b") == alphabet.word("a", "b")
    assert alphabet.parse_word("1").is_empty()
    assert alphabet.parse_word("").is_empty()
    assert alphabet.parse_word("e").is_empty()


def test_deglex_degree_first(alphabet):
    # degree dominates: c (degree 2) beats any degree-1 word
    assert alphabet.word("b") < alphabet.word("c")
    assert alphabet.word("a", "a") < alphabet.word("c")
    assert deglex_compare(alphabet.word("c"), alphabet.word("a", "a")) > 0


def test_deglex_left_to_right(alphabet):
    assert alphabet.word("a", "b") < alphabet.word("b", "a")
    assert alphabet.word("a", "a") < alphabet.word("a", "b")


def test_deglex_prefix_smaller():
    # equal degree, one a strict prefix of the other: prefix is smaller
    alpha = Alphabet.from_names([("x", 1), ("y", 2)])
    u = alpha.word("x", "x")
    v = alpha.word("y")
    assert deglex_compare(u, v) < 0 or deglex_compare(v, u) < 0  # total
    w = alpha.word("x")
    assert deglex_compare(w, alpha.word("x", "y")) != 0


def test_monoidal(alphabet):
    u, v, w = alphabet.word("a"), alphabet.word("b"), alphabet.word("c", "a")
    assert u < v
    assert u * w < v * w
    assert w * u < w * v


def test_cross_alphabet_comparison_raises(alphabet):
    other = Alphabet.from_names([("z", 1)])
    with pytest.raises(AlphabetMismatchError):
        deglex_compare(alphabet.word("a"), other.word("z"))


def test_subword_search(alphabet):
    w = alphabet.word("a", "b", "a", "b")
    assert w.find(alphabet.word("b", "a")) == 1
    assert w.find(alphabet.word("b", "a"), 2) == -1
    assert w.contains(alphabet.word("a", "b"))
    assert not w.contains(alphabet.word("c"))


def test_slicing(alphabet):
    w = alphabet.word("a", "b", "c")
    assert w[:2] == alphabet.word("a", "b")
    assert w[1:] == alphabet.word("b", "c")
    assert w[0] == alphabet.generator("a")


def test_words_up_to_degree(alphabet):
    words = words_up_to_degree(alphabet, 2)
    # e; a, b; aa, ab, ba, bb, c
    assert len(words) == 8
    assert words[0].is_empty()
    assert [w.degree for w in words] == sorted(w.degree for w in words)
    keys = [w.sort_key() for w in words]
    assert keys == sorted(keys)


def test_str(alphabet):
    assert str(alphabet.word()) == "1"
    assert str(alphabet.word("a", "c")) == "a c"
