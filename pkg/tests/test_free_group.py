import pytest
from hypothesis import given, strategies as st

from pal_automata.free_group import (
    GroupElement,
    SignedLetter,
    algebraic_length,
    embed_word,
    invert,
    letter_degree,
    multiply,
    reduced_elements,
    reverse_group,
    signed_letters,
)
from pal_automata.words import Alphabet


ABC = Alphabet(("a", "b", "c"))

signed = st.sampled_from(signed_letters(ABC))
elements = st.lists(signed, max_size=8).map(lambda xs: GroupElement(tuple(xs), ABC))


def g(text: str) -> GroupElement:
    return GroupElement.parse(text, ABC)


def is_reduced(u: GroupElement) -> bool:
    return all(
        not (x.letter == y.letter and x.sign == -y.sign)
        for x, y in zip(u.letters, u.letters[1:])
    )


def test_parse_and_str():
    """Test text encoding: uppercase = inverse, 1 = identity."""
    assert str(g("aB")) == "aB"
    assert g("aB").letters == (SignedLetter("a", 1), SignedLetter("b", -1))
    assert str(g("1")) == "1"
    assert g("") == GroupElement.identity(ABC)
    assert str(g("abBA")) == "1"


def test_parse_unknown_symbol():
    """Test that unknown symbols raise ValueError."""
    with pytest.raises(ValueError, match="Unknown symbol"):
        g("ad")
    with pytest.raises(ValueError, match="Unknown symbol"):
        g("a1")


def test_parse_infers_alphabet():
    """Test alphabet inference from lowercased input."""
    assert GroupElement.parse("aB").alphabet == Alphabet(("a", "b"))


def test_multiply():
    """Test reduced products."""
    assert multiply(g("ab"), g("Bc")) == g("ac")
    assert g("a") * g("a") == g("aa")
    assert (g("abC") * ~g("abC")).is_identity()


def test_multiply_alphabet_mismatch():
    """Test that elements over different alphabets cannot be multiplied."""
    with pytest.raises(ValueError, match="Alphabet mismatch"):
        multiply(g("a"), GroupElement.parse("a", Alphabet(("a", "b"))))


def test_invert():
    """Test inversion."""
    assert invert(g("ab")) == g("BA")
    assert invert(g("1")) == g("1")
    assert invert(g("aB")) == g("bA")


def test_reverse_group():
    """Test reversal keeps signs."""
    assert reverse_group(g("aB")) == g("Ba")
    assert reverse_group(g("aba")) == g("aba")
    assert reverse_group(g("abA")) == g("Aba")


def test_letter_degree_and_algebraic_length():
    """Test a-degree and algebraic length."""
    assert letter_degree(g("abA"), "a") == 0
    assert letter_degree(g("A"), "a") == -1
    assert letter_degree(g("aba"), "a") == 2
    assert letter_degree(g("aba"), "b") == 1
    assert algebraic_length(g("aba")) == 3
    assert algebraic_length(g("aB")) == 0
    assert algebraic_length(g("1")) == 0
    with pytest.raises(ValueError, match="Unknown letter"):
        letter_degree(g("a"), "z")


def test_embed_word():
    """Test the embedding of A* into the free group."""
    assert embed_word("ab", ABC) == g("ab")
    assert embed_word("", ABC).is_identity()
    assert embed_word("ab", ABC) == embed_word("a", ABC) * embed_word("b", ABC)
    assert embed_word("ab", ABC).to_word() == "ab"


def test_to_word_rejects_inverse_letters():
    """Test that only positive elements convert to words."""
    with pytest.raises(ValueError, match="not a positive word"):
        g("aB").to_word()


def test_reduced_elements_count():
    """Test the number of reduced elements of bounded length."""
    ab = Alphabet(("a", "b"))
    elements_ab = list(reduced_elements(ab, 2))
    # 1 + 4 + 4*3
    assert len(elements_ab) == 17
    assert len(set(elements_ab)) == 17
    assert [str(x) for x in elements_ab[:5]] == ["1", "a", "A", "b", "B"]


@given(elements, elements, elements)
def test_group_laws(u, v, w):
    """Test associativity, inverses and reducedness of products."""
    assert (u * v) * w == u * (v * w)
    assert (u * ~u).is_identity()
    assert is_reduced(u * v)
    assert reverse_group(u * v) == reverse_group(v) * reverse_group(u)
    assert algebraic_length(u * v) == algebraic_length(u) + algebraic_length(v)
