import pytest
from hypothesis import given, strategies as st

from pal_automata.words import (
    Alphabet,
    factors,
    is_palindrome,
    left_special_factors,
    longest_palindromic_suffix,
    palindromic_closure,
    palindromic_prefixes,
    prefixes,
    reverse,
    right_special_factors,
    suffixes,
    word_quotient,
)


words_abc = st.text(alphabet="abc", max_size=12)


def test_alphabet_validation():
    """Test that invalid alphabets raise ValueError."""
    with pytest.raises(ValueError, match="at least one letter"):
        Alphabet(())
    with pytest.raises(ValueError, match="distinct"):
        Alphabet(("a", "a"))
    with pytest.raises(ValueError, match="single lowercase"):
        Alphabet(("A",))


def test_alphabet_from_text():
    """Test alphabet inference from input text."""
    assert Alphabet.from_text("cabbage").letters == ("a", "b", "c", "e", "g")
    assert Alphabet.from_text("aB").letters == ("a", "b")
    with pytest.raises(ValueError, match="empty input"):
        Alphabet.from_text("")


def test_alphabet_of_size():
    """Test the first-n-letters constructor."""
    assert str(Alphabet.of_size(3)) == "abc"
    with pytest.raises(ValueError):
        Alphabet.of_size(0)


def test_alphabet_validate_unknown_symbol():
    """Test that validate reports the offending position."""
    alphabet = Alphabet(("a", "b"))
    assert alphabet.validate("abba") == "abba"
    with pytest.raises(ValueError, match="Unknown symbol 'c' at position 2"):
        alphabet.validate("abc")


def test_alphabet_words_order():
    """Test length-lexicographic enumeration."""
    words = list(Alphabet(("a", "b")).words(2))
    assert words == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert len(list(Alphabet.of_size(3).words(5))) == 364


def test_reverse():
    """Test word reversal."""
    assert reverse("abc") == "cba"
    assert reverse("") == ""
    assert reverse("aba") == "aba"


def test_is_palindrome():
    """Test palindrome detection."""
    assert is_palindrome("abaaba")
    assert is_palindrome("")
    assert not is_palindrome("ab")


def test_prefixes_suffixes_factors():
    """Test prefix, suffix and factor enumeration."""
    assert prefixes("ab") == ["", "a", "ab"]
    assert suffixes("ab") == ["ab", "b", ""]
    assert factors("aba") == {"", "a", "b", "ab", "ba", "aba"}


def test_word_quotient():
    """Test left quotient in the free monoid."""
    assert word_quotient("aba", "abaaba") == "aba"
    assert word_quotient("", "ab") == "ab"
    with pytest.raises(ValueError, match="is not a prefix"):
        word_quotient("b", "ab")


def test_longest_palindromic_suffix():
    """Test longest palindromic suffix on known words."""
    assert longest_palindromic_suffix("abaa") == "aa"
    assert longest_palindromic_suffix("") == ""
    assert longest_palindromic_suffix("abaabab") == "bab"


def test_palindromic_closure_examples():
    """Test palindromic closure on known words."""
    assert palindromic_closure("abaa") == "abaaba"
    assert palindromic_closure("aba") == "aba"
    assert palindromic_closure("ab") == "aba"
    assert palindromic_closure("") == ""


@given(words_abc)
def test_palindromic_closure_is_shortest_palindrome(w):
    """Test that the closure is the shortest palindrome with prefix w."""
    closure = palindromic_closure(w)
    assert is_palindrome(closure)
    assert closure.startswith(w)
    assert palindromic_closure(closure) == closure
    for k in range(len(w), len(closure)):
        # the only length-k candidate with prefix w
        candidate = w + reverse(w[: k - len(w)])
        assert not is_palindrome(candidate)


def test_palindromic_prefixes():
    """Test palindromic prefixes of abacaba."""
    assert palindromic_prefixes("abacaba") == ["", "a", "aba", "abacaba"]


def test_left_special_factors():
    """Test left special factors on small words."""
    # "aba" is only ever preceded by c
    assert left_special_factors("abacaba") == {"", "a"}
    assert left_special_factors("aa") == set()
    assert left_special_factors("ab") == {""}
    assert left_special_factors("") == set()


def test_right_special_factors():
    """Test right special factors mirror the left ones on palindromes."""
    w = "abacaba"
    assert right_special_factors(w) == {reverse(f) for f in left_special_factors(w)}
