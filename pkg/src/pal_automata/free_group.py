import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, NamedTuple

from .words import Alphabet


class SignedLetter(NamedTuple):
    """Generator a (sign=+1) or its inverse a⁻¹ (sign=-1)."""
    letter: str
    sign: Literal[1, -1]

    def inverse(self) -> "SignedLetter":
        return SignedLetter(self.letter, -self.sign)

    def __str__(self) -> str:
        return self.letter if self.sign > 0 else self.letter.upper()


def _free_reduce(letters: Iterable[SignedLetter]) -> tuple[SignedLetter, ...]:
    reduced: list[SignedLetter] = []
    for item in letters:
        if reduced and reduced[-1].letter == item.letter and reduced[-1].sign == -item.sign:
            reduced.pop()
        else:
            reduced.append(item)
    return tuple(reduced)


@dataclass(frozen=True)
class GroupElement:
    """
    Element of the free group FG(A), always stored in reduced form.

    Text encoding: lowercase letter = generator, uppercase = its inverse,
    "1" = identity.

    Attributes:
        letters: Reduced sequence of signed letters.
        alphabet: The alphabet A the group is free on.
    """
    letters: tuple[SignedLetter, ...]
    alphabet: Alphabet

    def __post_init__(self):
        items = []
        for item in self.letters:
            item = SignedLetter(*item)
            if item.letter not in self.alphabet:
                raise ValueError(
                    f"Unknown letter {item.letter!r} (alphabet is {self.alphabet})"
                )
            if item.sign not in (1, -1):
                raise ValueError(f"Sign must be +1 or -1, got {item.sign}")
            items.append(item)
        object.__setattr__(self, "letters", _free_reduce(items))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "GroupElement":
        return cls((), alphabet)

    @classmethod
    def generator(cls, letter: str, alphabet: Alphabet, sign: Literal[1, -1] = 1) -> "GroupElement":
        return cls((SignedLetter(letter, sign),), alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet | None = None) -> "GroupElement":
        """
        Parse "aB" style text; "1" and "" both denote the identity.

        If no alphabet is given it is inferred from the lowercased input.

        Raises:
            ValueError: On symbols that are not letters of the alphabet.
        """
        if text == "1":
            text = ""
        if alphabet is None:
            alphabet = Alphabet.from_text(text) if text else Alphabet(("a",))
        letters = []
        for position, ch in enumerate(text):
            letter = ch.lower()
            if not ch.isalpha() or letter not in alphabet:
                raise ValueError(
                    f"Unknown symbol {ch!r} at position {position} (alphabet is {alphabet})"
                )
            letters.append(SignedLetter(letter, 1 if ch.islower() else -1))
        return cls(tuple(letters), alphabet)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(str(item) for item in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[SignedLetter]:
        return iter(self.letters)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __invert__(self) -> "GroupElement":
        return invert(self)

    def is_identity(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        """True when every letter has sign +1 (element of A*)."""
        return all(item.sign > 0 for item in self.letters)

    def to_word(self) -> str:
        """
        Positive element as a plain word.

        Raises:
            ValueError: If the element contains an inverse letter.
        """
        if not self.is_positive():
            raise ValueError(f"{self} is not a positive word")
        return "".join(item.letter for item in self.letters)

    def is_palindrome(self) -> bool:
        return reverse_group(self) == self


def _check_same_alphabet(u: GroupElement, v: GroupElement) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError(
            f"Alphabet mismatch: {u.alphabet} vs {v.alphabet}"
        )


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    """Reduced product u·v."""
    _check_same_alphabet(u, v)
    return GroupElement(u.letters + v.letters, u.alphabet)


def invert(u: GroupElement) -> GroupElement:
    """u⁻¹: reversed sequence with all signs flipped."""
    return GroupElement(tuple(item.inverse() for item in reversed(u.letters)), u.alphabet)


def reverse_group(u: GroupElement) -> GroupElement:
    """Reversal antimorphism: letters reversed, signs kept."""
    return GroupElement(tuple(reversed(u.letters)), u.alphabet)


def letter_degree(u: GroupElement, a: str) -> int:
    """
    a-degree |u|_a: occurrences of a minus occurrences of a⁻¹.

    Raises:
        ValueError: If a is not a letter of the alphabet.
    """
    if a not in u.alphabet:
        raise ValueError(f"Unknown letter {a!r} (alphabet is {u.alphabet})")
    return sum(item.sign for item in u.letters if item.letter == a)


def algebraic_length(u: GroupElement) -> int:
    """|u| = sum of the letter degrees."""
    return sum(letter_degree(u, a) for a in u.alphabet)


def embed_word(w: str, alphabet: Alphabet | None = None) -> GroupElement:
    """A* -> FG(A), every letter with sign +1."""
    if alphabet is None:
        alphabet = Alphabet.from_text(w) if w else Alphabet(("a",))
    alphabet.validate(w)
    return GroupElement(tuple(SignedLetter(ch, 1) for ch in w), alphabet)


def signed_letters(alphabet: Alphabet) -> list[SignedLetter]:
    """a, a⁻¹, b, b⁻¹, ... in alphabet order."""
    return [SignedLetter(a, sign) for a in alphabet for sign in (1, -1)]


def reduced_elements(alphabet: Alphabet, max_len: int) -> Iterator[GroupElement]:
    """
    All reduced elements of length ≤ max_len, length-lexicographic,
    ties broken by the order of `signed_letters`.
    """
    base = signed_letters(alphabet)
    for length in range(max_len + 1):
        for combo in itertools.product(base, repeat=length):
            if any(x.letter == y.letter and x.sign == -y.sign for x, y in zip(combo, combo[1:])):
                continue
            yield GroupElement(combo, alphabet)
