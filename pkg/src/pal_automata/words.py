"""
Слова над конечным алфавитом: обращение, палиндромы,
палиндромическое замыкание и анализ факторов.

Слово представлено обычной строкой `str`; каждый символ является одной буквой
алфавита. Пустое слово "" играет роль единицы моноида A*.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class Alphabet:
    """
    Упорядоченный алфавит A.

    Attributes:
        letters: Буквы в фиксированном порядке (строка или кортеж символов).
    """
    letters: tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)

        if len(letters) == 0:
            raise ValueError("Alphabet must contain at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError(f"Alphabet letters must be distinct, got {''.join(letters)!r}")
        for letter in letters:
            if len(letter) != 1 or not letter.islower():
                raise ValueError(
                    f"Letters must be single lowercase characters, got {letter!r}"
                )

    @classmethod
    def from_text(cls, text: str) -> "Alphabet":
        """
        Вывести алфавит из текста: различные буквы (без учёта регистра),
        в отсортированном порядке.

        Raises:
            ValueError: Если в тексте нет ни одной буквы.
        """
        letters = sorted({ch.lower() for ch in text})
        if not letters:
            raise ValueError("Cannot infer an alphabet from an empty input")
        return cls(tuple(letters))

    @classmethod
    def of_size(cls, size: int) -> "Alphabet":
        """Первые `size` латинских букв: a, b, c, ..."""
        if not 1 <= size <= 26:
            raise ValueError(f"Alphabet size must be in 1..26, got {size}")
        return cls(tuple(chr(ord("a") + i) for i in range(size)))

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, letter: object) -> bool:
        return letter in self.letters

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(self.letters)

    def index(self, letter: str) -> int:
        """Позиция буквы в порядке алфавита."""
        try:
            return self.letters.index(letter)
        except ValueError:
            raise ValueError(f"Unknown letter {letter!r} for alphabet {self}")

    def validate(self, word: str) -> str:
        """
        Проверить, что все символы слова принадлежат алфавиту.

        Returns:
            То же слово (удобно для цепочек вызовов).

        Raises:
            ValueError: Если встретился символ вне алфавита.
        """
        for position, symbol in enumerate(word):
            if symbol not in self.letters:
                raise ValueError(
                    f"Unknown symbol {symbol!r} at position {position} "
                    f"(alphabet is {self})"
                )
        return word

    def words(self, max_len: int) -> Iterator[str]:
        """
        Все слова длины ≤ max_len в порядке длина-лексикографический
        (буквы сравниваются по порядку алфавита).
        """
        for length in range(max_len + 1):
            for letters in itertools.product(self.letters, repeat=length):
                yield "".join(letters)


def reverse(w: str) -> str:
    """Обращение слова: abc -> cba."""
    return w[::-1]


def is_palindrome(w: str) -> bool:
    """True, если reverse(w) == w (пустое слово тоже палиндром)."""
    return w == w[::-1]


def is_prefix(p: str, w: str) -> bool:
    return w.startswith(p)


def prefixes(w: str) -> list[str]:
    """Все префиксы w, от пустого до самого w."""
    return [w[:i] for i in range(len(w) + 1)]


def suffixes(w: str) -> list[str]:
    """Все суффиксы w, от самого w до пустого."""
    return [w[i:] for i in range(len(w) + 1)]


def factors(w: str) -> set[str]:
    """Множество всех факторов (подслов) w, включая пустое."""
    result = {""}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            result.add(w[i:j])
    return result


def word_quotient(p: str, w: str) -> str:
    """
    Левое частное p⁻¹w в моноиде: слово v такое, что w = p·v.

    Raises:
        ValueError: Если p не является префиксом w.
    """
    if not w.startswith(p):
        raise ValueError(
            f"{p!r} is not a prefix of {w!r}; quotient leaves the free monoid"
        )
    return w[len(p):]


def longest_palindromic_suffix(w: str) -> str:
    """
    Самый длинный суффикс-палиндром слова w.

    Наивный перебор суффиксов от длинных к коротким, O(|w|^2).
    Для непустого w результат непуст, так как одна буква уже палиндром.
    """
    for i in range(len(w) + 1):
        candidate = w[i:]
        if is_palindrome(candidate):
            return candidate
    return ""


def palindromic_closure(w: str) -> str:
    """
    Палиндромическое замыкание w^(+) = y z reverse(y), где w = y z
    и z: самый длинный суффикс-палиндром w.

    Это единственный кратчайший палиндром с префиксом w.

    Example:
        >>> palindromic_closure("abaa")
        'abaaba'
    """
    z = longest_palindromic_suffix(w)
    y = w[: len(w) - len(z)]
    return y + z + reverse(y)


def palindromic_prefixes(w: str) -> list[str]:
    """Префиксы w, являющиеся палиндромами (по возрастанию длины)."""
    return [p for p in prefixes(w) if is_palindrome(p)]


def _extensions(w: str) -> tuple[dict[str, set[str]], dict[str, set[str]]]:
    # factor -> letters seen immediately to its left / right
    left: dict[str, set[str]] = {}
    right: dict[str, set[str]] = {}
    n = len(w)
    for i in range(n + 1):
        for j in range(i, n + 1):
            factor = w[i:j]
            if i > 0:
                left.setdefault(factor, set()).add(w[i - 1])
            if j < n:
                right.setdefault(factor, set()).add(w[j])
    return left, right


def left_special_factors(w: str) -> set[str]:
    """
    Факторы f слова w, для которых найдутся две различные буквы x
    с x·f, являющимся фактором w.

    Пустое слово левоспециально ровно тогда, когда в w встречаются
    хотя бы две различные буквы.
    """
    left, _ = _extensions(w)
    return {factor for factor, letters in left.items() if len(letters) >= 2}


def right_special_factors(w: str) -> set[str]:
    """Зеркальное понятие: две различные буквы x с f·x, являющимся фактором w."""
    _, right = _extensions(w)
    return {factor for factor, letters in right.items() if len(letters) >= 2}
