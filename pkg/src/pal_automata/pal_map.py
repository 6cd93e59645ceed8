"""
Палиндромизация Pal на A* и на свободной группе FG(A).

Автоморфизмы L_u и R_u задаются базисным элементом u и применяются
структурной рекурсией по u: L_{uv} = L_u ∘ L_v, так что закон морфизма
проверяется тестами, а не зашит в таблицы образов букв.
"""

from dataclasses import dataclass
from typing import Literal

from .free_group import (
    GroupElement,
    SignedLetter,
    embed_word,
    reduced_elements,
    reverse_group,
)
from .words import Alphabet, palindromic_closure


Side = Literal["L", "R"]


def _letter_image(action: SignedLetter, side: Side, b: str) -> list[SignedLetter]:
    """
    Образ генератора b под L_a, R_a или их обратными.

        L_a(b) = a b,     L_a⁻¹(b) = a⁻¹ b
        R_a(b) = b a,     R_a⁻¹(b) = b a⁻¹
    и все четыре отображения фиксируют саму букву a.
    """
    if b == action.letter:
        return [SignedLetter(b, 1)]
    twist = SignedLetter(action.letter, action.sign)
    if side == "L":
        return [twist, SignedLetter(b, 1)]
    return [SignedLetter(b, 1), twist]


def _apply_letter(action: SignedLetter, side: Side, v: GroupElement) -> GroupElement:
    image: list[SignedLetter] = []
    for item in v.letters:
        block = _letter_image(action, side, item.letter)
        if item.sign < 0:
            block = [x.inverse() for x in reversed(block)]
        image.extend(block)
    return GroupElement(tuple(image), v.alphabet)


def _apply(side: Side, u: GroupElement, v: GroupElement) -> GroupElement:
    if u.alphabet != v.alphabet:
        raise ValueError(f"Alphabet mismatch: {u.alphabet} vs {v.alphabet}")
    # α_{u1...un} = α_{u1} ∘ ... ∘ α_{un}: the last letter acts first
    result = v
    for action in reversed(u.letters):
        result = _apply_letter(action, side, result)
    return result


def apply_L(u: GroupElement, v: GroupElement) -> GroupElement:
    """Образ v под автоморфизмом L_u."""
    return _apply("L", u, v)


def apply_R(u: GroupElement, v: GroupElement) -> GroupElement:
    """Образ v под автоморфизмом R_u (R_a(b) = reverse(L_a(b)))."""
    return _apply("R", u, v)


@dataclass(frozen=True)
class Automorphism:
    """
    Автоморфизм α_u ∈ {L_u, R_u} свободной группы.

    Attributes:
        basis: Элемент u, задающий автоморфизм.
        side: "L" или "R".
    """
    basis: GroupElement
    side: Side = "R"

    def __post_init__(self):
        if self.side not in ("L", "R"):
            raise ValueError(f"side must be 'L' or 'R', got {self.side!r}")

    def __call__(self, v: GroupElement) -> GroupElement:
        return _apply(self.side, self.basis, v)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self ∘ other = α_{uv}."""
        if other.side != self.side:
            raise ValueError("Cannot compose L and R automorphisms by basis")
        return Automorphism(self.basis * other.basis, self.side)

    def inverse(self) -> "Automorphism":
        return Automorphism(~self.basis, self.side)


def check_lr_conjugation(a: GroupElement, u: GroupElement) -> bool:
    """a·R_a(u) = L_a(u)·a для буквы a ∈ A ∪ A⁻¹."""
    if len(a) != 1:
        raise ValueError(f"Expected a single signed letter, got {a}")
    return a * apply_R(a, u) == apply_L(a, u) * a


def check_lr_reversal(u: GroupElement, v: GroupElement) -> bool:
    """R_u(v) = reverse(L_u(reverse(v)))."""
    return apply_R(u, v) == reverse_group(apply_L(u, reverse_group(v)))


def pal_word(u: str) -> str:
    """
    Итерированное палиндромическое замыкание:
        Pal(1) = 1,  Pal(w a) = (Pal(w) a)^(+).

    Example:
        >>> pal_word("aba")
        'abaaba'
    """
    result = ""
    for a in u:
        result = palindromic_closure(result + a)
    return result


def pal_prefix_table(u: str, max_length: int | None = None) -> tuple[str, list[int]]:
    """
    Pal(u) и таблица длин |Pal(p)| для всех префиксов p слова u.

    Шаг по формуле Жюстена:
        Pal(ux) = Pal(u) x Pal(u),             если x не входит в u;
        Pal(ux) = Pal(u) Pal(u1)⁻¹ Pal(u),     если u = u1 x u2, u2 без x.
    Pal(u1): префикс Pal(u), поэтому частное берётся срезом по таблице.

    Args:
        u: Направляющее слово.
        max_length: Ограничение на |Pal(u)| (None: без ограничения).

    Raises:
        ValueError: Если длина Pal превысит max_length.
    """
    pal = ""
    lengths = [0]
    last: dict[str, int] = {}
    for i, x in enumerate(u):
        if x in last:
            # u1 = u[:last[x]]
            tail = pal[lengths[last[x]]:]
        else:
            tail = x + pal
        new_length = len(pal) + len(tail)
        if max_length is not None and new_length > max_length:
            raise ValueError(
                f"|Pal({u[:i + 1]})| = {new_length} exceeds the guard {max_length}"
            )
        pal = pal + tail
        lengths.append(new_length)
        last[x] = i
    return pal, lengths


def pal_word_fast(u: str, max_length: int | None = None) -> str:
    """То же, что pal_word, но без поиска суффиксов-палиндромов."""
    pal, _ = pal_prefix_table(u, max_length=max_length)
    return pal


def pal_group(u: GroupElement, max_length: int | None = None) -> GroupElement:
    """
    Продолжение Pal на FG(A):
        Pal(1) = 1,  Pal(a u) = a · R_a(Pal(u))  для приведённого a u.

    Example:
        Pal(a b⁻¹) = b⁻¹: отображение не инъективно на группе.

    Raises:
        ValueError: Если длина Pal какого-либо суффикса u превысит max_length.
    """
    result = GroupElement.identity(u.alphabet)
    for i in range(len(u) - 1, -1, -1):
        a = GroupElement((u.letters[i],), u.alphabet)
        result = a * apply_R(a, result)
        if max_length is not None and len(result) > max_length:
            suffix = GroupElement(u.letters[i:], u.alphabet)
            raise ValueError(f"|Pal({suffix})| = {len(result)} exceeds the guard {max_length}")
    return result


def check_justin_R(u: GroupElement, v: GroupElement) -> bool:
    """Pal(uv) = Pal(u) · R_u(Pal(v))."""
    return pal_group(u * v) == pal_group(u) * apply_R(u, pal_group(v))


def check_justin_L(u: GroupElement, v: GroupElement) -> bool:
    """Pal(uv) = L_u(Pal(v)) · Pal(u)."""
    return pal_group(u * v) == apply_L(u, pal_group(v)) * pal_group(u)


@dataclass(frozen=True)
class SemidirectPair:
    """
    Элемент полупрямого произведения FG(A) *_R FG(A):
        (u, v)(r, s) = (u R_v(r), v s).
    """
    first: GroupElement
    second: GroupElement

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "SemidirectPair":
        one = GroupElement.identity(alphabet)
        return cls(one, one)

    def __mul__(self, other: "SemidirectPair") -> "SemidirectPair":
        return semidirect_multiply(self, other)

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


def semidirect_multiply(p: SemidirectPair, q: SemidirectPair) -> SemidirectPair:
    return SemidirectPair(p.first * apply_R(p.second, q.first), p.second * q.second)


def delta(u: GroupElement) -> SemidirectPair:
    """δ(u) = (Pal(u), u): морфизм FG(A) -> FG(A) *_R FG(A)."""
    return SemidirectPair(pal_group(u), u)


@dataclass(frozen=True)
class TransducerState:
    """
    Состояние R_u последовательного преобразователя для Pal.

    Attributes:
        directive: Прочитанный элемент u.
    """
    directive: GroupElement

    @classmethod
    def initial(cls, alphabet: Alphabet) -> "TransducerState":
        return cls(GroupElement.identity(alphabet))


def transducer_step(s: TransducerState, a: str) -> tuple[TransducerState, str]:
    """
    R_u · a = R_{ua},  R_u * a = R_u(a).

    Returns:
        Новое состояние и выданное положительное слово R_u(a).

    Raises:
        ValueError: Если a не буква алфавита.
    """
    alphabet = s.directive.alphabet
    if a not in alphabet:
        raise ValueError(f"Unknown letter {a!r} (alphabet is {alphabet})")
    letter = GroupElement.generator(a, alphabet)
    output = apply_R(s.directive, letter)
    return TransducerState(s.directive * letter), output.to_word()


def run_transducer(w: str, alphabet: Alphabet | None = None) -> list[str]:
    """Выходы преобразователя по буквам w; их конкатенация равна Pal(w)."""
    if alphabet is None:
        alphabet = embed_word(w).alphabet
    state = TransducerState.initial(alphabet)
    emissions = []
    for a in w:
        state, out = transducer_step(state, a)
        emissions.append(out)
    return emissions


def verify_cocycle_witness(x: GroupElement, u: GroupElement) -> bool:
    """Pal(u) = x⁻¹ · R_u(x)."""
    return pal_group(u) == ~x * apply_R(u, x)


def cocycle_witness_search(alphabet: Alphabet, max_len: int) -> GroupElement | None:
    """
    Найти x с Pal(a) = x⁻¹ R_a(x) для всех a ∈ A среди приведённых
    элементов длины ≤ max_len (порядок длина-лексикографический).

    Для двух букв находится x = ab; при |A| ≥ 3 свидетеля нет
    (сравнение степеней: |x|(|A| - 1) = |A|).

    Returns:
        Первый найденный x или None.
    """
    if max_len < 0:
        raise ValueError(f"max_len must be non-negative, got {max_len}")
    generators = [GroupElement.generator(a, alphabet) for a in alphabet]
    for x in reduced_elements(alphabet, max_len):
        inverse = ~x
        if all(inverse * apply_R(a, x) == a for a in generators):
            return x
    return None
