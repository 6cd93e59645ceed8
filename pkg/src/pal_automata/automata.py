import numpy as np
import scipy.sparse
import scipy.sparse.csgraph
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .words import Alphabet, is_palindrome, prefixes, suffixes


def reachable_states(
    n_states: int,
    arcs: Iterable[tuple[int, int]],
    sources: Iterable[int],
    reverse: bool = False,
) -> set[int]:
    """
    States reachable from any of `sources` along `arcs`.

    A virtual root (index n_states) is wired to every source so a single
    breadth-first pass covers them all.

    Args:
        n_states: States are 0..n_states-1.
        arcs: (source, target) pairs; duplicates are harmless.
        sources: Start states.
        reverse: Walk arcs backwards (co-accessibility).

    Returns:
        Set of reachable state indices (sources included).
    """
    arcs = list(arcs)
    sources = list(sources)
    if not sources:
        return set()
    root = n_states
    rows = [t if reverse else s for s, t in arcs] + [root] * len(sources)
    cols = [s if reverse else t for s, t in arcs] + sources
    graph = scipy.sparse.csr_matrix(
        (np.ones(len(rows), dtype=np.int8), (np.array(rows, dtype=int), np.array(cols, dtype=int))),
        shape=(n_states + 1, n_states + 1),
    )
    order = scipy.sparse.csgraph.breadth_first_order(
        graph, root, directed=True, return_predecessors=False
    )
    return {int(q) for q in order if q != root}


@dataclass(frozen=True)
class Dfa:
    """
    Deterministic automaton over letters.

    Attributes:
        states: State ids 0..n-1.
        initial: Initial state.
        terminals: Terminal states.
        transitions: Partial map (state, letter) -> state.
        residuals: Optional residual u⁻¹L of every state, as a sorted tuple
            of words (filled in by `minimal_dfa`).
    """
    states: tuple[int, ...]
    initial: int
    terminals: frozenset[int]
    transitions: dict[tuple[int, str], int] = field(hash=False)
    residuals: tuple[tuple[str, ...], ...] | None = field(default=None, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        known = set(self.states)
        if self.initial not in known:
            raise ValueError(f"Initial state {self.initial} is not a state")
        if not self.terminals <= known:
            raise ValueError(f"Terminal states {sorted(self.terminals - known)} are not states")
        for (p, letter), q in self.transitions.items():
            if p not in known or q not in known:
                raise ValueError(f"Transition {p} -{letter}-> {q} uses an unknown state")
            if len(letter) != 1:
                raise ValueError(f"Transition labels must be letters, got {letter!r}")

    def run(self, word: str) -> int | None:
        """State 1·word, or None if the path leaves the automaton."""
        state = self.initial
        for letter in word:
            state = self.transitions.get((state, letter))
            if state is None:
                return None
        return state

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.terminals

    def incoming_letters(self) -> dict[int, set[str]]:
        """Letters labelling the edges that end in each state."""
        incoming: dict[int, set[str]] = {q: set() for q in self.states}
        for (_, letter), q in self.transitions.items():
            incoming[q].add(letter)
        return incoming

    def _index(self) -> dict[int, int]:
        return {q: i for i, q in enumerate(self.states)}

    def is_trim(self) -> bool:
        index = self._index()
        arcs = [(index[p], index[q]) for (p, _), q in self.transitions.items()]
        n = len(self.states)
        forward = reachable_states(n, arcs, [index[self.initial]])
        backward = reachable_states(n, arcs, [index[t] for t in self.terminals], reverse=True)
        return forward & backward == set(range(n))

    def trim(self) -> "Dfa":
        """Keep only the states lying on some initial -> terminal path."""
        index = self._index()
        arcs = [(index[p], index[q]) for (p, _), q in self.transitions.items()]
        n = len(self.states)
        forward = reachable_states(n, arcs, [index[self.initial]])
        backward = reachable_states(n, arcs, [index[t] for t in self.terminals], reverse=True)
        useful = {self.states[i] for i in forward & backward}
        if self.initial not in useful:
            # empty language: keep the bare initial state
            useful = {self.initial}
        return Dfa(
            states=tuple(q for q in self.states if q in useful),
            initial=self.initial,
            terminals=self.terminals & useful,
            transitions={
                (p, a): q for (p, a), q in self.transitions.items() if p in useful and q in useful
            },
        )

    def language(self) -> set[str]:
        """All accepted words (the automaton must be acyclic)."""
        from .compact import enumerate_language
        return enumerate_language(self.to_compact())

    def to_compact(self) -> "CompactAutomaton":
        """The same automaton viewed as a compact automaton with one-letter labels."""
        from .compact import CompactAutomaton, Edge
        edges = tuple(
            Edge(p, letter, q)
            for (p, letter), q in sorted(self.transitions.items())
        )
        return CompactAutomaton(
            states=self.states,
            edges=edges,
            initial=self.initial,
            terminals=self.terminals,
        )


def _letter_order(language: Iterable[str], alphabet: Alphabet | None) -> tuple[str, ...]:
    if alphabet is not None:
        return alphabet.letters
    return tuple(sorted({ch for w in language for ch in w}))


def residual(language: frozenset[str], letter: str) -> frozenset[str]:
    """a⁻¹L = {v : a v ∈ L}."""
    return frozenset(w[1:] for w in language if w[:1] == letter)


def minimal_dfa(language: Iterable[str], alphabet: Alphabet | None = None) -> Dfa:
    """
    Минимальный автомат конечного языка L по Майхиллу–Нероду.

    Состояния соответствуют различным непустым остаткам u⁻¹L, начальное
    состояние самому L, терминальные содержат пустое слово. Номера состояний
    выдаются обходом в ширину от L, буквы перебираются в порядке алфавита.

    Args:
        language: Конечное множество слов.
        alphabet: Порядок букв (по умолчанию отсортированные буквы языка).

    Returns:
        Dfa с заполненным полем residuals.
    """
    start = frozenset(language)
    if alphabet is not None:
        for w in start:
            alphabet.validate(w)
    letters = _letter_order(start, alphabet)

    ids: dict[frozenset[str], int] = {start: 0}
    order = [start]
    transitions: dict[tuple[int, str], int] = {}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for letter in letters:
            nxt = residual(current, letter)
            if not nxt:
                continue
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            transitions[(ids[current], letter)] = ids[nxt]

    return Dfa(
        states=tuple(range(len(order))),
        initial=0,
        terminals=frozenset(ids[r] for r in order if "" in r),
        transitions=transitions,
        residuals=tuple(tuple(sorted(r)) for r in order),
    )


def suffix_automaton(w: str, alphabet: Alphabet | None = None) -> Dfa:
    """Минимальный автомат множества суффиксов слова w."""
    return minimal_dfa(suffixes(w), alphabet=alphabet)


@dataclass
class SuffixTheoremReport:
    """
    Результат проверки свойств суффиксного автомата слова Pal(u).

    Attributes:
        directive: Направляющее слово u.
        passed: Все три свойства выполнены.
        n_states: Число состояний S(u).
        terminal_prefixes: Префиксы Pal(u), ведущие в терминальные состояния.
        counterexample: Описание первого нарушения (или None).
    """
    directive: str
    passed: bool
    n_states: int
    terminal_prefixes: list[str]
    counterexample: str | None = None


def verify_pal_suffix_theorem(u: str, alphabet: Alphabet | None = None) -> SuffixTheoremReport:
    """
    Проверить для S(u) = suffix_automaton(Pal(u)):
      (i)   |Pal(u)| + 1 состояний, p -> 1·p: биекция префиксов на состояния;
      (ii)  в терминальные состояния ведут ровно палиндромические префиксы;
      (iii) все входящие в состояние рёбра несут одну букву.
    """
    from .pal_map import pal_word_fast

    pal = pal_word_fast(u)
    dfa = suffix_automaton(pal, alphabet=alphabet)
    n_states = len(dfa.states)
    states_of = {p: dfa.run(p) for p in prefixes(pal)}
    terminal_prefixes = [p for p, q in states_of.items() if q in dfa.terminals]

    def report(message: str | None) -> SuffixTheoremReport:
        return SuffixTheoremReport(
            directive=u,
            passed=message is None,
            n_states=n_states,
            terminal_prefixes=terminal_prefixes,
            counterexample=message,
        )

    if n_states != len(pal) + 1:
        return report(f"(i) {n_states} states, expected |Pal(u)|+1 = {len(pal) + 1}")
    if set(states_of.values()) != set(dfa.states):
        return report("(i) prefix map p -> 1·p is not a bijection onto the states")

    palindromic = {p for p in states_of if is_palindrome(p)}
    if set(terminal_prefixes) != palindromic:
        odd = sorted(set(terminal_prefixes) ^ palindromic, key=len)
        return report(f"(ii) terminal states differ from palindromic prefixes at {odd[0]!r}")

    for state, letters in dfa.incoming_letters().items():
        if len(letters) > 1:
            return report(f"(iii) state {state} has incoming letters {sorted(letters)}")

    return report(None)
