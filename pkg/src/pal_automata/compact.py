"""
Компактные автоматы: рёбра помечены непустыми словами.

Здесь собраны специальные состояния и специальные пути, элементарные
редукции, минимальный компактный автомат языка (по специальным остаткам)
и отображение-редукция на него.
"""

import graphlib
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .automata import reachable_states, residual


class Edge(NamedTuple):
    source: int
    label: str
    target: int


@dataclass(frozen=True)
class CompactAutomaton:
    """
    Детерминированный компактный автомат (Q, E, i, T).

    Attributes:
        states: Состояния.
        edges: Рёбра (source, label, target), label непусто.
        initial: Начальное состояние.
        terminals: Терминальные состояния.

    Raises:
        ValueError: Пустая метка, неизвестное состояние или два ребра
            из одного состояния с одинаковой первой буквой.
    """
    states: tuple[int, ...]
    edges: tuple[Edge, ...]
    initial: int
    terminals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        object.__setattr__(self, "terminals", frozenset(self.terminals))

        known = set(self.states)
        if len(known) != len(self.states):
            raise ValueError("Duplicate state ids")
        if self.initial not in known:
            raise ValueError(f"Initial state {self.initial} is not a state")
        if not self.terminals <= known:
            raise ValueError(f"Terminal states {sorted(self.terminals - known)} are not states")

        first_letters: set[tuple[int, str]] = set()
        for edge in self.edges:
            if edge.source not in known or edge.target not in known:
                raise ValueError(f"Edge {edge} uses an unknown state")
            if not edge.label:
                raise ValueError(f"Edge {edge.source} -> {edge.target} has an empty label")
            key = (edge.source, edge.label[0])
            if key in first_letters:
                raise ValueError(
                    f"Not deterministic: two edges leave {edge.source} "
                    f"with first letter {edge.label[0]!r}"
                )
            first_letters.add(key)

    def out_edges(self, q: int) -> list[Edge]:
        """Рёбра из q, по первой букве метки."""
        return sorted((e for e in self.edges if e.source == q), key=lambda e: e.label)

    def in_edges(self, q: int) -> list[Edge]:
        return [e for e in self.edges if e.target == q]

    def step(self, q: int, letter: str) -> Edge | None:
        for edge in self.edges:
            if edge.source == q and edge.label[0] == letter:
                return edge
        return None


def _index_arcs(A: CompactAutomaton) -> tuple[dict[int, int], list[tuple[int, int]]]:
    index = {q: i for i, q in enumerate(A.states)}
    return index, [(index[e.source], index[e.target]) for e in A.edges]


def is_trim(A: CompactAutomaton) -> bool:
    """Каждое состояние лежит на успешном пути."""
    index, arcs = _index_arcs(A)
    n = len(A.states)
    forward = reachable_states(n, arcs, [index[A.initial]])
    backward = reachable_states(n, arcs, [index[t] for t in A.terminals], reverse=True)
    return forward & backward == set(range(n))


def _require_trim(A: CompactAutomaton, operation: str) -> None:
    if not is_trim(A):
        raise ValueError(f"{operation} requires a trim automaton")


def topological_order(A: CompactAutomaton) -> list[int]:
    """
    Raises:
        ValueError: Если граф автомата содержит цикл.
    """
    sorter = graphlib.TopologicalSorter({q: set() for q in A.states})
    for edge in A.edges:
        sorter.add(edge.target, edge.source)
    try:
        return list(sorter.static_order())
    except graphlib.CycleError as e:
        raise ValueError(f"Cycle detected through states {e.args[1]}")


def special_states(A: CompactAutomaton) -> set[int]:
    """
    Начальное, терминальные и ветвящиеся состояния (исходящие метки
    начинаются с разных букв).
    """
    special = {A.initial} | set(A.terminals)
    first_letters: dict[int, set[str]] = {}
    for edge in A.edges:
        first_letters.setdefault(edge.source, set()).add(edge.label[0])
    special |= {q for q, letters in first_letters.items() if len(letters) >= 2}
    return special


def special_paths(A: CompactAutomaton) -> set[tuple[int, str, int]]:
    """
    Пути между специальными состояниями без промежуточных специальных
    состояний; метка равна конкатенации меток рёбер.
    """
    _require_trim(A, "special_paths")
    special = special_states(A)
    paths = set()
    for p in special:
        for edge in A.out_edges(p):
            label, q = edge.label, edge.target
            # a non-special state of a trim automaton has exactly one outgoing edge
            while q not in special:
                (nxt,) = A.out_edges(q)
                label += nxt.label
                q = nxt.target
            paths.add((p, label, q))
    return paths


def elementary_reduction(A: CompactAutomaton, q: int) -> CompactAutomaton:
    """
    Удалить неспециальное состояние q с единственным ребром q -v-> r:
    каждое (p, u, q) заменяется на (p, uv, r).

    Raises:
        ValueError: Если q не состояние A, q специально, или у q не
            ровно одно исходящее ребро в r != q.
    """
    if q not in A.states:
        raise ValueError(f"State {q} is not in the automaton")
    if q in special_states(A):
        raise ValueError(f"State {q} is special and cannot be suppressed")
    outgoing = A.out_edges(q)
    if len(outgoing) != 1 or outgoing[0].target == q:
        raise ValueError(f"State {q} must have exactly one outgoing edge to another state")
    (exit_edge,) = outgoing

    edges = []
    for edge in A.edges:
        if edge.source == q:
            continue
        if edge.target == q:
            edges.append(Edge(edge.source, edge.label + exit_edge.label, exit_edge.target))
        else:
            edges.append(edge)
    return CompactAutomaton(
        states=tuple(s for s in A.states if s != q),
        edges=tuple(edges),
        initial=A.initial,
        terminals=A.terminals,
    )


def reduce_to_minimal(A: CompactAutomaton, order: Iterable[int] | None = None) -> CompactAutomaton:
    """
    Применять элементарные редукции, пока все состояния не станут
    специальными.

    Args:
        A: Тримный детерминированный компактный автомат.
        order: Порядок удаления неспециальных состояний (по умолчанию
            топологический).

    Returns:
        Автомат с тем же языком; для автомата со свойством (R),
        например минимального, получается минимальный компактный автомат.
    """
    _require_trim(A, "reduce_to_minimal")
    special = special_states(A)
    if order is None:
        order = [q for q in topological_order(A) if q not in special]
    result = A
    for q in order:
        result = elementary_reduction(result, q)
    leftover = set(result.states) - special_states(result)
    if leftover:
        raise ValueError(f"Suppression order left non-special states {sorted(leftover)}")
    return result


def _residual_structure(language: Iterable[str]) -> tuple[CompactAutomaton, list[frozenset[str]]]:
    start = frozenset(language)
    if not start:
        raise ValueError("Minimal compact automaton is defined for nonempty languages only")

    def is_special(r: frozenset[str]) -> bool:
        return r == start or "" in r or len({w[0] for w in r if w}) >= 2

    ids = {start: 0}
    residuals = [start]
    edges = []
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for letter in sorted({w[0] for w in current if w}):
            label = letter
            nxt = residual(current, letter)
            # follow the unique continuation through non-special residuals
            while not is_special(nxt):
                (follow,) = {w[0] for w in nxt}
                label += follow
                nxt = residual(nxt, follow)
            if nxt not in ids:
                ids[nxt] = len(residuals)
                residuals.append(nxt)
                queue.append(nxt)
            edges.append(Edge(ids[current], label, ids[nxt]))

    automaton = CompactAutomaton(
        states=tuple(range(len(residuals))),
        edges=tuple(edges),
        initial=0,
        terminals=frozenset(i for i, r in enumerate(residuals) if "" in r),
    )
    return automaton, residuals


def minimal_compact(language: Iterable[str]) -> CompactAutomaton:
    """
    Минимальный компактный автомат конечного языка L.

    Состояния соответствуют специальным остаткам u⁻¹L (u = 1, u ∈ L, или в остатке
    есть два слова с разными первыми буквами); ребро p -v-> q, если
    никакой собственный префикс v не ведёт в специальный остаток.

    Raises:
        ValueError: Для пустого языка.
    """
    automaton, _ = _residual_structure(language)
    return automaton


def enumerate_language(A: CompactAutomaton) -> set[str]:
    """
    Метки всех успешных путей.

    Raises:
        ValueError: Если автомат содержит цикл.
    """
    order = topological_order(A)
    # words read from each state to a terminal, computed in reverse topological order
    right: dict[int, set[str]] = {}
    for q in reversed(order):
        words = {""} if q in A.terminals else set()
        for edge in A.out_edges(q):
            words |= {edge.label + w for w in right[edge.target]}
        right[q] = words
    return right[A.initial]


def right_language(A: CompactAutomaton, q: int) -> set[str]:
    """Язык, распознаваемый из состояния q."""
    return enumerate_language(
        CompactAutomaton(A.states, A.edges, q, A.terminals)
    )


@dataclass(frozen=True)
class ReductionMap:
    """
    Редукция φ: специальные состояния source -> специальные состояния target.
    """
    mapping: dict[int, int]
    source: CompactAutomaton
    target: CompactAutomaton

    def __call__(self, q: int) -> int:
        return self.mapping[q]

    def __len__(self) -> int:
        return len(self.mapping)


def compute_reduction(A: CompactAutomaton) -> ReductionMap:
    """
    Единственная редукция A на минимальный компактный автомат L(A):
    p -> u⁻¹L для любого пути i -u-> p.

    Проверяются корректность определения, условия 1–3 и сюръективность.

    Raises:
        ValueError: Если A не тримный или нарушено какое-либо условие.
    """
    _require_trim(A, "compute_reduction")
    language = enumerate_language(A)
    minimal, residuals = _residual_structure(language)
    state_of_residual = {r: i for i, r in enumerate(residuals)}
    special = special_states(A)

    # one access word per state, breadth-first from the initial state
    access = {A.initial: ""}
    queue = deque([A.initial])
    while queue:
        p = queue.popleft()
        for edge in A.out_edges(p):
            if edge.target not in access:
                access[edge.target] = access[p] + edge.label
                queue.append(edge.target)

    mapping = {}
    for p in sorted(special):
        u = access[p]
        target_residual = frozenset(w[len(u):] for w in language if w.startswith(u))
        if target_residual != frozenset(right_language(A, p)):
            raise ValueError(f"Reduction not well defined at state {p}")
        if target_residual not in state_of_residual:
            raise ValueError(f"State {p} maps to a residual that is not special")
        mapping[p] = state_of_residual[target_residual]

    if mapping[A.initial] != minimal.initial:
        raise ValueError("Condition 1 violated: initial state not mapped to initial state")
    for p, image in mapping.items():
        if (p in A.terminals) != (image in minimal.terminals):
            raise ValueError(f"Condition 2 violated at state {p}")
    if set(mapping.values()) != set(minimal.states):
        raise ValueError("Reduction is not surjective onto the minimal compact automaton")

    source_paths = special_paths(A)
    target_paths = {(e.source, e.label, e.target) for e in minimal.edges}
    for p, label, q in source_paths:
        if (mapping[p], label, mapping[q]) not in target_paths:
            raise ValueError(f"Condition 3 violated: special path {p} -{label}-> {q} has no image")
    for p in special:
        from_p = {(label, mapping[q]) for s, label, q in source_paths if s == p}
        for _, label, image in (t for t in target_paths if t[0] == mapping[p]):
            if (label, image) not in from_p:
                raise ValueError(
                    f"Condition 3 violated: edge {mapping[p]} -{label}-> {image} "
                    f"has no special path from {p}"
                )

    return ReductionMap(mapping=mapping, source=A, target=minimal)


class CanonicalForm(NamedTuple):
    n_states: int
    terminals: tuple[int, ...]
    edges: tuple[tuple[int, str, int], ...]


def relabel(A: CompactAutomaton) -> CompactAutomaton:
    """
    Перенумеровать состояния 0..n-1 обходом в ширину от начального,
    рёбра по первой букве метки. Недостижимые состояния идут в конце
    в исходном порядке.
    """
    ids = {A.initial: 0}
    queue = deque([A.initial])
    while queue:
        p = queue.popleft()
        for edge in A.out_edges(p):
            if edge.target not in ids:
                ids[edge.target] = len(ids)
                queue.append(edge.target)
    for q in A.states:
        if q not in ids:
            ids[q] = len(ids)
    return CompactAutomaton(
        states=tuple(range(len(ids))),
        edges=tuple(sorted(Edge(ids[e.source], e.label, ids[e.target]) for e in A.edges)),
        initial=0,
        terminals=frozenset(ids[t] for t in A.terminals),
    )


def canonical_form(A: CompactAutomaton) -> CanonicalForm:
    """Два автомата изоморфны тогда и только тогда, когда их канонические формы равны."""
    B = relabel(A)
    return CanonicalForm(
        n_states=len(B.states),
        terminals=tuple(sorted(B.terminals)),
        edges=tuple((e.source, e.label, e.target) for e in B.edges),
    )
