import numpy as np
from dataclasses import dataclass

from .compact import CompactAutomaton, Edge
from .pal_map import pal_prefix_table, pal_word_fast
from .words import Alphabet, word_quotient


@dataclass(frozen=True)
class PalCompactAutomaton:
    """
    Минимальный компактный суффиксный автомат S_c(u) слова Pal(u).

    Состояние k соответствует префиксу u[:k]; все состояния терминальны,
    начальное: 0 (пустой префикс).

    Attributes:
        directive: Направляющее слово u.
        alphabet: Алфавит u.
        underlying: Сам компактный автомат.
        pal: Pal(u).
        pal_lengths: |Pal(u[:k])| для k = 0..|u|; Pal(u[:k]) = pal[:pal_lengths[k]].
    """
    directive: str
    alphabet: Alphabet
    underlying: CompactAutomaton
    pal: str
    pal_lengths: tuple[int, ...]

    def prefix(self, state: int) -> str:
        return self.directive[:state]

    def pal_of(self, state: int) -> str:
        """Pal(префикса), соответствующего состоянию."""
        return self.pal[: self.pal_lengths[state]]

    def edge_label(self, state: int) -> str:
        """Метка любого ребра в состояние w: Pal(w⁻)⁻¹ Pal(w)."""
        if state == 0:
            raise ValueError("The initial state has no incoming edges")
        return word_quotient(self.pal_of(state - 1), self.pal_of(state))

    @property
    def n_states(self) -> int:
        return len(self.underlying.states)

    @property
    def n_edges(self) -> int:
        return len(self.underlying.edges)


def _resolve_alphabet(u: str, alphabet: Alphabet | None) -> Alphabet:
    if alphabet is None:
        return Alphabet.from_text(u) if u else Alphabet(("a",))
    alphabet.validate(u)
    return alphabet


def build_direct(
    u: str,
    alphabet: Alphabet | None = None,
    max_pal_length: int | None = None,
) -> PalCompactAutomaton:
    """
    Построить S_c(u) напрямую: для каждого разложения u = x y a z,
    где y не содержит a,: ребро x -> xya с меткой Pal(xy)⁻¹ Pal(xya).

    Args:
        u: Направляющее слово.
        alphabet: Алфавит (по умолчанию выводится из u).
        max_pal_length: Ограничение на |Pal(u)|.

    Returns:
        PalCompactAutomaton с |u| + 1 состояниями.
    """
    alphabet = _resolve_alphabet(u, alphabet)
    pal, lengths = pal_prefix_table(u, max_length=max_pal_length)

    edges = []
    last: dict[str, int] = {}
    for i, a in enumerate(u):
        label = word_quotient(pal[: lengths[i]], pal[: lengths[i + 1]])
        # x = u[:j] with y = u[j:i] free of a
        for j in range(last.get(a, -1) + 1, i + 1):
            edges.append(Edge(j, label, i + 1))
        last[a] = i

    underlying = CompactAutomaton(
        states=tuple(range(len(u) + 1)),
        edges=tuple(edges),
        initial=0,
        terminals=frozenset(range(len(u) + 1)),
    )
    return PalCompactAutomaton(
        directive=u,
        alphabet=alphabet,
        underlying=underlying,
        pal=pal,
        pal_lengths=tuple(lengths),
    )


def extend(A: PalCompactAutomaton, x: str, max_pal_length: int | None = None) -> PalCompactAutomaton:
    """
    S_c(u) -> S_c(ux): u = h u2, u2: самый длинный суффикс без x;
    добавить состояние ux и рёбра h p -> ux для каждого префикса p
    слова u2 с меткой Pal(u)⁻¹ Pal(ux).

    Raises:
        ValueError: Если x не буква алфавита.
    """
    if x not in A.alphabet:
        raise ValueError(f"Unknown letter {x!r} (alphabet is {A.alphabet})")
    u = A.directive
    n = len(u)

    position = u.rfind(x)
    if position >= 0:
        # Pal(ux) = Pal(u) Pal(u1)⁻¹ Pal(u), u = u1 x u2
        new_pal = A.pal + word_quotient(A.pal_of(position), A.pal)
    else:
        new_pal = A.pal + x + A.pal
    if max_pal_length is not None and len(new_pal) > max_pal_length:
        raise ValueError(f"|Pal({u + x})| = {len(new_pal)} exceeds the guard {max_pal_length}")
    label = word_quotient(A.pal, new_pal)

    h = position + 1
    new_edges = tuple(Edge(h + k, label, n + 1) for k in range(n - h + 1))
    underlying = CompactAutomaton(
        states=A.underlying.states + (n + 1,),
        edges=A.underlying.edges + new_edges,
        initial=0,
        terminals=A.underlying.terminals | {n + 1},
    )
    return PalCompactAutomaton(
        directive=u + x,
        alphabet=A.alphabet,
        underlying=underlying,
        pal=new_pal,
        pal_lengths=A.pal_lengths + (len(new_pal),),
    )


def restrict(A: PalCompactAutomaton, p: str) -> PalCompactAutomaton:
    """
    Оставить только состояния-префиксы p: получается S_c(p).

    Raises:
        ValueError: Если p не префикс направляющего слова.
    """
    if not A.directive.startswith(p):
        raise ValueError(f"{p!r} is not a prefix of the directive {A.directive!r}")
    k = len(p)
    underlying = CompactAutomaton(
        states=tuple(range(k + 1)),
        edges=tuple(e for e in A.underlying.edges if e.target <= k),
        initial=0,
        terminals=frozenset(range(k + 1)),
    )
    return PalCompactAutomaton(
        directive=p,
        alphabet=A.alphabet,
        underlying=underlying,
        pal=A.pal_of(k),
        pal_lengths=A.pal_lengths[: k + 1],
    )


def _path_counts(A: PalCompactAutomaton) -> list[int]:
    # edges go from a shorter prefix to a longer one, so state order is topological
    counts = [0] * A.n_states
    counts[0] = 1
    incoming: dict[int, list[int]] = {}
    for edge in A.underlying.edges:
        incoming.setdefault(edge.target, []).append(edge.source)
    for state in range(1, A.n_states):
        counts[state] = sum(counts[s] for s in incoming.get(state, []))
    return counts


def path_count_to_final(u: str, alphabet: Alphabet | None = None) -> int:
    """
    Число путей из начального состояния в состояние u.

    Равно |Pal(u)| - |Pal(u⁻)| для непустого u и 1 для пустого.
    """
    A = build_direct(u, alphabet=alphabet)
    return _path_counts(A)[-1]


def transition_count(u: str) -> int:
    """
    Σ_a p_a(u), где p_a(u): позиция (с 1) самого правого вхождения a,
    0 если a не встречается.
    """
    return sum(u.rfind(a) + 1 for a in set(u))


def check_label_homogeneity(A: PalCompactAutomaton) -> bool:
    """Все рёбра в состояние w помечены Pal(w⁻)⁻¹ Pal(w)."""
    return all(e.label == A.edge_label(e.target) for e in A.underlying.edges)


@dataclass(frozen=True)
class CountingGraph:
    """
    Граф, "считающий от 0 до |Pal(u)|": метки S_c(u) заменены длинами.

    Attributes:
        vertices: Состояния (длины префиксов u).
        edges: (source, weight, target).
        start: Начальная вершина.
        total: |Pal(u)|.
    """
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    start: int
    total: int

    def weight_profile(self) -> np.ndarray:
        """
        counts[k] = число путей из start (любой длины, включая пустой)
        с суммарным весом k, k = 0..total.
        """
        size = self.total + 1
        by_vertex = {v: np.zeros(size, dtype=np.int64) for v in self.vertices}
        by_vertex[self.start][0] = 1
        incoming: dict[int, list[tuple[int, int]]] = {}
        for source, weight, target in self.edges:
            incoming.setdefault(target, []).append((source, weight))
        # vertices are prefix lengths: increasing order is topological
        for v in sorted(self.vertices):
            for source, weight in incoming.get(v, []):
                if weight < size:
                    by_vertex[v][weight:] += by_vertex[source][: size - weight]
        return np.sum(list(by_vertex.values()), axis=0)


def counting_graph(
    u: str,
    alphabet: Alphabet | None = None,
    max_pal_length: int | None = None,
) -> CountingGraph:
    A = build_direct(u, alphabet=alphabet, max_pal_length=max_pal_length)
    return CountingGraph(
        vertices=A.underlying.states,
        edges=tuple((e.source, len(e.label), e.target) for e in A.underlying.edges),
        start=0,
        total=len(A.pal),
    )


def verify_counting(graph: CountingGraph) -> bool:
    """Ровно один путь каждого веса 0..|Pal(u)| и ни одного тяжелее."""
    profile = graph.weight_profile()
    # the profile drops paths heavier than total, so compare the plain path count too
    paths = {v: 0 for v in graph.vertices}
    paths[graph.start] = 1
    for source, _, target in sorted(graph.edges, key=lambda e: e[2]):
        paths[target] += paths[source]
    return bool(np.all(profile == 1)) and sum(paths.values()) == graph.total + 1


def fibonacci(n: int) -> int:
    """F_1 = F_2 = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_length_check(n: int) -> bool:
    """
    |Pal((ab)^n)| = F_{2n+3} - 2.

    Raises:
        ValueError: Если n вне 1..12.
    """
    if not 1 <= n <= 12:
        raise ValueError(f"n must be in 1..12, got {n}")
    return len(pal_word_fast("ab" * n)) == fibonacci(2 * n + 3) - 2
