import numpy as np
import pytest

from pal_automata.automata import suffix_automaton
from pal_automata.compact import Edge, canonical_form, minimal_compact, reduce_to_minimal
from pal_automata.pal_map import pal_word
from pal_automata.pal_suffix import (
    CountingGraph,
    build_direct,
    check_label_homogeneity,
    counting_graph,
    extend,
    fibonacci,
    fibonacci_length_check,
    path_count_to_final,
    restrict,
    transition_count,
    verify_counting,
)
from pal_automata.words import Alphabet, suffixes


ABC = Alphabet(("a", "b", "c"))


def test_build_direct_abc():
    """Test the direct construction for u = abc."""
    A = build_direct("abc")
    assert A.n_states == 4
    assert A.n_edges == 6
    assert A.pal == "abacaba"
    assert A.underlying.terminals == frozenset({0, 1, 2, 3})
    assert set(A.underlying.edges) == {
        Edge(0, "a", 1),
        Edge(0, "ba", 2),
        Edge(1, "ba", 2),
        Edge(0, "caba", 3),
        Edge(1, "caba", 3),
        Edge(2, "caba", 3),
    }
    assert canonical_form(A.underlying) == canonical_form(minimal_compact(suffixes("abacaba")))


def test_build_direct_empty():
    """Test the empty directive."""
    A = build_direct("")
    assert A.n_states == 1
    assert A.n_edges == 0
    assert A.pal == ""


def test_build_direct_abca():
    """Test the edges added by the letter a after abc."""
    A = build_direct("abca")
    assert A.n_states == 5
    assert A.n_edges == 9
    new_edges = {e for e in A.underlying.edges if e.target == 4}
    assert new_edges == {Edge(k, "abacaba", 4) for k in (1, 2, 3)}


def test_build_direct_guard():
    """Test that the Pal length guard is enforced."""
    with pytest.raises(ValueError, match="exceeds the guard"):
        build_direct("abcd", max_pal_length=8)


def test_build_direct_unknown_letter():
    """Test that the declared alphabet is enforced."""
    with pytest.raises(ValueError, match="Unknown symbol"):
        build_direct("abd", alphabet=ABC)


def test_state_accessors():
    """Test prefix, Pal and edge label of states."""
    A = build_direct("abc")
    assert A.prefix(2) == "ab"
    assert A.pal_of(2) == "aba"
    assert A.edge_label(3) == "caba"
    with pytest.raises(ValueError, match="no incoming edges"):
        A.edge_label(0)


def test_extend_abc_a():
    """Test incremental extension of abc by a."""
    A = extend(build_direct("abc"), "a")
    added = {e for e in A.underlying.edges if e.target == 4}
    assert {e.source for e in added} == {1, 2, 3}
    assert A.pal == pal_word("abca")
    assert canonical_form(A.underlying) == canonical_form(build_direct("abca").underlying)


def test_extend_empty():
    """Test extension of the empty directive."""
    A = extend(build_direct("", alphabet=ABC), "a")
    assert A.underlying.edges == (Edge(0, "a", 1),)


def test_extend_unknown_letter():
    """Test that extension by a foreign letter raises ValueError."""
    with pytest.raises(ValueError, match="Unknown letter"):
        extend(build_direct("ab"), "c")


def test_extend_matches_build_direct():
    """Test extend(build_direct(u), x) = build_direct(ux) for |u| ≤ 6."""
    for u in ABC.words(6):
        A = build_direct(u, alphabet=ABC)
        for x in ABC:
            grown = extend(A, x)
            assert grown.pal_lengths == build_direct(u + x, alphabet=ABC).pal_lengths
            assert canonical_form(grown.underlying) == canonical_form(
                build_direct(u + x, alphabet=ABC).underlying
            ), u + x


def test_restrict():
    """Test restriction to prefixes."""
    assert canonical_form(restrict(build_direct("abca"), "abc").underlying) == canonical_form(
        build_direct("abc").underlying
    )
    assert restrict(build_direct("abab"), "").n_states == 1
    ab = restrict(build_direct("abab"), "ab")
    assert canonical_form(ab.underlying) == canonical_form(build_direct("ab").underlying)
    assert ab.pal == "aba"
    with pytest.raises(ValueError, match="is not a prefix"):
        restrict(build_direct("abab"), "b")


@pytest.mark.parametrize("alphabet_size", [2, 3])
def test_oracle_equivalence(alphabet_size):
    """Test build_direct against both compact-automaton constructions."""
    alphabet = Alphabet.of_size(alphabet_size)
    for u in alphabet.words(6):
        A = build_direct(u, alphabet=alphabet)
        pal = pal_word(u)
        expected = canonical_form(A.underlying)
        assert expected == canonical_form(minimal_compact(suffixes(pal))), u
        assert expected == canonical_form(reduce_to_minimal(suffix_automaton(pal).to_compact())), u


def test_path_count_to_final():
    """Test path counts to the last state."""
    assert path_count_to_final("abc") == 4
    assert path_count_to_final("") == 1
    assert path_count_to_final("a") == 1


def test_counting_formulas_sweep():
    """Test state, edge and path counts for all directives up to length 6."""
    for u in ABC.words(6):
        A = build_direct(u, alphabet=ABC)
        assert A.n_states == len(u) + 1
        assert A.n_edges == transition_count(u)
        if u:
            assert path_count_to_final(u, alphabet=ABC) == len(pal_word(u)) - len(pal_word(u[:-1]))
        assert check_label_homogeneity(A)


def test_transition_count():
    """Test Σ_a p_a(u)."""
    assert transition_count("abc") == 6
    assert transition_count("abca") == 9
    assert transition_count("") == 0


def test_counting_graph_abc():
    """Test the counting graph of abc."""
    graph = counting_graph("abc")
    assert graph.total == 7
    assert sorted(graph.edges) == [(0, 1, 1), (0, 2, 2), (0, 4, 3), (1, 2, 2), (1, 4, 3), (2, 4, 3)]
    np.testing.assert_array_equal(graph.weight_profile(), np.ones(8, dtype=np.int64))
    assert verify_counting(graph)


def test_counting_graph_guard():
    """Test that the Pal length guard is enforced before weights are counted."""
    with pytest.raises(ValueError, match="exceeds the guard 5"):
        counting_graph("abcd", max_pal_length=5)
    assert counting_graph("abc", max_pal_length=7).total == 7


def test_counting_graph_small():
    """Test counting graphs of the empty word and of ab."""
    empty = counting_graph("")
    assert empty.vertices == (0,)
    np.testing.assert_array_equal(empty.weight_profile(), [1])
    assert verify_counting(empty)
    assert verify_counting(counting_graph("ab"))


def test_verify_counting_detects_duplicates():
    """Test that two paths of equal weight fail the check."""
    graph = CountingGraph(vertices=(0, 1, 2), edges=((0, 1, 1), (0, 1, 2)), start=0, total=2)
    assert not verify_counting(graph)


def test_counting_sweep():
    """Test the counting property for all directives up to length 6."""
    for u in ABC.words(6):
        assert verify_counting(counting_graph(u, alphabet=ABC)), u


def test_fibonacci():
    """Test the Fibonacci helper."""
    assert [fibonacci(n) for n in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]


def test_fibonacci_length_check():
    """Test |Pal((ab)^n)| = F_{2n+3} - 2 on the whole range."""
    for n in range(1, 13):
        assert fibonacci_length_check(n)
    assert len(pal_word("ab" * 5)) == 231
    with pytest.raises(ValueError, match="n must be in 1..12"):
        fibonacci_length_check(13)
