"""
Pal-Automata-Lab: палиндромизация Pal на словах и в свободной группе,
суффиксные и компактные суффиксные автоматы слов Pal(u).
"""

from .words import Alphabet, palindromic_closure, left_special_factors, right_special_factors
from .free_group import GroupElement, SignedLetter, embed_word, reduced_elements
from .pal_map import (
    Automorphism,
    SemidirectPair,
    apply_L,
    apply_R,
    pal_word,
    pal_word_fast,
    pal_group,
    delta,
    run_transducer,
    cocycle_witness_search,
)
from .automata import Dfa, minimal_dfa, suffix_automaton, verify_pal_suffix_theorem
from .compact import (
    CompactAutomaton,
    Edge,
    elementary_reduction,
    reduce_to_minimal,
    minimal_compact,
    compute_reduction,
    canonical_form,
)
from .pal_suffix import (
    PalCompactAutomaton,
    CountingGraph,
    build_direct,
    extend,
    restrict,
    counting_graph,
    path_count_to_final,
    transition_count,
)
from .io import save_automaton_json, load_automaton_json, to_dot, to_text
from .verify import run_verification
from .report import generate_markdown_report

__all__ = [
    "Alphabet",
    "palindromic_closure",
    "left_special_factors",
    "right_special_factors",
    "GroupElement",
    "SignedLetter",
    "embed_word",
    "reduced_elements",
    "Automorphism",
    "SemidirectPair",
    "apply_L",
    "apply_R",
    "pal_word",
    "pal_word_fast",
    "pal_group",
    "delta",
    "run_transducer",
    "cocycle_witness_search",
    "Dfa",
    "minimal_dfa",
    "suffix_automaton",
    "verify_pal_suffix_theorem",
    "CompactAutomaton",
    "Edge",
    "elementary_reduction",
    "reduce_to_minimal",
    "minimal_compact",
    "compute_reduction",
    "canonical_form",
    "PalCompactAutomaton",
    "CountingGraph",
    "build_direct",
    "extend",
    "restrict",
    "counting_graph",
    "path_count_to_final",
    "transition_count",
    "save_automaton_json",
    "load_automaton_json",
    "to_dot",
    "to_text",
    "run_verification",
    "generate_markdown_report",
]
