import json
import pytest
import tempfile
from pathlib import Path

from pal_automata.automata import suffix_automaton
from pal_automata.compact import canonical_form
from pal_automata.io import (
    automaton_from_dict,
    automaton_to_dict,
    counting_graph_to_dict,
    counting_graph_to_dot,
    counting_graph_to_text,
    load_automaton_json,
    save_automaton_json,
    to_dot,
    to_text,
)
from pal_automata.pal_suffix import build_direct, counting_graph


def test_automaton_to_dict_abc():
    """Test the JSON layout of S_c(abc)."""
    data = automaton_to_dict(build_direct("abc").underlying)
    assert data["states"] == [0, 1, 2, 3]
    assert data["initial"] == 0
    assert data["terminals"] == [0, 1, 2, 3]
    assert data["edges"][0] == {"from": 0, "label": "a", "to": 1}
    assert [e["label"] for e in data["edges"]] == ["a", "ba", "caba", "ba", "caba", "caba"]


def test_automaton_from_dict_missing_keys():
    """Test that incomplete data raises ValueError."""
    with pytest.raises(ValueError, match="missing required keys"):
        automaton_from_dict({"states": [0], "initial": 0})


def test_save_load_automaton_json():
    """Test that a saved automaton loads back to the same canonical form."""
    A = build_direct("abca").underlying
    with tempfile.NamedTemporaryFile(suffix='.json', delete=False) as f:
        temp_path = f.name

    try:
        save_automaton_json(A, temp_path)
        loaded = load_automaton_json(temp_path)
        assert canonical_form(loaded) == canonical_form(A)
    finally:
        Path(temp_path).unlink()


def test_load_automaton_json_file_not_found():
    """Test that a missing file raises ValueError."""
    with pytest.raises(ValueError, match="File not found"):
        load_automaton_json("nonexistent.json")


def test_load_automaton_json_invalid():
    """Test that malformed JSON raises ValueError."""
    with tempfile.NamedTemporaryFile(mode='w', suffix='.json', delete=False) as f:
        f.write("{not json")
        temp_path = f.name

    try:
        with pytest.raises(ValueError, match="Failed to load JSON file"):
            load_automaton_json(temp_path)
    finally:
        Path(temp_path).unlink()


def test_to_text_abc():
    """Test the plain text listing."""
    text = to_text(build_direct("abc").underlying)
    lines = text.splitlines()
    assert lines[:3] == ["states: 4", "initial: 0", "terminals: 0 1 2 3"]
    assert lines[3:] == [
        "0 --a--> 1",
        "0 --ba--> 2",
        "0 --caba--> 3",
        "1 --ba--> 2",
        "1 --caba--> 3",
        "2 --caba--> 3",
    ]


def test_to_dot_suffix_automaton():
    """Test DOT output of the eight-state suffix automaton."""
    dot = to_dot(suffix_automaton("abacaba").to_compact())
    assert dot.startswith('digraph "automaton" {')
    assert dot.count("shape=doublecircle") == 4
    assert dot.count("shape=circle") == 4
    assert "__start -> 0;" in dot
    assert '0 -> 1 [label="a"];' in dot
    assert dot.rstrip().endswith("}")


def test_counting_graph_serialization():
    """Test counting graphs serialize with integer labels."""
    graph = counting_graph("abc")
    data = counting_graph_to_dict(graph)
    assert data["terminals"] == [0, 1, 2, 3]
    assert {"from": 0, "label": 4, "to": 3} in data["edges"]
    json.dumps(data)

    assert "2 --4--> 3" in counting_graph_to_text(graph)
    assert '0 -> 3 [label="4"];' in counting_graph_to_dot(graph)
