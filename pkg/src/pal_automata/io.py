import json
from pathlib import Path

from .compact import CompactAutomaton, Edge, relabel
from .pal_suffix import CountingGraph


def automaton_to_dict(A: CompactAutomaton) -> dict:
    """
    JSON-совместимое представление с каноническими номерами состояний.

    Формат:
        {"states": [...], "initial": id, "terminals": [...],
         "edges": [{"from": id, "label": str, "to": id}, ...]}
    Рёбра отсортированы по (from, label).
    """
    B = relabel(A)
    return {
        "states": list(B.states),
        "initial": B.initial,
        "terminals": sorted(B.terminals),
        "edges": [
            {"from": e.source, "label": e.label, "to": e.target}
            for e in sorted(B.edges, key=lambda e: (e.source, e.label))
        ],
    }


def counting_graph_to_dict(graph: CountingGraph) -> dict:
    """Как automaton_to_dict, но метками служат целые веса; все вершины терминальны."""
    return {
        "states": list(graph.vertices),
        "initial": graph.start,
        "terminals": list(graph.vertices),
        "edges": [
            {"from": s, "label": w, "to": t}
            for s, w, t in sorted(graph.edges, key=lambda e: (e[0], e[1]))
        ],
    }


def automaton_from_dict(data: dict) -> CompactAutomaton:
    """
    Raises:
        ValueError: Если отсутствуют обязательные ключи.
    """
    required = ("states", "initial", "terminals", "edges")
    missing = [key for key in required if key not in data]
    if missing:
        raise ValueError(
            f"Automaton data missing required keys {missing}. "
            f"Found: {sorted(data.keys())}"
        )
    return CompactAutomaton(
        states=tuple(int(q) for q in data["states"]),
        edges=tuple(Edge(int(e["from"]), str(e["label"]), int(e["to"])) for e in data["edges"]),
        initial=int(data["initial"]),
        terminals=frozenset(int(q) for q in data["terminals"]),
    )


def save_automaton_json(A: CompactAutomaton, path: str) -> None:
    """
    Сохранить автомат в JSON.

    Args:
        A: Компактный автомат.
        path: Путь к файлу .json.
    """
    with open(path, "w", encoding="utf-8") as f:
        json.dump(automaton_to_dict(A), f, indent=2)
        f.write("\n")


def load_automaton_json(path: str) -> CompactAutomaton:
    """
    Загрузить автомат из JSON.

    Raises:
        ValueError: Если файл не найден, не является JSON или в нём нет
            ожидаемых ключей.
    """
    path_obj = Path(path)
    if not path_obj.exists():
        raise ValueError(f"File not found: {path}")

    try:
        with open(path_obj, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"Failed to load JSON file {path}: {e}")

    return automaton_from_dict(data)


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def to_dot(A: CompactAutomaton, name: str = "automaton") -> str:
    """
    DOT-представление: терминальные состояния рисуются двойным кругом,
    начальное отмечено стрелкой из невидимой точки.
    """
    B = relabel(A)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in B.states:
        shape = "doublecircle" if q in B.terminals else "circle"
        lines.append(f'  {q} [shape={shape}, label="{q}"];')
    lines.append(f"  __start -> {B.initial};")
    for e in sorted(B.edges, key=lambda e: (e.source, e.label)):
        lines.append(f"  {e.source} -> {e.target} [label={_quote(e.label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def counting_graph_to_dot(graph: CountingGraph, name: str = "counting") -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for v in graph.vertices:
        lines.append(f'  {v} [shape=doublecircle, label="{v}"];')
    lines.append(f"  __start -> {graph.start};")
    for s, w, t in sorted(graph.edges, key=lambda e: (e[0], e[1])):
        lines.append(f'  {s} -> {t} [label="{w}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(A: CompactAutomaton) -> str:
    """Простой текстовый вид: заголовок и по строке на ребро."""
    B = relabel(A)
    lines = [
        f"states: {len(B.states)}",
        f"initial: {B.initial}",
        "terminals: " + " ".join(str(q) for q in sorted(B.terminals)),
    ]
    for e in sorted(B.edges, key=lambda e: (e.source, e.label)):
        lines.append(f"{e.source} --{e.label}--> {e.target}")
    return "\n".join(lines) + "\n"


def counting_graph_to_text(graph: CountingGraph) -> str:
    lines = [
        f"vertices: {len(graph.vertices)}",
        f"start: {graph.start}",
        f"total: {graph.total}",
    ]
    for s, w, t in sorted(graph.edges, key=lambda e: (e[0], e[1])):
        lines.append(f"{s} --{w}--> {t}")
    return "\n".join(lines) + "\n"
