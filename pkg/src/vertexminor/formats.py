"""Reading and writing graphs, multigraphs, words and plans.

Text graphs: a line ``n m``, then n vertex labels, then m lines ``u v``.
Text multigraphs: the same header, then m lines ``id u v``. Labels that
parse as integers become ints. JSON graphs are ``{"vertices": [...],
"edges": [[u, v], ...]}`` where list-valued labels turn into tuples.
"""

from __future__ import annotations

import json
from pathlib import Path

from .circle import DoubleOccurrenceWord, MultiGraph
from .errors import FormatError, VertexMinorError
from .graph import Label, LabeledGraph


def parse_label(token: str) -> Label:
    try:
        return int(token)
    except ValueError:
        return token


def format_label(label: Label) -> str:
    text = str(label)
    if isinstance(label, tuple) or not text or any(ch.isspace() for ch in text):
        raise FormatError(f"label {label!r} cannot be written in the text format")
    return text


def _json_label(value) -> Label:
    if isinstance(value, list):
        return tuple(_json_label(v) for v in value)
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return value
    raise FormatError(f"unsupported label {value!r}")


def _label_json(label: Label):
    return [_label_json(v) for v in label] if isinstance(label, tuple) else label


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _header(lines: list[str]) -> tuple[int, int]:
    if not lines:
        raise FormatError("empty input")
    parts = lines[0].split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FormatError(f"bad header {lines[0]!r}; expected 'n m'")
    n, m = map(int, parts)
    if len(lines) != 1 + n + m:
        raise FormatError(f"expected {1 + n + m} lines, found {len(lines)}")
    return n, m


# ------------------------------------------------------------ graphs


def graph_to_text(g: LabeledGraph) -> str:
    edges = g.edges()
    out = [f"{len(g)} {len(edges)}"]
    out += [format_label(v) for v in g.vertices]
    out += [f"{format_label(u)} {format_label(v)}" for u, v in edges]
    return "\n".join(out) + "\n"


def graph_from_text(text: str) -> LabeledGraph:
    lines = _lines(text)
    n, m = _header(lines)
    vertices = [parse_label(ln) for ln in lines[1 : 1 + n]]
    edges = []
    for ln in lines[1 + n :]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {ln!r}")
        edges.append((parse_label(parts[0]), parse_label(parts[1])))
    if len(set(vertices)) != len(vertices):
        raise FormatError("duplicate vertex label")
    try:
        return LabeledGraph(vertices, edges)
    except (VertexMinorError, KeyError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def graph_to_json(g: LabeledGraph) -> str:
    return json.dumps(graph_to_dict(g))


def graph_to_dict(g: LabeledGraph) -> dict:
    return {
        "vertices": [_label_json(v) for v in g.vertices],
        "edges": [[_label_json(u), _label_json(v)] for u, v in g.edges()],
    }


def graph_from_dict(data) -> LabeledGraph:
    # generator output wraps the graph alongside a trace or targets
    if isinstance(data, dict) and "vertices" not in data and isinstance(data.get("graph"), dict):
        data = data["graph"]
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise FormatError("graph JSON needs 'vertices' and 'edges'")
    vertices = [_json_label(v) for v in data["vertices"]]
    edges = []
    for e in data["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise FormatError(f"bad edge {e!r}")
        edges.append((_json_label(e[0]), _json_label(e[1])))
    try:
        return LabeledGraph(vertices, edges)
    except (VertexMinorError, KeyError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def graph_from_json(text: str) -> LabeledGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return graph_from_dict(data)


def parse_graph(text: str) -> LabeledGraph:
    """Either format, told apart by a leading brace."""
    return graph_from_json(text) if text.lstrip().startswith("{") else graph_from_text(text)


def read_graph(path: str | Path) -> LabeledGraph:
    return parse_graph(Path(path).read_text())


def write_graph(g: LabeledGraph, path: str | Path, fmt: str = "text") -> None:
    Path(path).write_text(graph_to_json(g) if fmt == "json" else graph_to_text(g))


def graph_to_dot(g: LabeledGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out += [f'  "{v}";' for v in g.vertices]
    out += [f'  "{u}" -- "{v}";' for u, v in g.edges()]
    return "\n".join(out) + "\n}\n"


# -------------------------------------------------------- multigraphs


def multigraph_to_text(f: MultiGraph) -> str:
    edges = f.edge_list()
    out = [f"{len(f)} {len(edges)}"]
    out += [format_label(v) for v in f.vertices]
    out += [f"{format_label(e)} {format_label(u)} {format_label(v)}" for u, v, e in edges]
    return "\n".join(out) + "\n"


def multigraph_from_text(text: str) -> MultiGraph:
    lines = _lines(text)
    n, m = _header(lines)
    vertices = [parse_label(ln) for ln in lines[1 : 1 + n]]
    edges = []
    for ln in lines[1 + n :]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad multigraph edge line {ln!r}; expected 'id u v'")
        e, u, v = map(parse_label, parts)
        edges.append((u, v, e))
    try:
        return MultiGraph(vertices, edges)
    except (VertexMinorError, KeyError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def multigraph_to_dict(f: MultiGraph) -> dict:
    return {
        "vertices": [_label_json(v) for v in f.vertices],
        "edges": [[_label_json(e), _label_json(u), _label_json(v)] for u, v, e in f.edge_list()],
    }


def multigraph_from_dict(data) -> MultiGraph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise FormatError("multigraph JSON needs 'vertices' and 'edges'")
    edges = []
    for item in data["edges"]:
        if not isinstance(item, list) or len(item) != 3:
            raise FormatError(f"bad edge {item!r}")
        e, u, v = map(_json_label, item)
        edges.append((u, v, e))
    try:
        return MultiGraph([_json_label(v) for v in data["vertices"]], edges)
    except (VertexMinorError, KeyError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def parse_multigraph(text: str) -> MultiGraph:
    if text.lstrip().startswith("{"):
        try:
            return multigraph_from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
    return multigraph_from_text(text)


def read_multigraph(path: str | Path) -> MultiGraph:
    return parse_multigraph(Path(path).read_text())


def multigraph_to_dot(f: MultiGraph, name: str = "F") -> str:
    out = [f"graph {name} {{"]
    out += [f'  "{v}";' for v in f.vertices]
    out += [f'  "{u}" -- "{v}" [label="{e}"];' for u, v, e in f.edge_list()]
    return "\n".join(out) + "\n}\n"


# --------------------------------------------------------------- words


def word_to_text(x: DoubleOccurrenceWord) -> str:
    return " ".join(format_label(a) for a in x.letters)


def word_from_text(text: str) -> DoubleOccurrenceWord:
    try:
        return DoubleOccurrenceWord.parse(text)
    except (VertexMinorError, ValueError) as exc:
        raise FormatError(str(exc)) from exc
