"""Plain-text graph format and JSON family/manifest serialization.

Graph files: comment lines and trailing comments start with '#', blank
lines are ignored. The first payload line is a header, "p <vertices>
<edges>" for undirected graphs or "d <vertices> <arcs>" for digraphs,
followed by exactly that many "e <u> <v>" or "a <u> <v>" lines with
0-based endpoints. Undirected edges must not be loops; arcs may be.

Family files are JSON objects {"graph": ..., "sets": [[v, ...], ...]}
where "graph" is either a path (resolved against the family file's
directory) or an inline object {"n": ..., "edges": [[u, v], ...]}.
"""

from __future__ import annotations

import json
import os
from typing import Sequence

from .bitset import to_tuple
from .families import ColoredFamily
from .graphs import Digraph, Graph, make_graph

__all__ = [
    "FormatError",
    "loads_graph",
    "dumps_graph",
    "read_graph",
    "write_graph",
    "loads_digraph",
    "dumps_digraph",
    "read_digraph",
    "write_digraph",
    "read_family",
    "write_family",
    "read_manifest",
    "write_manifest",
]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _payload_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def _parse(text: str, header: str, row: str) -> tuple[int, list[tuple[int, int]]]:
    lines = _payload_lines(text)
    if not lines:
        raise FormatError("empty file")
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 3 or parts[0] != header:
        raise FormatError(f"expected header '{header} <n> <m>'", lineno)
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError("header counts must be integers", lineno) from None
    if n < 0 or m < 0:
        raise FormatError("header counts must be nonnegative", lineno)
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} lines, found {len(lines) - 1}", lineno)
    pairs = []
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 3 or parts[0] != row:
            raise FormatError(f"expected '{row} <u> <v>'", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError("endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1}", lineno)
        pairs.append((lineno, u, v))
    return n, pairs


def loads_graph(text: str) -> Graph:
    n, pairs = _parse(text, "p", "e")
    for lineno, u, v in pairs:
        if u == v:
            raise FormatError(f"loop at vertex {u} not allowed in a graph", lineno)
    return make_graph(n, [(min(u, v), max(u, v)) for _, u, v in pairs])


def dumps_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.edge_count()}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read())


def write_graph(path: str, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(g))


def loads_digraph(text: str) -> Digraph:
    n, pairs = _parse(text, "d", "a")
    return Digraph.from_arcs(n, [(u, v) for _, u, v in pairs])


def dumps_digraph(d: Digraph) -> str:
    arcs = list(d.arcs())
    lines = [f"d {d.n} {len(arcs)}"]
    lines.extend(f"a {u} {v}" for u, v in arcs)
    return "\n".join(lines) + "\n"


def read_digraph(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return loads_digraph(fh.read())


def write_digraph(path: str, d: Digraph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_digraph(d))


def _graph_from_json(spec, base_dir: str) -> Graph:
    if isinstance(spec, str):
        return read_graph(os.path.join(base_dir, spec))
    if isinstance(spec, dict):
        try:
            n = spec["n"]
            edges = spec["edges"]
        except KeyError as missing:
            raise FormatError(f"inline graph needs key {missing}") from None
        return make_graph(int(n), [(min(u, v), max(u, v)) for u, v in edges])
    raise FormatError("'graph' must be a path or an inline {n, edges} object")


def read_family(path: str) -> tuple[Graph, ColoredFamily]:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}", exc.lineno) from None
    if not isinstance(data, dict) or "graph" not in data or "sets" not in data:
        raise FormatError("family file needs 'graph' and 'sets' keys")
    g = _graph_from_json(data["graph"], os.path.dirname(os.path.abspath(path)))
    try:
        family = ColoredFamily.from_vertex_lists(g, data["sets"])
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad family: {exc}") from None
    return g, family


def write_family(
    path: str, family: ColoredFamily, graph_path: str | None = None
) -> None:
    """graph_path, when given, is stored as a relative reference;
    otherwise the graph is inlined."""
    g = family.host
    if graph_path is None:
        spec = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    else:
        spec = graph_path
    data = {"graph": spec, "sets": [list(to_tuple(s)) for s in family.sets]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def read_manifest(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise FormatError("manifest must be a JSON object")
    return data


def write_manifest(path: str, manifest: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")
