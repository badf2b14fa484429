"""Text formats for graphs, hypergraphs, copy systems, set mappings and
edge colourings.

Two formats are supported.  The canonical one is a JSON document with a
``kind`` field and sorted edge lists; writing is deterministic down to the
byte, so re-serializing a parsed canonical document reproduces it exactly.
The secondary plain format is a whitespace edge list with a
``p <kind> <n> <k>`` header and ``#`` comments, for interchange with other
tools.
"""

from __future__ import annotations

import json
from typing import Any

from .colouring import EdgeColouring, SetMapping
from .errors import FormatError
from .forests import CopySystem
from .graphs import (CopyEmbedding, Graph, Hypergraph, OrderedGraph, graph,
                     hypergraph)

KINDS = ("graph", "ordered-graph", "linear-hypergraph", "copy-system",
         "set-mapping")


def _kind_of(obj) -> str:
    if isinstance(obj, OrderedGraph):
        return "ordered-graph"
    if isinstance(obj, Graph):
        return "graph"
    if isinstance(obj, Hypergraph):
        return "linear-hypergraph"
    if isinstance(obj, CopySystem):
        return "copy-system"
    if isinstance(obj, SetMapping):
        return "set-mapping"
    raise TypeError(f"no serialized form for {type(obj).__name__}")


def _tuples(rows) -> str:
    return ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in rows)


def _doc_lines(obj, indent: str) -> list[str]:
    """Body lines of the canonical document, without the outer braces."""
    kind = _kind_of(obj)
    pad = indent + "  "
    lines = [f'{pad}"kind": "{kind}",']
    if kind == "copy-system":
        host = _doc_lines(obj.host, pad)
        template = _doc_lines(obj.template, pad)
        lines.append(f'{pad}"host": {{')
        lines.extend(host)
        lines.append(f"{pad}}},")
        lines.append(f'{pad}"template": {{')
        lines.extend(template)
        lines.append(f"{pad}}},")
        rows = [emb.images for emb in obj.copies]
        lines.append(f'{pad}"copies": [{_tuples(rows)}]')
        return lines
    if kind == "set-mapping":
        lines.append(f'{pad}"n": {obj.ground_size},')
        rows = [sorted(img) for img in obj.images]
        lines.append(f'{pad}"images": [{_tuples(rows)}]')
        return lines
    g = obj.graph if kind == "ordered-graph" else obj
    lines.append(f'{pad}"n": {g.vertex_count},')
    if kind == "linear-hypergraph":
        lines.append(f'{pad}"k": {g.uniformity},')
        if g.offset:
            lines.append(f'{pad}"offset": {g.offset},')
    edges = sorted(g.edges)
    lines.append(f'{pad}"edges": [')
    for i, e in enumerate(edges):
        comma = "," if i + 1 < len(edges) else ""
        lines.append(f"{pad}  [{', '.join(str(x) for x in e)}]{comma}")
    lines.append(f"{pad}]")
    return lines


def dumps(obj) -> str:
    """Canonical JSON document for a graph-like object, one edge per line."""
    return "{\n" + "\n".join(_doc_lines(obj, "")) + "\n}\n"


def _expect(doc: dict, field: str, types) -> Any:
    if field not in doc:
        raise FormatError(f"missing field {field!r}", token=field)
    value = doc[field]
    if not isinstance(value, types):
        raise FormatError(f"field {field!r} has the wrong type", token=repr(value)[:40])
    return value


def _int_rows(value, field: str) -> list[tuple[int, ...]]:
    rows = []
    for row in value:
        if not isinstance(row, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise FormatError(f"field {field!r} must hold integer tuples",
                              token=repr(row)[:40])
        rows.append(tuple(row))
    return rows


def _from_doc(doc) -> object:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object", token=repr(doc)[:40])
    kind = _expect(doc, "kind", str)
    if kind not in KINDS:
        raise FormatError("unknown kind", token=kind)
    if kind == "copy-system":
        host = _from_doc(_expect(doc, "host", dict))
        template = _from_doc(_expect(doc, "template", dict))
        if isinstance(host, (SetMapping, CopySystem)):
            raise FormatError("copy-system host must be graph-like", token="host")
        copies = _int_rows(_expect(doc, "copies", list), "copies")
        return CopySystem(host, template,
                          tuple(CopyEmbedding(row) for row in copies))
    if kind == "set-mapping":
        n = _expect(doc, "n", int)
        images = _int_rows(_expect(doc, "images", list), "images")
        if len(images) != n:
            raise FormatError("set-mapping needs one image per element",
                              token=str(len(images)))
        return SetMapping(n, tuple(frozenset(row) for row in images))
    n = _expect(doc, "n", int)
    edges = _int_rows(_expect(doc, "edges", list), "edges")
    try:
        if kind == "linear-hypergraph":
            k = _expect(doc, "k", int)
            offset = _expect(doc, "offset", int) if "offset" in doc else 0
            return hypergraph(n, k, edges, offset)
        g = graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return OrderedGraph(g) if kind == "ordered-graph" else g


def loads(text: str):
    """Parse a canonical JSON document into the object it describes."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        snippet = text[exc.pos:exc.pos + 20] or "<end of input>"
        raise FormatError(exc.msg, offset=exc.pos, token=snippet) from exc
    return _from_doc(doc)


def dumps_plain(obj) -> str:
    """Plain edge-list form: `p <kind> <n> <k>` header, one edge per line."""
    kind = _kind_of(obj)
    if kind not in ("graph", "ordered-graph", "linear-hypergraph"):
        raise TypeError(f"plain format does not carry a {kind}")
    g = obj.graph if kind == "ordered-graph" else obj
    k = g.uniformity if kind == "linear-hypergraph" else 2
    lines = [f"p {kind} {g.vertex_count} {k}"]
    if kind == "linear-hypergraph" and g.offset:
        lines.append(f"# offset={g.offset}")
    lines.extend(" ".join(str(x) for x in e) for e in sorted(g.edges))
    return "\n".join(lines) + "\n"


def _plain_tokens(text: str):
    """(token, byte offset) pairs per line, comments stripped."""
    pos = 0
    for line in text.split("\n"):
        body = line.split("#", 1)[0]
        tokens = []
        cursor = 0
        for token in body.split():
            at = body.index(token, cursor)
            cursor = at + len(token)
            tokens.append((token, pos + len(line[:at].encode())))
        if tokens:
            yield tokens
        pos += len(line.encode()) + 1


def _plain_int(token: str, offset: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError("expected an integer", offset=offset, token=token) from None


def loads_plain(text: str):
    rows = list(_plain_tokens(text))
    if not rows:
        raise FormatError("empty document", offset=0)
    header = rows[0]
    if header[0][0] != "p" or len(header) != 4:
        raise FormatError("expected header `p <kind> <n> <k>`",
                          offset=header[0][1], token=header[0][0])
    kind = header[1][0]
    if kind not in ("graph", "ordered-graph", "linear-hypergraph"):
        raise FormatError("unknown kind", offset=header[1][1], token=kind)
    n = _plain_int(*header[2])
    k = _plain_int(*header[3])
    if kind != "linear-hypergraph" and k != 2:
        raise FormatError("graphs have k = 2", offset=header[3][1], token=header[3][0])
    offset = 0
    for line in text.split("\n"):
        stripped = line.strip()
        if stripped.startswith("#") and "offset=" in stripped:
            offset = int(stripped.split("offset=", 1)[1].split()[0])
    edges = []
    for tokens in rows[1:]:
        if len(tokens) != k:
            raise FormatError(f"edge line needs {k} vertices",
                              offset=tokens[0][1], token=tokens[0][0])
        edges.append(tuple(_plain_int(t, at) for t, at in tokens))
    try:
        if kind == "linear-hypergraph":
            return hypergraph(n, k, edges, offset)
        g = graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return OrderedGraph(g) if kind == "ordered-graph" else g


def dumps_colouring(col: EdgeColouring, mode: str = "nni") -> str:
    """Edge + colour per line; trailer carries colour count and mode."""
    lines = [f"p colouring {col.host.vertex_count} 2"]
    lines.extend(
        f"{u} {v} {col.colour_of[(u, v)]}" for u, v in sorted(col.host.edges)
    )
    lines.append(f"t {col.colour_count} {mode}")
    return "\n".join(lines) + "\n"


def loads_colouring(text: str, host: Graph | None = None) -> EdgeColouring:
    rows = list(_plain_tokens(text))
    if not rows:
        raise FormatError("empty document", offset=0)
    header = rows[0]
    if [t for t, _ in header[:2]] != ["p", "colouring"] or len(header) != 4:
        raise FormatError("expected header `p colouring <n> 2`",
                          offset=header[0][1], token=header[0][0])
    n = _plain_int(*header[2])
    trailer = rows[-1]
    if trailer[0][0] != "t" or len(trailer) != 3:
        raise FormatError("expected trailer `t <colours> <mode>`",
                          offset=trailer[0][1], token=trailer[0][0])
    count = _plain_int(*trailer[1])
    mode = trailer[2][0]
    colour_of = {}
    for tokens in rows[1:-1]:
        if len(tokens) != 3:
            raise FormatError("expected `u v colour`",
                              offset=tokens[0][1], token=tokens[0][0])
        u, v, c = (_plain_int(t, at) for t, at in tokens)
        colour_of[(min(u, v), max(u, v))] = c
    if host is None:
        host = graph(n, colour_of)
    return EdgeColouring(host, colour_of, count, {"mode": mode})
