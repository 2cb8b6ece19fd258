"""Plain-text host graph format.

::

    # comment
    n 4 directed 0
    v 2 1          # vertex 2 has color 1 (default color 0)
    e 0 1 1        # edge 0-1 (arc 0->1 when directed) with color 1
"""

from __future__ import annotations

import os
from pathlib import Path

from .errors import ParseError, VertexOutOfRange
from .graph import ColoredGraph, build


def parse_host_graph(text: str, where: str = "<string>") -> ColoredGraph:
    order = directed = None
    colors: dict[int, int] = {}
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "n":
                if order is not None:
                    raise ParseError(f"{where}:{lineno}: duplicate 'n' line")
                if len(parts) != 4 or parts[2] != "directed" or parts[3] not in ("0", "1"):
                    raise ParseError(f"{where}:{lineno}: expected 'n <N> directed <0|1>'")
                order, directed = int(parts[1]), parts[3] == "1"
            elif order is None:
                raise ParseError(f"{where}:{lineno}: 'n' line must come first")
            elif parts[0] == "v" and len(parts) == 3:
                v, c = int(parts[1]), int(parts[2])
                if v in colors and colors[v] != c:
                    raise ParseError(f"{where}:{lineno}: vertex {v} colored twice")
                colors[v] = c
            elif parts[0] == "e" and len(parts) == 4:
                edges.append((int(parts[1]), int(parts[2]), int(parts[3])))
            else:
                raise ParseError(f"{where}:{lineno}: cannot parse {raw.strip()!r}")
        except ValueError:
            raise ParseError(f"{where}:{lineno}: non-integer field in {raw.strip()!r}") from None
    if order is None:
        raise ParseError(f"{where}: missing 'n <N> directed <0|1>' line")
    if order < 1:
        raise ParseError(f"{where}: order must be positive")
    for u, v, c in edges:
        if c < 1:
            raise ParseError(f"{where}: edge ({u},{v}) color must be >= 1")
    vertex_colors = [0] * order
    for v, c in colors.items():
        if not 0 <= v < order:
            raise VertexOutOfRange(f"{where}: vertex {v} outside 0..{order - 1}")
        vertex_colors[v] = c
    return build(order, directed, vertex_colors, edges)


def read_host_graph(path: str | os.PathLike) -> ColoredGraph:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    return parse_host_graph(text, str(path))


def format_host_graph(g: ColoredGraph) -> str:
    lines = [f"n {g.order} directed {int(g.directed)}"]
    lines += [f"v {v} {c}" for v, c in enumerate(g.vertex_color) if c]
    lines += [f"e {u} {v} {c}" for u, v, c in g.edges()]
    return "\n".join(lines) + "\n"
