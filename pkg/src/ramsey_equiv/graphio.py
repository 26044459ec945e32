"""Plain-text graph files.

Format::

    N M r
    u v c        (M lines, 0-based endpoints)

``c`` is the colour of edge ``uv`` in ``[0, r)``. A file whose colours are
all ``-1`` (or, with no edges, whose header has ``r = 0``) is uncoloured. Blank lines and lines starting with ``#`` are
ignored. Duplicate edges and self-loops are rejected.
"""

from __future__ import annotations

from pathlib import Path

from .graph import EdgeColouring, Graph, norm_edge


class GraphFileError(ValueError):
    pass


def parse_graph_text(text: str) -> tuple[Graph, EdgeColouring | None]:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFileError("empty graph file")
    try:
        n, m, r = (int(x) for x in lines[0])
    except ValueError:
        raise GraphFileError(f"bad header line: {' '.join(lines[0])!r}") from None
    if n < 0 or m < 0:
        raise GraphFileError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphFileError(f"header declares {m} edges, found {len(body)} lines")
    seen: dict[tuple[int, int], int] = {}
    for i, parts in enumerate(body, start=2):
        if len(parts) != 3:
            raise GraphFileError(f"line {i}: expected 'u v c'")
        try:
            u, v, c = (int(x) for x in parts)
        except ValueError:
            raise GraphFileError(f"line {i}: non-integer field") from None
        if u == v:
            raise GraphFileError(f"line {i}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFileError(f"line {i}: vertex out of range")
        e = norm_edge(u, v)
        if e in seen:
            raise GraphFileError(f"line {i}: duplicate edge {e}")
        seen[e] = c
    G = Graph.from_edges(n, seen)
    colours = set(seen.values())
    if colours == {-1} or (not colours and r < 1):
        return G, None
    if -1 in colours:
        raise GraphFileError("file mixes coloured and uncoloured edges")
    if r < 1 or any(not 0 <= c < r for c in colours):
        raise GraphFileError(f"colour outside [0, {r})")
    return G, EdgeColouring(G, r, seen)


def read_graph_file(path: str | Path) -> tuple[Graph, EdgeColouring | None]:
    return parse_graph_text(Path(path).read_text())


def format_graph(G: Graph, c: EdgeColouring | None = None) -> str:
    r = c.r if c is not None else 0
    out = [f"{G.n} {G.edge_count} {r}"]
    for u, v in G.edges():
        out.append(f"{u} {v} {c.colour(u, v) if c is not None else -1}")
    return "\n".join(out) + "\n"


def write_graph_file(path: str | Path, G: Graph, c: EdgeColouring | None = None) -> None:
    Path(path).write_text(format_graph(G, c))
