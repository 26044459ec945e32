"""Graphs, edge colourings and witnesses.

Vertices are dense integers ``0..n-1``. Adjacency rows are Python ints used
as bitsets (bit ``u`` of ``adj[v]`` set iff ``uv`` is an edge). Edges are
always keyed as ``(min, max)``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Union

Edge = tuple[int, int]
VertexSet = frozenset


class GraphError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph with bitset adjacency rows."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour index >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        self.n = n
        self.adj = tuple(adj)
        self._edges: tuple[Edge, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> tuple[Edge, ...]:
        """All edges as sorted ``(min, max)`` pairs."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | (1 << v)) & m == m for v in vs)

    def spanning_subgraph(self, keep: Iterable[Edge]) -> "Graph":
        """Same vertex set, only the given edges (each must be an edge of self)."""
        adj = [0] * self.n
        for u, v in keep:
            if not self.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, adj)

    def induced_on(self, vertices: Iterable[int]) -> "Graph":
        """Spanning subgraph keeping only edges with both ends in ``vertices``.

        Indexing is preserved; vertices outside the set become isolated.
        """
        m = mask_of(vertices)
        return Graph(self.n, [row & m if m >> v & 1 else 0 for v, row in enumerate(self.adj)])

    def relabelled(self, order: Sequence[int]) -> tuple["Graph", list[int]]:
        """Compact copy on ``order`` (new vertex i is old ``order[i]``)."""
        pos = {old: i for i, old in enumerate(order)}
        edges = [
            (pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos
        ]
        return Graph.from_edges(len(order), edges), list(order)

    def digest(self) -> str:
        """SHA-256 of the canonical edge list, independent of file layout."""
        h = hashlib.sha256(f"{self.n}\n".encode())
        for u, v in self.edges():
            h.update(f"{u} {v}\n".encode())
        return h.hexdigest()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class EdgeColouring:
    """Total assignment of a colour in ``[0, r)`` to every edge of a graph.

    Per-colour adjacency bitsets are built once on construction and exposed
    as ``class_adj[i]``.
    """

    __slots__ = ("graph", "r", "_colour", "class_adj")

    def __init__(self, graph: Graph, r: int, assignment: Mapping[Edge, int]):
        if r < 1:
            raise GraphError(f"colour count must be positive, got {r}")
        colour: dict[Edge, int] = {}
        for (u, v), c in assignment.items():
            e = norm_edge(u, v)
            if e in colour:
                raise GraphError(f"edge {e} coloured twice")
            if not graph.has_edge(*e):
                raise GraphError(f"{e} is not an edge of the graph")
            if not (isinstance(c, int) and 0 <= c < r):
                raise GraphError(f"colour {c!r} of edge {e} outside [0, {r})")
            colour[e] = c
        if len(colour) != graph.edge_count:
            missing = next(e for e in graph.edges() if e not in colour)
            raise GraphError(f"edge {missing} has no colour")
        cls = [[0] * graph.n for _ in range(r)]
        for (u, v), c in colour.items():
            cls[c][u] |= 1 << v
            cls[c][v] |= 1 << u
        self.graph = graph
        self.r = r
        self._colour = colour
        self.class_adj = tuple(tuple(rows) for rows in cls)

    @classmethod
    def from_function(cls, graph: Graph, r: int, fn) -> "EdgeColouring":
        return cls(graph, r, {e: fn(*e) for e in graph.edges()})

    def colour(self, u: int, v: int) -> int:
        return self._colour[norm_edge(u, v)]

    def items(self) -> list[tuple[Edge, int]]:
        return [(e, self._colour[e]) for e in self.graph.edges()]

    def as_dict(self) -> dict[Edge, int]:
        return dict(self._colour)

    def used_colours(self) -> set[int]:
        return set(self._colour.values())

    def permuted(self, perm: Sequence[int]) -> "EdgeColouring":
        """Rename colour ``c`` to ``perm[c]``."""
        return EdgeColouring(self.graph, self.r, {e: perm[c] for e, c in self._colour.items()})

    def restricted_to(self, sub: Graph) -> "EdgeColouring":
        """Colouring of a spanning subgraph of ``self.graph``."""
        return EdgeColouring(sub, self.r, {e: self._colour[e] for e in sub.edges()})

    def with_colours(self, r: int) -> "EdgeColouring":
        return EdgeColouring(self.graph, r, self._colour)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeColouring)
            and self.r == other.r
            and self.graph == other.graph
            and self._colour == other._colour
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.r, tuple(self.items())))

    def __repr__(self) -> str:
        return f"EdgeColouring(n={self.graph.n}, m={len(self._colour)}, r={self.r})"


@dataclass(frozen=True)
class ProblemSpec:
    n: int
    r: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"clique order must be >= 3, got {self.n}")
        if self.r < 2:
            raise ValueError(f"colour count must be >= 2, got {self.r}")


@dataclass(frozen=True)
class CliqueWitness:
    colour: int
    vertices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))


@dataclass(frozen=True)
class DisjointPairWitness:
    """Monochromatic K_n + K_{n-1}: ``big`` has n vertices, ``small`` n-1."""

    colour: int
    big: frozenset[int]
    small: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "big", frozenset(self.big))
        object.__setattr__(self, "small", frozenset(self.small))


Witness = Union[CliqueWitness, DisjointPairWitness]


def complete_graph(m: int) -> Graph:
    full = (1 << m) - 1
    return Graph(m, [full ^ (1 << v) for v in range(m)])


def empty_graph(m: int) -> Graph:
    return Graph(m, [0] * m)


def colour_class(G: Graph, c: EdgeColouring, i: int) -> Graph:
    """Spanning subgraph of the edges coloured ``i``."""
    if not 0 <= i < c.r:
        raise GraphError(f"colour {i} outside [0, {c.r})")
    _check_same_graph(G, c)
    return Graph(G.n, c.class_adj[i])


def union_subgraph(G: Graph, c: EdgeColouring, colours: Iterable[int]) -> Graph:
    cs = set(colours)
    if not cs:
        raise GraphError("empty colour set")
    for i in cs:
        if not 0 <= i < c.r:
            raise GraphError(f"colour {i} outside [0, {c.r})")
    _check_same_graph(G, c)
    adj = [0] * G.n
    for i in cs:
        for v, row in enumerate(c.class_adj[i]):
            adj[v] |= row
    return Graph(G.n, adj)


def _is_mono_clique(G: Graph, c: EdgeColouring, colour: int, vs: frozenset[int]) -> bool:
    if not all(isinstance(v, int) and 0 <= v < G.n for v in vs):
        return False
    if not 0 <= colour < c.r:
        return False
    rows = c.class_adj[colour]
    m = mask_of(vs)
    return all((rows[v] | (1 << v)) & m == m for v in vs)


def validate_witness(G: Graph, c: EdgeColouring, w: Witness) -> bool:
    """Replay check of a witness against ``(G, c)``; never raises."""
    if c.graph != G:
        return False
    if isinstance(w, CliqueWitness):
        return _is_mono_clique(G, c, w.colour, w.vertices)
    if isinstance(w, DisjointPairWitness):
        k = len(w.big)
        return (
            len(w.small) == k - 1
            and not (w.big & w.small)
            and _is_mono_clique(G, c, w.colour, w.big)
            and _is_mono_clique(G, c, w.colour, w.small)
        )
    return False


def _check_same_graph(G: Graph, c: EdgeColouring) -> None:
    if c.graph != G:
        raise GraphError("colouring belongs to a different graph")
