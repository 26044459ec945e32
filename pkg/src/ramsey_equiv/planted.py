"""Random instance generators for property tests and the acceptance suite."""

from __future__ import annotations

import random
from itertools import combinations

from .detect import find_any_mono_pair, is_triangle_free, pair_through_edge
from .graph import CliqueWitness, EdgeColouring, Graph, complete_graph, norm_edge


def planted_general_instance(
    rng: random.Random, n: int, r: int, vertices: int, density: float = 0.7
) -> tuple[Graph, EdgeColouring]:
    """Graph and r-colouring with a monochromatic K_n but no monochromatic K_n + K_{n-1}.

    A K_n in a random colour is planted first; the remaining edges of a
    G(vertices, density) sample are coloured greedily in random order with
    a random colour that creates no K_n + K_{n-1}. Edges admitting no such
    colour are dropped from the graph.
    """
    planted = rng.sample(range(vertices), n)
    plant_colour = rng.randrange(r)
    rows = [[0] * vertices for _ in range(r)]
    colour: dict[tuple[int, int], int] = {}
    full = (1 << vertices) - 1

    def put(u, v, k):
        rows[k][u] |= 1 << v
        rows[k][v] |= 1 << u
        colour[norm_edge(u, v)] = k

    def take(u, v, k):
        rows[k][u] &= ~(1 << v)
        rows[k][v] &= ~(1 << u)
        del colour[norm_edge(u, v)]

    for u, v in combinations(planted, 2):
        put(u, v, plant_colour)
    rest = [e for e in combinations(range(vertices), 2) if e not in colour and rng.random() < density]
    rng.shuffle(rest)
    for u, v in rest:
        options = list(range(r))
        rng.shuffle(options)
        for k in options:
            put(u, v, k)
            if not pair_through_edge(rows[k], u, v, n, full):
                break
            take(u, v, k)
    G = Graph.from_edges(vertices, colour)
    c = EdgeColouring(G, r, colour)
    if find_any_mono_pair(G, c, n) is not None:
        raise AssertionError("planted generator produced a monochromatic pair")
    return G, c


def three_triangle_instance(
    rng: random.Random, extra: int = 6, outside_colour: int | None = None, density: float = 0.4
) -> tuple[Graph, EdgeColouring, list[CliqueWitness]]:
    """Three vertex-disjoint triangles coloured 0, 1, 2 plus at least one edge
    avoiding them; other edges are random with random colours."""
    N = 9 + max(extra, 2)
    perm = list(range(N))
    rng.shuffle(perm)
    tris = [sorted(perm[3 * k: 3 * k + 3]) for k in range(3)]
    others = perm[9:]
    colour: dict[tuple[int, int], int] = {}
    for k, t in enumerate(tris):
        for u, v in combinations(t, 2):
            colour[norm_edge(u, v)] = k
    a, b = others[0], others[1]
    colour[norm_edge(a, b)] = rng.randrange(3) if outside_colour is None else outside_colour
    for u, v in combinations(range(N), 2):
        e = norm_edge(u, v)
        if e not in colour and rng.random() < density:
            colour[e] = rng.randrange(3)
    G = Graph.from_edges(N, colour)
    c = EdgeColouring(G, 3, colour)
    return G, c, [CliqueWitness(k, frozenset(t)) for k, t in enumerate(tris)]


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def cycle_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def random_triangle_free(rng: random.Random, kind: str, size: int) -> list[tuple[int, int]]:
    """Edges of a triangle-free graph on ``range(size)``.

    ``kind`` is ``empty``, ``bipartite``, ``petersen`` (random spanning
    subgraph of disjoint Petersen copies, padded) or ``c5`` (disjoint
    5-cycles, padded).
    """
    if kind == "empty":
        return []
    if kind == "bipartite":
        side = [rng.random() < 0.5 for _ in range(size)]
        return [(u, v) for u, v in combinations(range(size), 2) if side[u] != side[v] and rng.random() < 0.6]
    if kind in ("petersen", "c5"):
        block = petersen_graph() if kind == "petersen" else cycle_graph(5)
        edges = []
        for start in range(0, size - block.n + 1, block.n):
            edges += [(start + u, start + v) for u, v in block.edges() if rng.random() < 0.85]
        return edges
    raise ValueError(f"unknown triangle-free kind {kind!r}")


def k6_plus_triangle_free(
    rng: random.Random, kind: str, f_size: int, cross_density: float = 0.5
) -> tuple[Graph, frozenset[int]]:
    """K_6 + triangle-free F + random K-F cross edges, with shuffled labels."""
    N = 6 + f_size
    perm = list(range(N))
    rng.shuffle(perm)
    k_verts = perm[:6]
    f_verts = perm[6:]
    edges = set()
    for u, v in combinations(k_verts, 2):
        edges.add(norm_edge(u, v))
    for u, v in random_triangle_free(rng, kind, f_size):
        edges.add(norm_edge(f_verts[u], f_verts[v]))
    for a in k_verts:
        for b in f_verts:
            if rng.random() < cross_density:
                edges.add(norm_edge(a, b))
    G = Graph.from_edges(N, edges)
    if not is_triangle_free(G.induced_on(f_verts)):
        raise AssertionError("remainder is not triangle-free")
    return G, frozenset(k_verts)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def mono_pair_instance(rng: random.Random, vertices: int = 10) -> tuple[Graph, EdgeColouring]:
    """Random 3-colouring of K_vertices guaranteed to hold a monochromatic K_3 + K_2."""
    G = complete_graph(vertices)
    while True:
        c = EdgeColouring.from_function(G, 3, lambda u, v: rng.randrange(3))
        if find_any_mono_pair(G, c, 3) is not None:
            return G, c
