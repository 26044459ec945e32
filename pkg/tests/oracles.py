"""Brute-force reference implementations.

These use only itertools and the public accessors of Graph / EdgeColouring,
never the bitset search they are compared against.
"""

from itertools import combinations, product


def is_mono(col, vs, colour=None):
    pairs = list(combinations(vs, 2))
    G = col.graph
    if not all(G.has_edge(u, v) for u, v in pairs):
        return False
    cols = {col.colour(u, v) for u, v in pairs}
    if colour is not None:
        return cols <= {colour}
    return len(cols) <= 1


def mono_cliques(col, k, colour=None, within=None):
    verts = sorted(within) if within is not None else range(col.graph.n)
    out = []
    for vs in combinations(verts, k):
        if k >= 2 and is_mono(col, vs, colour):
            out.append(vs)
        elif k == 1:
            out.append(vs)
    return out


def has_mono_clique(col, k):
    G = col.graph
    for vs in combinations(range(G.n), k):
        if is_mono(col, vs):
            return True
    return False


def has_mono_pair(col, n, colour=None):
    colours = range(col.r) if colour is None else [colour]
    G = col.graph
    for i in colours:
        bigs = [vs for vs in combinations(range(G.n), n) if is_mono(col, vs, i)]
        smalls = [vs for vs in combinations(range(G.n), n - 1) if n - 1 < 2 or is_mono(col, vs, i)]
        for b in bigs:
            for s in smalls:
                if not set(b) & set(s):
                    return True
    return False


def clique_number_in_colour(col, colour, within):
    best = 0 if not within else 1
    for k in range(2, len(within) + 1):
        if any(is_mono(col, vs, colour) for vs in combinations(sorted(within), k)):
            best = k
    return best


def all_colourings(G, r):
    edges = G.edges()
    for cols in product(range(r), repeat=len(edges)):
        yield dict(zip(edges, cols))


def naive_arrows(G, r, n):
    """True iff every r-colouring of G has a monochromatic K_n."""
    cliques = [list(combinations(vs, 2)) for vs in combinations(range(G.n), n)
               if all(G.has_edge(u, v) for u, v in combinations(vs, 2))]
    if not cliques:
        return False
    for assign in all_colourings(G, r):
        if not any(len({assign[e] for e in q}) == 1 for q in cliques):
            return False
    return True


def is_k_colourable(G, k):
    if G.n == 0:
        return True
    for col in product(range(k), repeat=G.n):
        if all(col[u] != col[v] for u, v in G.edges()):
            return True
    return False


def triangle_free(G):
    return not any(
        G.has_edge(a, b) and G.has_edge(b, c) and G.has_edge(a, c)
        for a, b, c in combinations(range(G.n), 3)
    )
