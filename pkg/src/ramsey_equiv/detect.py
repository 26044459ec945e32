"""Clique, pattern and chromatic-number search on bitset graphs.

All searches visit candidate vertices in ascending index order, so the first
clique found of a given size is the lexicographically smallest one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import (
    CliqueWitness,
    DisjointPairWitness,
    EdgeColouring,
    Graph,
    GraphError,
    bits,
    mask_of,
)


class BudgetExhausted(RuntimeError):
    """A search hit its node limit before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 1_000_000
    deterministic_seed: int = 0

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be >= 1")


class NodeCounter:
    __slots__ = ("limit", "nodes")

    def __init__(self, budget: SearchBudget):
        self.limit = budget.max_nodes
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExhausted(self.nodes)


# -- raw bitset clique search ------------------------------------------------


def first_clique(adj: Sequence[int], k: int, cand: int) -> list[int] | None:
    """Lexicographically smallest k-clique inside ``cand``, or None."""
    if k <= 0:
        return []
    while cand:
        if cand.bit_count() < k:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if k == 1:
            return [v]
        sub = first_clique(adj, k - 1, cand & adj[v])
        if sub is not None:
            return [v, *sub]
    return None


def iter_cliques(adj: Sequence[int], k: int, cand: int) -> Iterator[list[int]]:
    """All k-cliques inside ``cand`` in lexicographic order."""
    if k <= 0:
        yield []
        return
    while cand and cand.bit_count() >= k:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if k == 1:
            yield [v]
            continue
        for sub in iter_cliques(adj, k - 1, cand & adj[v]):
            yield [v, *sub]


def max_clique(adj: Sequence[int], cand: int) -> list[int]:
    """Lexicographically smallest maximum clique inside ``cand``."""
    best: list[int] = []

    def expand(cur: list[int], p: int) -> None:
        nonlocal best
        if not p:
            if len(cur) > len(best):
                best = cur[:]
            return
        while p:
            if len(cur) + p.bit_count() <= len(best):
                return
            low = p & -p
            v = low.bit_length() - 1
            p ^= low
            cur.append(v)
            expand(cur, p & adj[v])
            cur.pop()

    expand([], cand)
    return best


def _within_mask(G: Graph, within: Iterable[int] | None) -> int:
    if within is None:
        return G.full_mask
    m = mask_of(within)
    if m & ~G.full_mask:
        raise GraphError("`within` contains vertices outside the graph")
    return m


def _class_rows(G: Graph, c: EdgeColouring, i: int) -> Sequence[int]:
    if c.graph != G:
        raise GraphError("colouring belongs to a different graph")
    if not 0 <= i < c.r:
        raise GraphError(f"colour {i} outside [0, {c.r})")
    return c.class_adj[i]


# -- public operations -------------------------------------------------------


def find_clique(G: Graph, k: int, within: Iterable[int] | None = None) -> frozenset[int] | None:
    """Uncoloured k-clique of G (lexicographically smallest), or None."""
    found = first_clique(G.adj, k, _within_mask(G, within))
    return None if found is None else frozenset(found)


def find_mono_clique(
    G: Graph, c: EdgeColouring, i: int, k: int, within: Iterable[int] | None = None
) -> CliqueWitness | None:
    if k < 1:
        raise ValueError("k must be >= 1")
    found = first_clique(_class_rows(G, c, i), k, _within_mask(G, within))
    return None if found is None else CliqueWitness(i, frozenset(found))


def find_any_mono_clique(G: Graph, c: EdgeColouring, k: int) -> CliqueWitness | None:
    """First monochromatic k-clique ordered by (colour, vertex list)."""
    for i in range(c.r):
        w = find_mono_clique(G, c, i, k)
        if w is not None:
            return w
    return None


def pair_in_rows(adj: Sequence[int], n: int, cand: int) -> tuple[list[int], list[int]] | None:
    for big in iter_cliques(adj, n, cand):
        small = first_clique(adj, n - 1, cand & ~mask_of(big))
        if small is not None:
            return big, small
    return None


def pair_through_edge(adj: Sequence[int], u: int, v: int, n: int, cand: int) -> bool:
    """Does the graph ``adj`` contain a K_n + K_{n-1} using edge uv?

    Assumes uv is present in ``adj``; only patterns whose big or small
    clique contains uv are examined.
    """
    common = adj[u] & adj[v] & cand
    uv = (1 << u) | (1 << v)
    for rest in iter_cliques(adj, n - 2, common):
        q = uv | mask_of(rest)
        if first_clique(adj, n - 1, cand & ~q) is not None:
            return True
    if n >= 3:
        for rest in iter_cliques(adj, n - 3, common):
            q = uv | mask_of(rest)
            if first_clique(adj, n, cand & ~q) is not None:
                return True
    return False


def find_mono_pair(
    G: Graph, c: EdgeColouring, i: int, n: int, within: Iterable[int] | None = None
) -> DisjointPairWitness | None:
    """Monochromatic K_n + K_{n-1} in colour i, or None (exhaustive)."""
    if n < 2:
        raise ValueError("n must be >= 2")
    found = pair_in_rows(_class_rows(G, c, i), n, _within_mask(G, within))
    if found is None:
        return None
    return DisjointPairWitness(i, frozenset(found[0]), frozenset(found[1]))


def find_any_mono_pair(G: Graph, c: EdgeColouring, n: int) -> DisjointPairWitness | None:
    for i in range(c.r):
        w = find_mono_pair(G, c, i, n)
        if w is not None:
            return w
    return None


def largest_capped_clique(
    G: Graph, c: EdgeColouring, i: int, within: Iterable[int], cap: int
) -> frozenset[int]:
    """A maximum i-coloured clique in ``within``, truncated to ``cap`` vertices.

    Ties go to the lexicographically smallest maximum clique; truncation keeps
    its ``cap`` smallest vertices.
    """
    if cap < 0:
        raise ValueError("cap must be >= 0")
    best = max_clique(_class_rows(G, c, i), _within_mask(G, within))
    return frozenset(best[:cap])


def is_triangle_free(G: Graph) -> bool:
    for u in range(G.n):
        higher = G.adj[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            if G.adj[u] & G.adj[v]:
                return False
    return True


def find_triangle(G: Graph, within: Iterable[int] | None = None) -> frozenset[int] | None:
    return find_clique(G, 3, within)


# -- chromatic number --------------------------------------------------------


def _dsatur_greedy(G: Graph) -> list[int]:
    n = G.n
    col = [-1] * n
    for _ in range(n):
        v = max(
            (x for x in range(n) if col[x] < 0),
            key=lambda x: (len({col[u] for u in bits(G.adj[x]) if col[u] >= 0}), G.degree(x), -x),
        )
        used = {col[u] for u in bits(G.adj[v])}
        col[v] = next(k for k in range(n) if k not in used)
    return col


def optimal_vertex_colouring(G: Graph, budget: SearchBudget | None = None) -> list[int]:
    """Proper vertex colouring with the minimum number of colours.

    Exact DSATUR branch and bound, seeded with a greedy DSATUR upper bound
    and a maximum-clique lower bound. Raises BudgetExhausted when the node
    limit is hit.
    """
    n = G.n
    if n == 0:
        return []
    counter = NodeCounter(budget or SearchBudget())
    best = _dsatur_greedy(G)
    best_k = max(best) + 1
    lower = len(max_clique(G.adj, G.full_mask))
    if lower == best_k:
        return best
    col = [-1] * n
    # forbidden-colour bitmask per vertex
    sat = [0] * n

    def pick() -> int:
        v_best, key_best = -1, None
        for x in range(n):
            if col[x] >= 0:
                continue
            key = (sat[x].bit_count(), G.degree(x))
            if key_best is None or key > key_best:
                v_best, key_best = x, key
        return v_best

    def rec(done: int, used: int) -> bool:
        nonlocal best, best_k
        counter.tick()
        if done == n:
            best, best_k = col[:], used
            return best_k == lower
        v = pick()
        limit = min(used + 1, best_k - 1)
        for k in range(limit):
            if max(used, k + 1) >= best_k:
                # incumbent improved below this branch
                break
            if sat[v] >> k & 1:
                continue
            col[v] = k
            touched = [u for u in bits(G.adj[v]) if col[u] < 0 and not sat[u] >> k & 1]
            for u in touched:
                sat[u] |= 1 << k
            stop = rec(done + 1, max(used, k + 1))
            for u in touched:
                sat[u] &= ~(1 << k)
            col[v] = -1
            if stop:
                return True
        return False

    rec(0, 0)
    return best


def chromatic_number(G: Graph, budget: SearchBudget | None = None) -> int:
    col = optimal_vertex_colouring(G, budget)
    return max(col) + 1 if col else 0


def is_proper_vertex_colouring(G: Graph, col: Sequence[int]) -> bool:
    if len(col) != G.n or any(k < 0 for k in col):
        return False
    return all(col[u] != col[v] for u, v in G.edges())
