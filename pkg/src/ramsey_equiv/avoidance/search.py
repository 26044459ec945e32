"""Backtracking search for colourings that avoid a monochromatic target."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ..detect import (
    BudgetExhausted,
    NodeCounter,
    SearchBudget,
    find_any_mono_clique,
    find_any_mono_pair,
    iter_cliques,
    pair_through_edge,
)
from ..graph import EdgeColouring, Graph, complete_graph
from .known import KnownColouring, best_construction


class AvoidanceInfeasible(ValueError):
    """Exhaustive search proved that no avoiding colouring exists."""


@dataclass(frozen=True)
class Target:
    """Pattern to avoid: a K_n (``clique``) or K_n + K_{n-1} (``pair``)."""

    kind: Literal["clique", "pair"]
    n: int

    def __post_init__(self):
        if self.kind not in ("clique", "pair"):
            raise ValueError(f"unknown target kind {self.kind!r}")
        if self.n < 2:
            raise ValueError("target order must be >= 2")

    @classmethod
    def clique(cls, n: int) -> "Target":
        return cls("clique", n)

    @classmethod
    def pair(cls, n: int) -> "Target":
        return cls("pair", n)

    def __str__(self) -> str:
        return f"K{self.n}" if self.kind == "clique" else f"K{self.n}+K{self.n - 1}"


def contains_target(c: EdgeColouring, target: Target) -> bool:
    G = c.graph
    if target.kind == "clique":
        return find_any_mono_clique(G, c, target.n) is not None
    return find_any_mono_pair(G, c, target.n) is not None


def degeneracy_order(G: Graph) -> list[int]:
    """Smallest-last vertex order, ties broken by index; reversed so dense cores come first."""
    remaining = G.full_mask
    order: list[int] = []
    deg = [G.degree(v) for v in range(G.n)]
    while remaining:
        v = min((x for x in range(G.n) if remaining >> x & 1), key=lambda x: (deg[x], x))
        order.append(v)
        remaining &= ~(1 << v)
        for u in range(G.n):
            if remaining >> u & 1 and G.adj[v] >> u & 1:
                deg[u] -= 1
    order.reverse()
    return order


def _edge_order(G: Graph) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(degeneracy_order(G))}
    return sorted(G.edges(), key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


class _Searcher:
    """Depth-first colouring search with forward checking.

    For clique targets every K_n of G is tracked; once all but one of its
    edges carry colour c, c is struck from the remaining edge's domain. For
    pair targets each assignment is checked for a new pattern through the
    assigned edge. Unused colours are interchangeable, so only the first of
    them is ever tried.
    """

    def __init__(self, G: Graph, r: int, target: Target, counter: NodeCounter):
        self.G, self.r, self.target, self.counter = G, r, target, counter
        self.edges = _edge_order(G)
        self.index = {e: i for i, e in enumerate(self.edges)}
        m = len(self.edges)
        self.colour = [-1] * m
        self.domain = [(1 << r) - 1] * m
        self.rows = [[0] * G.n for _ in range(r)]
        self.used = 0
        self.cliques: list[list[int]] = []
        self.cliques_of: list[list[int]] = [[] for _ in range(m)]
        if target.kind == "clique":
            n = target.n
            for q in iter_cliques(G.adj, n, G.full_mask):
                ids = [self.index[(q[a], q[b])] for a in range(n) for b in range(a + 1, n)]
                for e in ids:
                    self.cliques_of[e].append(len(self.cliques))
                self.cliques.append(ids)
        # per clique: count of edges in each colour
        self.count = [[0] * r for _ in self.cliques]
        self.unassigned = [len(q) for q in self.cliques]

    def run(self) -> dict[tuple[int, int], int] | None:
        if self._rec(0):
            return {e: self.colour[i] for i, e in enumerate(self.edges)}
        return None

    def _pick(self) -> int:
        best, best_key = -1, None
        for i, c in enumerate(self.colour):
            if c >= 0:
                continue
            key = self.domain[i].bit_count()
            if best_key is None or key < best_key:
                best, best_key = i, key
                if key <= 1:
                    break
        return best

    def _assign(self, e: int, c: int) -> tuple[bool, list[tuple[int, int]]]:
        """Colour edge e; returns (consistent, domain trail for undo)."""
        u, v = self.edges[e]
        self.colour[e] = c
        self.rows[c][u] |= 1 << v
        self.rows[c][v] |= 1 << u
        trail: list[tuple[int, int]] = []
        ok = True
        if self.target.kind == "clique":
            for q in self.cliques_of[e]:
                self.count[q][c] += 1
                self.unassigned[q] -= 1
                total = len(self.cliques[q])
                if self.count[q][c] == total:
                    ok = False
                elif self.count[q][c] == total - 1 and self.unassigned[q] == 1:
                    f = next(x for x in self.cliques[q] if self.colour[x] < 0)
                    if self.domain[f] >> c & 1:
                        self.domain[f] &= ~(1 << c)
                        trail.append((f, c))
                        if not self.domain[f]:
                            ok = False
        else:
            ok = not pair_through_edge(self.rows[c], u, v, self.target.n, self.G.full_mask)
        return ok, trail

    def _unassign(self, e: int, c: int, trail: list[tuple[int, int]]) -> None:
        u, v = self.edges[e]
        for f, col in trail:
            self.domain[f] |= 1 << col
        if self.target.kind == "clique":
            for q in self.cliques_of[e]:
                self.count[q][c] -= 1
                self.unassigned[q] += 1
        self.rows[c][u] &= ~(1 << v)
        self.rows[c][v] &= ~(1 << u)
        self.colour[e] = -1

    def _rec(self, done: int) -> bool:
        if done == len(self.edges):
            return True
        e = self._pick()
        for c in range(min(self.used + 1, self.r)):
            if not self.domain[e] >> c & 1:
                continue
            self.counter.tick()
            prev_used = self.used
            self.used = max(self.used, c + 1)
            ok, trail = self._assign(e, c)
            if ok and self._rec(done + 1):
                return True
            self._unassign(e, c, trail)
            self.used = prev_used
        return False


def avoid_with_stats(
    G: Graph, r: int, target: Target, budget: SearchBudget | None = None
) -> tuple[EdgeColouring | None, int]:
    """Like search_avoiding_colouring but also reports search nodes used."""
    counter = NodeCounter(budget or SearchBudget())
    found = _Searcher(G, r, target, counter).run()
    if found is None:
        return None, counter.nodes
    col = EdgeColouring(G, r, found)
    if contains_target(col, target):
        raise AssertionError(f"search returned a colouring containing a monochromatic {target}")
    return col, counter.nodes


def search_avoiding_colouring(
    G: Graph, r: int, target: Target, budget: SearchBudget | None = None
) -> EdgeColouring | None:
    """Colouring of G's edges with no monochromatic target.

    Returns None when the search is complete and found nothing. Raises
    BudgetExhausted when the node limit is reached first.
    """
    return avoid_with_stats(G, r, target, budget)[0]


def kn_free_complete_colouring(
    m: int, r: int, n: int, budget: SearchBudget | None = None
) -> EdgeColouring:
    """r-colouring of K_m with no monochromatic K_n.

    Tries the registry and step-up constructions first, restricting the
    largest one to m vertices, and falls back to backtracking search.
    Raises AvoidanceInfeasible when search proves none exists and
    BudgetExhausted when search gives up.
    """
    return kn_free_with_source(m, r, n, budget)[0]


def kn_free_with_source(
    m: int, r: int, n: int, budget: SearchBudget | None = None
) -> tuple[EdgeColouring, str]:
    if m < 0:
        raise ValueError("m must be >= 0")
    if r < 1 or n < 2:
        raise ValueError("need r >= 1 and n >= 2")
    base: KnownColouring | None = best_construction(r, n)
    if base is not None and m <= base.size:
        return base.restricted(m).with_colours(r), base.name
    col = search_avoiding_colouring(complete_graph(m), r, Target.clique(n), budget)
    if col is None:
        raise AvoidanceInfeasible(f"every {r}-colouring of K_{m} has a monochromatic K_{n}")
    return col, "backtracking"


__all__ = [
    "AvoidanceInfeasible",
    "BudgetExhausted",
    "Target",
    "avoid_with_stats",
    "contains_target",
    "degeneracy_order",
    "kn_free_complete_colouring",
    "kn_free_with_source",
    "search_avoiding_colouring",
]
