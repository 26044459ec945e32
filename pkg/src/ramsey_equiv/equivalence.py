"""Constructions showing K_n and K_n + K_{n-1} have the same r-Ramsey graphs.

Given a colouring of G, every routine here either exhibits a monochromatic
K_n + K_{n-1}, or produces a recolouring of G with no monochromatic K_n
(which refutes that G is r-Ramsey for K_n). Every returned witness has been
replay-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .avoidance import (
    ARROWS,
    INCONCLUSIVE,
    AvoidanceInfeasible,
    Target,
    decide_arrows,
    kn_free_with_source,
    known_colouring,
)
from .avoidance.search import avoid_with_stats
from .detect import (
    BudgetExhausted,
    SearchBudget,
    find_any_mono_clique,
    find_any_mono_pair,
    find_clique,
    find_mono_clique,
    find_mono_pair,
    is_proper_vertex_colouring,
    is_triangle_free,
    largest_capped_clique,
    optimal_vertex_colouring,
)
from .graph import (
    CliqueWitness,
    DisjointPairWitness,
    EdgeColouring,
    Graph,
    ProblemSpec,
    bits,
    mask_of,
    union_subgraph,
    validate_witness,
)

MONO_PAIR_FOUND = "mono_pair_found"
RAMSEY_REFUTED = "ramsey_refuted"
INCONCLUSIVE_OUTCOME = "inconclusive"

RED, BLUE, YELLOW = 0, 1, 2

K6_FREE_LEMMA = (
    "A K6-free graph that is 2-Ramsey for K3 is 2-Ramsey for K3+K2 "
    "(two-colour result of Bloom and Liebenau, trusted, not re-proved)"
)


class PreconditionError(ValueError):
    pass


class NoMonoClique(PreconditionError):
    """The colouring has no monochromatic K_n, so it already refutes Ramseyness."""


class NoOutsideEdge(ValueError):
    """Every edge of G meets the union of the three triangles.

    Then the vertices outside that union are independent, so
    chi(G) <= chi(G[V0]) + 1 <= 10 and G cannot be 3-Ramsey for K_3.
    """

    def __init__(self, v0: frozenset[int], chromatic_bound: int):
        super().__init__(
            f"no edge avoids the {len(v0)} triangle vertices; chi(G) <= {chromatic_bound}"
        )
        self.v0 = v0
        self.chromatic_bound = chromatic_bound


@dataclass(frozen=True)
class TraceStep:
    step: str
    detail: str
    method: Optional[str] = None
    citation: Optional[str] = None


@dataclass(frozen=True)
class PartitionResult:
    v_sets: tuple[frozenset[int], ...]
    a_set: frozenset[int]
    b_set: frozenset[int]
    relabel: tuple[int, ...]  # caller colour c is treated as relabel[c]


@dataclass
class EquivalenceOutcome:
    kind: str
    pair: Optional[DisjointPairWitness] = None
    refuting_colouring: Optional[EdgeColouring] = None
    trace: list[TraceStep] = field(default_factory=list)
    partition: Optional[PartitionResult] = None


# -- general case ------------------------------------------------------------


def build_partition(G: Graph, c: EdgeColouring, spec: ProblemSpec) -> PartitionResult:
    n, r = spec.n, spec.r
    if c.graph != G or c.r != r:
        raise PreconditionError("colouring does not match graph and colour count")
    w = find_any_mono_clique(G, c, n)
    if w is None:
        raise NoMonoClique(f"no monochromatic K_{n}")
    relabel = list(range(r))
    relabel[w.colour], relabel[r - 1] = r - 1, w.colour
    rc = c.permuted(relabel)
    last = w.vertices
    rest = [v for v in range(G.n) if v not in last]
    v_sets = [largest_capped_clique(G, rc, i, rest, n) for i in range(r - 1)]
    v_sets.append(last)
    a = frozenset().union(*v_sets)
    b = frozenset(range(G.n)) - a
    if len(a) > r * n:
        raise AssertionError(f"|A| = {len(a)} exceeds {r * n}")
    return PartitionResult(tuple(v_sets), a, b, tuple(relabel))


def _general(
    G: Graph, c: EdgeColouring, spec: ProblemSpec, budget: SearchBudget | None
) -> tuple[EdgeColouring, PartitionResult, str]:
    n, r = spec.n, spec.r
    if r < 3 or (n, r) == (3, 3):
        raise PreconditionError(f"general recolouring needs r >= 3 and (n, r) != (3, 3), got ({n}, {r})")
    if c.graph != G or c.r != r:
        raise PreconditionError("colouring does not match graph and colour count")
    pair = find_any_mono_pair(G, c, n)
    if pair is not None:
        raise PreconditionError(f"colouring already has a monochromatic K_{n}+K_{n - 1} in colour {pair.colour}")
    part = build_partition(G, c, spec)
    a_sorted = sorted(part.a_set)
    pos = {v: i for i, v in enumerate(a_sorted)}
    try:
        inner, source = kn_free_with_source(len(a_sorted), r - 1, n, budget)
    except (AvoidanceInfeasible, BudgetExhausted) as exc:
        raise RuntimeError(f"no K_{n}-free {r - 1}-colouring of K_{len(a_sorted)}: {exc}") from exc
    back = [0] * r
    for orig, new in enumerate(part.relabel):
        back[new] = orig
    last = r - 1
    assignment = {}
    for u, v in G.edges():
        in_u, in_v = u in pos, v in pos
        if in_u and in_v:
            k = inner.colour(pos[u], pos[v])
        elif in_u or in_v:
            k = last
        else:
            k = part.relabel[c.colour(u, v)]
        assignment[(u, v)] = back[k]
    out = EdgeColouring(G, r, assignment)
    bad = find_any_mono_clique(G, out, n)
    if bad is not None:
        raise AssertionError(f"recolouring left a monochromatic K_{n} on {sorted(bad.vertices)}")
    return out, part, source


def general_recolouring(
    G: Graph, c: EdgeColouring, spec: ProblemSpec, budget: SearchBudget | None = None
) -> EdgeColouring:
    """Recolour G so that no monochromatic K_n remains.

    Colours are permuted so a monochromatic K_n has the last colour. Inside
    A the edges get a K_n-free colouring in the other r - 1 colours, A-B
    edges get the last colour, and edges inside B keep their colour. The
    result is returned in the caller's colour names and is checked before
    return.
    """
    return _general(G, c, spec, budget)[0]


# -- the (3, 3) case constructions ----------------------------------------


def chvatal_recolouring(
    G: Graph, proper: Sequence[int], base: EdgeColouring, n: int = 3
) -> EdgeColouring:
    """Lift a K_n-free colouring of K_k to G through a proper k-colouring of V(G)."""
    if not is_proper_vertex_colouring(G, proper):
        raise PreconditionError("vertex colouring is not proper")
    k = base.graph.n
    if base.graph.edge_count != k * (k - 1) // 2:
        raise PreconditionError("base colouring is not on a complete graph")
    if max(proper, default=-1) >= k:
        raise PreconditionError(f"{max(proper) + 1} vertex classes but base has only {k} vertices")
    if find_any_mono_clique(base.graph, base, n) is not None:
        raise PreconditionError(f"base colouring has a monochromatic K_{n}")
    out = EdgeColouring(G, base.r, {(u, v): base.colour(proper[u], proper[v]) for u, v in G.edges()})
    if find_any_mono_clique(G, out, n) is not None:
        raise AssertionError("lifted colouring has a monochromatic clique")
    return out


def obs2_extract(
    G: Graph, c: EdgeColouring, triangles: Sequence[CliqueWitness]
) -> DisjointPairWitness:
    """Pair an edge outside three monochromatic triangles with the triangle of its colour."""
    if c.r != 3 or len(triangles) != 3:
        raise PreconditionError("need a 3-colouring and three triangles")
    by_colour = {}
    for t in triangles:
        if len(t.vertices) != 3 or not validate_witness(G, c, t):
            raise PreconditionError(f"invalid triangle witness {t}")
        by_colour[t.colour] = t
    if set(by_colour) != {0, 1, 2}:
        raise PreconditionError("need one triangle in each colour")
    v0 = frozenset().union(*(t.vertices for t in triangles))
    outside = G.full_mask & ~mask_of(v0)
    for u in bits(outside):
        higher = G.adj[u] & outside & ~((2 << u) - 1)
        if higher:
            v = (higher & -higher).bit_length() - 1
            k = c.colour(u, v)
            w = DisjointPairWitness(k, by_colour[k].vertices, frozenset((u, v)))
            if not validate_witness(G, c, w):
                raise AssertionError("extracted pair failed replay")
            return w
    sub, _ = G.relabelled(sorted(v0))
    raise NoOutsideEdge(v0, max(optimal_vertex_colouring(sub), default=-1) + 2)


def _colouring_with_independent_rest(G: Graph, v0: frozenset[int]) -> list[int]:
    """Proper colouring: optimal on G[V0], one extra class for the rest."""
    order = sorted(v0)
    sub, _ = G.relabelled(order)
    inner = optimal_vertex_colouring(sub)
    extra = max(inner, default=-1) + 1
    col = [extra] * G.n
    for i, v in enumerate(order):
        col[v] = inner[i]
    return col


def obs3_colouring(G: Graph, k_set) -> EdgeColouring:
    """3-colouring of K_6 + triangle-free F (plus any cross edges) with no mono triangle.

    v is the smallest vertex of the K_6. K - v gets a colour-0 pentagon and a
    colour-1 pentagram; the star at v is colour 2; F is colour 1; edges from
    K - v to F are colour 2 and from v to F colour 0.
    """
    ks = sorted(k_set)
    if len(ks) != 6 or not G.is_clique(ks):
        raise PreconditionError("k_set must be a 6-clique of G")
    rest = [x for x in range(G.n) if x not in set(ks)]
    if not is_triangle_free(G.induced_on(rest)):
        raise PreconditionError("G - K is not triangle-free")
    v, ring = ks[0], ks[1:]
    slot = {x: i for i, x in enumerate(ring)}

    def colour(a: int, b: int) -> int:
        a_in, b_in = a in slot or a == v, b in slot or b == v
        if a_in and b_in:
            if v in (a, b):
                return YELLOW
            return RED if (slot[a] - slot[b]) % 5 in (1, 4) else BLUE
        if not a_in and not b_in:
            return BLUE
        inner = a if a_in else b
        return RED if inner == v else YELLOW

    out = EdgeColouring.from_function(G, 3, colour)
    if find_any_mono_clique(G, out, 3) is not None:
        raise AssertionError("K6 decomposition colouring has a monochromatic triangle")
    return out


def find_disjoint_triangle(G: Graph, k_set) -> frozenset[int] | None:
    ks = set(k_set)
    return find_clique(G, 3, [x for x in range(G.n) if x not in ks])


# -- (3, 3) driver -----------------------------------------------------------


def _refuted(col: EdgeColouring, trace: list[TraceStep]) -> EquivalenceOutcome:
    return EquivalenceOutcome(RAMSEY_REFUTED, refuting_colouring=col, trace=trace)


def _found(pair: DisjointPairWitness, trace: list[TraceStep]) -> EquivalenceOutcome:
    return EquivalenceOutcome(MONO_PAIR_FOUND, pair=pair, trace=trace)


def _three_triangles(G, c, triangles, trace) -> EquivalenceOutcome:
    try:
        pair = obs2_extract(G, c, triangles)
    except NoOutsideEdge as exc:
        trace.append(TraceStep(
            "no-outside-edge",
            f"all edges meet V0 (|V0|={len(exc.v0)}); chi(G) <= {exc.chromatic_bound}",
            citation="vertices outside V0 are independent, so chi(G) <= chi(G[V0]) + 1",
        ))
        proper = _colouring_with_independent_rest(G, exc.v0)
        out = chvatal_recolouring(G, proper, known_colouring("gf16_triple").colouring)
        trace.append(TraceStep(
            "chvatal-lift",
            f"proper {max(proper) + 1}-colouring lifted through gf16_triple",
            citation="Chvatal: a K3-free 3-colouring of K_k lifts to any k-colourable graph",
        ))
        return _refuted(out, trace)
    trace.append(TraceStep(
        "outside-edge",
        f"edge {sorted(pair.small)} of colour {pair.colour} avoids the triangles",
        citation="an edge outside the three triangles pairs with the triangle of its colour",
    ))
    return _found(pair, trace)


def case33_driver(
    G: Graph, c: EdgeColouring, budget: SearchBudget | None = None, shortcut: bool = True
) -> EquivalenceOutcome:
    """Case analysis for n = r = 3.

    With ``shortcut`` (the default) a monochromatic K_3 + K_2 already present
    in ``c`` is returned at once, and a colouring with no monochromatic
    triangle is returned as its own refutation. Without it the pairwise
    colour-class unions are analysed directly, which exercises every branch
    of the argument. Inputs that are not 3-Ramsey for K_3 may come back as
    ``ramsey_refuted`` with an explicit colouring, or ``inconclusive``.
    """
    if c.graph != G or c.r != 3:
        raise PreconditionError("case33_driver needs a 3-colouring of G")
    budget = budget or SearchBudget()
    trace: list[TraceStep] = []
    if shortcut:
        pair = find_any_mono_pair(G, c, 3)
        if pair is not None:
            trace.append(TraceStep("detect-pair", f"K3+K2 in colour {pair.colour}", "exhaustive"))
            return _found(pair, trace)
        if find_any_mono_clique(G, c, 3) is None:
            trace.append(TraceStep("detect-clique", "no monochromatic triangle: c refutes", "exhaustive"))
            return _refuted(c, trace)

    unions = [(0, 1), (0, 2), (1, 2)]
    certs = {}
    for i, j in unions:
        U = union_subgraph(G, c, (i, j))
        cert = decide_arrows(U, 2, 3, "auto", budget)
        certs[(i, j)] = (U, cert)
        trace.append(TraceStep(
            "union-arrowing",
            f"colours {{{i},{j}}}: {cert.outcome}",
            cert.method,
        ))

    arrowing = [key for key in unions if certs[key][1].outcome == ARROWS]
    if arrowing:
        return _union_arrows(G, c, arrowing[0], certs[arrowing[0]][0], budget, trace)
    if any(cert.outcome == INCONCLUSIVE for _, cert in certs.values()):
        return EquivalenceOutcome(INCONCLUSIVE_OUTCOME, trace=trace)

    # no union is 2-Ramsey: each third colour must carry a triangle
    triangles = []
    for i, j in unions:
        k = 3 - i - j
        t = find_mono_clique(G, c, k, 3)
        if t is None:
            _, cert = certs[(i, j)]
            w = cert.witness
            names = (i, j)
            assignment = {}
            for e, col in c.items():
                assignment[e] = col if col == k else names[w.colour(*e)]
            out = EdgeColouring(G, 3, assignment)
            trace.append(TraceStep(
                "recolour-union",
                f"colours {{{i},{j}}} recoloured triangle-free; colour {k} has no triangle",
                citation="a 2-colouring of the union without mono K3 leaves only the third colour",
            ))
            if find_any_mono_clique(G, out, 3) is not None:
                raise AssertionError("union recolouring has a monochromatic triangle")
            return _refuted(out, trace)
        triangles.append(t)
    trace.append(TraceStep("three-triangles", "monochromatic triangles in all three colours"))
    return _three_triangles(G, c, sorted(triangles, key=lambda t: t.colour), trace)


def _union_arrows(G, c, key, U, budget, trace) -> EquivalenceOutcome:
    i, j = key
    k = 3 - i - j
    K = find_clique(U, 6)
    if K is None:
        try:
            w, used = avoid_with_stats(U, 2, Target.pair(3), budget)
        except BudgetExhausted:
            w, method, cite = None, "trusted_lemma", K6_FREE_LEMMA
        else:
            if w is not None:
                trace.append(TraceStep("k6-free-union", "union avoids K3+K2 despite arrowing K3", "backtracking"))
                return EquivalenceOutcome(INCONCLUSIVE_OUTCOME, trace=trace)
            method, cite = "backtracking", None
        trace.append(TraceStep(
            "k6-free-union",
            f"union of colours {{{i},{j}}} has no K6, so it is 2-Ramsey for K3+K2",
            method,
            cite,
        ))
        for col in (i, j):
            pair = find_mono_pair(G, c, col, 3)
            if pair is not None:
                return _found(pair, trace)
        if method == "backtracking":
            raise AssertionError("union arrows K3+K2 but the colouring has no such pair")
        trace.append(TraceStep("lemma-mismatch", "no pair found although the lemma predicts one"))
        return EquivalenceOutcome(INCONCLUSIVE_OUTCOME, trace=trace)

    trace.append(TraceStep("k6-in-union", f"K6 on {sorted(K)}"))
    for col in (i, j):
        pair = find_mono_pair(G, c, col, 3, within=K)
        if pair is not None:
            trace.append(TraceStep("detect-pair", f"K3+K2 inside K in colour {col}", "exhaustive"))
            return _found(pair, trace)
    in_k = {col: find_mono_clique(G, c, col, 3, within=K) for col in (i, j)}
    if None in in_k.values():
        raise AssertionError("K6 without a pair must hold triangles of both colours")
    T = find_disjoint_triangle(G, K)
    if T is None:
        out = obs3_colouring(G, K)
        trace.append(TraceStep(
            "k6-decomposition",
            "G - K is triangle-free; explicit colouring has no monochromatic triangle",
            citation="K6 plus triangle-free remainder is not 3-Ramsey for K3",
        ))
        return _refuted(out, trace)
    trace.append(TraceStep("disjoint-triangle", f"triangle {sorted(T)} avoids K"))
    for a, b in sorted((a, b) for a in T for b in T if a < b):
        col = c.colour(a, b)
        if col in (i, j):
            pair = DisjointPairWitness(col, in_k[col].vertices, frozenset((a, b)))
            trace.append(TraceStep("edge-with-k-triangle", f"edge {[a, b]} in colour {col}"))
            return _found(pair, trace)
    trace.append(TraceStep("three-triangles", f"triangle {sorted(T)} is entirely colour {k}"))
    tri = [in_k[i], in_k[j], CliqueWitness(k, T)]
    return _three_triangles(G, c, sorted(tri, key=lambda t: t.colour), trace)


# -- top level ---------------------------------------------------------------


def _assert_sound(G: Graph, c: EdgeColouring, n: int, out: EquivalenceOutcome) -> EquivalenceOutcome:
    if out.pair is not None and not validate_witness(G, c, out.pair):
        raise AssertionError("pair witness failed replay")
    if out.pair is not None and len(out.pair.big) != n:
        raise AssertionError("pair witness has the wrong order")
    if out.refuting_colouring is not None:
        if find_any_mono_clique(G, out.refuting_colouring, n) is not None:
            raise AssertionError("refuting colouring has a monochromatic clique")
    return out


def theorem_check(
    G: Graph, c: EdgeColouring, spec: ProblemSpec, budget: SearchBudget | None = None
) -> EquivalenceOutcome:
    """Find a monochromatic K_n + K_{n-1} in ``c`` or refute that G is r-Ramsey for K_n."""
    n, r = spec.n, spec.r
    if n < 3 or r < 3:
        raise PreconditionError("theorem_check needs n, r >= 3")
    if c.graph != G or c.r != r:
        raise PreconditionError(f"colouring must be an {r}-colouring of G")
    trace: list[TraceStep] = []
    pair = find_any_mono_pair(G, c, n)
    if pair is not None:
        trace.append(TraceStep("detect-pair", f"K{n}+K{n - 1} in colour {pair.colour}", "exhaustive"))
        return _assert_sound(G, c, n, _found(pair, trace))
    trace.append(TraceStep("detect-pair", f"no monochromatic K{n}+K{n - 1}", "exhaustive"))
    if find_any_mono_clique(G, c, n) is None:
        trace.append(TraceStep("detect-clique", f"no monochromatic K{n}: c refutes", "exhaustive"))
        return _assert_sound(G, c, n, _refuted(c, trace))
    if (n, r) == (3, 3):
        out = case33_driver(G, c, budget)
        out.trace[:0] = trace
        return _assert_sound(G, c, n, out)
    out_col, part, source = _general(G, c, spec, budget)
    trace.append(TraceStep(
        "partition",
        f"|A|={len(part.a_set)} (<= {r * n}), |B|={len(part.b_set)}, "
        f"V-set sizes {[len(s) for s in part.v_sets]}",
        citation="A is a mono K_n plus a largest capped clique of each other colour outside it",
    ))
    trace.append(TraceStep(
        "recolour-A",
        f"G[A] takes a K{n}-free {r - 1}-colouring of K{len(part.a_set)} ({source})",
        source,
    ))
    trace.append(TraceStep("recolour-AB", "A-B edges take the colour of the relabelled K_n"))
    trace.append(TraceStep("verify", f"no monochromatic K{n} after recolouring", "exhaustive"))
    result = _refuted(out_col, trace)
    result.partition = part
    return _assert_sound(G, c, n, result)
