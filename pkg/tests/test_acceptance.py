"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest -m acceptance -s`` to see the lines, or directly with
``python tests/test_acceptance.py``. Every check replays its result with the
brute-force helpers in ``oracles.py``; wall-clock limits cover the library
call and the replay together.
"""

import random
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import has_mono_clique, has_mono_pair, is_mono, naive_arrows  # noqa: E402
from ramsey_equiv.avoidance import (  # noqa: E402
    ARROWS,
    NOT_ARROWS,
    Target,
    decide_arrows,
    dpll_solve,
    encode_arrowing_cnf,
    known_colouring,
    multicolour_step_up,
    search_avoiding_colouring,
    two_colour_step_up,
)
from ramsey_equiv.detect import chromatic_number, optimal_vertex_colouring  # noqa: E402
from ramsey_equiv.equivalence import (  # noqa: E402
    MONO_PAIR_FOUND,
    RAMSEY_REFUTED,
    NoOutsideEdge,
    case33_driver,
    chvatal_recolouring,
    general_recolouring,
    obs2_extract,
    obs3_colouring,
)
from ramsey_equiv.graph import CliqueWitness, EdgeColouring, Graph, ProblemSpec, complete_graph  # noqa: E402
from ramsey_equiv.planted import (  # noqa: E402
    k6_plus_triangle_free,
    mono_pair_instance,
    planted_general_instance,
    random_graph,
    three_triangle_instance,
)

pytestmark = pytest.mark.acceptance


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def pair_is_valid(col, w, n):
    return (
        len(w.big) == n and len(w.small) == n - 1 and not (w.big & w.small)
        and is_mono(col, sorted(w.big), w.colour)
        and (n - 1 < 2 or is_mono(col, sorted(w.small), w.colour))
    )


def criterion_1():
    notes, ok = [], True
    for name, k, limit, subsets in (("c5_pair", 3, 0.1, 10), ("paley17", 4, 1.0, 2380), ("gf16_triple", 3, 1.0, 560)):
        col = known_colouring(name).colouring
        with Timer() as t:
            scanned = list(combinations(range(col.graph.n), k))
            bad = [vs for vs in scanned if is_mono(col, vs)]
        ok &= not bad and len(scanned) == subsets and t.elapsed < limit
        notes.append(f"{name}: {len(scanned)} {k}-sets, {len(bad)} mono, {t.elapsed:.3f}s")
    return ok, "; ".join(notes)


def criterion_2():
    with Timer() as t:
        k6 = decide_arrows(complete_graph(6), 2, 3, "exhaustive")
        k5 = decide_arrows(complete_graph(5), 2, 3, "exhaustive")
    ok = k6.outcome == ARROWS and k5.outcome == NOT_ARROWS and not has_mono_clique(k5.witness, 3)
    sat = {}
    for m in (5, 6):
        cnf = encode_arrowing_cnf(complete_graph(m), 2, 3)
        sat[m] = dpll_solve(cnf.num_vars, cnf.clauses) is not None
    ok &= t.elapsed < 1.0 and sat == {5: True, 6: False}
    return ok, (f"K6 {k6.outcome}, K5 {k5.outcome} in {t.elapsed:.3f}s; "
                f"CNF K5 {'SAT' if sat[5] else 'UNSAT'}, K6 {'SAT' if sat[6] else 'UNSAT'}")


def criterion_3():
    with Timer() as t:
        col = search_avoiding_colouring(complete_graph(6), 2, Target.pair(3))
        ok = col is not None and not has_mono_pair(col, 3)
    return ok and t.elapsed < 5.0, f"K6 colouring without mono K3+K2 found and replayed in {t.elapsed:.3f}s"


def criterion_4():
    with Timer() as t1:
        up = two_colour_step_up(known_colouring("paley17"))
        subsets = list(combinations(range(up.size), 5))
        bad = [vs for vs in subsets if is_mono(up.colouring, vs)]
    ok1 = up.size == 21 and len(subsets) == 20349 and not bad and t1.elapsed < 2.0
    with Timer() as t2:
        multi = multicolour_step_up(known_colouring("gf16_triple"))
        bad3 = [vs for vs in combinations(range(multi.size), 3) if is_mono(multi.colouring, vs)]
    ok2 = multi.size == 19 and multi.colouring.r == 4 and not bad3 and t2.elapsed < 1.0
    return ok1 and ok2, (f"paley17 step-up: {up.size} vertices, {len(bad)} mono K5 in {t1.elapsed:.3f}s; "
                         f"gf16 step-up: {multi.size} vertices, {multi.colouring.r} colours, "
                         f"{len(bad3)} mono K3 in {t2.elapsed:.3f}s")


def criterion_5():
    rng = random.Random(5)
    good = total = 0
    with Timer() as t:
        for n, r in ((3, 4), (4, 3)):
            for _ in range(200):
                G, c = planted_general_instance(rng, n, r, rng.randint(18, 22))
                # preconditions
                assert has_mono_clique(c, n) and not has_mono_pair(c, n)
                out = general_recolouring(G, c, ProblemSpec(n, r))
                total += 1
                good += out.graph == G and not has_mono_clique(out, n)
    return good == total == 400 and t.elapsed < 60.0, f"{good}/{total} recolourings K_n-free in {t.elapsed:.2f}s"


def criterion_6():
    rng = random.Random(6)
    kinds = ["empty", "bipartite", "petersen"]
    good = 0
    with Timer() as t:
        for i in range(100):
            G, K = k6_plus_triangle_free(rng, kinds[i % 3], rng.randint(0, 14), rng.random())
            good += not has_mono_clique(obs3_colouring(G, K), 3)
    return good == 100 and t.elapsed < 10.0, f"{good}/100 decomposition colourings triangle-free in {t.elapsed:.2f}s"


def criterion_7():
    rng = random.Random(7)
    good = 0
    for _ in range(100):
        G, c, tris = three_triangle_instance(rng, rng.randint(2, 8), density=rng.random() * 0.6)
        w = obs2_extract(G, c, tris)
        good += pair_is_valid(c, w, 3)
    edges = {}
    for k in range(3):
        edges.update({e: k for e in combinations(range(3 * k, 3 * k + 3), 2)})
    G = Graph.from_edges(9, edges)
    tris = [CliqueWitness(k, frozenset(range(3 * k, 3 * k + 3))) for k in range(3)]
    try:
        obs2_extract(G, EdgeColouring(G, 3, edges), tris)
        diagnostic = None
    except NoOutsideEdge as exc:
        diagnostic = exc
    ok = good == 100 and diagnostic is not None and diagnostic.chromatic_bound <= 10
    detail = f"diagnostic chi <= {diagnostic.chromatic_bound}" if diagnostic else "no diagnostic raised"
    return ok, f"{good}/100 pairs replay-valid; no-outside-edge case: {detail}"


def dense_partite(rng, k):
    """k-partite graph containing a k-clique, so its chromatic number is exactly k."""
    n = rng.randint(k, 2 * k)
    part = [i % k for i in range(n)]
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if part[u] != part[v] and (max(u, v) < k or rng.random() < 0.7)]
    return Graph.from_edges(n, edges)


def criterion_8():
    rng = random.Random(8)
    base = known_colouring("gf16_triple").colouring
    good = tried = 0
    chis = []
    while tried < 50:
        if tried % 2:
            G = random_graph(rng, rng.randint(10, 30), rng.uniform(0.2, 0.8))
        else:
            G = dense_partite(rng, rng.randint(12, 16))
        chi = chromatic_number(G)
        if chi > 16:
            continue
        tried += 1
        chis.append(chi)
        out = chvatal_recolouring(G, optimal_vertex_colouring(G), base)
        good += not has_mono_clique(out, 3)
    return good == 50, f"{good}/50 lifts triangle-free (chi range {min(chis)}..{max(chis)})"


def criterion_9():
    import networkx as nx

    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() <= 6]
    agree = arrowing = 0
    with Timer() as t:
        for g in graphs:
            G = Graph.from_edges(g.number_of_nodes(), [tuple(sorted(e)) for e in g.edges()])
            expected = naive_arrows(G, 2, 3)
            arrowing += expected
            got = {decide_arrows(G, 2, 3, s).outcome for s in ("auto", "exhaustive", "backtracking")}
            agree += got == {ARROWS if expected else NOT_ARROWS}
    return agree == len(graphs), f"{agree}/{len(graphs)} graphs agree ({arrowing} arrow) in {t.elapsed:.2f}s"


def criterion_10():
    col = known_colouring("gf16_triple").colouring
    out = case33_driver(col.graph, col)
    refuted = out.kind == RAMSEY_REFUTED and not has_mono_clique(out.refuting_colouring, 3)
    rng = random.Random(10)
    found = 0
    for _ in range(20):
        G, c = mono_pair_instance(rng, rng.randint(8, 12))
        res = case33_driver(G, c)
        found += res.kind == MONO_PAIR_FOUND and pair_is_valid(c, res.pair, 3)
    return refuted and found == 20, f"gf16_triple -> {out.kind}; {found}/20 planted pairs found"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_acceptance(check):
    ok, detail = check()
    print(f"\n{'PASS' if ok else 'FAIL'} {check.__name__}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {check.__name__}: {detail}", flush=True)
    sys.exit(1 if failed else 0)
