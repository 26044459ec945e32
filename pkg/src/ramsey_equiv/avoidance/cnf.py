"""DIMACS CNF export of arrowing instances and solver-output ingestion.

Variable ``edge_index * r + colour + 1`` is true iff the edge (in sorted
edge order) has that colour. The formula is satisfiable exactly when an
r-colouring of G without a monochromatic K_n exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..detect import iter_cliques
from ..graph import EdgeColouring, Graph


@dataclass
class CNF:
    num_vars: int
    clauses: list[list[int]]
    varmap: list[tuple[int, int, int, int]] = field(default_factory=list)  # (var, u, v, colour)

    def dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.clauses]
        return "\n".join(lines) + "\n"

    def varmap_text(self) -> str:
        return "".join(f"{var} {u} {v} {c}\n" for var, u, v, c in self.varmap)


def edge_var(edge_index: int, colour: int, r: int) -> int:
    return edge_index * r + colour + 1


def encode_arrowing_cnf(G: Graph, r: int, n: int, symmetry_breaking: bool = False) -> CNF:
    """CNF that is satisfiable iff some r-colouring of G has no mono K_n.

    With ``symmetry_breaking`` the colours are forced into first-use order
    along the edge list: edge j may take colour c > 0 only if some earlier
    edge took colour c - 1.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    edges = G.edges()
    index = {e: i for i, e in enumerate(edges)}
    clauses: list[list[int]] = []
    for i in range(len(edges)):
        clauses.append([edge_var(i, c, r) for c in range(r)])
    for i in range(len(edges)):
        for a in range(r):
            for b in range(a + 1, r):
                clauses.append([-edge_var(i, a, r), -edge_var(i, b, r)])
    for q in iter_cliques(G.adj, n, G.full_mask):
        ids = [index[(q[a], q[b])] for a in range(n) for b in range(a + 1, n)]
        for c in range(r):
            clauses.append([-edge_var(i, c, r) for i in ids])
    if symmetry_breaking:
        for j in range(len(edges)):
            for c in range(1, r):
                clauses.append([-edge_var(j, c, r)] + [edge_var(k, c - 1, r) for k in range(j)])
    varmap = [(edge_var(i, c, r), u, v, c) for i, (u, v) in enumerate(edges) for c in range(r)]
    return CNF(len(edges) * r, clauses, varmap)


@dataclass(frozen=True)
class SolverResult:
    status: str  # "SAT", "UNSAT" or "UNKNOWN"
    model: frozenset[int] = frozenset()


def parse_solver_output(text: str) -> SolverResult:
    """Read minisat-style (``SAT`` / ``UNSAT`` first token) or competition-style
    (``s SATISFIABLE`` plus ``v`` lines) solver output."""
    tokens = text.split()
    if not tokens:
        return SolverResult("UNKNOWN")
    head = tokens[0].upper()
    if head in ("SAT", "SATISFIABLE"):
        return SolverResult("SAT", _literals(tokens[1:]))
    if head in ("UNSAT", "UNSATISFIABLE"):
        return SolverResult("UNSAT")
    status = "UNKNOWN"
    lits: list[str] = []
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "s" and len(parts) > 1:
            word = parts[1].upper()
            status = {"SATISFIABLE": "SAT", "UNSATISFIABLE": "UNSAT"}.get(word, "UNKNOWN")
        elif parts[0] == "v":
            lits.extend(parts[1:])
    return SolverResult(status, _literals(lits) if status == "SAT" else frozenset())


def _literals(tokens: list[str]) -> frozenset[int]:
    out = set()
    for t in tokens:
        try:
            x = int(t)
        except ValueError:
            continue
        if x != 0:
            out.add(x)
    return frozenset(out)


def decode_model(G: Graph, r: int, model: frozenset[int]) -> EdgeColouring:
    """Edge colouring from a satisfying assignment; raises ValueError if the
    model does not pick exactly one colour per edge."""
    assignment = {}
    for i, e in enumerate(G.edges()):
        chosen = [c for c in range(r) if edge_var(i, c, r) in model]
        if len(chosen) != 1:
            raise ValueError(f"model gives edge {e} {len(chosen)} colours")
        assignment[e] = chosen[0]
    return EdgeColouring(G, r, assignment)


def read_dimacs(text: str) -> tuple[int, list[list[int]]]:
    num_vars = 0
    clauses: list[list[int]] = []
    cur: list[int] = []
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("c"):
            continue
        if s.startswith("p"):
            num_vars = int(s.split()[2])
            continue
        for tok in s.split():
            x = int(tok)
            if x == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(x)
    if cur:
        clauses.append(cur)
    return num_vars, clauses


def dpll_solve(num_vars: int, clauses: list[list[int]]) -> frozenset[int] | None:
    """Plain DPLL with unit propagation. Returns a model (set of true literals
    over all variables) or None when unsatisfiable. Meant as an in-process
    fallback for desk-sized formulas, not as a competitive solver."""
    assign: dict[int, bool] = {}
    if any(not cl for cl in clauses):
        return None

    def value(lit: int) -> bool | None:
        v = assign.get(abs(lit))
        return None if v is None else (v if lit > 0 else not v)

    def propagate(trail: list[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for cl in clauses:
                unassigned = None
                n_unassigned = 0
                sat = False
                for lit in cl:
                    val = value(lit)
                    if val is True:
                        sat = True
                        break
                    if val is None:
                        n_unassigned += 1
                        unassigned = lit
                if sat:
                    continue
                if n_unassigned == 0:
                    return False
                if n_unassigned == 1:
                    assign[abs(unassigned)] = unassigned > 0
                    trail.append(abs(unassigned))
                    changed = True
        return True

    def rec() -> bool:
        trail: list[int] = []
        if not propagate(trail):
            for v in trail:
                del assign[v]
            return False
        free = next((v for v in range(1, num_vars + 1) if v not in assign), None)
        if free is None:
            return True
        for choice in (True, False):
            assign[free] = choice
            if rec():
                return True
            del assign[free]
        for v in trail:
            del assign[v]
        return False

    if not rec():
        return None
    return frozenset(v if assign.get(v, False) else -v for v in range(1, num_vars + 1))


def write_cnf_files(cnf: CNF, path: str | Path) -> tuple[Path, Path]:
    """Write ``path`` (DIMACS) and ``path.map`` (variable map)."""
    p = Path(path)
    m = p.with_name(p.name + ".map")
    p.write_text(cnf.dimacs())
    m.write_text(cnf.varmap_text())
    return p, m
