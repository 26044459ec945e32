"""JSON certificate documents and their independent replay."""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .avoidance import ArrowingCertificate, Target, contains_target
from .detect import find_mono_clique
from .equivalence import EquivalenceOutcome, PartitionResult, TraceStep
from .graph import DisjointPairWitness, EdgeColouring, Graph, GraphError, validate_witness

SCHEMA_VERSION = "1.0"
REQUIRED_KEYS = ("schema_version", "command", "inputs", "parameters", "outcome", "witnesses", "trace")


class SchemaError(ValueError):
    pass


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def colouring_json(c: EdgeColouring, role: str, avoids: Target | None = None) -> dict:
    out: dict[str, Any] = {
        "type": "edge_colouring",
        "role": role,
        "r": c.r,
        "edges": [[u, v, k] for (u, v), k in c.items()],
    }
    if avoids is not None:
        out["avoids"] = {"kind": avoids.kind, "n": avoids.n}
    return out


def colouring_from_json(G: Graph, w: dict) -> EdgeColouring:
    return EdgeColouring(G, int(w["r"]), {(int(u), int(v)): int(k) for u, v, k in w["edges"]})


def pair_json(p: DisjointPairWitness) -> dict:
    return {"type": "disjoint_pair", "colour": p.colour, "big": sorted(p.big), "small": sorted(p.small)}


def partition_json(p: PartitionResult) -> dict:
    return {
        "type": "partition",
        "v_sets": [sorted(s) for s in p.v_sets],
        "a": sorted(p.a_set),
        "b": sorted(p.b_set),
        "relabel": list(p.relabel),
    }


def trace_json(steps: list[TraceStep]) -> list[dict]:
    return [
        {"step": s.step, "detail": s.detail, "method": s.method, "citation": s.citation}
        for s in steps
    ]


def _document(command: str, inputs: dict, parameters: dict, outcome: dict, witnesses: list, trace: list) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "parameters": parameters,
        "outcome": outcome,
        "witnesses": witnesses,
        "trace": trace,
    }


def arrows_document(cert: ArrowingCertificate, inputs: dict, parameters: dict) -> dict:
    witnesses = []
    if cert.witness is not None:
        witnesses.append(colouring_json(cert.witness, "avoiding", Target.clique(cert.n)))
    outcome = {
        "kind": cert.outcome,
        "method": cert.method,
        "budget_used": cert.budget_used,
        "lemma_citation": cert.lemma_citation,
        "note": cert.note,
    }
    trace = [{"step": "decide-arrows", "detail": f"G -> (K{cert.n})_{cert.r}: {cert.outcome}",
              "method": cert.method, "citation": None}]
    return _document("arrows", inputs, parameters, outcome, witnesses, trace)


def avoid_document(
    colouring: EdgeColouring | None, kind: str, target: Target, used: int, inputs: dict, parameters: dict
) -> dict:
    witnesses = [] if colouring is None else [colouring_json(colouring, "avoiding", target)]
    outcome = {"kind": kind, "method": "backtracking", "budget_used": used}
    trace = [{"step": "avoid", "detail": f"search for a colouring without monochromatic {target}: {kind}",
              "method": "backtracking", "citation": None}]
    return _document("avoid", inputs, parameters, outcome, witnesses, trace)


def theorem_document(
    out: EquivalenceOutcome, c: EdgeColouring, n: int, inputs: dict, parameters: dict
) -> dict:
    witnesses = [colouring_json(c, "input")]
    if out.pair is not None:
        witnesses.append(pair_json(out.pair))
    if out.refuting_colouring is not None:
        witnesses.append(colouring_json(out.refuting_colouring, "refuting", Target.clique(n)))
    if out.partition is not None:
        witnesses.append(partition_json(out.partition))
    outcome = {"kind": out.kind}
    return _document("theorem-check", inputs, parameters, outcome, witnesses, trace_json(out.trace))


# -- replay ------------------------------------------------------------------


def check_schema(doc: Any) -> None:
    if not isinstance(doc, dict):
        raise SchemaError("certificate is not a JSON object")
    missing = [k for k in REQUIRED_KEYS if k not in doc]
    if missing:
        raise SchemaError(f"missing keys: {', '.join(missing)}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {doc['schema_version']!r}")
    if not isinstance(doc["witnesses"], list) or not isinstance(doc["inputs"], dict):
        raise SchemaError("malformed witnesses or inputs")
    for w in doc["witnesses"]:
        if not isinstance(w, dict) or w.get("type") not in ("edge_colouring", "disjoint_pair", "partition"):
            raise SchemaError(f"unknown witness {w!r}")


def verify_document(doc: dict, G: Graph) -> list[str]:
    """Replay every witness against G; returns a list of failures (empty = valid).

    Raises SchemaError when the document is not a certificate of this schema.
    """
    check_schema(doc)
    failures: list[str] = []
    want = doc["inputs"].get("graph_sha256")
    if want != G.digest():
        failures.append("graph digest does not match the certificate")
        return failures
    params = doc["parameters"]
    input_col: EdgeColouring | None = None
    for idx, w in enumerate(doc["witnesses"]):
        try:
            if w["type"] == "edge_colouring":
                col = colouring_from_json(G, w)
                if w["role"] == "input":
                    input_col = col
                else:
                    t = Target(w["avoids"]["kind"], int(w["avoids"]["n"]))
                    if contains_target(col, t):
                        failures.append(f"witness {idx}: colouring contains a monochromatic {t}")
            elif w["type"] == "disjoint_pair":
                pair = DisjointPairWitness(int(w["colour"]), frozenset(w["big"]), frozenset(w["small"]))
                if input_col is None:
                    failures.append(f"witness {idx}: pair has no input colouring to replay against")
                elif not validate_witness(G, input_col, pair) or len(pair.big) != int(params["n"]):
                    failures.append(f"witness {idx}: pair is not a monochromatic K_n+K_(n-1)")
            elif w["type"] == "partition":
                failures += _check_partition(idx, w, G, input_col, int(params["n"]), int(params["r"]))
        except (GraphError, KeyError, TypeError, ValueError) as exc:
            failures.append(f"witness {idx}: {exc}")
    kind = doc["outcome"].get("kind")
    roles = [w.get("role") for w in doc["witnesses"] if w["type"] == "edge_colouring"]
    if kind in ("not_arrows", "found") and "avoiding" not in roles:
        failures.append(f"outcome {kind} carries no avoiding colouring")
    if kind == "ramsey_refuted" and "refuting" not in roles:
        failures.append("outcome ramsey_refuted carries no refuting colouring")
    if kind == "mono_pair_found" and not any(w["type"] == "disjoint_pair" for w in doc["witnesses"]):
        failures.append("outcome mono_pair_found carries no pair")
    return failures


def _check_partition(idx, w, G, input_col, n, r) -> list[str]:
    v_sets = [frozenset(s) for s in w["v_sets"]]
    a, b = frozenset(w["a"]), frozenset(w["b"])
    relabel = list(w["relabel"])
    bad = []
    if len(v_sets) != r or sorted(relabel) != list(range(r)):
        bad.append("wrong number of vertex sets or bad relabelling")
        return [f"witness {idx}: {m}" for m in bad]
    if a != frozenset().union(*v_sets) or b != frozenset(range(G.n)) - a:
        bad.append("A is not the union of the V-sets or B is not its complement")
    if len(a) > r * n:
        bad.append(f"|A| = {len(a)} exceeds r*n = {r * n}")
    if input_col is not None:
        top = relabel.index(r - 1)
        last = v_sets[-1]
        if len(last) != n or find_mono_clique(G, input_col, top, n, within=last) is None:
            bad.append("last V-set is not a monochromatic K_n in the relabelled last colour")
    return [f"witness {idx}: {m}" for m in bad]
