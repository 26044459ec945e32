"""Explicit colourings of complete graphs with no monochromatic K_n.

Every ``KnownColouring`` re-checks its guarantee when it is built, so a
registry entry or step-up result that fails the check never escapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..detect import find_any_mono_clique
from ..graph import EdgeColouring, Graph, complete_graph


class GuaranteeViolation(AssertionError):
    pass


@dataclass(frozen=True)
class KnownColouring:
    """Colouring of K_m with no monochromatic K_n in any of its r colours."""

    name: str
    colouring: EdgeColouring
    guarantee: tuple[int, int]  # (r, n)

    def __post_init__(self):
        r, n = self.guarantee
        if self.colouring.r != r:
            raise GuaranteeViolation(f"{self.name}: colouring has {self.colouring.r} colours, guarantee says {r}")
        g = self.colouring.graph
        if g.edge_count != g.n * (g.n - 1) // 2:
            raise GuaranteeViolation(f"{self.name}: underlying graph is not complete")
        w = find_any_mono_clique(g, self.colouring, n)
        if w is not None:
            raise GuaranteeViolation(
                f"{self.name}: monochromatic K_{n} in colour {w.colour} on {sorted(w.vertices)}"
            )

    @property
    def graph(self) -> Graph:
        return self.colouring.graph

    @property
    def size(self) -> int:
        return self.colouring.graph.n

    def restricted(self, m: int) -> EdgeColouring:
        """Colouring of K_m induced on the first m vertices."""
        if m > self.size:
            raise ValueError(f"{self.name} has only {self.size} vertices")
        Km = complete_graph(m)
        return EdgeColouring.from_function(Km, self.colouring.r, self.colouring.colour)


# -- finite fields -----------------------------------------------------------


def quadratic_residues(p: int) -> frozenset[int]:
    return frozenset(x * x % p for x in range(1, p))


GF16_MODULUS = 0b10011  # x^4 + x + 1


def gf16_mul(a: int, b: int) -> int:
    """Product in GF(2^4) with elements as 4-bit polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & 0x10:
            a ^= GF16_MODULUS
    return out


def gf16_log_table() -> dict[int, int]:
    """Discrete log base x (= 2), a generator since x^4+x+1 is primitive."""
    logs: dict[int, int] = {}
    a = 1
    for k in range(15):
        if a in logs:
            raise ValueError("x is not a generator of GF(16)*")
        logs[a] = k
        a = gf16_mul(a, 2)
    return logs


# -- registry ----------------------------------------------------------------


def _c5_pair() -> KnownColouring:
    # colour 0 on the cycle 0-1-2-3-4, colour 1 on the pentagram
    K5 = complete_graph(5)
    col = EdgeColouring.from_function(K5, 2, lambda u, v: 0 if (v - u) % 5 in (1, 4) else 1)
    return KnownColouring("c5_pair", col, (2, 3))


def _paley17() -> KnownColouring:
    qr = quadratic_residues(17)
    col = EdgeColouring.from_function(complete_graph(17), 2, lambda u, v: 0 if (v - u) % 17 in qr else 1)
    return KnownColouring("paley17", col, (2, 4))


def _gf16_triple() -> KnownColouring:
    logs = gf16_log_table()
    col = EdgeColouring.from_function(complete_graph(16), 3, lambda u, v: logs[u ^ v] % 3)
    return KnownColouring("gf16_triple", col, (3, 3))


_REGISTRY = {
    "c5_pair": _c5_pair,
    "paley17": _paley17,
    "gf16_triple": _gf16_triple,
}

REGISTRY_NAMES = tuple(_REGISTRY)


@lru_cache(maxsize=None)
def known_colouring(name: str) -> KnownColouring:
    try:
        build = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown colouring {name!r}; choose from {', '.join(_REGISTRY)}") from None
    return build()


# -- step-up constructions ---------------------------------------------------


def two_colour_step_up(k: KnownColouring) -> KnownColouring:
    """From a 2-colouring of K_m with no mono K_n, one of K_{m+n} with no mono K_{n+1}.

    The n new vertices form a colour-0 clique and every new-old edge gets
    colour 1.
    """
    r, n = k.guarantee
    if r != 2:
        raise ValueError("two_colour_step_up needs a 2-colour guarantee")
    m = k.size
    old = k.colouring

    def colour(u: int, v: int) -> int:
        if v < m:
            return old.colour(u, v)
        return 0 if u >= m else 1

    col = EdgeColouring.from_function(complete_graph(m + n), 2, colour)
    return KnownColouring(f"{k.name}+2up", col, (2, n + 1))


def multicolour_step_up(k: KnownColouring) -> KnownColouring:
    """From an (r-1)-colouring of K_m with no mono K_n, an r-colouring of K_{m+n}.

    New-old edges take the fresh colour r-1. Inside the new n-set the star
    from the first new vertex is colour 0 and the rest colour 1, so neither
    class holds all of its edges.
    """
    r_old, n = k.guarantee
    if n < 3:
        raise ValueError("multicolour_step_up needs n >= 3")
    if r_old < 2:
        raise ValueError("multicolour_step_up needs at least 2 colours to start from")
    m = k.size
    old = k.colouring
    fresh = r_old

    def colour(u: int, v: int) -> int:
        if v < m:
            return old.colour(u, v)
        if u < m:
            return fresh
        return 0 if u == m else 1

    col = EdgeColouring.from_function(complete_graph(m + n), r_old + 1, colour)
    return KnownColouring(f"{k.name}+up", col, (r_old + 1, n))


def _monochrome(n: int) -> KnownColouring:
    m = n - 1
    return KnownColouring(f"mono_K{m}", EdgeColouring.from_function(complete_graph(m), 1, lambda u, v: 0), (1, n))


@lru_cache(maxsize=None)
def best_construction(r: int, n: int) -> KnownColouring | None:
    """Largest colouring reachable from the registry by step-ups.

    The result uses at most r colours and has no monochromatic K_n. Returns
    None only when no K_m with m >= 1 qualifies (n <= 1).
    """
    if n <= 1 or r < 1:
        return None
    if n == 2:
        # only K_1 has no edge at all
        return KnownColouring("K1", EdgeColouring(complete_graph(1), r, {}), (r, 2))
    if r == 1:
        return _monochrome(n)
    candidates: list[KnownColouring] = []
    for name in REGISTRY_NAMES:
        entry = known_colouring(name)
        if entry.guarantee == (r, n):
            candidates.append(entry)
    if r == 2 and n > 3:
        candidates.append(two_colour_step_up(best_construction(2, n - 1)))
    if r > 2:
        candidates.append(multicolour_step_up(best_construction(r - 1, n)))
        fewer = best_construction(r - 1, n)
        candidates.append(KnownColouring(fewer.name, fewer.colouring.with_colours(r), (r, n)))
    weaker = best_construction(r, n - 1)
    if weaker is not None and weaker.size > 1:
        candidates.append(KnownColouring(weaker.name, weaker.colouring, (r, n)))
    return max(candidates, key=lambda kc: kc.size)

