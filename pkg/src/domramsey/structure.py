"""Induced-subgraph detection for the configurations in the domination arguments."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .canon import canonical_key
from .graph import Graph, biclique_minus_matching, complement, complement_rows, cycle_graph, induced_rows
from .invariants import beta_value, gamma_at_least

Embedding = tuple  # pattern vertex i -> host vertex embedding[i]

PERFECTNESS_ORDER_CAP = 12

C6 = cycle_graph(6)
PRISM = complement(C6)  # G1: two triangles joined by a perfect matching


def _search_order(pattern: Graph) -> list[int]:
    # max(degree, co-degree) is unchanged by complementing, which keeps the
    # search identical on (pattern, host) and (complement, complement)
    p = pattern.order
    return sorted(range(p), key=lambda u: (-max(pattern.degree(u), p - 1 - pattern.degree(u)), u))


def find_induced(pattern: Graph, host: Graph) -> Optional[Embedding]:
    """First induced embedding of ``pattern`` into ``host``, or ``None``.

    Pattern vertices are placed in a fixed order; host candidates for each
    are the intersection of the neighbourhood or non-neighbourhood masks of
    the already placed images, filtered by degree and co-degree.
    """
    p, h = pattern.order, host.order
    if p > h:
        return None
    hadj = host.adj
    hnon = complement_rows(hadj, h)
    order = _search_order(pattern)
    base = []
    for u in range(p):
        du = pattern.degree(u)
        mask = 0
        for v in range(h):
            dv = hadj[v].bit_count()
            if dv >= du and h - 1 - dv >= p - 1 - du:
                mask |= 1 << v
        base.append(mask)
    links = [[(order[j], pattern.has_edge(order[i], order[j])) for j in range(i)] for i in range(p)]
    image = [-1] * p

    def place(i, used):
        if i == p:
            return True
        u = order[i]
        cand = base[u] & ~used
        for w, edge in links[i]:
            cand &= hadj[image[w]] if edge else hnon[image[w]]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            image[u] = low.bit_length() - 1
            if place(i + 1, used | low):
                return True
            cand ^= low
        return False

    if place(0, 0):
        return tuple(image)
    return None


def is_induced_embedding(pattern: Graph, host: Graph, emb: Embedding) -> bool:
    if len(emb) != pattern.order or len(set(emb)) != len(emb):
        return False
    if any(not 0 <= v < host.order for v in emb):
        return False
    for a in range(pattern.order):
        for b in range(a + 1, pattern.order):
            if pattern.has_edge(a, b) != host.has_edge(emb[a], emb[b]):
                return False
    return True


def find_biclique_minus_matching(host: Graph, k: int) -> Optional[Embedding]:
    """Induced K_{k+1,k+1} minus a k-matching.

    In the returned embedding positions ``0..k`` are one side and
    ``k+1..2k+1`` the other; position ``i`` and ``k+1+i`` are the removed
    (non-adjacent) pair for ``i < k``, and positions ``k`` and ``2k+1`` are
    the two vertices of full cross degree.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return find_induced(biclique_minus_matching(k, k), host)


def contains_g1(g: Graph) -> bool:
    """Does ``g`` contain the triangular prism (complement of C6) as an induced subgraph?"""
    return find_induced(PRISM, g) is not None


@dataclass(frozen=True)
class PerfectnessResult:
    perfect: bool
    witness: Optional[int] = None  # vertex set whose induced subgraph has beta < Gamma

    def __bool__(self):
        return self.perfect


def is_gamma_perfect(g: Graph) -> PerfectnessResult:
    """Check beta(H) == Gamma(H) on every induced subgraph H.

    Subsets are visited largest first (ascending-index order within a size);
    isomorphic subgraphs that were already cleared are skipped.
    """
    n = g.order
    if n > PERFECTNESS_ORDER_CAP:
        raise ValueError(f"perfectness check is capped at order {PERFECTNESS_ORDER_CAP}")
    cleared: set = set()
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            w = 0
            for v in combo:
                w |= 1 << v
            rows = induced_rows(g.adj, w)
            key = canonical_key(rows, size)
            if key in cleared:
                continue
            if gamma_at_least(rows, beta_value(rows) + 1):
                return PerfectnessResult(False, w)
            cleared.add(key)
    return PerfectnessResult(True)
