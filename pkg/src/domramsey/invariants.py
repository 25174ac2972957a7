"""Exact independence, upper domination and upper irredundance.

Kernels take raw adjacency rows (a tuple of ints) so the search code can call
them without building :class:`Graph` objects; the ``Graph`` wrappers at the
bottom are the public surface.

Witness ties are broken towards the lexicographically least sorted vertex
list, which is the first maximum set met by an ascending-index search.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet, members


@dataclass(frozen=True)
class ParameterResult:
    value: int
    witness: VertexSet

    def vertices(self) -> list[int]:
        return members(self.witness)


def closed_rows(adj) -> tuple[int, ...]:
    return tuple(row | 1 << v for v, row in enumerate(adj))


# -- predicates ---------------------------------------------------------------

def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s for v in members(s))


def private_neighbors(g: Graph, s: VertexSet, v: int) -> VertexSet:
    """Vertices of N[v] not dominated by ``s`` minus ``v``."""
    others = 0
    for u in members(s & ~(1 << v)):
        others |= g.adj[u] | 1 << u
    return (g.adj[v] | 1 << v) & ~others


def is_dominating(g: Graph, s: VertexSet) -> bool:
    covered = s
    for v in members(s):
        covered |= g.adj[v]
    return covered == g.vertices


def is_irredundant(g: Graph, s: VertexSet) -> bool:
    return all(private_neighbors(g, s, v) for v in members(s))


def is_minimal_dominating(g: Graph, s: VertexSet) -> bool:
    return s != 0 and is_dominating(g, s) and is_irredundant(g, s)


# -- independence -------------------------------------------------------------

def _mis_size(adj, cand, best, size):
    """Largest independent set inside ``cand``; branch on a max-degree vertex."""
    while True:
        count = cand.bit_count()
        if size + count <= best:
            return best
        pick = -1
        top = -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d = (adj[v] & cand).bit_count()
            if d > top:
                top, pick = d, v
        if top <= 0:
            return size + count
        bit = 1 << pick
        best = _mis_size(adj, cand & ~(adj[pick] | bit), best, size + 1)
        cand &= ~bit


def beta_value(adj, cand=None) -> int:
    if cand is None:
        cand = (1 << len(adj)) - 1
    return _mis_size(adj, cand, 0, 0)


def beta_at_least(adj, k, cand=None) -> bool:
    """Is there an independent set of size ``k`` inside ``cand``?"""
    if cand is None:
        cand = (1 << len(adj)) - 1
    return _has_independent(adj, cand, k)


def _has_independent(adj, cand, k):
    while True:
        if k <= 0:
            return True
        count = cand.bit_count()
        if count < k:
            return False
        pick = -1
        top = -1
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            d = (adj[v] & cand).bit_count()
            if d > top:
                top, pick = d, v
        if top <= 0:
            return True
        bit = 1 << pick
        if _has_independent(adj, cand & ~(adj[pick] | bit), k - 1):
            return True
        cand &= ~bit


def _lex_first_independent(adj, size):
    chosen = 0
    cand = (1 << len(adj)) - 1
    need = size
    v = 0
    while need:
        bit = 1 << v
        if cand & bit:
            after = cand & ~(adj[v] | bit) & ~((bit << 1) - 1)
            if _has_independent(adj, after, need - 1):
                chosen |= bit
                need -= 1
                cand = after
            else:
                cand &= ~bit
        v += 1
    return chosen


def independence(adj) -> ParameterResult:
    value = beta_value(adj)
    return ParameterResult(value, _lex_first_independent(adj, value))


# -- irredundance and upper domination ----------------------------------------

class _Found(Exception):
    pass


def _irredundant_search(adj, *, dominating, target=None):
    """Search irredundant sets in ascending-index order.

    With ``target`` set, stop at the first qualifying set of that size and
    return it; otherwise return the lexicographically first maximum set.
    ``dominating`` restricts qualifying sets to dominating ones, i.e. to
    minimal dominating sets.  An irredundant set that already dominates has
    no irredundant proper superset, so such nodes are leaves.
    """
    n = len(adj)
    full = (1 << n) - 1
    cl = closed_rows(adj)
    reach = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        reach[j] = reach[j + 1] | cl[j]
    best_size = 0 if target is None else target - 1
    best_set = 0 if target is None else None

    members_stack: list[int] = []

    def rec(start, size, c1, c2):
        nonlocal best_size, best_set
        for j in range(start, n):
            if size + n - j <= best_size:
                return
            if dominating and full & ~c1 & ~reach[j]:
                return
            nj = cl[j]
            c2n = c2 | (c1 & nj)
            if not nj & ~c2n:
                continue
            ok = True
            for v in members_stack:
                if not cl[v] & ~c2n:
                    ok = False
                    break
            if not ok:
                continue
            c1n = c1 | nj
            members_stack.append(j)
            grown = size + 1
            if grown > best_size and (not dominating or c1n == full):
                best_size = grown
                best_set = sum(1 << v for v in members_stack)
                if target is not None:
                    raise _Found
            if c1n != full:
                rec(j + 1, grown, c1n, c2n)
            members_stack.pop()

    try:
        rec(0, 0, 0, 0)
    except _Found:
        pass
    return best_set


def ir_value_witness(adj) -> tuple[int, int]:
    s = _irredundant_search(adj, dominating=False)
    return s.bit_count(), s


def gamma_value_witness(adj) -> tuple[int, int]:
    s = _irredundant_search(adj, dominating=True)
    return s.bit_count(), s


def ir_at_least(adj, k) -> bool:
    if k <= 0:
        return True
    return _irredundant_search(adj, dominating=False, target=k) is not None


def gamma_at_least(adj, k) -> bool:
    if k <= 1:
        return True
    return _irredundant_search(adj, dominating=True, target=k) is not None


def ir_value(adj) -> int:
    return ir_value_witness(adj)[0]


def gamma_value(adj) -> int:
    return gamma_value_witness(adj)[0]


# -- public Graph API ----------------------------------------------------------

def independence_number(g: Graph) -> ParameterResult:
    return independence(g.adj)


def upper_domination_number(g: Graph) -> ParameterResult:
    return ParameterResult(*gamma_value_witness(g.adj))


def upper_irredundance_number(g: Graph) -> ParameterResult:
    return ParameterResult(*ir_value_witness(g.adj))


def independence_at_least(g: Graph, k: int) -> bool:
    return beta_at_least(g.adj, k)


def upper_domination_at_least(g: Graph, k: int) -> bool:
    return gamma_at_least(g.adj, k)


def upper_irredundance_at_least(g: Graph, k: int) -> bool:
    return ir_at_least(g.adj, k)


def parameter_triple(g: Graph) -> tuple[int, int, int]:
    """``(beta, Gamma, IR)`` of ``g``."""
    return beta_value(g.adj), gamma_value(g.adj), ir_value(g.adj)
