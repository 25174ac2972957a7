"""Independent brute-force reference implementations used only by the tests.

Nothing here imports the solver or canonical-labelling code: graphs are handled
as plain edge sets and vertex sets as frozensets.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def closed_nbhd(order, edges, v):
    return {v} | {u for u in range(order) if frozenset((u, v)) in edges}


def all_subsets(order):
    """Every subset of range(order) as a sorted tuple, in no particular order."""
    for size in range(order + 1):
        yield from itertools.combinations(range(order), size)


def naive_independent(edges, s):
    return all(frozenset(p) not in edges for p in itertools.combinations(s, 2))


def naive_private(order, edges, s, v):
    others = set()
    for u in s:
        if u != v:
            others |= closed_nbhd(order, edges, u)
    return closed_nbhd(order, edges, v) - others


def naive_irredundant(order, edges, s):
    return all(naive_private(order, edges, s, v) for v in s)


def naive_dominating(order, edges, s):
    covered = set()
    for v in s:
        covered |= closed_nbhd(order, edges, v)
    return covered == set(range(order))


def naive_minimal_dominating(order, edges, s):
    return naive_dominating(order, edges, s) and naive_irredundant(order, edges, s)


def _best(order, pred):
    """Largest subset satisfying pred; ties go to the lexicographically least tuple."""
    best = ()
    for s in all_subsets(order):
        if pred(s) and (len(s) > len(best) or (len(s) == len(best) and s < best)):
            best = s
    return len(best), best


def naive_beta(g):
    e = edge_set(g)
    return _best(g.order, lambda s: naive_independent(e, s))


def naive_gamma(g):
    e = edge_set(g)
    return _best(g.order, lambda s: len(s) > 0 and naive_minimal_dominating(g.order, e, s))


def naive_ir(g):
    e = edge_set(g)
    return _best(g.order, lambda s: naive_irredundant(g.order, e, s))


def naive_clique_number(g):
    e = edge_set(g)
    best = 1
    for size in range(2, g.order + 1):
        if any(all(frozenset(p) in e for p in itertools.combinations(c, 2))
               for c in itertools.combinations(range(g.order), size)):
            best = size
        else:
            break
    return best


def labelled_graph_edges(order, code):
    """The labelled graph on ``order`` vertices whose edge set is bit-coded by ``code``."""
    pairs = list(itertools.combinations(range(order), 2))
    return [p for b, p in enumerate(pairs) if code >> b & 1]


def brute_canonical(order, edges):
    """Lexicographically least sorted edge list over all vertex permutations."""
    best = None
    for perm in itertools.permutations(range(order)):
        image = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or image < best:
            best = image
    return best


def burnside_graph_count(order):
    """Number of unlabelled graphs on ``order`` vertices, via Burnside's lemma
    over cycle types of the symmetric group acting on vertex pairs."""
    total = 0
    for cycle_type in _partitions(order):
        counts = Counter(cycle_type)
        perms = math.factorial(order)
        for length, mult in counts.items():
            perms //= length ** mult * math.factorial(mult)
        pair_cycles = 0
        for i, a in enumerate(cycle_type):
            pair_cycles += a // 2
            for b in cycle_type[i + 1:]:
                pair_cycles += math.gcd(a, b)
        total += perms * 2 ** pair_cycles
    return total // math.factorial(order)


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def find_induced_brute(pattern, host):
    """Does ``host`` contain ``pattern`` as an induced subgraph?  Tries every injection."""
    pe, he = edge_set(pattern), edge_set(host)
    for image in itertools.permutations(range(host.order), pattern.order):
        if all((frozenset((image[a], image[b])) in he) == (frozenset((a, b)) in pe)
               for a, b in itertools.combinations(range(pattern.order), 2)):
            return True
    return False
