"""Canonical labelling by colour refinement plus individualisation search.

The search walks the individualisation-refinement tree, prunes children that
lie in one orbit of the automorphisms discovered so far (restricted to those
fixing the current prefix), and keeps the leaf whose relabelled adjacency
matrix, read row-major, is the least bit string.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, encode_graph6

CanonicalCode = bytes


def degree_cells(adj, n):
    """Vertices grouped by degree, cells in ascending degree order."""
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    return [by_degree[d] for d in sorted(by_degree)]


def refine(adj, cells):
    """Coarsest equitable refinement of the ordered partition ``cells``.

    Each round splits every cell by the vector of neighbour counts into the
    current cells; sub-cells take the position of their parent, ordered by
    that vector, so the result is independent of vertex names.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = adj[v]
                groups.setdefault(tuple([(row & m).bit_count() for m in masks]), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            split = True
            for sig in sorted(groups):
                out.append(groups[sig])
        if not split:
            return out
        cells = out


def leaf_key(adj, order):
    """Rows of the graph relabelled so that ``order[i]`` becomes vertex ``i``.

    Row ``i`` is an integer with column 0 as its most significant bit, so
    tuple comparison is lexicographic comparison of the matrix bit string.
    """
    n = len(order)
    weight = [0] * n
    for i, v in enumerate(order):
        weight[v] = 1 << (n - 1 - i)
    rows = []
    for v in order:
        row = adj[v]
        r = 0
        while row:
            low = row & -row
            r |= weight[low.bit_length() - 1]
            row ^= low
        rows.append(r)
    return tuple(rows)


def _orbit_roots(n, gens):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


@dataclass
class Labelling:
    order: list[int]          # canonical position -> vertex
    key: tuple                # relabelled rows, see leaf_key
    generators: list[tuple]   # automorphisms as vertex maps

    def orbits(self) -> list[int]:
        """Orbit representative (least member) for every vertex."""
        return _orbit_roots(len(self.order), self.generators)


def search(adj, n, cells) -> Labelling:
    """Run the canonical search below an already equitable partition."""
    if len(cells) == n:
        order = [c[0] for c in cells]
        return Labelling(order, leaf_key(adj, order), [])

    first_key = first_order = first_prefix = None
    best_key = best_order = best_prefix = None
    gens: list[tuple] = []

    def record(src, dst):
        perm = [0] * n
        for a, b in zip(src, dst):
            perm[a] = b
        gens.append(tuple(perm))

    def common(a, b):
        d = 0
        while d < len(a) and d < len(b) and a[d] == b[d]:
            d += 1
        return d

    def visit(cells, prefix):
        """Returns the depth to unwind to after an automorphism, or -1."""
        nonlocal first_key, first_order, first_prefix, best_key, best_order, best_prefix
        if len(cells) == n:
            order = [c[0] for c in cells]
            key = leaf_key(adj, order)
            if first_key is None:
                first_key = best_key = key
                first_order = best_order = order
                first_prefix = best_prefix = prefix
            elif key == first_key:
                # the subtree below the divergence point maps onto one already explored
                record(first_order, order)
                return common(prefix, first_prefix)
            elif key == best_key:
                record(best_order, order)
                return common(prefix, best_prefix)
            elif key < best_key:
                best_key, best_order, best_prefix = key, order, prefix
            return -1
        # first smallest non-singleton cell
        target = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target, size = i, len(c)
        cell = cells[target]
        depth = len(prefix)
        explored: list[int] = []
        for v in cell:
            if explored and gens:
                usable = [g for g in gens if all(g[p] == p for p in prefix)]
                if usable:
                    roots = _orbit_roots(n, usable)
                    if any(roots[v] == roots[u] for u in explored):
                        continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            jump = visit(refine(adj, child), prefix + [v])
            explored.append(v)
            if jump >= 0 and jump < depth:
                return jump
        return -1

    visit(cells, [])
    return Labelling(best_order, best_key, gens)


def canonical_labelling(adj, n) -> Labelling:
    return search(adj, n, refine(adj, degree_cells(adj, n)))


def canonical_key(adj, n) -> tuple:
    return canonical_labelling(adj, n).key


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabelling of ``g``."""
    lab = canonical_labelling(g.adj, g.order)
    n = g.order
    full = (1 << n) - 1
    # key rows use column 0 as MSB; turn them back into ordinary masks
    rows = []
    for r in lab.key:
        m = 0
        for j in range(n):
            if r >> (n - 1 - j) & 1:
                m |= 1 << j
        rows.append(m & full)
    return Graph(n, tuple(rows))


def canonical_form(g: Graph) -> CanonicalCode:
    """Bytes identifying the isomorphism class of ``g`` (graph6 of its canonical relabelling)."""
    return encode_graph6(canonical_graph(g)).encode("ascii")


def automorphism_generators(g: Graph) -> list[tuple]:
    return canonical_labelling(g.adj, g.order).generators


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.order == b.order and canonical_key(a.adj, a.order) == canonical_key(b.adj, b.order)
