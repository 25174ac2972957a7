"""Isomorph-free generation of graphs by canonical vertex augmentation.

A child on ``n`` vertices built from a parent by adding vertex ``n-1`` is kept
only if ``n-1`` is in the automorphism orbit of the child's canonical last
vertex.  The canonical last vertex always has maximum degree, so a degree test
rejects most extensions before any refinement runs.

Parents are processed independently, which lets a level be split across a
process pool; children are concatenated in parent order so the output does
not depend on the number of workers.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Sequence

from .canon import degree_cells, refine, search

Rows = tuple  # adjacency rows of a graph, one int per vertex

MAX_FULL_ORDER = 10

WORKERS_ENV = "DOMRAMSEY_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        value = int(raw)
        if value < 1:
            raise ValueError(f"{WORKERS_ENV} must be >= 1")
        return value
    return 1


def is_canonical_extension(adj: Rows, n: int) -> bool:
    """Is vertex ``n-1`` in the orbit of the canonical last vertex of ``adj``?"""
    new = n - 1
    d_new = adj[new].bit_count()
    for v in range(new):
        if adj[v].bit_count() > d_new:
            return False
    cells = refine(adj, degree_cells(adj, n))
    last = cells[-1]
    if new not in last:
        return False
    if len(last) == 1:
        return True
    lab = search(adj, n, cells)
    m = lab.order[-1]
    if m == new:
        return True
    roots = lab.orbits()
    return roots[m] == roots[new]


def parent_generators(adj: Rows, n: int) -> list[tuple]:
    """Automorphism generators, skipping the search when refinement alone
    is discrete (which certifies a trivial group)."""
    cells = refine(adj, degree_cells(adj, n))
    if len(cells) == n:
        return []
    return search(adj, n, cells).generators


def subset_orbit_representatives(n: int, gens: Sequence[tuple]) -> bytearray:
    """Flags marking the least subset of each orbit of the group on subsets."""
    total = 1 << n
    rep = bytearray(total)
    if not gens:
        rep[:] = b"\x01" * total
        return rep
    tables = []
    for g in gens:
        img = [0] * total
        for s in range(1, total):
            low = s & -s
            img[s] = img[s ^ low] | 1 << g[low.bit_length() - 1]
        tables.append(img)
    seen = bytearray(total)
    for s in range(total):
        if seen[s]:
            continue
        rep[s] = 1
        seen[s] = 1
        stack = [s]
        while stack:
            t = stack.pop()
            for img in tables:
                u = img[t]
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)
    return rep


def extend(adj: Rows, keep: Callable[[Rows, int], bool] | None = None, stats: dict | None = None):
    """Canonical children on ``len(adj)+1`` vertices, in ascending order of
    the new vertex's neighbourhood mask.

    Only one neighbourhood per orbit of the parent's automorphism group is
    tried, so accepted children are pairwise non-isomorphic.  ``keep`` is a
    hereditary filter applied before the canonicity test.
    ``stats`` (if given) accumulates ``extensions`` and ``pruned`` counts.
    """
    n = len(adj)
    size = n + 1
    bit = 1 << n
    out = []
    if n == 0:
        child = (0,)
        if stats is not None:
            stats["extensions"] += 1
        if keep is None or keep(child, 1):
            out.append(child)
        elif stats is not None:
            stats["pruned"] += 1
        return out
    degs = [row.bit_count() for row in adj]
    maxdeg = max(degs)
    top = 0
    for v, d in enumerate(degs):
        if d == maxdeg:
            top |= 1 << v
    rep = subset_orbit_representatives(n, parent_generators(adj, n))
    pruned = 0
    for s in range(1 << n):
        if not rep[s]:
            continue
        k = s.bit_count()
        if k < maxdeg or (k == maxdeg and s & top):
            continue
        child = tuple([row | bit if s >> v & 1 else row for v, row in enumerate(adj)]) + (s,)
        if keep is not None and not keep(child, size):
            pruned += 1
            continue
        if is_canonical_extension(child, size):
            out.append(child)
    if stats is not None:
        stats["extensions"] += 1 << n
        stats["pruned"] += pruned
    return out


def _expand_chunk(args):
    parents, keep, mark = args
    stats = {"extensions": 0, "pruned": 0}
    children = [extend(p, keep, stats) for p in parents]
    flags = None
    if mark is not None:
        flags = [[bool(mark(c)) for c in group] for group in children]
    return children, flags, stats


def _chunks(items: Sequence, count: int) -> list[Sequence]:
    if not items:
        return []
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


class Expander:
    """Expands whole levels, optionally over a process pool.

    ``keep`` must be picklable (a module-level function or a picklable
    callable object) when ``workers > 1``.
    """

    def __init__(self, keep=None, workers: int = 1):
        if workers < 1:
            raise ValueError("worker count must be >= 1")
        self.keep = keep
        self.workers = workers
        self._pool = None

    def __enter__(self):
        if self.workers > 1:
            self._pool = ProcessPoolExecutor(max_workers=self.workers)
        return self

    def __exit__(self, *exc):
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None

    def expand(self, parents: Sequence[Rows], mark=None):
        """Return ``(children_per_parent, flags_per_parent, stats)`` for one level.

        ``mark`` is an optional per-child predicate evaluated next to the
        expansion; ``flags_per_parent`` is ``None`` without it.
        """
        if self._pool is None or len(parents) < 2:
            return _expand_chunk((parents, self.keep, mark))
        pieces = _chunks(list(parents), self.workers * 4)
        children: list = []
        flags: list | None = [] if mark is not None else None
        stats = {"extensions": 0, "pruned": 0}
        jobs = [(piece, self.keep, mark) for piece in pieces]
        for part, part_flags, part_stats in self._pool.map(_expand_chunk, jobs):
            children.extend(part)
            if flags is not None:
                flags.extend(part_flags)
            for key in stats:
                stats[key] += part_stats[key]
        return children, flags, stats


def graphs_by_order(n_max: int, workers: int = 1) -> list[list[Rows]]:
    """All graphs of order ``1..n_max`` up to isomorphism, one list per order."""
    if n_max > MAX_FULL_ORDER:
        raise ValueError(f"full enumeration is capped at order {MAX_FULL_ORDER}")
    levels = []
    with Expander(workers=workers) as ex:
        level = [()]
        for _ in range(n_max):
            children, _, _ = ex.expand(level)
            level = [c for group in children for c in group]
            levels.append(level)
    return levels


def iter_graphs(order: int, workers: int = 1) -> Iterator[Rows]:
    """Stream one representative per isomorphism class on ``order`` vertices."""
    if not 1 <= order <= MAX_FULL_ORDER:
        raise ValueError(f"full enumeration needs 1 <= order <= {MAX_FULL_ORDER}")
    if order == 1:
        yield (0,)
        return
    parents = graphs_by_order(order - 1, workers)[-1]
    with Expander(workers=workers) as ex:
        for piece in _chunks(parents, max(1, len(parents) // 256)):
            children, _, _ = ex.expand(piece)
            for group in children:
                yield from group
