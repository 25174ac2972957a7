"""Bit-mask graphs on at most 32 vertices.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  A :class:`Graph` stores one such mask per vertex (its open
neighbourhood).  Everything here is an immutable value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 32

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    """Build a vertex-set mask from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_set(order: int) -> VertexSet:
    return (1 << order) - 1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with adjacency rows as bit masks."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {self.order}")
        if len(self.adj) != self.order:
            raise ValueError("adjacency length does not match order")
        full = full_set(self.order)
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond the graph order")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.order)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in members(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def closed_neighborhoods(self) -> tuple[int, ...]:
        return tuple(row | 1 << v for v, row in enumerate(self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


@dataclass(frozen=True)
class EdgeColoring:
    """Red/blue colouring of K_order stored as its blue graph."""

    order: int
    blue: Graph

    def __post_init__(self):
        if self.blue.order != self.order:
            raise ValueError("blue graph order does not match colouring order")

    @classmethod
    def from_blue(cls, blue: Graph) -> "EdgeColoring":
        return cls(blue.order, blue)

    @property
    def red(self) -> Graph:
        return complement(self.blue)


def make_graph(order: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Graph on ``order`` vertices with the given (symmetrised) edge list."""
    if not isinstance(order, int) or not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be an integer in [1, {MAX_ORDER}], got {order!r}")
    adj = [0] * order
    for edge in edges:
        u, v = edge
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) not allowed")
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def empty_graph(order: int) -> Graph:
    return make_graph(order)


def complete_graph(order: int) -> Graph:
    full = full_set(order)
    return Graph(order, tuple(full ^ (1 << v) for v in range(order)))


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return make_graph(order, [(i, (i + 1) % order) for i in range(order)])


def path_graph(order: int) -> Graph:
    return make_graph(order, [(i, i + 1) for i in range(order - 1)])


def biclique_minus_matching(k: int, matched: int) -> Graph:
    """K_{k+1,k+1} with ``matched`` disjoint cross edges removed.

    Sides are ``0..k`` and ``k+1..2k+1``; the removed edges are
    ``(i, k+1+i)`` for ``i < matched``.
    """
    side = k + 1
    if not 0 <= matched <= side:
        raise ValueError("matching size must be between 0 and k+1")
    edges = [(i, side + j) for i in range(side) for j in range(side)
             if not (i == j and i < matched)]
    return make_graph(2 * side, edges)


def complement(g: Graph) -> Graph:
    full = full_set(g.order)
    return Graph(g.order, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def complement_rows(adj: Sequence[int], order: int) -> tuple[int, ...]:
    full = (1 << order) - 1
    return tuple(full ^ row ^ (1 << v) for v, row in enumerate(adj))


def induced(g: Graph, subset: VertexSet) -> Graph:
    """Subgraph induced on ``subset``, relabelled by ascending original index."""
    if subset <= 0:
        raise ValueError("induced subgraph needs a nonempty vertex set")
    if subset & ~g.vertices:
        raise ValueError("vertex set contains vertices beyond the graph order")
    return Graph(subset.bit_count(), induced_rows(g.adj, subset))


def induced_rows(adj: Sequence[int], subset: VertexSet) -> tuple[int, ...]:
    keep = members(subset)
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in members(adj[v] & subset):
            row |= 1 << position[u]
        rows.append(row)
    return tuple(rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    adj = [0] * g.order
    for v, row in enumerate(g.adj):
        image = 0
        for u in members(row):
            image |= 1 << perm[u]
        adj[perm[v]] = image
    return Graph(g.order, tuple(adj))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    shift = a.order
    return Graph(a.order + b.order, a.adj + tuple(row << shift for row in b.adj))


# -- graph6 -----------------------------------------------------------------

class Graph6Error(ValueError):
    """Base class for graph6 decoding failures."""


class EmptyInputError(Graph6Error):
    pass


class MalformedHeaderError(Graph6Error):
    pass


class TruncatedDataError(Graph6Error):
    pass


class TrailingDataError(Graph6Error):
    pass


_G6_HEADER = b">>graph6<<"


def encode_graph6(g: Graph) -> str:
    n = g.order
    out = bytearray([n + 63])
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    try:
        data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    except UnicodeEncodeError as exc:
        raise MalformedHeaderError("graph6 text must be ASCII") from exc
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise EmptyInputError("empty graph6 input")
    if any(not 63 <= b <= 126 for b in data):
        raise MalformedHeaderError("graph6 bytes must lie in the range 63..126")
    first = data[0]
    if first == 126:
        if len(data) < 4 or data[1] == 126:
            raise MalformedHeaderError("unsupported or truncated extended order header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        body = data[4:]
    else:
        n = first - 63
        body = data[1:]
    if not 1 <= n <= MAX_ORDER:
        raise MalformedHeaderError(f"graph order {n} outside [1, {MAX_ORDER}]")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise TruncatedDataError(f"expected {need} data bytes for order {n}, got {len(body)}")
    if len(body) > need:
        raise TrailingDataError(f"{len(body) - need} unexpected bytes after graph6 data")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise TrailingDataError("nonzero padding bits in graph6 data")
    return Graph(n, tuple(adj))


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors propagate."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        yield lineno, parse_graph6(line)


def read_graph6_file(path) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [g for _, g in iter_graph6_lines(fh)]


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
