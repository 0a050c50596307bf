"""Finite simple undirected graphs and the graph-level constructions used downstream.

Vertices are the contiguous integers ``0..n-1``. A :class:`Graph` is immutable;
every construction returns a new one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Malformed graph text. ``lineno`` is 1-based, or None when not line-oriented."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    neighbors: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((u, v) if u < v else (v, u))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in normalized:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "neighbors", tuple(frozenset(s) for s in adj))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def empty_graph(n: int) -> Graph:
    return Graph(n)


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the line-oriented edge-list format.

    The first non-comment line holds the vertex count; each later line holds
    one edge ``u v``. ``#`` starts a comment. Duplicate edges collapse.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphFormatError(f"expected vertex count, got {line!r}", lineno)
            n = _parse_int(tokens[0], lineno)
            if n < 0:
                raise GraphFormatError(f"negative vertex count {n}", lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertex indices, got {line!r}", lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range [0, {n}) in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing vertex count")
    return Graph(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"malformed integer {token!r}", lineno) from None


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# -- constructions -----------------------------------------------------------


def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u, v in combinations(range(g.n), 2) if (u, v) not in g.edges))


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    gs = list(gs)
    if not gs:
        raise ValueError("disjoint_union needs at least one graph")
    offset = 0
    edges: list[tuple[int, int]] = []
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    union = disjoint_union([g, h])
    cross = ((u, g.n + v) for u in range(g.n) for v in range(h.n))
    return Graph(union.n, [*union.edges, *cross])


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1  # type: ignore[operator]
                queue.append(w)
    return dist


def derived_graph(g: Graph) -> Graph:
    """Graph on the same vertices whose edges join pairs at distance exactly two."""
    edges = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        edges.extend((u, v) for v in range(u + 1, g.n) if dist[v] == 2)
    return Graph(g.n, edges)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.neighbors[u] & g.neighbors[v]) for u, v in g.edges)


def is_quadrangle_free(g: Graph) -> bool:
    # Two common neighbours of a pair close a 4-cycle through that pair.
    return all(len(g.neighbors[u] & g.neighbors[v]) < 2 for u, v in combinations(range(g.n), 2))


# -- exhaustive enumeration --------------------------------------------------

MAX_ENUMERATION_ORDER = 7


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in column order: (0,1), (0,2), (1,2), (0,3), ...

    This is the bit order of graph6 bodies and of enumeration bitmasks.
    """
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    return Graph(n, (p for bit, p in enumerate(vertex_pairs(n)) if mask >> bit & 1))


def enumerate_all_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Yield every labeled simple graph on ``n`` vertices, by increasing edge bitmask.

    ``start``/``stop`` select a slice of the mask range so parallel scans can
    partition the work.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    pairs = vertex_pairs(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    return (Graph(n, (p for bit, p in enumerate(pairs) if mask >> bit & 1)) for mask in range(start, stop))
