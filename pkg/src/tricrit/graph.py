"""Simple undirected graphs with dense 0..n-1 vertex indices.

The :class:`Graph` value is immutable; every mutation operation returns a
new graph. Adjacency is kept both as frozensets (O(1) membership) and,
lazily, as a numpy array of 64-bit neighbor bitmasks for the numeric
kernels. The bitmask form caps vertex count at 62, which matches the
graph6 short-form limit used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import GraphFormatError, PreconditionError

MAX_VERTICES = 62

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[frozenset[int], ...]

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v
        )

    @cached_property
    def masks(self) -> np.ndarray:
        """Per-vertex neighbor bitmask, dtype int64 (n <= 62 fits)."""
        out = np.zeros(self.n, dtype=np.int64)
        for u in range(self.n):
            acc = 0
            for v in self.adj[u]:
                acc |= 1 << v
            out[u] = acc
        return out

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list, rejecting loops and bad indices.

    Duplicate edges are collapsed after (u, v) normalization.
    """
    if n < 0 or n > MAX_VERTICES:
        raise PreconditionError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
    sets: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise PreconditionError(f"loop edge at vertex {u}")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in sets))


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = _norm_edge(int(e[0]), int(e[1]))
    if v not in g.adj[u]:
        raise PreconditionError(f"edge ({u},{v}) not in graph")
    sets = [set(a) for a in g.adj]
    sets[u].discard(v)
    sets[v].discard(u)
    return Graph(g.n, tuple(frozenset(s) for s in sets))


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Contract edge e: merge its ends, collapse parallels, keep simple.

    The merged vertex takes the lower index; vertices above the higher
    index shift down by one, so the result stays densely labeled.
    """
    u, v = _norm_edge(int(e[0]), int(e[1]))
    if v not in g.adj[u]:
        raise PreconditionError(f"edge ({u},{v}) not in graph")

    def relabel(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    new_edges = set()
    for a, b in g.edges:
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            new_edges.add(_norm_edge(ra, rb))
    return build_graph(g.n - 1, sorted(new_edges))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on the given vertex set, relabeled densely.

    Vertices keep their relative order: the i-th smallest kept vertex
    becomes vertex i.
    """
    keep = sorted(set(int(v) for v in vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[a], index[b]) for a, b in g.edges if a in index and b in index
    ]
    return build_graph(len(keep), edges)


def union_subgraphs(parts: Sequence[Graph]) -> Graph:
    """Union of subgraphs sharing one vertex universe, compacted densely.

    Every part must be a graph on the same n (edges vary; vertices not
    touched by any edge are dropped). Returns the union restricted to its
    edge support, relabeled by ascending original index.
    """
    if not parts:
        raise PreconditionError("union of zero subgraphs")
    n = parts[0].n
    for p in parts:
        if p.n != n:
            raise PreconditionError("union requires a shared vertex universe")
    edges: set[Edge] = set()
    for p in parts:
        edges.update(p.edges)
    support = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(support)}
    return build_graph(len(support), [(index[a], index[b]) for a, b in edges])


def edge_subgraph(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Subgraph of g on the full vertex universe, keeping only ``edges``."""
    es = [_norm_edge(*e) for e in edges]
    for u, v in es:
        if not g.has_edge(u, v):
            raise PreconditionError(f"edge ({u},{v}) not in graph")
    return build_graph(g.n, es)


def e_between(g: Graph, v1: Iterable[int], v2: Iterable[int]) -> int:
    """Number of edges with one end in v1 and the other in v2."""
    s1, s2 = set(v1), set(v2)
    if s1 & s2:
        raise PreconditionError("vertex sets overlap")
    return sum(1 for a, b in g.edges if (a in s1 and b in s2) or (a in s2 and b in s1))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cycles as sorted vertex triples."""
    out = []
    for u, v in g.edges:
        for w in g.adj[u] & g.adj[v]:
            if w > v:
                out.append((u, v, w))
    return out


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_biconnected(g: Graph) -> bool:
    """True for connected graphs with no cut vertex (K1, K2 count)."""
    if g.n <= 2:
        return is_connected(g)
    if not is_connected(g):
        return False
    # iterative Hopcroft-Tarjan articulation check
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    root_children = 0
    stack: list[tuple[int, Iterable[int]]] = [(0, iter(g.adj[0]))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        u, it = stack[-1]
        advanced = False
        for v in it:
            if disc[v] == -1:
                parent[v] = u
                if u == 0:
                    root_children += 1
                disc[v] = low[v] = timer
                timer += 1
                stack.append((v, iter(g.adj[v])))
                advanced = True
                break
            elif v != parent[u]:
                low[u] = min(low[u], disc[v])
        if not advanced:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if p != 0 and low[u] >= disc[p]:
                    return False
    return root_children <= 1


def parse_edgelist(text: str) -> Graph:
    """Parse the `u v` per-line edge-list format.

    An optional first data line ``n <count>`` pins the vertex count;
    otherwise n is one past the largest index seen. ``#`` starts a
    comment; blank lines are ignored.
    """
    n: int | None = None
    edges: list[Edge] = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and n is None and not edges:
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"line {lineno}: malformed header {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {raw!r}") from exc
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex in {raw!r}")
        max_seen = max(max_seen, u, v)
        edges.append((u, v))
    if n is None:
        n = max_seen + 1
    if max_seen >= n:
        raise GraphFormatError(f"vertex {max_seen} exceeds declared n={n}")
    try:
        return build_graph(n, edges)
    except PreconditionError as exc:
        raise GraphFormatError(str(exc)) from exc


def emit_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
