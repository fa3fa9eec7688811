"""Planarity, combinatorial embeddings, faces and the dual multigraph.

Planarity testing is delegated to networkx (left-right algorithm); the
first embedding it returns is the one recorded and reused everywhere, so
embedding-dependent constructions are reproducible. Faces come from the
standard rotation-system traversal: follow a directed edge u->v, then
leave v along the neighbor after u in clockwise order.

Traversal finds no face for an edgeless component, so the general Euler
identity for these walks is n - m + f = 2 * (components with an edge)
+ ... ; for connected graphs with at least one edge it reduces to the
familiar n - m + f = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import PreconditionError
from .graph import Graph, triangles

Edge = tuple[int, int]


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system: clockwise cyclic neighbor order per vertex."""

    rotation: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rotation)


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk v0 v1 ... v{k-1} (edge v{k-1}v0 closes it).

    The degree counts boundary edges with multiplicity, so a cut edge
    traversed in both directions contributes two.
    """

    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        k = len(self.vertices)
        return frozenset(
            tuple(sorted((self.vertices[i], self.vertices[(i + 1) % k])))
            for i in range(k)
        )


@dataclass(frozen=True)
class DualMultigraph:
    """One node per face, one link per primal edge (parallels and loops kept)."""

    num_faces: int
    links: tuple[tuple[int, int, Edge], ...]
    face_degrees: tuple[int, ...]

    def node_degree(self, f: int) -> int:
        d = 0
        for a, b, _ in self.links:
            if a == f:
                d += 1
            if b == f:
                d += 1
        return d


def to_networkx(g: Graph) -> nx.Graph:
    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    gx.add_edges_from(g.edges)
    return gx


def is_planar(g: Graph) -> tuple[bool, PlanarEmbedding | None]:
    """Planarity plus the recorded first embedding when planar."""
    ok, emb = nx.check_planarity(to_networkx(g))
    if not ok:
        return False, None
    rotation = []
    for v in range(g.n):
        if g.degree(v) == 0:
            rotation.append(())
        else:
            rotation.append(tuple(emb.neighbors_cw_order(v)))
    return True, PlanarEmbedding(tuple(rotation))


def require_embedding(g: Graph) -> PlanarEmbedding:
    ok, emb = is_planar(g)
    if not ok:
        raise PreconditionError("graph is not planar")
    assert emb is not None
    return emb


def _normalize_walk(walk: list[int]) -> tuple[int, ...]:
    k = len(walk)
    best = None
    for s in range(k):
        cand = tuple(walk[(s + i) % k] for i in range(k))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def faces(g: Graph, emb: PlanarEmbedding) -> list[FaceWalk]:
    """All boundary walks of the embedding, deterministically ordered."""
    index_at = [
        {u: i for i, u in enumerate(rot)} for rot in emb.rotation
    ]
    seen: set[tuple[int, int]] = set()
    walks: list[FaceWalk] = []
    for v0 in range(g.n):
        for w0 in emb.rotation[v0]:
            if (v0, w0) in seen:
                continue
            walk = []
            u, v = v0, w0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append(u)
                rot = emb.rotation[v]
                nxt = rot[(index_at[v][u] + 1) % len(rot)]
                u, v = v, nxt
            walks.append(FaceWalk(_normalize_walk(walk)))
    walks.sort(key=lambda f: (f.degree, f.vertices))
    return walks


def face_of_directed_edge(g: Graph, emb: PlanarEmbedding, fs: list[FaceWalk]) -> dict[tuple[int, int], int]:
    """Map each directed edge to the index (in fs) of its traversal face."""
    index_at = [{u: i for i, u in enumerate(rot)} for rot in emb.rotation]
    # regenerate walks and match them to the sorted list
    key_to_idx: dict[tuple[int, ...], int] = {}
    for i, f in enumerate(fs):
        key_to_idx[f.vertices] = i
    out: dict[tuple[int, int], int] = {}
    seen: set[tuple[int, int]] = set()
    for v0 in range(g.n):
        for w0 in emb.rotation[v0]:
            if (v0, w0) in seen:
                continue
            walk = []
            darts = []
            u, v = v0, w0
            while (u, v) not in seen:
                seen.add((u, v))
                walk.append(u)
                darts.append((u, v))
                rot = emb.rotation[v]
                nxt = rot[(index_at[v][u] + 1) % len(rot)]
                u, v = v, nxt
            idx = key_to_idx[_normalize_walk(walk)]
            for d in darts:
                out[d] = idx
    return out


def dual(g: Graph, emb: PlanarEmbedding) -> DualMultigraph:
    fs = faces(g, emb)
    at = face_of_directed_edge(g, emb, fs)
    links = []
    for u, v in g.edges:
        f1, f2 = at[(u, v)], at[(v, u)]
        if f1 > f2:
            f1, f2 = f2, f1
        links.append((f1, f2, (u, v)))
    links.sort()
    return DualMultigraph(len(fs), tuple(links), tuple(f.degree for f in fs))


def separating_3_cycles(g: Graph) -> list[tuple[int, int, int]]:
    """Triangles whose vertex removal disconnects the graph."""
    out = []
    for tri in triangles(g):
        if len(connected_components_without(g, set(tri))) >= 2:
            out.append(tri)
    return out


def triangle_sides(
    g: Graph, emb: PlanarEmbedding, tri: tuple[int, int, int]
) -> tuple[list[int], list[int]]:
    """Split the components of G - V(tri) into the two sides of the triangle.

    Uses the rotation sectors at the triangle's corners: with a
    consistently oriented rotation system, the clockwise sector from the
    next corner to the previous one bounds the same side at every corner.
    Returns two sorted vertex lists (either may be empty).
    """
    a, b, c = tri
    if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise PreconditionError("not a triangle")
    corners = {a: (b, c), b: (c, a), c: (a, b)}
    side0: list[int] = []
    side1: list[int] = []
    for comp in connected_components_without(g, set(tri)):
        compset = set(comp)
        attach0 = False
        attach1 = False
        for t, (u1, u2) in corners.items():
            rot = emb.rotation[t]
            d = len(rot)
            i1 = rot.index(u1)
            sector = 0
            j = (i1 + 1) % d
            while j != i1:
                w = rot[j]
                if w == u2:
                    sector = 1
                elif w in compset:
                    if sector == 0:
                        attach0 = True
                    else:
                        attach1 = True
                j = (j + 1) % d
        if attach0 and attach1:
            raise PreconditionError(
                f"component {comp} attaches on both sides of {tri}; inconsistent embedding"
            )
        if attach0:
            side0.extend(comp)
        else:
            side1.extend(comp)
    return sorted(side0), sorted(side1)


def connected_components_without(g: Graph, removed: set[int]) -> list[list[int]]:
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps
