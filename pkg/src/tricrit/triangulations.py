"""Generation of planar triangulations by vertex splitting from K4.

Every simple triangulation on n+1 vertices contracts to one on n along
a contractible edge, so splitting vertices of all n-vertex triangulations
and rejecting isomorphs is exhaustive. Triangulations are 3-connected,
so the embedding used for the rotation arcs is unique up to reflection,
which cannot add or lose isomorphism classes.
"""

from __future__ import annotations

from .canon import canonical_g6
from .errors import PreconditionError
from .graph import Graph, build_graph
from .graph6 import parse_graph6
from .planar import require_embedding


def _split_children(g: Graph) -> list[Graph]:
    emb = require_embedding(g)
    out = []
    for v in range(g.n):
        rot = emb.rotation[v]
        d = len(rot)
        for i in range(d):
            for j in range(i + 1, d):
                # arc1 = rot[i..j], arc2 = rot[j..i] (cyclic); both keep the
                # split pair u_i, u_j
                arc1 = [rot[x] for x in range(i, j + 1)]
                arc2 = [rot[x % d] for x in range(j, i + d + 1)]
                edges = [e for e in g.edges if v not in e]
                v2 = g.n
                edges.extend((v, w) for w in arc1)
                edges.extend((v2, w) for w in arc2)
                edges.append((v, v2))
                out.append(build_graph(g.n + 1, edges))
    return out


def triangulations(n: int) -> list[Graph]:
    """All simple planar triangulations on n vertices, one per class."""
    if n < 4:
        raise PreconditionError("triangulations need n >= 4")
    level = {canonical_g6(_k4()): _k4()}
    for _ in range(4, n):
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for child in _split_children(g):
                key = canonical_g6(child)
                if key not in nxt:
                    nxt[key] = child
        level = nxt
    return [parse_graph6(key) for key in sorted(level)]


def _k4() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
