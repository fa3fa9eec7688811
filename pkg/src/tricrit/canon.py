"""Canonical forms: isomorphism-class representatives for deduplication.

The canonical labeling comes from the refinement/backtracking kernel;
its exactness is cross-checked in the test suite against a factorial
brute force before the enumerator trusts it (see tests/test_canon.py).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, build_graph
from .graph6 import emit_graph6
from ._kernels import canonical_order


@dataclass(frozen=True)
class CanonicalForm:
    """perm[i] = original vertex sitting at canonical position i."""

    perm: tuple[int, ...]
    graph6: str


def relabel_by_positions(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Graph whose vertex i is g's vertex perm[i]."""
    pos = {v: i for i, v in enumerate(perm)}
    return build_graph(g.n, [(pos[a], pos[b]) for a, b in g.edges])


def apply_vertex_map(g: Graph, sigma: dict[int, int] | list[int]) -> Graph:
    """Graph with vertex v renamed sigma[v] (sigma a bijection on 0..n-1)."""
    return build_graph(g.n, [(sigma[a], sigma[b]) for a, b in g.edges])


def canonical_form(g: Graph) -> CanonicalForm:
    perm = tuple(int(x) for x in canonical_order(g.masks, g.n))
    return CanonicalForm(perm, emit_graph6(relabel_by_positions(g, perm)))


def canonical_g6(g: Graph) -> str:
    return canonical_form(g).graph6


def brute_force_canonical_g6(g: Graph) -> str:
    """Reference canonical string: minimum graph6 over all n! relabelings.

    Exponential; for cross-checking the fast labeling at n <= 7 only.
    """
    best: str | None = None
    for p in permutations(range(g.n)):
        s = emit_graph6(apply_vertex_map(g, list(p)))
        if best is None or s < best:
            best = s
    assert best is not None or g.n == 0
    return best if best is not None else emit_graph6(g)


def are_isomorphic_brute(g: Graph, h: Graph) -> bool:
    """Decide isomorphism by trying every vertex bijection (tests only)."""
    if g.n != h.n or g.m != h.m:
        return False
    h_edges = set(h.edges)
    for p in permutations(range(g.n)):
        if all(((p[a], p[b]) in h_edges or (p[b], p[a]) in h_edges) for a, b in g.edges):
            return True
    return False
