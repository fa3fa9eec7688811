"""Triangle-subgraph decomposition, the auxiliary graph, and the audits
that exercise the structural theorems on concrete instances.

Triangles here are all 3-cycles of the abstract graph, not only facial
ones; on the audit domain (no separating 3-cycles) the two notions
coincide and the decomposition is embedding-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from .canon import canonical_g6
from .coloring import is_uniquely_3_colorable
from .errors import PreconditionError, TheoremViolation
from .graph import (
    Graph,
    build_graph,
    connected_components,
    e_between,
    edge_subgraph,
    is_biconnected,
    triangles,
    union_subgraphs,
)
from .planar import (
    FaceWalk,
    PlanarEmbedding,
    faces,
    is_planar,
    separating_3_cycles,
)

Edge = tuple[int, int]

TAG_SHARED_VERTEX = "shared_vertex"
TAG_LINKED_PAIR = "linked_pair"
TAG_TREE_COMPLETION = "tree_completion"

_CYCLE_COUNT_CAP = 10**6
_SEQUENCE_STATE_CAP = 4096


@dataclass(frozen=True)
class TriangleComponent:
    """One maximal triangle-subgraph: an edge-connected family of 3-cycles."""

    triangles: tuple[tuple[int, int, int], ...]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def t(self) -> int:
        return len(self.triangles)


@dataclass(frozen=True)
class TriangleDecomposition:
    n: int
    components: tuple[TriangleComponent, ...]
    d_map: dict[int, int]
    union_vertices: tuple[int, ...]
    union_edges: tuple[Edge, ...]
    union_components: int
    separating: tuple[tuple[int, int, int], ...]

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def t_values(self) -> tuple[int, ...]:
        return tuple(c.t for c in self.components)

    @property
    def domain_ok(self) -> bool:
        return not self.separating

    def component_graph(self, g: Graph, i: int) -> Graph:
        return edge_subgraph(g, self.components[i].edges)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "t": list(self.t_values),
            "components": [list(c.vertices) for c in self.components],
            "component_triangles": [
                [list(t) for t in c.triangles] for c in self.components
            ],
            "d_map": {str(v): d for v, d in sorted(self.d_map.items())},
            "union_vertices": list(self.union_vertices),
            "union_edges": [list(e) for e in self.union_edges],
            "union_components": self.union_components,
            "separating_3_cycles": [list(t) for t in self.separating],
        }


def triangle_components(g: Graph, strict: bool = True) -> TriangleDecomposition:
    """Group the 3-cycles of g into maximal triangle-subgraphs.

    strict mode refuses graphs with separating 3-cycles (the audits are
    only binding without them); pass strict=False for exploratory use.
    """
    seps = tuple(separating_3_cycles(g))
    if strict and seps:
        raise PreconditionError(
            f"graph has separating 3-cycles {list(seps)}; decomposition audits are not binding"
        )
    tris = triangles(g)
    parent = list(range(len(tris)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    by_edge: dict[Edge, int] = {}
    for idx, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            if e in by_edge:
                ra, rb = find(by_edge[e]), find(idx)
                if ra != rb:
                    parent[ra] = rb
            else:
                by_edge[e] = idx

    groups: dict[int, list[int]] = {}
    for idx in range(len(tris)):
        groups.setdefault(find(idx), []).append(idx)

    comps = []
    for idxs in groups.values():
        tlist = tuple(sorted(tris[i] for i in idxs))
        vs = sorted({v for t in tlist for v in t})
        es = sorted(
            {
                e
                for a, b, c in tlist
                for e in ((a, b), (a, c), (b, c))
            }
        )
        comps.append(TriangleComponent(tlist, tuple(vs), tuple(es)))
    comps.sort(key=lambda c: c.vertices)

    d_map: dict[int, int] = {}
    for comp in comps:
        for v in comp.vertices:
            d_map[v] = d_map.get(v, 0) + 1

    gp_edges = sorted({e for comp in comps for e in comp.edges})
    gp_vertices = sorted({v for e in gp_edges for v in e})
    if gp_vertices:
        gp = build_graph(g.n, gp_edges)
        omega = sum(
            1 for c in connected_components(gp) if any(v in d_map for v in c)
        )
    else:
        omega = 0
    return TriangleDecomposition(
        n=g.n,
        components=tuple(comps),
        d_map=d_map,
        union_vertices=tuple(gp_vertices),
        union_edges=tuple(gp_edges),
        union_components=omega,
        separating=seps,
    )


def assert_decomposition_invariants(g: Graph, decomp: TriangleDecomposition) -> dict[str, Any]:
    """Binding checks for in-domain instances: component sizes, induced
    equality and maximal outerplanarity of every component."""
    for comp in decomp.components:
        if len(comp.vertices) != comp.t + 2 or len(comp.edges) != 2 * comp.t + 1:
            raise TheoremViolation(
                "triangle-subgraph size formula failed",
                {"graph6": canonical_g6(g), "component": list(comp.vertices)},
            )
        induced = {
            (a, b)
            for a, b in g.edges
            if a in set(comp.vertices) and b in set(comp.vertices)
        }
        if induced != set(comp.edges):
            raise TheoremViolation(
                "component is not induced",
                {"graph6": canonical_g6(g), "component": list(comp.vertices)},
            )
        if not _is_maximal_outerplanar(edge_subgraph(g, comp.edges), comp.vertices):
            raise TheoremViolation(
                "component is not maximal outerplanar",
                {"graph6": canonical_g6(g), "component": list(comp.vertices)},
            )
    total = sum(decomp.t_values)
    if sum(2 * t + 1 for t in decomp.t_values) != len(decomp.union_edges) or len(
        decomp.union_edges
    ) != decomp.k + 2 * total:
        raise TheoremViolation(
            "edge accounting of the triangle union failed",
            {"graph6": canonical_g6(g)},
        )
    return {"k": decomp.k, "t": list(decomp.t_values), "triangles": total}


def _is_maximal_outerplanar(h: Graph, support: Iterable[int]) -> bool:
    """Maximal outerplanar on its support: outerplanar with 2v-3 edges.

    Outerplanarity is tested by planarity of the graph plus an apex
    joined to every support vertex.
    """
    vs = sorted(support)
    if len(vs) < 3:
        return False
    if h.m != 2 * len(vs) - 3:
        return False
    apex = h.n
    edges = list(h.edges) + [(v, apex) for v in vs]
    ok, _ = is_planar(build_graph(h.n + 1, edges))
    return ok


def linked_pair(decomp: TriangleDecomposition, i: int, j: int) -> bool:
    """Whether components i and j are linked through a third component at
    vertices distinct from their own shared vertex."""
    vi = set(decomp.components[i].vertices)
    vj = set(decomp.components[j].vertices)
    common = vi & vj
    if not common:
        raise PreconditionError(f"components {i} and {j} share no vertex")
    for v in common:
        for ell in range(decomp.k):
            if ell in (i, j):
                continue
            vl = set(decomp.components[ell].vertices)
            if (vl & vi) - {v} and (vl & vj) - {v}:
                return True
    return False


@dataclass(frozen=True)
class AuxGraph:
    """The auxiliary graph on triangle-subgraph nodes, with provenance."""

    k: int
    edges: tuple[tuple[int, int, str], ...]
    gu_reports: tuple[dict[str, Any], ...]
    duplicate_pairs: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        return build_graph(self.k, [(a, b) for a, b, _ in self.edges])

    @property
    def gu_all_forests(self) -> bool:
        return all(r["forest"] for r in self.gu_reports)

    def to_dict(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "edges": [[a, b, tag] for a, b, tag in self.edges],
            "gu": list(self.gu_reports),
            "duplicate_pairs": [list(p) for p in self.duplicate_pairs],
        }


def build_hg(g: Graph, emb: PlanarEmbedding, decomp: TriangleDecomposition) -> AuxGraph:
    """Construct the auxiliary graph from the stored embedding.

    Step 1 joins the two components through every degree-2 shared vertex.
    Step 2, at every vertex u lying in three or more components, adds the
    linked pairs and then completes the local graph to a connected one
    using only rotation-consecutive pairs, adding the minimum number.
    """
    edge_to_comp: dict[Edge, int] = {}
    for ci, comp in enumerate(decomp.components):
        for e in comp.edges:
            edge_to_comp[e] = ci
    comps_of: dict[int, list[int]] = {}
    for ci, comp in enumerate(decomp.components):
        for v in comp.vertices:
            comps_of.setdefault(v, []).append(ci)

    chosen: dict[tuple[int, int], str] = {}
    duplicates: list[tuple[int, int]] = []

    def add(a: int, b: int, tag: str) -> None:
        key = (a, b) if a < b else (b, a)
        if key in chosen:
            duplicates.append(key)
            return
        chosen[key] = tag

    for u in sorted(decomp.d_map):
        if decomp.d_map[u] == 2:
            a, b = comps_of[u]
            add(a, b, TAG_SHARED_VERTEX)

    gu_reports = []
    for u in sorted(decomp.d_map):
        if decomp.d_map[u] < 3:
            continue
        # components in clockwise rotation order around u (first appearance)
        cyc: list[int] = []
        for w in emb.rotation[u]:
            e = (u, w) if u < w else (w, u)
            ci = edge_to_comp.get(e)
            if ci is not None and ci not in cyc:
                cyc.append(ci)
        if len(cyc) != decomp.d_map[u]:
            # components without an edge at u cannot happen: u in a component
            # means u is on one of its triangles, so two incident edges exist
            raise TheoremViolation(
                "rotation scan missed a component at a shared vertex",
                {"vertex": u},
            )
        p_edges = []
        for x in range(len(cyc)):
            for y in range(x + 1, len(cyc)):
                if linked_pair(decomp, cyc[x], cyc[y]):
                    p_edges.append((cyc[x], cyc[y]))
        # forest check on the local linked graph
        parent = {c: c for c in cyc}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        forest = True
        for a, b in p_edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                forest = False
            else:
                parent[ra] = rb
        tree_edges = []
        for ell in range(len(cyc)):
            a, b = cyc[ell], cyc[(ell + 1) % len(cyc)]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                tree_edges.append((a, b))
        for a, b in p_edges:
            add(a, b, TAG_LINKED_PAIR)
        for a, b in tree_edges:
            add(a, b, TAG_TREE_COMPLETION)
        gu_reports.append(
            {
                "vertex": u,
                "rotation_components": cyc,
                "linked_pairs": [list(e) for e in p_edges],
                "completion_pairs": [list(e) for e in tree_edges],
                "forest": forest,
            }
        )

    edges = tuple(sorted((a, b, chosen[(a, b)]) for a, b in chosen))
    return AuxGraph(
        k=decomp.k,
        edges=edges,
        gu_reports=tuple(gu_reports),
        duplicate_pairs=tuple(sorted(set(duplicates))),
    )


def _euler_faces(n_vertices: int, n_edges: int, omega: int) -> int:
    """Face count of a plane graph with one shared unbounded face."""
    return n_edges - n_vertices + 1 + omega


def union_big_face_count(
    g: Graph, decomp: TriangleDecomposition, emb: PlanarEmbedding | None = None
) -> int:
    """Number of faces of the triangle union besides its bounded triangles.

    Computed from Euler; when an embedding of g is supplied the count of
    faces is cross-checked against a traversal of the inherited
    sub-embedding.
    """
    f_euler = _euler_faces(
        len(decomp.union_vertices), len(decomp.union_edges), decomp.union_components
    )
    if emb is not None and decomp.union_edges:
        gp_edge_set = set(decomp.union_edges)
        rotation = []
        for v in range(g.n):
            rotation.append(
                tuple(
                    w
                    for w in emb.rotation[v]
                    if ((v, w) if v < w else (w, v)) in gp_edge_set
                )
            )
        gp = build_graph(g.n, decomp.union_edges)
        traversal = len(faces(gp, PlanarEmbedding(tuple(rotation))))
        if traversal - (decomp.union_components - 1) != f_euler:
            raise TheoremViolation(
                "face traversal disagrees with the Euler count on the triangle union",
                {"graph6": canonical_g6(g), "euler": f_euler, "traversal": traversal},
            )
    return f_euler - sum(decomp.t_values)


def aux_face_audit(
    g: Graph,
    emb: PlanarEmbedding,
    decomp: TriangleDecomposition,
    aux: AuxGraph,
    binding: bool = True,
) -> dict[str, Any]:
    """Simplicity/planarity of the auxiliary graph, local forests and the
    face-count equality against the triangle union."""
    hg = aux.graph()
    planar_ok, _ = is_planar(hg)
    omega_hg = len(connected_components(hg)) if hg.n else 0
    f_hg = _euler_faces(hg.n, hg.m, omega_hg)
    f_ge4 = union_big_face_count(g, decomp, emb)
    checks = {
        "simple": not aux.duplicate_pairs,
        "planar": planar_ok,
        "gu_forests": aux.gu_all_forests,
        "faces_hg": f_hg,
        "f_ge4_gprime": f_ge4,
        "equality": f_hg == f_ge4,
    }
    ok = bool(
        checks["simple"] and checks["planar"] and checks["gu_forests"] and checks["equality"]
    )
    if binding and not ok:
        raise TheoremViolation(
            "auxiliary-graph audit failed",
            {"graph6": canonical_g6(g), "checks": checks},
        )
    return {"binding": binding, "pass": ok, "checks": checks}


_CHAIN_PATH_CAP = 100_000


def chain_tip_audit(g: Graph, decomp: TriangleDecomposition, binding: bool = True) -> dict[str, Any]:
    """Tips of every triangle chain must be distinct and nonadjacent.

    Chains are simple paths in the edge-sharing graph on a component's
    triangles. Without separating 3-cycles that graph is the outerplanar
    dual tree and the chains are its unique paths; book-like components
    (several triangles on one edge) make it denser, so enumeration is
    capped and the cap recorded.
    """
    pairs_checked = 0
    violations: list[dict[str, Any]] = []
    truncated = False
    for comp in decomp.components:
        tris = comp.triangles
        if len(tris) < 2:
            continue
        adj: dict[int, list[int]] = {i: [] for i in range(len(tris))}
        for i in range(len(tris)):
            for j in range(i + 1, len(tris)):
                if len(set(tris[i]) & set(tris[j])) == 2:
                    adj[i].append(j)
                    adj[j].append(i)
        seen_tips: set[tuple[int, int, int, int]] = set()
        budget = _CHAIN_PATH_CAP

        def check_tips(path: list[int]) -> None:
            nonlocal pairs_checked
            quad = (path[0], path[1], path[-2], path[-1])
            if quad in seen_tips:
                return
            seen_tips.add(quad)
            tip_v = set(tris[path[0]]) - set(tris[path[1]])
            tip_u = set(tris[path[-1]]) - set(tris[path[-2]])
            if len(tip_v) != 1 or len(tip_u) != 1:
                violations.append(
                    {"component": list(comp.vertices), "reason": "degenerate chain tips"}
                )
                return
            v, u = tip_v.pop(), tip_u.pop()
            pairs_checked += 1
            if v == u or g.has_edge(v, u):
                violations.append(
                    {
                        "component": list(comp.vertices),
                        "chain": list(path),
                        "tips": [v, u],
                        "reason": "tips equal or adjacent",
                    }
                )

        def extend(path: list[int], used: set[int]) -> bool:
            nonlocal budget
            if budget <= 0:
                return False
            if len(path) >= 2 and path[0] < path[-1]:
                budget -= 1
                check_tips(path)
            for nxt in adj[path[-1]]:
                if nxt in used:
                    continue
                path.append(nxt)
                used.add(nxt)
                ok = extend(path, used)
                path.pop()
                used.remove(nxt)
                if not ok:
                    return False
            return True

        for start in range(len(tris)):
            if not extend([start], {start}):
                truncated = True
                break
    ok = not violations
    if binding and not ok:
        raise TheoremViolation(
            "triangle-chain tip audit failed",
            {"graph6": canonical_g6(g), "violations": violations},
        )
    return {
        "binding": binding,
        "pass": ok,
        "pairs_checked": pairs_checked,
        "violations": violations,
        "truncated": truncated,
    }


def interaction_audit(g: Graph, decomp: TriangleDecomposition, binding: bool = True) -> dict[str, Any]:
    """Pairwise overlap and crossing-edge bounds, plus union uniqueness for
    linked triples."""
    violations = []
    union_checks = []
    k = decomp.k
    comp_graphs = [decomp.component_graph(g, i) for i in range(k)]
    vsets = [set(c.vertices) for c in decomp.components]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            common = vsets[i] & vsets[j]
            if len(common) > 1:
                violations.append({"pair": [i, j], "common": sorted(common)})
                continue
            if i < j:
                if len(common) == 1:
                    v = next(iter(common))
                    crossing = e_between(g, vsets[i] - {v}, vsets[j] - {v})
                    if crossing > 1:
                        violations.append(
                            {"pair": [i, j], "crossing": crossing, "limit": 1}
                        )
                else:
                    crossing = e_between(g, vsets[i], vsets[j])
                    if crossing > 3:
                        violations.append(
                            {"pair": [i, j], "crossing": crossing, "limit": 3}
                        )
    # (iii): linked triples must have uniquely 3-colorable unions
    for a in range(k):
        for b in range(a + 1, k):
            common = vsets[a] & vsets[b]
            if len(common) != 1:
                continue
            v = next(iter(common))
            for c in range(k):
                if c in (a, b):
                    continue
                va = (vsets[c] & vsets[a]) - {v}
                vb = (vsets[c] & vsets[b]) - {v}
                if va and vb:
                    union = union_subgraphs([comp_graphs[c], comp_graphs[a], comp_graphs[b]])
                    unique, _ = is_uniquely_3_colorable(union)
                    union_checks.append({"triple": [c, a, b], "unique": unique})
                    if not unique:
                        violations.append(
                            {"triple": [c, a, b], "reason": "union not uniquely 3-colorable"}
                        )
    ok = not violations
    if binding and not ok:
        raise TheoremViolation(
            "triangle-subgraph interaction audit failed",
            {"graph6": canonical_g6(g), "violations": violations},
        )
    return {
        "binding": binding,
        "pass": ok,
        "violations": violations,
        "union_checks": union_checks,
    }


def face_sequence_audit(
    g: Graph,
    decomp: TriangleDecomposition,
    aux: AuxGraph,
    binding: bool = True,
) -> dict[str, Any]:
    """Grow face sequences (one 3-face, then adjacent 4-faces) in the
    auxiliary graph; each step must add exactly two nodes and keep the
    union of the touched components uniquely 3-colorable."""
    hg = aux.graph()
    planar_ok, hemb = is_planar(hg)
    if not planar_ok:
        report = {"binding": binding, "pass": False, "reason": "auxiliary graph not planar"}
        if binding:
            raise TheoremViolation("auxiliary graph not planar", report)
        return report
    assert hemb is not None
    fs = faces(hg, hemb)
    three = [i for i, f in enumerate(fs) if f.degree == 3]
    four = [i for i, f in enumerate(fs) if f.degree == 4]
    comp_graphs = [decomp.component_graph(g, i) for i in range(decomp.k)]

    def union_unique(nodes: frozenset[int]) -> bool:
        union = union_subgraphs([comp_graphs[h] for h in sorted(nodes)])
        unique, _ = is_uniquely_3_colorable(union)
        return unique

    checks = []
    violations = []
    seen_states: set[frozenset[int]] = set()
    seen_unions: set[frozenset[int]] = set()
    truncated = False

    def visit(state: frozenset[int], covered: frozenset[int]) -> None:
        nonlocal truncated
        if len(seen_states) >= _SEQUENCE_STATE_CAP:
            truncated = True
            return
        if covered not in seen_unions:
            seen_unions.add(covered)
            unique = union_unique(covered)
            checks.append({"faces": sorted(state), "nodes": sorted(covered), "unique": unique})
            if not unique:
                violations.append({"faces": sorted(state), "reason": "union not unique"})
        for f in four:
            if f in state:
                continue
            if not any(fs[f].edge_set & fs[s].edge_set for s in state):
                continue
            new = frozenset(fs[f].vertex_set) - covered
            nxt = state | {f}
            if nxt in seen_states:
                continue
            seen_states.add(nxt)
            if len(new) != 2:
                violations.append(
                    {"faces": sorted(nxt), "new_nodes": sorted(new), "reason": "step adds != 2 nodes"}
                )
                continue
            visit(nxt, covered | new)

    for f0 in three:
        state = frozenset([f0])
        if state not in seen_states:
            seen_states.add(state)
            visit(state, frozenset(fs[f0].vertex_set))

    ok = not violations
    report = {
        "binding": binding,
        "pass": ok,
        "sequences_checked": len(seen_states),
        "union_checks": checks,
        "violations": violations,
        "truncated": truncated,
    }
    if binding and not ok:
        raise TheoremViolation(
            "face-sequence audit failed", {"graph6": canonical_g6(g), "violations": violations}
        )
    return report


@dataclass(frozen=True)
class CycleRecord:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]

    @property
    def length(self) -> int:
        return len(self.vertices)


def cycles_up_to(h: Graph, max_len: int | None = None, max_count: int = _CYCLE_COUNT_CAP) -> tuple[list[CycleRecord], bool]:
    """All simple cycles up to length/count caps; flag reports truncation.

    Each cycle appears once: the walk starts at its smallest vertex and
    its second vertex is smaller than its last.
    """
    if max_count <= 0 or (max_len is not None and max_len <= 0):
        raise PreconditionError("caps must be positive")
    cap_len = max_len if max_len is not None else h.n
    out: list[CycleRecord] = []
    truncated = False

    def dfs(root: int, path: list[int], on_path: set[int]) -> bool:
        if len(out) >= max_count:
            return False
        u = path[-1]
        for w in sorted(h.adj[u]):
            if w == root and len(path) >= 3 and path[1] < path[-1]:
                edges = frozenset(
                    tuple(sorted((path[i], path[(i + 1) % len(path)])))
                    for i in range(len(path))
                )
                out.append(CycleRecord(tuple(path), edges))
                if len(out) >= max_count:
                    return False
            if w <= root or w in on_path or len(path) >= cap_len:
                continue
            path.append(w)
            on_path.add(w)
            ok = dfs(root, path, on_path)
            path.pop()
            on_path.remove(w)
            if not ok:
                return False
        return True

    for root in range(h.n):
        if not dfs(root, [root], {root}):
            truncated = True
            break
    return out, truncated


def dependence_relation(h: Graph, cycles: list[CycleRecord], truncated: bool = False) -> list[set[int]]:
    """dep[i] = indices of cycles dependent with cycle i.

    Two cycles are dependent when a chain of edge-sharing cycles joins
    them with every intermediate cycle of length exactly four; sharing an
    edge directly qualifies. Irreflexive by convention.
    """
    if truncated:
        raise PreconditionError("cycle list is truncated; dependence would be unsound")
    nc = len(cycles)
    share = [set() for _ in range(nc)]
    for i in range(nc):
        for j in range(i + 1, nc):
            if cycles[i].edges & cycles[j].edges:
                share[i].add(j)
                share[j].add(i)
    four = [i for i in range(nc) if cycles[i].length == 4]
    parent = {i: i for i in four}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in four:
        for j in share[i]:
            if j in parent:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    attach: list[set[int]] = [set() for _ in range(nc)]
    for i in range(nc):
        for q in share[i]:
            if q in parent:
                attach[i].add(find(q))
    dep = [set(s) for s in share]
    for i in range(nc):
        for j in range(i + 1, nc):
            if j in dep[i]:
                continue
            if attach[i] & attach[j]:
                dep[i].add(j)
                dep[j].add(i)
    return dep


@dataclass(frozen=True)
class ChargeLedger:
    """Discharging over faces: d(f)-4 initial charge, half-unit transfers."""

    face_degrees: tuple[int, ...]
    initial: tuple[Fraction, ...]
    transfers: tuple[tuple[int, int, Fraction], ...]
    final: tuple[Fraction, ...]

    @property
    def conserved(self) -> bool:
        return sum(self.initial) == sum(self.final)

    @property
    def all_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.final)

    def to_dict(self) -> dict[str, Any]:
        return {
            "face_degrees": list(self.face_degrees),
            "initial": [str(c) for c in self.initial],
            "transfers": [[a, b, str(x)] for a, b, x in self.transfers],
            "final": [str(c) for c in self.final],
            "conserved": self.conserved,
            "all_nonnegative": self.all_nonnegative,
        }


def discharging_check(h: Graph, binding: bool = True) -> dict[str, Any]:
    """Premise test and, when it holds, the face-count conclusion plus the
    discharging ledger for 2-connected inputs with two or more 3-faces."""
    if h.n < 4:
        raise PreconditionError("discharging check needs at least 4 vertices")
    planar_ok, emb = is_planar(h)
    if not planar_ok:
        raise PreconditionError("graph is not planar")
    assert emb is not None
    cycles, truncated = cycles_up_to(h)
    if truncated:
        raise PreconditionError("cycle enumeration truncated; refusing the check")
    dep = dependence_relation(h, cycles)
    three_idx = [i for i, c in enumerate(cycles) if c.length == 3]
    premise_failures = []
    for i, c in enumerate(cycles):
        dep3 = sum(1 for j in dep[i] if cycles[j].length == 3)
        allowed = c.length - 3 if c.length <= 5 else c.length - 2
        if dep3 > allowed:
            premise_failures.append(
                {"cycle": list(c.vertices), "dependent_3_cycles": dep3, "allowed": allowed}
            )
    premise = not premise_failures
    report: dict[str, Any] = {
        "n": h.n,
        "cycles": len(cycles),
        "premise_holds": premise,
        "premise_failures": premise_failures,
    }
    if not premise:
        return report

    omega = len(connected_components(h))
    f_count = _euler_faces(h.n, h.m, omega)
    report["faces"] = f_count
    report["conclusion_holds"] = h.n >= f_count + 2
    if not report["conclusion_holds"]:
        raise TheoremViolation(
            "premise holds but the face bound fails",
            {"graph6": canonical_g6(h), "report": report},
        )

    fs = faces(h, emb)
    n_three_faces = sum(1 for f in fs if f.degree == 3)
    if is_biconnected(h) and n_three_faces >= 2:
        ledger = _build_ledger(fs, cycles, dep)
        report["ledger"] = ledger.to_dict()
        if not ledger.conserved:
            raise TheoremViolation(
                "discharging does not conserve charge", {"graph6": canonical_g6(h)}
            )
        if binding and not ledger.all_nonnegative:
            raise TheoremViolation(
                "negative final charge under the discharging rule",
                {"graph6": canonical_g6(h), "ledger": ledger.to_dict()},
            )
    return report


def _build_ledger(fs: list[FaceWalk], cycles: list[CycleRecord], dep: list[set[int]]) -> ChargeLedger:
    cycle_of_face = []
    by_edges = {c.edges: i for i, c in enumerate(cycles)}
    for f in fs:
        idx = by_edges.get(frozenset(f.edge_set))
        if idx is None:
            raise TheoremViolation("face boundary is not a simple cycle", {})
        cycle_of_face.append(idx)
    initial = [Fraction(f.degree - 4) for f in fs]
    final = list(initial)
    transfers = []
    half = Fraction(1, 2)
    for i, f in enumerate(fs):
        if f.degree != 3:
            continue
        for j, f2 in enumerate(fs):
            if f2.degree < 5:
                continue
            if cycle_of_face[j] in dep[cycle_of_face[i]]:
                transfers.append((j, i, half))
                final[j] -= half
                final[i] += half
    return ChargeLedger(
        tuple(f.degree for f in fs),
        tuple(initial),
        tuple(transfers),
        tuple(final),
    )


def union_face_bound_audit(
    g: Graph,
    decomp: TriangleDecomposition,
    emb: PlanarEmbedding,
    binding: bool = True,
) -> dict[str, Any]:
    """F_{>=4} of the triangle union is at most k - 2 once k >= 4."""
    if decomp.k < 4:
        raise PreconditionError("audit requires at least 4 maximal triangle-subgraphs")
    f_ge4 = union_big_face_count(g, decomp, emb)
    ok = f_ge4 <= decomp.k - 2
    if binding and not ok:
        raise TheoremViolation(
            "face bound on the triangle union failed",
            {"graph6": canonical_g6(g), "f_ge4": f_ge4, "k": decomp.k},
        )
    return {"binding": binding, "pass": ok, "f_ge4": f_ge4, "k": decomp.k, "slack": decomp.k - 2 - f_ge4}
