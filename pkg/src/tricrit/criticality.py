"""Membership oracles for edge-critical uniquely 3-colorable planar graphs.

Two independent routes decide edge-criticality: the definitional one
(deleting any edge destroys unique 3-colorability) and the contraction
one (every contraction stays 3-colorable). They are provably equivalent
on uniquely 3-colorable graphs, so the classifier runs both and treats
disagreement as a fatal toolkit bug.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .canon import canonical_g6
from .coloring import (
    ColorPartition,
    chromatic_value,
    is_uniquely_3_colorable,
    proper_3_partitions,
)
from .errors import PreconditionError, TheoremViolation
from .graph import Graph, contract_edge, delete_edge, induced_subgraph, triangles
from .planar import PlanarEmbedding, faces, face_of_directed_edge, is_planar, separating_3_cycles, triangle_sides

Edge = tuple[int, int]


@dataclass(frozen=True)
class ClassificationReport:
    graph6: str
    n: int
    m: int
    planar: bool
    chromatic_3: bool
    uniquely_3: bool
    edge_critical_definitional: bool | None
    edge_critical_contraction: bool | None
    tricritical: bool
    unique_partition: list[list[int]] | None
    witnesses: list[dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "planar": self.planar,
            "chromatic_3": self.chromatic_3,
            "uniquely_3": self.uniquely_3,
            "edge_critical_definitional": self.edge_critical_definitional,
            "edge_critical_contraction": self.edge_critical_contraction,
            "tricritical": self.tricritical,
            "unique_partition": self.unique_partition,
            "witnesses": self.witnesses,
        }


def _require_uniquely_3(g: Graph) -> ColorPartition:
    unique, part = is_uniquely_3_colorable(g)
    if not unique:
        raise PreconditionError("graph is not uniquely 3-colorable")
    assert part is not None
    return part


def edge_critical_definitional(g: Graph) -> tuple[bool, list[dict[str, Any]]]:
    """True iff deleting any single edge destroys unique 3-colorability."""
    _require_uniquely_3(g)
    witnesses = []
    for e in g.edges:
        h = delete_edge(g, e)
        still_unique, part = is_uniquely_3_colorable(h)
        if still_unique:
            assert part is not None
            witnesses.append(
                {
                    "edge": list(e),
                    "reason": "deletion_still_uniquely_3_colorable",
                    "partition": part.to_sorted_lists(),
                }
            )
    return not witnesses, witnesses


def edge_critical_contraction(g: Graph) -> tuple[bool, list[dict[str, Any]]]:
    """True iff G/e is 3-colorable for every edge e."""
    _require_uniquely_3(g)
    witnesses = []
    for e in g.edges:
        h = contract_edge(g, e)
        if not proper_3_partitions(h, 1):
            witnesses.append(
                {"edge": list(e), "reason": "contraction_not_3_colorable"}
            )
    return not witnesses, witnesses


def classify(g: Graph) -> ClassificationReport:
    """Full membership classification with the Theorem 3.1 cross-check."""
    g6 = canonical_g6(g)
    planar, _ = is_planar(g)
    three_col = bool(proper_3_partitions(g, 1))
    two_col = chromatic_value(g, 2) > 0
    chromatic_3 = three_col and not two_col
    unique, part = is_uniquely_3_colorable(g)
    crit_def: bool | None = None
    crit_con: bool | None = None
    witnesses: list[dict[str, Any]] = []
    if unique:
        crit_def, w_def = edge_critical_definitional(g)
        crit_con, w_con = edge_critical_contraction(g)
        witnesses = w_def + w_con
        if crit_def != crit_con:
            raise TheoremViolation(
                "criticality oracles disagree (contraction criterion violated)",
                {
                    "graph6": g6,
                    "definitional": crit_def,
                    "contraction": crit_con,
                    "witnesses": witnesses,
                },
            )
    return ClassificationReport(
        graph6=g6,
        n=g.n,
        m=g.m,
        planar=planar,
        chromatic_3=chromatic_3,
        uniquely_3=unique,
        edge_critical_definitional=crit_def,
        edge_critical_contraction=crit_con,
        tricritical=bool(planar and unique and crit_def),
        unique_partition=part.to_sorted_lists() if part is not None else None,
        witnesses=witnesses,
    )


def min_edge_check(g: Graph) -> dict[str, Any]:
    """Audit the minimum-size bound m >= 2n-3 and its tightness corollary.

    A failure here falsifies a theorem, so it raises instead of reporting.
    """
    _require_uniquely_3(g)
    floor = 2 * g.n - 3
    if g.m < floor:
        raise TheoremViolation(
            "uniquely 3-colorable graph below the 2n-3 edge floor",
            {"graph6": canonical_g6(g), "n": g.n, "m": g.m},
        )
    report: dict[str, Any] = {"n": g.n, "m": g.m, "floor": floor, "tight": g.m == floor}
    if g.m == floor:
        critical, wit = edge_critical_definitional(g)
        if not critical:
            raise TheoremViolation(
                "minimum-size uniquely 3-colorable graph is not edge-critical",
                {"graph6": canonical_g6(g), "witnesses": wit},
            )
        report["edge_critical_confirmed"] = True
    return report


def degree_parity_audit(g: Graph, emb: PlanarEmbedding) -> dict[str, Any]:
    """Check vertex-degree parity at vertices surrounded by 3-faces plus one 4-face.

    Intended domain: edge-critical uniquely 3-colorable planar graphs.
    Vacuous (empty report) when no vertex qualifies.
    """
    fs = faces(g, emb)
    at = face_of_directed_edge(g, emb, fs)
    qualifying = []
    violations = []
    for v in range(g.n):
        degs = sorted(fs[at[(v, w)]].degree for w in emb.rotation[v])
        if not degs:
            continue
        if degs.count(4) == 1 and all(d in (3, 4) for d in degs):
            qualifying.append(v)
            if g.degree(v) % 2 != 0:
                violations.append(v)
    return {"qualifying_vertices": qualifying, "violations": violations}


def triangle_count_audit(g: Graph) -> dict[str, Any]:
    """Lower bounds on triangle count for uniquely 3-colorable planar graphs."""
    tri = len(triangles(g))
    required = 0
    if g.n >= 5:
        required = 3
    elif g.n >= 4:
        required = 2
    if tri < required:
        raise TheoremViolation(
            "triangle count below the proven lower bound",
            {"graph6": canonical_g6(g), "n": g.n, "triangles": tri, "required": required},
        )
    return {"n": g.n, "triangles": tri, "required": required}


def separating_sides_audit(g: Graph, emb: PlanarEmbedding) -> dict[str, Any]:
    """For each separating triangle, both sides plus the triangle must again
    be edge-critical uniquely 3-colorable. Intended domain: graphs already
    classified tricritical."""
    results = []
    for tri in separating_3_cycles(g):
        side_a, side_b = triangle_sides(g, emb, tri)
        for side in (side_a, side_b):
            sub = induced_subgraph(g, set(tri) | set(side))
            rep = classify(sub)
            results.append(
                {"triangle": list(tri), "side_size": len(side), "tricritical": rep.tricritical}
            )
            if not rep.tricritical:
                raise TheoremViolation(
                    "separating-triangle side is not edge-critical uniquely 3-colorable",
                    {"graph6": canonical_g6(g), "triangle": list(tri), "side": side},
                )
    return {"separating_triangles": results}
