from __future__ import annotations

import pytest

from tricrit.errors import PreconditionError
from tricrit.graph import build_graph, connected_components
from tricrit.planar import (
    dual,
    faces,
    is_planar,
    require_embedding,
    separating_3_cycles,
    triangle_sides,
)
from tricrit.graph import triangles


def test_planarity_verdicts(fx):
    assert is_planar(fx["k4"])[0]
    assert not is_planar(fx["k5"])[0]
    assert not is_planar(fx["k33"])[0]
    assert is_planar(fx["oct"])[0]


def test_euler_holds_on_fixtures(fx):
    for name, g in fx.items():
        ok, emb = is_planar(g)
        if not ok:
            continue
        fs = faces(g, emb)
        omega = len(connected_components(g))
        assert g.n - g.m + len(fs) == 2 * omega, name
        assert sum(f.degree for f in fs) == 2 * g.m, name


def test_face_degree_multisets(fx):
    k4 = sorted(f.degree for f in faces(fx["k4"], require_embedding(fx["k4"])))
    assert k4 == [3, 3, 3, 3]
    c5 = sorted(f.degree for f in faces(fx["c5"], require_embedding(fx["c5"])))
    assert c5 == [5, 5]
    fan5 = sorted(f.degree for f in faces(fx["fan5"], require_embedding(fx["fan5"])))
    assert fan5 == [3, 3, 3, 5]


def test_bridge_counts_twice():
    # triangle with a pendant edge: outer walk covers the bridge twice
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    fs = faces(g, require_embedding(g))
    assert sorted(f.degree for f in fs) == [3, 5]


def test_dual_shapes(fx):
    d5 = dual(fx["c5"], require_embedding(fx["c5"]))
    assert d5.num_faces == 2 and len(d5.links) == 5
    assert all((a, b) == (0, 1) for a, b, _ in d5.links)

    dk4 = dual(fx["k4"], require_embedding(fx["k4"]))
    assert dk4.num_faces == 4
    assert all(dk4.node_degree(i) == 3 for i in range(4))
    assert len({(a, b) for a, b, _ in dk4.links}) == 6  # simple here: K4 self-dual

    dfan = dual(fx["fan5"], require_embedding(fx["fan5"]))
    assert dfan.num_faces == 4
    degs = sorted(dfan.node_degree(i) for i in range(4))
    assert degs == [3, 3, 3, 5]
    # node degrees match face degrees
    assert sorted(dfan.face_degrees) == degs


def test_separating_3_cycles(fx):
    assert separating_3_cycles(fx["twok4"]) == [(0, 1, 2)]
    assert separating_3_cycles(fx["bowtie"]) == []
    assert separating_3_cycles(fx["k4"]) == []
    assert separating_3_cycles(fx["fan5"]) == [(0, 2, 3)]


def test_no_separating_implies_triangles_facial(fx, pool7):
    from tricrit.graph6 import parse_graph6

    checked = 0
    pool = list(fx.values()) + [
        parse_graph6(s) for n in (5, 6) for s in pool7.get(n, [])
    ]
    for g in pool:
        ok, emb = is_planar(g)
        if not ok or separating_3_cycles(g):
            continue
        face_sets = {f.vertex_set for f in faces(g, emb) if f.degree == 3}
        for tri in triangles(g):
            assert frozenset(tri) in face_sets
            checked += 1
    assert checked > 50


def test_triangle_sides(fx):
    g = fx["twok4"]
    sides = triangle_sides(g, require_embedding(g), (0, 1, 2))
    assert sorted(map(tuple, sides)) == [(3,), (4,)]
    # a non-separating triangle puts everything on one side
    sides = triangle_sides(g, require_embedding(g), (0, 1, 3))
    assert sorted(len(s) for s in sides) == [0, 2]
    # a non-triangle triple errors
    with pytest.raises(PreconditionError):
        triangle_sides(fx["c5"], require_embedding(fx["c5"]), (0, 1, 2))
