from __future__ import annotations

from fractions import Fraction

import pytest

from tricrit.errors import PreconditionError
from tricrit.graph import build_graph
from tricrit.planar import require_embedding
from tricrit.structure import (
    TAG_SHARED_VERTEX,
    TAG_TREE_COMPLETION,
    assert_decomposition_invariants,
    build_hg,
    chain_tip_audit,
    union_face_bound_audit,
    cycles_up_to,
    dependence_relation,
    union_big_face_count,
    discharging_check,
    linked_pair,
    interaction_audit,
    aux_face_audit,
    face_sequence_audit,
    triangle_components,
)


@pytest.fixture(scope="module")
def diamond_ring():
    """Three diamonds glued tip-to-tip into a 9-vertex ring: three maximal
    triangle-subgraphs pairwise sharing three distinct vertices (0, 3, 6)."""
    return build_graph(
        9,
        [
            (0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
            (3, 4), (3, 5), (4, 5), (4, 6), (5, 6),
            (6, 7), (6, 8), (7, 8), (7, 0), (8, 0),
        ],
    )


def test_decomposition_fixtures(fx):
    d = triangle_components(fx["bowtie"])
    assert d.k == 2 and d.t_values == (1, 1) and d.d_map[2] == 2

    d = triangle_components(fx["diamond"])
    assert d.k == 1 and d.t_values == (2,)
    comp = d.components[0]
    assert len(comp.vertices) == comp.t + 2 and len(comp.edges) == 2 * comp.t + 1
    assert_decomposition_invariants(fx["diamond"], d)

    d = triangle_components(fx["fan5"], strict=False)
    assert d.k == 1 and d.t_values == (3,)


def test_strict_mode_rejects_separating(fx):
    with pytest.raises(PreconditionError):
        triangle_components(fx["fan5"])
    with pytest.raises(PreconditionError):
        triangle_components(fx["twok4"])


def test_edge_accounting_invariant(fx, diamond_ring):
    for g in (fx["bowtie"], fx["diamond"], fx["k3"], diamond_ring):
        d = triangle_components(g, strict=False)
        total = sum(d.t_values)
        assert sum(2 * t + 1 for t in d.t_values) == len(d.union_edges)
        assert len(d.union_edges) == d.k + 2 * total


def test_every_triangle_edge_in_exactly_one_component(fx, diamond_ring):
    for g in (fx["bowtie"], fx["oct"], fx["w4"], diamond_ring, fx["twok4"]):
        d = triangle_components(g, strict=False)
        seen: dict = {}
        for i, comp in enumerate(d.components):
            for e in comp.edges:
                assert e not in seen
                seen[e] = i


def test_property_p(fx, diamond_ring):
    d = triangle_components(fx["bowtie"])
    assert linked_pair(d, 0, 1) is False  # only two components exist
    two = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(PreconditionError):
        linked_pair(triangle_components(two), 0, 1)  # no shared vertex

    dr = triangle_components(diamond_ring)
    assert all(linked_pair(dr, i, j) for i in range(3) for j in range(i + 1, 3))

    # third component meeting only one of the pair: no property
    g = build_graph(
        9, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (1, 5), (1, 6), (5, 6)]
    )
    d3 = triangle_components(g, strict=False)
    vsets = [set(c.vertices) for c in d3.components]
    a = vsets.index({0, 1, 2})
    b = vsets.index({2, 3, 4})
    assert linked_pair(d3, a, b) is False


def test_literal_triangle_ring_merges():
    """Three triangles glued in a 3-ring force the fourth inner triangle,
    so the decomposition has a single component, not three."""
    g = build_graph(
        6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (0, 5), (0, 4)]
    )
    d = triangle_components(g, strict=False)
    assert d.k == 1 and d.t_values == (4,)
    assert d.separating  # the inner triangle separates


def test_build_hg_step1(fx, diamond_ring):
    bow = fx["bowtie"]
    aux = build_hg(bow, require_embedding(bow), triangle_components(bow))
    assert aux.edges == ((0, 1, TAG_SHARED_VERTEX),)

    k3 = fx["k3"]
    aux = build_hg(k3, require_embedding(k3), triangle_components(k3))
    assert aux.k == 1 and aux.edges == ()

    dr = triangle_components(diamond_ring)
    aux = build_hg(diamond_ring, require_embedding(diamond_ring), dr)
    assert [tag for _, _, tag in aux.edges] == [TAG_SHARED_VERTEX] * 3
    assert aux.graph().m == 3  # a triangle on the three nodes


def test_build_hg_step2_tree_completion():
    # three triangles sharing one vertex: no linked pairs, two tree edges
    flower = build_graph(
        7, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)]
    )
    d = triangle_components(flower, strict=False)
    aux = build_hg(flower, require_embedding(flower), d)
    assert sorted(tag for _, _, tag in aux.edges) == [TAG_TREE_COMPLETION, TAG_TREE_COMPLETION]
    assert aux.gu_all_forests
    hg = aux.graph()
    assert hg.m == 2 and max(hg.degrees) <= 2  # a path, connected


def test_f_ge4_of_gprime(fx):
    for name, expected in (("bowtie", 1), ("k3", 1), ("diamond", 1)):
        g = fx[name]
        d = triangle_components(g, strict=False)
        assert union_big_face_count(g, d, require_embedding(g)) == expected


def test_thm41(fx, diamond_ring):
    for g in (fx["bowtie"], fx["k3"], diamond_ring):
        d = triangle_components(g, strict=False)
        aux = build_hg(g, require_embedding(g), d)
        rep = aux_face_audit(g, require_embedding(g), d, aux, binding=False)
        assert rep["checks"]["equality"], g.edges
        assert rep["checks"]["simple"] and rep["checks"]["gu_forests"]


def test_cor34(fx):
    for name in ("diamond", "fan5", "fan6"):
        d = triangle_components(fx[name], strict=False)
        assert chain_tip_audit(fx[name], d)["pass"]
    # book graph: triangle adjacency is a clique, chains still audited
    book = build_graph(5, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    d = triangle_components(book, strict=False)
    rep = chain_tip_audit(book, d)
    assert rep["pass"] and rep["pairs_checked"] >= 6


def test_thm36(fx, diamond_ring):
    dr = triangle_components(diamond_ring)
    rep = interaction_audit(diamond_ring, dr, binding=False)
    # pairwise overlaps are single vertices and crossing bounds hold, but
    # the ring union is not uniquely 3-colorable: recorded, not asserted
    assert all("common" not in v for v in rep["violations"])
    assert rep["union_checks"] and not rep["union_checks"][0]["unique"]

    bow = fx["bowtie"]
    rep = interaction_audit(bow, triangle_components(bow), binding=False)
    assert rep["pass"]


def test_thm42(fx, diamond_ring):
    bow = fx["bowtie"]
    d = triangle_components(bow)
    aux = build_hg(bow, require_embedding(bow), d)
    rep = face_sequence_audit(bow, d, aux, binding=False)
    assert rep["pass"] and rep["sequences_checked"] == 0  # vacuous

    dr = triangle_components(diamond_ring)
    auxr = build_hg(diamond_ring, require_embedding(diamond_ring), dr)
    rep = face_sequence_audit(diamond_ring, dr, auxr, binding=False)
    assert rep["union_checks"]  # base 3-face case recorded


def test_cycles_up_to(fx):
    cyc, tr = cycles_up_to(fx["k4"])
    assert len(cyc) == 7 and not tr
    assert sorted(c.length for c in cyc) == [3, 3, 3, 3, 4, 4, 4]
    assert len(cycles_up_to(fx["c5"])[0]) == 1
    assert len(cycles_up_to(fx["bowtie"])[0]) == 2
    cyc, tr = cycles_up_to(fx["k4"], max_count=3)
    assert tr and len(cyc) == 3
    cyc, _ = cycles_up_to(fx["k4"], max_len=3)
    assert len(cyc) == 4


def test_dependence(fx):
    k4 = fx["k4"]
    cyc, _ = cycles_up_to(k4)
    dep = dependence_relation(k4, cyc)
    tri = [i for i, c in enumerate(cyc) if c.length == 3]
    # triangles share edges pairwise in K4: all dependent
    for i in tri:
        assert set(tri) - {i} <= dep[i]
    with pytest.raises(PreconditionError):
        dependence_relation(k4, cyc, truncated=True)

    two = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    cyc2, _ = cycles_up_to(two)
    dep2 = dependence_relation(two, cyc2)
    assert dep2 == [set(), set()]


def test_dependence_through_4_cycle():
    # triangle 012 and triangle 345 joined only through the 4-cycle 1-2-3-4:
    # the intermediate has length four, so the chain counts
    g = build_graph(
        6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (1, 4), (3, 5), (4, 5)]
    )
    cyc, _ = cycles_up_to(g)
    dep = dependence_relation(g, cyc)
    ta = next(i for i, c in enumerate(cyc) if set(c.vertices) == {0, 1, 2})
    tb = next(i for i, c in enumerate(cyc) if set(c.vertices) == {3, 4, 5})
    assert cyc[ta].edges & cyc[tb].edges == frozenset()
    assert tb in dep[ta] and ta in dep[tb]


def test_no_dependence_through_5_cycle():
    # same shape but the bridge is a 5-cycle: the chain is disallowed
    g = build_graph(
        7,
        [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (3, 6), (4, 6)],
    )
    cyc, _ = cycles_up_to(g)
    assert all(c.length != 4 for c in cyc)
    dep = dependence_relation(g, cyc)
    ta = next(i for i, c in enumerate(cyc) if set(c.vertices) == {0, 1, 2})
    tb = next(i for i, c in enumerate(cyc) if set(c.vertices) == {3, 4, 6})
    assert tb not in dep[ta]


def test_discharging_c5(fx):
    rep = discharging_check(fx["c5"])
    assert rep["premise_holds"] and rep["conclusion_holds"]
    assert rep["faces"] == 2
    assert "ledger" not in rep  # no 3-faces, nothing to discharge


def test_discharging_k4_premise_rejected(fx):
    rep = discharging_check(fx["k4"], binding=False)
    assert not rep["premise_holds"]
    assert "conclusion_holds" not in rep
    # and indeed the bound is false for K4: |V| = 4 = |F|
    assert fx["k4"].n < 4 + 2


def test_discharging_ledger_theta_triangles():
    # C8 with chords (0,2) and (4,6): two 3-faces, premise holds, ledger runs
    g = build_graph(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7), (0, 2), (4, 6)],
    )
    rep = discharging_check(g)
    assert rep["premise_holds"] and rep["conclusion_holds"]
    ledger = rep["ledger"]
    assert ledger["conserved"] and ledger["all_nonnegative"]
    # the graph is not 3-connected, so the big faces depend on the chosen
    # embedding; the two 3-faces and the charge total do not
    assert sorted(ledger["face_degrees"]) in ([3, 3, 6, 8], [3, 3, 7, 7])
    total_initial = sum(Fraction(x) for x in ledger["initial"])
    total_final = sum(Fraction(x) for x in ledger["final"])
    assert total_initial == total_final == Fraction(4)
    assert len(ledger["transfers"]) == 4  # each 3-face fed by both big faces


def test_discharging_preconditions(fx):
    with pytest.raises(PreconditionError):
        discharging_check(fx["k3"])
    with pytest.raises(PreconditionError):
        discharging_check(fx["k5"])


def test_cor45_requires_k4(fx):
    d = triangle_components(fx["bowtie"])
    with pytest.raises(PreconditionError):
        union_face_bound_audit(fx["bowtie"], d, require_embedding(fx["bowtie"]))
