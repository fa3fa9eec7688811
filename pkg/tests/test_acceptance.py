"""Acceptance criteria, one test per criterion, pass/fail line printed.

Budgets are pinned here: the n <= 8 oracle sweep must finish inside 5
minutes, the n <= 8 size table inside 10 minutes, and the (10, 18) hunt
inside its declared one-hour budget. The n = 9 row and the (12, 23) /
(14, 28) hunts are opt-in via `-m slow`.
"""

from __future__ import annotations

import time

import pytest

from tricrit.audit import audit_battery
from tricrit.bounds import size_table_assert
from tricrit.criticality import classify, edge_critical_contraction, edge_critical_definitional
from tricrit.coloring import is_uniquely_3_colorable
from tricrit.fixtures import load_fixture
from tricrit.graph6 import parse_graph6
from tricrit.graph import build_graph
from tricrit.search import enumerate_graphs, hunt, pool_config, shard_and_resume, size_table
from tricrit.structure import discharging_check

POOL_BUDGET_S = 300.0
TABLE_BUDGET_S = 600.0
HUNT_BUDGET_S = 3600.0
N9_BUDGET_S = 3600.0


def _announce(name: str, ok: bool, detail: str = "") -> None:
    print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"{name}: {detail}"


@pytest.fixture(scope="module")
def pool8():
    t0 = time.monotonic()
    levels = enumerate_graphs(pool_config(8)).levels
    return levels, time.monotonic() - t0


@pytest.fixture(scope="module")
def table8():
    t0 = time.monotonic()
    rows = size_table(8)
    return rows, time.monotonic() - t0


def test_criterion_1_oracle_equivalence(pool8):
    levels, enum_seconds = pool8
    t0 = time.monotonic()
    unique_count = 0
    for n in levels:
        for g6 in levels[n]:
            g = parse_graph6(g6)
            unique, _ = is_uniquely_3_colorable(g)
            if not unique:
                continue
            unique_count += 1
            d, _ = edge_critical_definitional(g)
            c, _ = edge_critical_contraction(g)
            assert d == c, f"oracle disagreement on {g6}"
    elapsed = enum_seconds + (time.monotonic() - t0)
    _announce(
        "1 oracle equivalence (n<=8)",
        unique_count > 0 and elapsed < POOL_BUDGET_S,
        f"{unique_count} uniquely 3-colorable classes, 100% agreement, {elapsed:.1f}s",
    )


def test_criterion_2_size_table(table8, unpruned6):
    rows, elapsed = table8
    expected = {4: 5, 5: 7, 6: 9}
    ok = all(rows[n].size == v and rows[n].complete for n, v in expected.items())
    for n in (6, 7, 8):
        ok = ok and rows[n].size is not None
        ok = ok and 2 * n - 3 <= rows[n].size <= (5 * n - 12) // 2
    size_table_assert({n: r.to_dict() for n, r in rows.items()})
    # brute-force cross-check at n <= 6: classifying every unlabeled graph
    # yields the same edge-critical sets as the pruned pipeline
    for n in (4, 5, 6):
        brute = {
            g6
            for g6 in unpruned6[n]
            if classify(parse_graph6(g6)).tricritical
        }
        ok = ok and brute == set(rows[n].tricritical_graphs)
    ok = ok and elapsed < TABLE_BUDGET_S
    _announce(
        "2 exact size table",
        ok,
        f"size(4..8) = {[rows[n].size for n in range(4, 9)]}, brute-force "
        f"cross-check at n<=6 agreed, {elapsed:.1f}s",
    )


def test_criterion_3_fixture_classification():
    verdicts = {}
    for name in ("k3", "diamond", "fan5", "fan6"):
        rep = classify(load_fixture(name))
        verdicts[name] = rep.tricritical
    for name in ("oct", "w4"):
        rep = classify(load_fixture(name))
        verdicts[name] = rep.uniquely_3 and not rep.tricritical
    for name in ("c5", "bowtie"):
        rep = classify(load_fixture(name))
        verdicts[name] = not rep.uniquely_3
    _announce("3 fixture classification", all(verdicts.values()), str(verdicts))


def test_criterion_4_theorem_battery(table8):
    rows, _ = table8
    audited = 0
    failures = []
    for n, row in rows.items():
        for g6 in row.tricritical_graphs:
            g = parse_graph6(g6)
            battery = audit_battery(g, binding=False)
            audited += 1
            for check, verdict in battery["checks"].items():
                if isinstance(verdict, dict) and verdict.get("status") == "fail":
                    failures.append((g6, check))
    _announce(
        "4 theorem battery",
        audited > 0 and not failures,
        f"{audited} edge-critical instances audited, failures={failures}",
    )


def test_criterion_5_hunt_10_18():
    t0 = time.monotonic()
    result = hunt(10, 18, strategy="triangulation-carving", budget_seconds=HUNT_BUDGET_S)
    elapsed = time.monotonic() - t0
    ok = len(result.records) >= 1 and elapsed < HUNT_BUDGET_S
    for rec in result.records:
        ok = ok and rec.n == 10 and rec.m == 18 and rec.tricritical
        ok = ok and rec.m <= (5 * 10 - 12) // 2
        ok = ok and rec.audit_digest != "-"
    _announce(
        "5 extremal hunt (10, 18)",
        ok,
        f"{len(result.records)} fully audited witness class(es) in {elapsed:.1f}s "
        f"({result.nodes} nodes)",
    )


def test_criterion_6_discharging():
    # premise-passing instance with a ledger: conservation is exact
    theta = build_graph(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (0, 7), (0, 2), (4, 6)],
    )
    rep = discharging_check(theta)
    ok = rep["premise_holds"] and rep["conclusion_holds"]
    ok = ok and rep["ledger"]["conserved"] and rep["ledger"]["all_nonnegative"]
    # C5: premise holds, conclusion asserted, no 3-faces so no transfers
    rep_c5 = discharging_check(load_fixture("c5"))
    ok = ok and rep_c5["premise_holds"] and rep_c5["conclusion_holds"]
    # K4: the premise must reject (and the bound is indeed false there)
    rep_k4 = discharging_check(load_fixture("k4"), binding=False)
    ok = ok and not rep_k4["premise_holds"] and "conclusion_holds" not in rep_k4
    _announce("6 discharging ledger", ok, "conservation exact, K4 premise rejected")


def test_criterion_7_shard_soundness():
    import json

    unsharded = size_table(6)
    shards = [(4, i, 4) for i in range(4)]
    merged_fwd = shard_and_resume(6, shards)
    merged_rev = shard_and_resume(6, list(reversed(shards)))

    def dump(rows):
        return json.dumps({n: rows[n].to_dict() for n in sorted(rows)}, sort_keys=True)

    ok = dump(merged_fwd) == dump(merged_rev) == dump(unsharded)
    _announce("7 determinism and shards", ok, "sharded merge byte-identical")


@pytest.mark.slow
def test_criterion_2_extension_n9():
    t0 = time.monotonic()
    rows = size_table(9)
    elapsed = time.monotonic() - t0
    row = rows[9]
    ok = row.complete and row.size is not None
    ok = ok and 2 * 9 - 3 <= row.size <= (5 * 9 - 12) // 2
    size_table_assert({n: r.to_dict() for n, r in rows.items()})
    ok = ok and elapsed < N9_BUDGET_S
    _announce(
        "2+ size(9) exhaustive",
        ok,
        f"size(9) = {row.size}, {row.tricritical_count} classes, {elapsed:.1f}s",
    )


@pytest.mark.slow
@pytest.mark.parametrize("n,m", [(12, 23), (14, 28)])
def test_criterion_5_stretch_hunts(n, m):
    # optional long-running targets: a budget exhaustion with zero hits is
    # inconclusive, not a failure; any hit must clear the full audit bar
    result = hunt(n, m, strategy="triangulation-carving", budget_seconds=4 * 3600.0)
    if not result.records and not result.complete:
        pytest.skip(f"budget exhausted with no ({n}, {m}) hits: inconclusive")
    ok = len(result.records) >= 1
    for rec in result.records:
        ok = ok and rec.tricritical and rec.audit_digest != "-"
    _announce(
        f"5+ stretch hunt ({n}, {m})",
        ok,
        f"{len(result.records)} fully audited witness class(es), "
        f"complete={result.complete}",
    )
