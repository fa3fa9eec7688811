"""Isomorph-free exhaustive enumeration, size tables and extremal hunts.

Generation is level-wise orderly: every graph on k+1 vertices is some
graph on k vertices plus one new vertex joined to a subset of it, and
canonical-form deduplication keeps one representative per class. Only
hereditary predicates (planarity, 3-colorability, connectivity) prune
below the target level; target-only facts (edge floor, 2-connectivity,
minimum degree, triangle counts) filter at the end. Every prune flag is
validated against unpruned brute force in the test suite before being
trusted here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Callable, Iterable

import numpy as np

from ._kernels import canonical_order, count_colorings, enumerate_partitions
from .audit import audit_battery
from .canon import canonical_g6
from .criticality import ClassificationReport, classify
from .errors import PreconditionError
from .graph import Graph, build_graph, is_biconnected, triangles
from .graph6 import emit_graph6, parse_graph6
from .planar import is_planar
from .triangulations import triangulations


@dataclass(frozen=True)
class SearchConfig:
    n: int
    m_min: int | None = None
    m_max: int | None = None
    connected: bool = True
    biconnected: bool = True
    min_degree2: bool = True
    min_edges: bool = True
    triangle_bounds: bool = True
    planar_incremental: bool = True
    three_colorable: bool = True
    mode: str = "exhaustive"
    strategy: str = "augmentation"
    budget_seconds: float | None = None
    budget_nodes: int | None = None

    def validate(self) -> None:
        if self.n < 1:
            raise PreconditionError("n must be >= 1")
        hi = 3 * self.n - 6 if self.planar_incremental and self.n >= 3 else self.n * (self.n - 1) // 2
        if self.m_max is not None and self.m_max > hi:
            raise PreconditionError(f"m_max {self.m_max} above feasible {hi}")
        if self.mode not in ("exhaustive", "hunt"):
            raise PreconditionError(f"unknown mode {self.mode!r}")
        if self.strategy not in ("augmentation", "triangulation-carving"):
            raise PreconditionError(f"unknown strategy {self.strategy!r}")


def pool_config(n: int, **overrides: Any) -> SearchConfig:
    """Hereditary pruning only: the full connected planar 3-colorable pool."""
    base = SearchConfig(
        n=n,
        biconnected=False,
        min_degree2=False,
        min_edges=False,
        triangle_bounds=False,
    )
    return replace(base, **overrides)


@dataclass
class EnumerationResult:
    config: SearchConfig
    levels: dict[int, list[str]]
    complete: bool
    nodes: int
    seconds: float
    partial_from: int | None = None

    def level_complete(self, n: int) -> bool:
        if self.partial_from is not None and n >= self.partial_from:
            return False
        return n in self.levels

    def final_graphs(self) -> list[Graph]:
        return [parse_graph6(s) for s in self.levels.get(self.config.n, [])]


class _Budget:
    def __init__(self, seconds: float | None, nodes: int | None):
        self.t0 = time.monotonic()
        self.seconds = seconds
        self.max_nodes = nodes
        self.nodes = 0
        self.exhausted = False

    def spend(self, k: int = 1) -> bool:
        self.nodes += k
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            self.exhausted = True
        elif self.seconds is not None and (self.nodes & 0x3FF) == 0:
            if time.monotonic() - self.t0 > self.seconds:
                self.exhausted = True
        return not self.exhausted

    def elapsed(self) -> float:
        return time.monotonic() - self.t0


def _g6_from_masks_perm(masks: np.ndarray, n: int, perm: np.ndarray) -> str:
    chars = [chr(63 + n)]
    bits = 0
    nbits = 0
    buf = []
    for v in range(1, n):
        pv = perm[v]
        for u in range(v):
            bits = (bits << 1) | ((int(masks[perm[u]]) >> int(pv)) & 1)
            nbits += 1
            if nbits == 6:
                buf.append(chr(63 + bits))
                bits = 0
                nbits = 0
    if nbits:
        buf.append(chr(63 + (bits << (6 - nbits))))
    return chars[0] + "".join(buf)


def _canonical_from_masks(masks: np.ndarray, n: int) -> str:
    return _g6_from_masks_perm(masks, n, canonical_order(masks, n))


def _hereditary_ok(masks: np.ndarray, n: int, m: int, config: SearchConfig) -> bool:
    if config.three_colorable:
        fixed = np.full(n, -1, np.int8)
        out = np.empty((1, n), np.int8)
        found, _ = enumerate_partitions(masks, n, fixed, 0, 1, out)
        if found == 0:
            return False
    if config.planar_incremental and n >= 3:
        if m > 3 * n - 6:
            return False
        g = _graph_from_masks(masks, n)
        ok, _ = is_planar(g)
        if not ok:
            return False
    return True


def _graph_from_masks(masks: np.ndarray, n: int) -> Graph:
    adj = tuple(
        frozenset(v for v in range(n) if (int(masks[u]) >> v) & 1) for u in range(n)
    )
    return Graph(n, adj)


def enumerate_graphs(
    config: SearchConfig,
    shard: tuple[int, int, int] | None = None,
) -> EnumerationResult:
    """Level-wise orderly generation up to config.n.

    levels[k] holds the hereditary survivors at k vertices (sorted
    canonical graph6). With a shard spec (depth, index, total), levels up
    to ``depth`` are full and deeper levels only descend from this
    shard's slice of the depth-level classes.
    """
    config.validate()
    if shard is not None:
        depth, idx, total = shard
        if not (1 <= depth <= config.n and 0 <= idx < total):
            raise PreconditionError(f"bad shard spec {shard}")
    budget = _Budget(config.budget_seconds, config.budget_nodes)
    single = emit_graph6(build_graph(1, []))
    levels: dict[int, list[str]] = {1: [single]}
    complete = True
    current = [single]
    for k in range(1, config.n):
        if shard is not None and k == shard[0]:
            current = current[shard[1] :: shard[2]]
        child_n = k + 1
        seen: set[str] = set()
        kept: list[str] = []
        rejected: set[str] = set()
        m_cap = None
        if config.m_max is not None:
            slack = (config.n - child_n) if config.connected else 0
            m_cap = config.m_max - slack
        if config.planar_incremental and child_n >= 3:
            cap2 = 3 * child_n - 6
            m_cap = cap2 if m_cap is None else min(m_cap, cap2)
        min_needed = None
        if config.m_min is not None:
            # later vertices can add at most k, k+1, ... edges each
            room = sum(range(child_n, config.n))
            min_needed = config.m_min - room
        stop = False
        for parent_g6 in current:
            if stop:
                break
            pg = parse_graph6(parent_g6)
            pm = pg.masks
            parent_m = pg.m
            start = 1 if config.connected else 0
            for subset in range(start, 1 << k):
                if not budget.spend():
                    stop = True
                    break
                child_m = parent_m + bin(subset).count("1")
                if m_cap is not None and child_m > m_cap:
                    continue
                if min_needed is not None and child_m < min_needed:
                    continue
                cm = np.empty(child_n, np.int64)
                cm[:k] = pm
                cm[k] = subset
                for v in range(k):
                    if (subset >> v) & 1:
                        cm[v] |= 1 << k
                key = _canonical_from_masks(cm, child_n)
                if key in seen or key in rejected:
                    continue
                if _hereditary_ok(cm, child_n, child_m, config):
                    seen.add(key)
                    kept.append(key)
                else:
                    rejected.add(key)
        kept.sort()
        levels[child_n] = kept
        current = kept
        if stop:
            complete = False
            partial_from = child_n
            break
    else:
        partial_from = None
    return EnumerationResult(
        config, levels, complete, budget.nodes, budget.elapsed(), partial_from
    )


def final_filter(g: Graph, config: SearchConfig) -> bool:
    """Target-level predicates (non-hereditary facts about candidates)."""
    n, m = g.n, g.m
    if config.m_min is not None and m < config.m_min:
        return False
    if config.m_max is not None and m > config.m_max:
        return False
    if config.min_edges and m < 2 * n - 3:
        return False
    if config.min_degree2 and n >= 3 and g.min_degree() < 2:
        return False
    if config.biconnected and n >= 3 and not is_biconnected(g):
        return False
    if config.triangle_bounds:
        t = len(triangles(g))
        if n >= 5 and t < 3:
            return False
        if n == 4 and t < 2:
            return False
    return True


@dataclass(frozen=True)
class ResultRecord:
    graph6: str
    n: int
    m: int
    flags: str
    audit_digest: str
    shard: str

    def to_line(self) -> str:
        return "\t".join(
            [self.graph6, str(self.n), str(self.m), self.flags, self.audit_digest, self.shard]
        )

    @staticmethod
    def from_line(line: str) -> "ResultRecord":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 6:
            raise PreconditionError(f"malformed cache line: {line!r}")
        return ResultRecord(parts[0], int(parts[1]), int(parts[2]), parts[3], parts[4], parts[5])

    @property
    def tricritical(self) -> bool:
        return self.flags[5] == "1"

    @property
    def uniquely_3(self) -> bool:
        return self.flags[2] == "1"


def _flags(rep: ClassificationReport) -> str:
    def ch(x: bool | None) -> str:
        return "-" if x is None else ("1" if x else "0")

    return "".join(
        ch(x)
        for x in (
            rep.planar,
            rep.chromatic_3,
            rep.uniquely_3,
            rep.edge_critical_definitional,
            rep.edge_critical_contraction,
            rep.tricritical,
        )
    )


class ResultCache:
    """Append-only line cache of ResultRecords, deduplicated on load."""

    def __init__(self, path: str | Path | None):
        self.path = Path(path) if path is not None else None
        self.records: dict[str, ResultRecord] = {}
        if self.path is not None and self.path.exists():
            for line in self.path.read_text().splitlines():
                if line.strip():
                    rec = ResultRecord.from_line(line)
                    self.records[rec.graph6] = rec

    def get(self, g6: str) -> ResultRecord | None:
        return self.records.get(g6)

    def add(self, rec: ResultRecord) -> bool:
        if rec.graph6 in self.records:
            return False
        self.records[rec.graph6] = rec
        if self.path is not None:
            with self.path.open("a") as fh:
                fh.write(rec.to_line() + "\n")
        return True


def classify_candidate(
    g: Graph, cache: ResultCache | None = None, shard_id: str = "0/1"
) -> ResultRecord:
    """Classify (and fully audit tricritical hits), reusing cached records."""
    g6 = canonical_g6(g)
    if cache is not None:
        hit = cache.get(g6)
        if hit is not None:
            return hit
    rep = classify(g)
    digest = "-"
    if rep.tricritical:
        digest = audit_battery(g, classification=rep, binding=True)["digest"]
    rec = ResultRecord(g6, g.n, g.m, _flags(rep), digest, shard_id)
    if cache is not None:
        cache.add(rec)
    return rec


@dataclass
class SizeRow:
    n: int
    size: int | None
    witnesses: list[str]
    tricritical_count: int
    tricritical_graphs: list[str]
    complete: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "size": self.size,
            "witnesses": self.witnesses,
            "tricritical_count": self.tricritical_count,
            "complete": self.complete,
        }


def size_table(
    max_n: int,
    min_n: int = 3,
    cache: ResultCache | None = None,
    config: SearchConfig | None = None,
    shard: tuple[int, int, int] | None = None,
    progress: Callable[[str], None] | None = None,
) -> dict[int, SizeRow]:
    """Exact size(n) rows for min_n..max_n from one exhaustive run."""
    cfg = config if config is not None else SearchConfig(n=max_n)
    cfg = replace(cfg, n=max_n)
    result = enumerate_graphs(cfg, shard=shard)
    rows: dict[int, SizeRow] = {}
    for n in range(min_n, max_n + 1):
        level_cfg = replace(cfg, n=n)
        complete = result.level_complete(n)
        found: list[ResultRecord] = []
        for g6 in result.levels.get(n, []):
            g = parse_graph6(g6)
            if not final_filter(g, level_cfg):
                continue
            rec = classify_candidate(g, cache=cache, shard_id=_shard_id(shard))
            if rec.tricritical:
                found.append(rec)
        if progress is not None:
            progress(f"n={n}: {len(found)} edge-critical uniquely 3-colorable classes")
        size = max((r.m for r in found), default=None)
        witnesses = sorted(r.graph6 for r in found if r.m == size) if size is not None else []
        rows[n] = SizeRow(
            n=n,
            size=size,
            witnesses=witnesses,
            tricritical_count=len(found),
            tricritical_graphs=sorted(r.graph6 for r in found),
            complete=complete,
        )
    return rows


def _shard_id(shard: tuple[int, int, int] | None) -> str:
    if shard is None:
        return "0/1"
    return f"{shard[1]}/{shard[2]}@{shard[0]}"


def compute_size(n: int, cache: ResultCache | None = None, **kwargs: Any) -> SizeRow:
    return size_table(n, min_n=n, cache=cache, **kwargs)[n]


def hunt_feasible_m(n: int, m_target: int) -> None:
    cap = (5 * n - 12) // 2 if n >= 6 else 3 * n - 6
    if m_target > cap:
        raise PreconditionError(
            f"m_target {m_target} exceeds the proven ceiling {cap} for n={n}"
        )


@dataclass
class HuntResult:
    records: list[ResultRecord]
    complete: bool
    nodes: int
    seconds: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "hits": [r.to_line() for r in self.records],
            "complete": self.complete,
            "nodes": self.nodes,
            "seconds": self.seconds,
        }


def hunt(
    n: int,
    m_target: int,
    strategy: str = "triangulation-carving",
    budget_seconds: float | None = None,
    budget_nodes: int | None = None,
    cache: ResultCache | None = None,
    equality_only: bool = True,
) -> HuntResult:
    """Budgeted search for tricritical witnesses with exactly m_target edges.

    Augmentation restricts the exhaustive generator to the target size;
    carving deletes q-subsets of edges from every planar triangulation,
    trying face-disjoint subsets first (those keep the 3-face count at
    its theoretical maximum, where the known extremal graphs live).
    Budget exhaustion with zero hits is inconclusive, not nonexistence.
    """
    hunt_feasible_m(n, m_target)
    if strategy == "augmentation":
        cfg = SearchConfig(
            n=n,
            m_min=m_target,
            m_max=m_target,
            mode="hunt",
            budget_seconds=budget_seconds,
            budget_nodes=budget_nodes,
        )
        res = enumerate_graphs(cfg)
        records = []
        for g in res.final_graphs():
            if not final_filter(g, cfg):
                continue
            rec = classify_candidate(g, cache=cache, shard_id="hunt")
            if rec.tricritical:
                records.append(rec)
        records.sort(key=lambda r: r.graph6)
        return HuntResult(records, res.complete, res.nodes, res.seconds)
    if strategy != "triangulation-carving":
        raise PreconditionError(f"unknown strategy {strategy!r}")
    return _hunt_carving(
        n, m_target, budget_seconds, budget_nodes, cache, equality_only
    )


def _hunt_carving(
    n: int,
    m_target: int,
    budget_seconds: float | None,
    budget_nodes: int | None,
    cache: ResultCache | None,
    equality_only: bool,
) -> HuntResult:
    from .planar import faces, require_embedding

    q = (3 * n - 6) - m_target
    if q < 0:
        raise PreconditionError("m_target above the triangulation count")
    budget = _Budget(budget_seconds, budget_nodes)
    hits: dict[str, ResultRecord] = {}
    complete = True
    for tri_graph in triangulations(n):
        if budget.exhausted:
            complete = False
            break
        emb = require_embedding(tri_graph)
        fs = faces(tri_graph, emb)
        edge_list = list(tri_graph.edges)
        edge_idx = {e: i for i, e in enumerate(edge_list)}
        conflict: list[set[int]] = [set() for _ in edge_list]
        for f in fs:
            es = [edge_idx[e] for e in f.edge_set]
            for a in es:
                for b in es:
                    if a != b:
                        conflict[a].add(b)
        base_masks = tri_graph.masks.copy()

        def try_subset(subset: list[int]) -> None:
            masks = base_masks.copy()
            for ei in subset:
                u, v = edge_list[ei]
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
            for v in range(n):
                if int(masks[v]).bit_count() < 2:
                    return
            if not _connected_masks(masks, n):
                return
            fixed = np.full(n, -1, np.int8)
            out = np.empty((2, n), np.int8)
            found, _ = enumerate_partitions(masks, n, fixed, 0, 2, out)
            if found != 1:
                return
            if count_colorings(masks, n, 2) > 0:
                return
            g = _graph_from_masks(masks, n)
            g6 = canonical_g6(g)
            if g6 in hits:
                return
            rec = classify_candidate(g, cache=cache, shard_id="hunt")
            if rec.tricritical:
                hits[g6] = rec

        def carve(start: int, chosen: list[int], independent: bool) -> bool:
            if budget.exhausted:
                return False
            if len(chosen) == q:
                if not budget.spend():
                    return False
                try_subset(chosen)
                return True
            for ei in range(start, len(edge_list)):
                if independent and any(ei in conflict[c] for c in chosen):
                    continue
                if not carve(ei + 1, chosen + [ei], independent):
                    return False
            return True

        if not carve(0, [], True):
            complete = False
            break
        if not equality_only:
            if not carve(0, [], False):
                complete = False
                break
    records = sorted(hits.values(), key=lambda r: r.graph6)
    return HuntResult(records, complete, budget.nodes, budget.elapsed())


def _connected_masks(masks: np.ndarray, n: int) -> bool:
    if n == 0:
        return True
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        mu = int(masks[u])
        while mu:
            low = mu & (-mu)
            v = low.bit_length() - 1
            mu ^= low
            if not (seen >> v) & 1:
                seen |= 1 << v
                stack.append(v)
    return seen == (1 << n) - 1


def validate_shards(shards: Iterable[tuple[int, int, int]]) -> None:
    """Shard specs must share depth/total and have distinct indices."""
    shards = list(shards)
    if not shards:
        raise PreconditionError("no shards given")
    depth = {s[0] for s in shards}
    total = {s[2] for s in shards}
    if len(depth) != 1 or len(total) != 1:
        raise PreconditionError("shards disagree on depth or total")
    idxs = [s[1] for s in shards]
    if len(set(idxs)) != len(idxs):
        raise PreconditionError(f"overlapping shard indices {idxs}")


def merge_records(batches: Iterable[Iterable[ResultRecord]]) -> list[ResultRecord]:
    """Order-independent dedup union, sorted by canonical string."""
    merged: dict[str, ResultRecord] = {}
    for batch in batches:
        for rec in batch:
            merged.setdefault(rec.graph6, rec)
    return [merged[k] for k in sorted(merged)]


def _shard_worker(args: tuple[int, int, tuple[int, int, int]]) -> dict[int, dict[str, Any]]:
    max_n, min_n, shard = args
    rows = size_table(max_n, min_n=min_n, shard=shard)
    return {n: {"tricritical_graphs": r.tricritical_graphs, "complete": r.complete} for n, r in rows.items()}


def _classify_shard_worker(args: tuple[SearchConfig, tuple[int, int, int]]) -> tuple[list[str], bool]:
    config, shard = args
    res = enumerate_graphs(config, shard=shard)
    lines = []
    for g in res.final_graphs():
        if final_filter(g, config):
            lines.append(classify_candidate(g, shard_id=_shard_id(shard)).to_line())
    return lines, res.complete


def classify_all(
    config: SearchConfig, cache: ResultCache | None = None, jobs: int = 1
) -> tuple[list[ResultRecord], bool]:
    """Enumerate, final-filter and classify at config.n; optionally across
    a process pool of disjoint shards."""
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        depth = min(4, max(2, config.n - 1))
        shards = [(depth, i, jobs) for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_shard_worker, [(config, s) for s in shards]))
        records = merge_records(
            [[ResultRecord.from_line(line) for line in lines] for lines, _ in results]
        )
        if cache is not None:
            for rec in records:
                cache.add(rec)
        return records, all(done for _, done in results)
    res = enumerate_graphs(config)
    records = []
    for g in res.final_graphs():
        if final_filter(g, config):
            records.append(classify_candidate(g, cache=cache))
    return merge_records([records]), res.complete


def shard_and_resume(
    max_n: int,
    shards: list[tuple[int, int, int]],
    min_n: int = 3,
    cache: ResultCache | None = None,
    config: SearchConfig | None = None,
    jobs: int = 1,
) -> dict[int, SizeRow]:
    """Run each shard's subtree and merge into one table.

    The union of disjoint shards equals the unsharded run; merging is
    idempotent and order-independent. With jobs > 1 the shards run in a
    process pool (workers share nothing; the merge happens here).
    """
    validate_shards(shards)
    if jobs > 1 and config is None:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(jobs, len(shards))) as pool:
            tables = list(pool.map(_shard_worker, [(max_n, min_n, s) for s in shards]))
    else:
        tables = [
            _rows_as_dicts(size_table(max_n, min_n=min_n, cache=cache, config=config, shard=s))
            for s in shards
        ]
    out: dict[int, SizeRow] = {}
    for n in range(min_n, max_n + 1):
        complete = all(t[n]["complete"] for t in tables)
        merged_hits: dict[str, int] = {}
        for t in tables:
            for g6 in t[n]["tricritical_graphs"]:
                merged_hits[g6] = parse_graph6(g6).m
        size = max(merged_hits.values(), default=None)
        witnesses = sorted(g for g, m in merged_hits.items() if m == size) if size is not None else []
        out[n] = SizeRow(
            n=n,
            size=size,
            witnesses=witnesses,
            tricritical_count=len(merged_hits),
            tricritical_graphs=sorted(merged_hits),
            complete=complete,
        )
    return out


def _rows_as_dicts(rows: dict[int, SizeRow]) -> dict[int, dict[str, Any]]:
    return {n: {"tricritical_graphs": r.tricritical_graphs, "complete": r.complete} for n, r in rows.items()}
