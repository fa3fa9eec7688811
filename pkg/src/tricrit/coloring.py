"""Proper 3-coloring machinery on top of the backtracking kernels.

Colorings are handled as partitions of the vertex set into independent
classes, so "the same coloring up to permutation of the colors" is a
single value. Labeled colorings exist only inside chromatic_value, which
serves as the independent oracle for the partition enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from ._kernels import count_colorings, enumerate_partitions
from .canon import canonical_g6
from .errors import PreconditionError, TheoremViolation
from .graph import Graph, connected_components, contract_edge, delete_edge, induced_subgraph

# direct backtracking below this vertex count, deletion-contraction above
_BACKTRACK_LIMIT = 20
_EXHAUSTIVE_FREE_LIMIT = 16


@dataclass(frozen=True)
class ColorPartition:
    """Partition into <= 3 independent classes, ordered by least element."""

    classes: tuple[frozenset[int], ...]

    @staticmethod
    def from_classes(classes: Iterable[Iterable[int]]) -> "ColorPartition":
        cleaned = [frozenset(c) for c in classes if len(frozenset(c))]
        cleaned.sort(key=min)
        return ColorPartition(tuple(cleaned))

    def to_sorted_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def __len__(self) -> int:
        return len(self.classes)


def check_proper_partition(g: Graph, p: ColorPartition) -> None:
    """Raise unless p is a proper partition of V(g) into independent classes."""
    seen: set[int] = set()
    for cls in p.classes:
        for v in cls:
            if not 0 <= v < g.n:
                raise PreconditionError(f"vertex {v} out of range")
            if v in seen:
                raise PreconditionError(f"vertex {v} in two classes")
            seen.add(v)
        for u, v in g.edges:
            if u in cls and v in cls:
                raise PreconditionError(f"class {sorted(cls)} contains edge ({u},{v})")
    if len(seen) != g.n:
        raise PreconditionError("partition does not cover the vertex set")
    if len(p.classes) > 3:
        raise PreconditionError("more than 3 classes")


def _backtrack_order(g: Graph) -> list[int]:
    # fail-fast on dense cores; deterministic
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _position_masks(g: Graph, order: list[int]) -> np.ndarray:
    pos = {v: i for i, v in enumerate(order)}
    masks = np.zeros(g.n, dtype=np.int64)
    for u, v in g.edges:
        masks[pos[u]] |= 1 << pos[v]
        masks[pos[v]] |= 1 << pos[u]
    return masks


def _partitions_raw(
    g: Graph, cap: int, fixed_by_vertex: dict[int, int] | None = None
) -> tuple[list[ColorPartition], bool]:
    if g.n == 0:
        return [ColorPartition(())], False
    order = _backtrack_order(g)
    masks = _position_masks(g, order)
    fixed = np.full(g.n, -1, dtype=np.int8)
    n_fixed_classes = 0
    if fixed_by_vertex:
        # relabel the pinned classes by first use along the backtrack order
        relabel: dict[int, int] = {}
        for i, v in enumerate(order):
            if v in fixed_by_vertex:
                c = fixed_by_vertex[v]
                if c not in relabel:
                    relabel[c] = len(relabel)
                fixed[i] = relabel[c]
        n_fixed_classes = len(relabel)
        if n_fixed_classes > 3:
            return [], False
    out = np.full((cap, g.n), -1, dtype=np.int8)
    found, hit_cap = enumerate_partitions(
        masks, g.n, fixed, n_fixed_classes, cap, out
    )
    parts = []
    for i in range(found):
        classes: list[list[int]] = [[], [], []]
        for j in range(g.n):
            classes[out[i, j]].append(order[j])
        parts.append(ColorPartition.from_classes(classes))
    return parts, bool(hit_cap)


def _resolve_cap(g: Graph, cap: int | None, free: int) -> int:
    if cap is not None:
        if cap < 1:
            raise PreconditionError("cap must be >= 1")
        return cap
    if free > _EXHAUSTIVE_FREE_LIMIT:
        raise PreconditionError(
            f"exhaustive partition enumeration needs an explicit cap for {free} free vertices"
        )
    return 3 ** max(free - 1, 0) + 1


def proper_3_partitions(g: Graph, cap: int | None = None) -> list[ColorPartition]:
    """Distinct partitions induced by proper 3-colorings, at most cap.

    With cap=None, enumerates all of them (small graphs only).
    """
    parts, _ = _partitions_raw(g, _resolve_cap(g, cap, g.n))
    return parts


def chromatic_value(g: Graph, k: int) -> int:
    """Exact number of proper labeled k-colorings, k <= 4."""
    if not 1 <= k <= 4:
        raise PreconditionError("k must be in 1..4")
    if g.n < _BACKTRACK_LIMIT:
        order = _backtrack_order(g)
        return int(count_colorings(_position_masks(g, order), g.n, k))
    memo: dict[str, int] = {}
    return _chromatic_dc(g, k, memo)


def _chromatic_dc(g: Graph, k: int, memo: dict[str, int]) -> int:
    """Deletion-contraction with memoization on canonical forms."""
    if g.m == 0:
        return k**g.n
    if g.n < _BACKTRACK_LIMIT:
        order = _backtrack_order(g)
        return int(count_colorings(_position_masks(g, order), g.n, k))
    key = canonical_g6(g)
    if key in memo:
        return memo[key]
    e = g.edges[0]
    val = _chromatic_dc(delete_edge(g, e), k, memo) - _chromatic_dc(
        contract_edge(g, e), k, memo
    )
    memo[key] = val
    return val


def is_uniquely_3_colorable(g: Graph) -> tuple[bool, ColorPartition | None]:
    """Decide unique 3-colorability; returns the partition when unique.

    The partition route (exactly one proper partition, chromatic number
    3) is cross-checked against the chromatic-value criterion
    P(G,3) = 6 and P(G,2) = 0; disagreement means a kernel bug.
    """
    parts, _ = _partitions_raw(g, 2)
    two_colorings = chromatic_value(g, 2)
    unique = len(parts) == 1 and two_colorings == 0 and len(parts[0]) == 3
    cv3 = chromatic_value(g, 3)
    if unique != (cv3 == 6 and two_colorings == 0):
        raise TheoremViolation(
            "partition enumerator and chromatic value disagree",
            {"graph6": canonical_g6(g), "partitions": len(parts), "cv3": cv3},
        )
    return (True, parts[0]) if unique else (False, None)


def classes_union_connected(g: Graph, p: ColorPartition) -> bool:
    """Whether every union of two color classes induces a connected graph."""
    check_proper_partition(g, p)
    classes = p.classes
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            sub = induced_subgraph(g, classes[i] | classes[j])
            if len(connected_components(sub)) > 1:
                return False
    return True


def extend_precoloring(
    g: Graph, assignment: Mapping[int, int], cap: int | None = None
) -> list[ColorPartition]:
    """All proper completions of a partial class assignment, as partitions.

    Color symmetry is broken only over the unassigned structure, so each
    completion partition appears exactly once.
    """
    for v in assignment:
        if not 0 <= v < g.n:
            raise PreconditionError(f"assigned vertex {v} out of range")
    for u, v in g.edges:
        if u in assignment and v in assignment and assignment[u] == assignment[v]:
            raise PreconditionError(
                f"assignment is improper: edge ({u},{v}) in one class"
            )
    free = g.n - len(assignment)
    parts, _ = _partitions_raw(g, _resolve_cap(g, cap, free), dict(assignment))
    return parts
