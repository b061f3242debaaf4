"""Level-bounded extension-property checks.

A *requirement* draws pairwise disjoint demand sets from one side of the
structure: ``a`` (demanded successors of the witness), ``b`` (demanded
predecessors) and ``c`` (demanded non-neighbours).  A structure has the
extension property at level ``t`` in a given mode when every requirement
of total size at most ``t`` has a witness on the opposite side:

* ``TWO_PARTITE`` mode uses ``a``/``b`` only and additionally expects a
  complete underlying graph (a missing adjacency is reported as a
  structural defect);
* ``ORIENTATION`` mode uses all three sets;
* ``BIPARTITE`` mode is undirected: ``a`` demands adjacency, ``c``
  demands non-adjacency, ``b`` stays empty.

The checkers enumerate the requirement space exhaustively (they serve
as oracles, so no sampling) and report every unwitnessed requirement.
Finite structures can only certify a finite level, never genuine
genericity.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .core import (
    PAIR_LR,
    PAIR_NONE,
    PAIR_RL,
    Side,
    TwoPartiteDigraph,
    UndirectedBipartiteGraph,
)
from .errors import InvalidRequirement

from enum import Enum


class Mode(Enum):
    BIPARTITE = "bipartite"
    TWO_PARTITE = "2partite"
    ORIENTATION = "orientation"


@dataclass(frozen=True)
class Requirement:
    """Demand sets on one side; a witness lives on the opposite side."""

    side: Side
    a: frozenset[str]
    b: frozenset[str]
    c: frozenset[str]

    @property
    def total(self) -> int:
        return len(self.a) + len(self.b) + len(self.c)


def requirement(side: Side, a: Iterable[str] = (), b: Iterable[str] = (),
                c: Iterable[str] = ()) -> Requirement:
    req = Requirement(side, frozenset(a), frozenset(b), frozenset(c))
    if req.a & req.b or req.a & req.c or req.b & req.c:
        raise InvalidRequirement("demand sets must be pairwise disjoint")
    return req


def requirement_sort_key(req: Requirement):
    """Normalized ordering: side, then total size, then shape (larger
    ``a`` first), then sorted ids."""
    side_rank = 0 if req.side is Side.LEFT else 1
    return (side_rank, req.total, (len(req.b) + len(req.c), len(req.c)),
            tuple(sorted(req.a)), tuple(sorted(req.b)), tuple(sorted(req.c)))


@dataclass(frozen=True)
class GenericityReport:
    """Outcome of a level check.  ``holds`` is true iff no requirement
    defect was found and (in TWO_PARTITE mode) the underlying graph is
    complete; ``nonadjacent`` carries a witnessing non-adjacent pair when
    completeness fails."""

    mode: Mode
    level: int
    holds: bool
    defects: tuple[Requirement, ...]
    nonadjacent: tuple[str, str] | None = None


def _validate_requirement(structure, req: Requirement, undirected: bool) -> None:
    pool = set(structure.side(req.side))
    for name, s in (("a", req.a), ("b", req.b), ("c", req.c)):
        unknown = s - pool
        if unknown:
            raise InvalidRequirement(
                f"requirement set {name} names vertices not on side "
                f"{req.side.value}: {sorted(unknown)!r}")
    if req.a & req.b or req.a & req.c or req.b & req.c:
        raise InvalidRequirement("demand sets must be pairwise disjoint")
    if undirected and req.b:
        raise InvalidRequirement("undirected requirements cannot demand predecessors")


def brute_witness_scan(structure: TwoPartiteDigraph | UndirectedBipartiteGraph,
                       req: Requirement,
                       exclude: Iterable[str] = ()) -> str | None:
    """First vertex (in stored order) on the side opposite ``req.side``
    that realizes the demands, or None.  On a digraph the demands are
    ``a ⊆ N+(w)``, ``b ⊆ N-(w)``, ``c ⊆ w^perp``; on an undirected graph
    ``a`` demands adjacency and ``c`` non-adjacency.  Vertices listed in
    ``exclude`` are skipped."""
    undirected = isinstance(structure, UndirectedBipartiteGraph)
    _validate_requirement(structure, req, undirected)
    skip = set(exclude)
    pool = structure.side(req.side.opposite)
    eset = set(structure.edges)
    if undirected:
        on_left = set(structure.left)

        def adj(u: str, w: str) -> bool:
            return ((u, w) in eset) if u in on_left else ((w, u) in eset)

        for w in pool:
            if w in skip:
                continue
            if all(adj(u, w) for u in req.a) and not any(adj(u, w) for u in req.c):
                return w
        return None

    for w in pool:
        if w in skip:
            continue
        if (all((w, u) in eset for u in req.a)
                and all((u, w) in eset for u in req.b)
                and all((u, w) not in eset and (w, u) not in eset for u in req.c)):
            return w
    return None


def _splits(total: int, mode: Mode) -> Iterator[tuple[int, int, int]]:
    for na in range(total, -1, -1):
        rest = total - na
        for nb in range(rest, -1, -1):
            nc = rest - nb
            if mode is Mode.BIPARTITE and nb:
                continue
            if mode is Mode.TWO_PARTITE and nc:
                continue
            yield (na, nb, nc)


def iter_requirements(left_pool: Sequence[str], right_pool: Sequence[str],
                      level: int, mode: Mode) -> Iterator[Requirement]:
    """All mode-admissible requirements over the given pools with total
    size at most ``level``, in a fixed deterministic order."""
    for side, pool in ((Side.LEFT, tuple(left_pool)), (Side.RIGHT, tuple(right_pool))):
        for total in range(level + 1):
            for (na, nb, nc) in _splits(total, mode):
                for a_set in combinations(pool, na):
                    for b_set in combinations(pool, nb):
                        if any(v in a_set for v in b_set):
                            continue
                        for c_set in combinations(pool, nc):
                            if any(v in a_set or v in b_set for v in c_set):
                                continue
                            yield Requirement(side, frozenset(a_set),
                                              frozenset(b_set), frozenset(c_set))


# -- witness tables ---------------------------------------------------------
#
# For requirements on a given side, witnesses live on the opposite side.
# For each element index i of the requirement side, three bitmaps over
# witness indices say which witnesses would accept i in a / b / c.

def _digraph_tables(digraph: TwoPartiteDigraph, side: Side):
    mat = digraph.pair_states()
    m, n = len(digraph.left), len(digraph.right)
    if side is Side.LEFT:
        pool, wit = digraph.left, digraph.right
        w_a = [0] * m
        w_b = [0] * m
        w_c = [0] * m
        for i in range(m):
            row = mat[i]
            for j in range(n):
                s = row[j]
                if s == PAIR_RL:      # y_j -> x_i : x_i in N+(y_j)
                    w_a[i] |= 1 << j
                elif s == PAIR_LR:    # x_i -> y_j : x_i in N-(y_j)
                    w_b[i] |= 1 << j
                else:
                    w_c[i] |= 1 << j
    else:
        pool, wit = digraph.right, digraph.left
        w_a = [0] * n
        w_b = [0] * n
        w_c = [0] * n
        for j in range(n):
            for i in range(m):
                s = mat[i][j]
                if s == PAIR_LR:      # x_i -> y_j : y_j in N+(x_i)
                    w_a[j] |= 1 << i
                elif s == PAIR_RL:
                    w_b[j] |= 1 << i
                else:
                    w_c[j] |= 1 << i
    return pool, wit, w_a, w_b, w_c


def _bipartite_tables(graph: UndirectedBipartiteGraph, side: Side):
    eset = set(graph.edges)
    if side is Side.LEFT:
        pool, wit = graph.left, graph.right
        w_a = [0] * len(pool)
        for i, x in enumerate(pool):
            for j, y in enumerate(wit):
                if (x, y) in eset:
                    w_a[i] |= 1 << j
    else:
        pool, wit = graph.right, graph.left
        w_a = [0] * len(pool)
        for j, y in enumerate(pool):
            for i, x in enumerate(wit):
                if (x, y) in eset:
                    w_a[j] |= 1 << i
    full = (1 << len(wit)) - 1
    w_c = [full & ~bits for bits in w_a]
    w_b = [0] * len(pool)  # unused in undirected mode
    return pool, wit, w_a, w_b, w_c


_SLOTS = {
    Mode.TWO_PARTITE: ("a", "b"),
    Mode.BIPARTITE: ("a", "c"),
    Mode.ORIENTATION: ("a", "b", "c"),
}


def _scan_size(slot_masks: list[list[int]], pool_size: int, wit_count: int,
               size: int, limit: int | None) -> list[tuple]:
    """Unwitnessed requirements of exactly ``size`` demands, as tuples of
    (element index, slot index) assignments.

    Each subset of ``size`` elements combines with every per-element slot
    assignment; the requirement fails when the AND of the chosen witness
    bitmaps is empty.  Sizes up to 3 dominate in practice and get
    dedicated loops; larger sizes recurse.
    """
    full = (1 << wit_count) - 1
    k = len(slot_masks)
    slots = range(k)
    defects: list[tuple] = []

    def done() -> bool:
        return limit is not None and len(defects) >= limit

    if size == 0:
        if full == 0:
            defects.append(())
        return defects

    if size == 1:
        for i in range(pool_size):
            for t in slots:
                if slot_masks[t][i] == 0:
                    defects.append(((i, t),))
                    if done():
                        return defects
        return defects

    if size == 2:
        for i in range(pool_size):
            mi = [slot_masks[t][i] for t in slots]
            for j in range(i + 1, pool_size):
                for ti in slots:
                    a = mi[ti]
                    col = slot_masks
                    for tj in slots:
                        if a & col[tj][j] == 0:
                            defects.append(((i, ti), (j, tj)))
                            if done():
                                return defects
        return defects

    if size == 3:
        for i in range(pool_size):
            mi = [slot_masks[t][i] for t in slots]
            for j in range(i + 1, pool_size):
                pair = [(ti, tj, mi[ti] & slot_masks[tj][j])
                        for ti in slots for tj in slots]
                for l in range(j + 1, pool_size):
                    ml = [slot_masks[t][l] for t in slots]
                    for (ti, tj, pm) in pair:
                        for tl in slots:
                            if pm & ml[tl] == 0:
                                defects.append(((i, ti), (j, tj), (l, tl)))
                                if done():
                                    return defects
        return defects

    def rec(start: int, depth: int, mask: int, chosen: tuple) -> None:
        if done():
            return
        if depth == size:
            if mask == 0:
                defects.append(chosen)
            return
        for i in range(start, pool_size):
            for t in slots:
                rec(i + 1, depth + 1, mask & slot_masks[t][i], chosen + ((i, t),))

    rec(0, 0, full, ())
    return defects


def _scan_task(args):
    slot_masks, pool_size, wit_count, size = args
    return _scan_size(slot_masks, pool_size, wit_count, size, None)


def _collect_defects(tables_by_side, level: int, mode: Mode,
                     jobs: int = 1, limit: int | None = None,
                     only_total: int | None = None) -> list[Requirement]:
    slot_names = _SLOTS[mode]
    tasks = []
    for side in (Side.LEFT, Side.RIGHT):
        pool, wit, w_a, w_b, w_c = tables_by_side[side]
        by_name = {"a": w_a, "b": w_b, "c": w_c}
        slot_masks = [by_name[name] for name in slot_names]
        sizes = (only_total,) if only_total is not None else tuple(range(level + 1))
        for size in sizes:
            tasks.append((side, pool, (slot_masks, len(pool), len(wit), size)))

    defects: list[Requirement] = []

    def materialize(side: Side, pool, raw: list[tuple]) -> None:
        for assignment in raw:
            sets: dict[str, list[str]] = {"a": [], "b": [], "c": []}
            for (i, t) in assignment:
                sets[slot_names[t]].append(pool[i])
            defects.append(Requirement(side, frozenset(sets["a"]),
                                       frozenset(sets["b"]), frozenset(sets["c"])))

    if jobs > 1 and limit is None:
        with ProcessPoolExecutor(max_workers=jobs) as pool_exec:
            results = list(pool_exec.map(_scan_task, [t[2] for t in tasks]))
        for (side, pool, _), raw in zip(tasks, results):
            materialize(side, pool, raw)
    else:
        for (side, pool, args) in tasks:
            remaining = None if limit is None else limit - len(defects)
            if remaining is not None and remaining <= 0:
                break
            raw = _scan_size(*args, limit=remaining)
            materialize(side, pool, raw)

    defects.sort(key=requirement_sort_key)
    return defects


def _digraph_tables_by_side(digraph: TwoPartiteDigraph):
    return {side: _digraph_tables(digraph, side) for side in (Side.LEFT, Side.RIGHT)}


def check_generic_2partite(digraph: TwoPartiteDigraph, level: int,
                           jobs: int = 1) -> GenericityReport:
    """Extension property with successor/predecessor demands.  Also
    requires the underlying graph to be complete; a missing adjacency is
    reported via ``nonadjacent`` and makes the verdict fail."""
    nonadj = None
    mat = digraph.pair_states()
    for i, x in enumerate(digraph.left):
        for j, y in enumerate(digraph.right):
            if mat[i][j] == PAIR_NONE:
                nonadj = (x, y)
                break
        if nonadj:
            break
    defects = _collect_defects(_digraph_tables_by_side(digraph), level,
                               Mode.TWO_PARTITE, jobs=jobs)
    holds = not defects and nonadj is None
    return GenericityReport(Mode.TWO_PARTITE, level, holds, tuple(defects), nonadj)


def check_generic_orientation(digraph: TwoPartiteDigraph, level: int,
                              jobs: int = 1) -> GenericityReport:
    """Extension property with successor/predecessor/non-neighbour demands."""
    defects = _collect_defects(_digraph_tables_by_side(digraph), level,
                               Mode.ORIENTATION, jobs=jobs)
    return GenericityReport(Mode.ORIENTATION, level, not defects, tuple(defects))


def check_generic_bipartite(graph: UndirectedBipartiteGraph, level: int,
                            jobs: int = 1) -> GenericityReport:
    """Undirected extension property: adjacency/non-adjacency demands."""
    tables = {side: _bipartite_tables(graph, side) for side in (Side.LEFT, Side.RIGHT)}
    defects = _collect_defects(tables, level, Mode.BIPARTITE, jobs=jobs)
    return GenericityReport(Mode.BIPARTITE, level, not defects, tuple(defects))


def first_defect(structure, level: int, mode: Mode) -> Requirement | None:
    """Cheapest evidence that a level check would fail: the first defect
    in scan order, or None when the level holds.  In TWO_PARTITE mode
    the structural completeness clause is not consulted here."""
    if mode is Mode.BIPARTITE:
        tables = {side: _bipartite_tables(structure, side) for side in (Side.LEFT, Side.RIGHT)}
    else:
        tables = _digraph_tables_by_side(structure)
    defects = _collect_defects(tables, level, mode, limit=1)
    return defects[0] if defects else None


def achieved_level(structure, mode: Mode, max_level: int) -> int:
    """Largest level ``t <= max_level`` at which the extension property
    holds (structural completeness clause included for TWO_PARTITE), or
    -1 when even level 0 fails."""
    if mode is Mode.TWO_PARTITE:
        und = structure.underlying_bipartite()
        if not und.is_complete():
            return -1
    if mode is Mode.BIPARTITE:
        tables = {side: _bipartite_tables(structure, side) for side in (Side.LEFT, Side.RIGHT)}
    else:
        tables = _digraph_tables_by_side(structure)
    for total in range(0, max_level + 1):
        if _collect_defects(tables, max_level, mode, limit=1, only_total=total):
            return total - 1
    return max_level
