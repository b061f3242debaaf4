"""Side-respecting isomorphism, canonical forms, and homogeneity.

All maps here preserve the two sides setwise: left vertices go to left
vertices and right to right.  A structure is homogeneous when every
side-respecting isomorphism between induced substructures extends to a
side-preserving automorphism of the whole structure.

The search kernel is a backtracking completion over vertex assignments,
pruned by an iteratively refined colour invariant built from the
(outdegree, indegree, perp-degree) triple.  Colours only prune; every
candidate assignment is still verified pairwise, so the kernel is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Mapping

from .core import (
    PAIR_LR,
    PAIR_NONE,
    PAIR_RL,
    Side,
    TwoPartiteDigraph,
    UndirectedBipartiteGraph,
    orient_all,
)
from .errors import AutGroupTooLarge, InvalidPartialMap

DEFAULT_AUT_CAP = 10 ** 6

CanonicalForm = bytes


@dataclass(frozen=True)
class PartialMap:
    """A finite set of (source, target) vertex associations, stored
    sorted by source id.  Injectivity is intrinsic; side and structure
    preservation are relative to structures and checked by
    :func:`is_valid_partial_iso`."""

    pairs: tuple[tuple[str, str], ...]

    @staticmethod
    def from_dict(mapping: Mapping[str, str]) -> "PartialMap":
        items = tuple(sorted(mapping.items()))
        targets = [t for (_, t) in items]
        if len(set(targets)) != len(targets):
            raise InvalidPartialMap("map is not injective")
        return PartialMap(items)

    def as_dict(self) -> dict[str, str]:
        return dict(self.pairs)

    def sources(self) -> tuple[str, ...]:
        return tuple(s for (s, _) in self.pairs)

    def targets(self) -> tuple[str, ...]:
        return tuple(t for (_, t) in self.pairs)

    def apply(self, v: str) -> str:
        for (s, t) in self.pairs:
            if s == v:
                return t
        raise KeyError(v)

    def inverse(self) -> "PartialMap":
        return PartialMap.from_dict({t: s for (s, t) in self.pairs})

    def compose(self, then: "PartialMap") -> "PartialMap":
        """The map v -> then(self(v)), defined where both legs are."""
        out = {}
        other = then.as_dict()
        for (s, t) in self.pairs:
            if t in other:
                out[s] = other[t]
        return PartialMap.from_dict(out)

    def extended(self, source: str, target: str) -> "PartialMap":
        d = self.as_dict()
        d[source] = target
        return PartialMap.from_dict(d)

    def is_identity(self) -> bool:
        return all(s == t for (s, t) in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class HomogeneityVerdict:
    """Outcome of a homogeneity decision.  ``counterexample`` is present
    exactly when ``holds`` is false: a valid partial isomorphism that
    extends to no side-preserving automorphism."""

    holds: bool
    counterexample: PartialMap | None = None


class _View:
    """Indexed access to a digraph: id->index maps plus the pair-state
    matrix (rows over left, columns over right)."""

    __slots__ = ("left", "right", "lidx", "ridx", "mat")

    def __init__(self, digraph: TwoPartiteDigraph):
        self.left = digraph.left
        self.right = digraph.right
        self.lidx = {v: i for i, v in enumerate(digraph.left)}
        self.ridx = {v: j for j, v in enumerate(digraph.right)}
        self.mat = digraph.pair_states()


def _flip(state: int) -> int:
    # pair state seen from the right vertex: out and in exchange roles
    if state == PAIR_LR:
        return PAIR_RL
    if state == PAIR_RL:
        return PAIR_LR
    return PAIR_NONE


def _rank(values: dict[str, object]) -> dict[str, int]:
    # rank by sorted distinct value; isomorphic structures get equal ranks
    order = {sig: r for r, sig in enumerate(sorted(set(values.values())))}
    return {v: order[sig] for v, sig in values.items()}


def _refined_colors(view: _View, rounds: int = 2) -> dict[str, tuple]:
    """Colour invariant: degree triple refined ``rounds`` times by the
    multiset of (pair state, neighbour colour) over the opposite side."""
    m, n = len(view.left), len(view.right)
    mat = view.mat
    col: dict[str, tuple] = {}
    for i, x in enumerate(view.left):
        out = sum(1 for j in range(n) if mat[i][j] == PAIR_LR)
        inn = sum(1 for j in range(n) if mat[i][j] == PAIR_RL)
        col[x] = (0, out, inn, n - out - inn)
    for j, y in enumerate(view.right):
        out = sum(1 for i in range(m) if mat[i][j] == PAIR_RL)
        inn = sum(1 for i in range(m) if mat[i][j] == PAIR_LR)
        col[y] = (1, out, inn, m - out - inn)
    for _ in range(rounds):
        sigs: dict[str, tuple] = {}
        for i, x in enumerate(view.left):
            sigs[x] = (col[x], tuple(sorted(
                (mat[i][j], col[y]) for j, y in enumerate(view.right))))
        for j, y in enumerate(view.right):
            sigs[y] = (col[y], tuple(sorted(
                (_flip(mat[i][j]), col[x]) for i, x in enumerate(view.left))))
        # compress per round so colour values stay small; ranking by the
        # sorted distinct signature keeps equality stable across
        # isomorphic structures (same multiset -> same ranks)
        left_rank = _rank({x: sigs[x] for x in view.left})
        right_rank = _rank({y: sigs[y] for y in view.right})
        refined = {x: (col[x], left_rank[x]) for x in view.left}
        refined.update({y: (col[y], right_rank[y]) for y in view.right})
        col = refined
    return col


def _class_orderings(ids: tuple[str, ...], col: dict[str, tuple]) -> Iterator[tuple[str, ...]]:
    """All orderings of ``ids`` that sort colour classes by colour value,
    permuting freely inside each class."""
    groups: dict[tuple, list[str]] = {}
    for v in ids:
        groups.setdefault(col[v], []).append(v)
    keys = sorted(groups)
    per_class = [list(permutations(groups[k])) for k in keys]
    for combo in product(*per_class):
        yield tuple(v for perm in combo for v in perm)


def canonical_form(digraph: TwoPartiteDigraph) -> CanonicalForm:
    """A byte string identifying the side-preserving isomorphism class.

    Two structures have equal canonical form iff :func:`are_isomorphic`
    finds a map between them.  Computed as the lexicographic minimum of
    the pair-state matrix over all colour-respecting vertex orderings
    of each side; sides are never mixed.
    """
    view = _View(digraph)
    col = _refined_colors(view)
    mat = view.mat
    lidx, ridx = view.lidx, view.ridx
    best: bytes | None = None
    right_orders = list(_class_orderings(digraph.right, col))
    for lorder in _class_orderings(digraph.left, col):
        rows = [mat[lidx[u]] for u in lorder]
        for rorder in right_orders:
            cols = [ridx[w] for w in rorder]
            enc = bytes(row[j] for row in rows for j in cols)
            if best is None or enc < best:
                best = enc
    header = len(digraph.left).to_bytes(4, "big") + len(digraph.right).to_bytes(4, "big")
    return b"TP1" + header + (best or b"")


def _search_maps(view1: _View, view2: _View, initial: dict[str, str],
                 limit: int | None, col1: dict[str, tuple] | None = None,
                 col2: dict[str, tuple] | None = None) -> Iterator[dict[str, str]]:
    """Backtracking enumeration of total side-preserving bijections
    view1 -> view2 that preserve all pair states and extend ``initial``.
    ``initial`` must already be consistent.  Yields at most ``limit``
    maps when limit is not None.  Precomputed colour tables can be passed
    in when the caller issues many searches over the same views."""
    if len(view1.left) != len(view2.left) or len(view1.right) != len(view2.right):
        return
    if col1 is None:
        col1 = _refined_colors(view1)
    if col2 is None:
        col2 = col1 if view2 is view1 else _refined_colors(view2)
    if sorted(col1[v] for v in view1.left) != sorted(col2[v] for v in view2.left):
        return
    if sorted(col1[v] for v in view1.right) != sorted(col2[v] for v in view2.right):
        return

    assigned = dict(initial)
    used = set(initial.values())
    for s, t in initial.items():
        if col1[s] != col2[t]:
            return  # colours are isomorphism invariants; no completion exists

    todo = [v for v in (*view1.left, *view1.right) if v not in assigned]
    on_left1 = set(view1.left)
    # (partner in view1, partner image in view2) lists for consistency checks
    yielded = 0

    mat1, mat2 = view1.mat, view2.mat
    l1, r1 = view1.lidx, view1.ridx
    l2, r2 = view2.lidx, view2.ridx

    def consistent(v: str, w: str) -> bool:
        if v in on_left1:
            vi, wi = l1[v], l2[w]
            for (u, x) in assigned.items():
                if u not in on_left1:
                    if mat1[vi][r1[u]] != mat2[wi][r2[x]]:
                        return False
        else:
            vj, wj = r1[v], r2[w]
            for (u, x) in assigned.items():
                if u in on_left1:
                    if mat1[l1[u]][vj] != mat2[l2[x]][wj]:
                        return False
        return True

    def candidates(v: str) -> Iterator[str]:
        pool = view2.left if v in on_left1 else view2.right
        cv = col1[v]
        for w in pool:
            if w in used or col2[w] != cv:
                continue
            if consistent(v, w):
                yield w

    def rec(pos: int) -> Iterator[dict[str, str]]:
        nonlocal yielded
        if limit is not None and yielded >= limit:
            return
        if pos == len(todo):
            yielded += 1
            yield dict(assigned)
            return
        v = todo[pos]
        for w in candidates(v):
            assigned[v] = w
            used.add(w)
            yield from rec(pos + 1)
            del assigned[v]
            used.discard(w)
            if limit is not None and yielded >= limit:
                return

    yield from rec(0)


def are_isomorphic(d1: TwoPartiteDigraph, d2: TwoPartiteDigraph) -> PartialMap | None:
    """A total side-preserving isomorphism, or None."""
    for mapping in _search_maps(_View(d1), _View(d2), {}, limit=1):
        return PartialMap.from_dict(mapping)
    return None


def automorphisms(digraph: TwoPartiteDigraph,
                  cap: int = DEFAULT_AUT_CAP) -> list[PartialMap]:
    """All side-preserving automorphisms, identity included.

    Raises AutGroupTooLarge when more than ``cap`` maps exist.
    """
    view = _View(digraph)
    out = []
    for mapping in _search_maps(view, view, {}, limit=cap + 1):
        out.append(PartialMap.from_dict(mapping))
        if len(out) > cap:
            raise AutGroupTooLarge(cap)
    return out


def is_valid_partial_iso(d1: TwoPartiteDigraph, d2: TwoPartiteDigraph,
                         pmap: PartialMap) -> bool:
    """True when ``pmap`` is an injective, side-preserving isomorphism
    between the substructures induced on its domain and codomain."""
    srcs = pmap.sources()
    tgts = pmap.targets()
    if len(set(srcs)) != len(srcs) or len(set(tgts)) != len(tgts):
        return False
    known1_l, known1_r = set(d1.left), set(d1.right)
    known2_l, known2_r = set(d2.left), set(d2.right)
    for (s, t) in pmap.pairs:
        if s in known1_l:
            if t not in known2_l:
                return False
        elif s in known1_r:
            if t not in known2_r:
                return False
        else:
            return False
    e1, e2 = set(d1.edges), set(d2.edges)
    d = pmap.as_dict()
    for u in srcs:
        for v in srcs:
            if u == v:
                continue
            if ((u, v) in e1) != ((d[u], d[v]) in e2):
                return False
    return True


def extends_to_automorphism(digraph: TwoPartiteDigraph, pmap: PartialMap) -> bool:
    """Whether some side-preserving automorphism restricts to ``pmap``.

    Decided by backtracking completion of the map, not by enumerating
    the automorphism group.
    """
    if not is_valid_partial_iso(digraph, digraph, pmap):
        raise InvalidPartialMap("not a valid partial isomorphism of the structure")
    view = _View(digraph)
    for _ in _search_maps(view, view, pmap.as_dict(), limit=1):
        return True
    return False


def is_homogeneous(digraph: TwoPartiteDigraph, k: int | None = None, *,
                   orbit_threshold: int = 8,
                   aut_cap: int = DEFAULT_AUT_CAP) -> HomogeneityVerdict:
    """Exact homogeneity up to domain size ``k`` (default: all sizes).

    Every isomorphism between induced substructures on at most ``k``
    vertices must extend to a side-preserving automorphism.  Domains are
    enumerated smallest first, so a failing verdict carries a smallest
    counterexample.  Above ``orbit_threshold`` vertices, domain subsets
    are reduced to orbit representatives under the automorphism group
    (which may raise AutGroupTooLarge); below it the search is unreduced.
    """
    vertices = digraph.vertices()
    if k is None:
        k = len(vertices)
    view = _View(digraph)
    on_left = set(digraph.left)
    mat = view.mat
    lidx, ridx = view.lidx, view.ridx

    col = _refined_colors(view)
    use_orbits = len(vertices) > orbit_threshold
    auts: list[dict[str, str]] | None = None
    if use_orbits:
        auts = []
        for mapping in _search_maps(view, view, {}, limit=aut_cap + 1,
                                    col1=col, col2=col):
            auts.append(mapping)
            if len(auts) > aut_cap:
                raise AutGroupTooLarge(aut_cap)

    # No colour filtering here: a map between induced substructures only
    # has to preserve the induced structure, and maps that break ambient
    # invariants are precisely the counterexample candidates.  Colours
    # prune the extension search alone.
    def images(source: tuple[str, ...], pool: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
        return permutations(pool, len(source))

    seen_orbits: set[frozenset[str]] = set()
    for size in range(1, k + 1):
        for subset in combinations(vertices, size):
            if use_orbits:
                # the first subset of each automorphism orbit stands for all
                if frozenset(subset) in seen_orbits:
                    continue
                for aut in auts:
                    seen_orbits.add(frozenset(aut[v] for v in subset))
            s_left = tuple(v for v in subset if v in on_left)
            s_right = tuple(v for v in subset if v not in on_left)
            for img_l in images(s_left, digraph.left):
                for img_r in images(s_right, digraph.right):
                    if img_l == s_left and img_r == s_right:
                        continue  # identity always extends
                    ok = True
                    for u, iu in zip(s_left, img_l):
                        for w, iw in zip(s_right, img_r):
                            if mat[lidx[u]][ridx[w]] != mat[lidx[iu]][ridx[iw]]:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        continue
                    phi = dict(zip(s_left, img_l))
                    phi.update(zip(s_right, img_r))
                    extends = False
                    for _ in _search_maps(view, view, phi, limit=1,
                                          col1=col, col2=col):
                        extends = True
                        break
                    if not extends:
                        return HomogeneityVerdict(False, PartialMap.from_dict(phi))
    return HomogeneityVerdict(True, None)


def is_homogeneous_bipartite(graph: UndirectedBipartiteGraph,
                             k: int | None = None, **kwargs) -> HomogeneityVerdict:
    """Homogeneity of an undirected bipartite graph, decided by the same
    kernel on its canonical one-way orientation.  Orienting every edge
    left-to-right is information-preserving, so side-respecting partial
    isomorphisms and automorphisms of the two structures coincide."""
    return is_homogeneous(orient_all(graph), k, **kwargs)
