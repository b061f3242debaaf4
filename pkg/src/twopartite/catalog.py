"""Constructors for the structure classes and their finite approximants.

The fixed families (complete, empty, matching, complement of matching,
and the matching/complement pair) are built exactly.  The generic
families only exist as infinite structures, so their builders produce
finite *approximants*: randomized structures verified to satisfy the
extension property at a requested level, retried with fresh draws from
the seeded stream until verification passes or the attempt budget runs
out.  ``witness_closure`` is the deterministic alternative: it grows a
structure by adding explicit witnesses for every requirement over the
original vertex set.

A rough calibration for the randomized builders (probability 1/2 per
direction, 1/3 per pair state): a level-1 check needs side sizes around
16-32, level 2 around 48 (two-state modes) or 128 (three-state), level 3
around 160 (two-state).  Requested levels beyond what the side size can
carry fail with ApproximantNotFound; the builder never silently lowers
the level.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .core import Side, TwoPartiteDigraph, build
from .errors import ApproximantNotFound, CapExceeded, InvalidSpec, PairSizeTooSmall
from .genericity import (
    Mode,
    Requirement,
    achieved_level,
    brute_witness_scan,
    first_defect,
    iter_requirements,
    requirement_sort_key,
)

MAX_BUILD_ATTEMPTS = 32


class Direction(Enum):
    LEFT_TO_RIGHT = "left_to_right"
    RIGHT_TO_LEFT = "right_to_left"

    @property
    def reversed(self) -> "Direction":
        if self is Direction.LEFT_TO_RIGHT:
            return Direction.RIGHT_TO_LEFT
        return Direction.LEFT_TO_RIGHT


def _ids(prefix: str, count: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(count))


def _oriented(x: str, y: str, direction: Direction) -> tuple[str, str]:
    return (x, y) if direction is Direction.LEFT_TO_RIGHT else (y, x)


def complete_bipartite_digraph(m: int, n: int,
                               direction: Direction = Direction.LEFT_TO_RIGHT) -> TwoPartiteDigraph:
    """All m*n edges present, all in one direction."""
    left, right = _ids("x", m), _ids("y", n)
    return build(left, right, [_oriented(x, y, direction) for x in left for y in right])


def empty_digraph(m: int, n: int) -> TwoPartiteDigraph:
    """No edges at all."""
    return build(_ids("x", m), _ids("y", n), [])


def matching_digraph(n: int, direction: Direction = Direction.LEFT_TO_RIGHT) -> TwoPartiteDigraph:
    """A perfect matching x_i ~ y_i, oriented one way."""
    left, right = _ids("x", n), _ids("y", n)
    return build(left, right, [_oriented(left[i], right[i], direction) for i in range(n)])


def complement_matching_digraph(n: int,
                                direction: Direction = Direction.LEFT_TO_RIGHT) -> TwoPartiteDigraph:
    """All cross pairs except the matching x_i ~ y_i; n(n-1) edges."""
    if n < 1:
        raise InvalidSpec("complement of a matching needs side size >= 1")
    left, right = _ids("x", n), _ids("y", n)
    edges = [_oriented(left[i], right[j], direction)
             for i in range(n) for j in range(n) if i != j]
    return build(left, right, edges)


def matching_complement_pair(size: int,
                             matching_direction: Direction = Direction.LEFT_TO_RIGHT,
                             ) -> TwoPartiteDigraph:
    """Equal sides; the matching x_i ~ y_i oriented one way and its
    bipartite complement oriented the other, so the underlying graph is
    complete bipartite.  Needs size >= 2."""
    if size < 2:
        raise PairSizeTooSmall(f"need size >= 2, got {size}")
    left, right = _ids("x", size), _ids("y", size)
    edges = [_oriented(left[i], right[i], matching_direction) for i in range(size)]
    rev = matching_direction.reversed
    edges += [_oriented(left[i], right[j], rev)
              for i in range(size) for j in range(size) if i != j]
    return build(left, right, edges)


@dataclass(frozen=True)
class ApproximantSpec:
    """Parameters for the finite-stage generic builders."""

    side_size: int
    level: int
    seed: int
    growth_cap: int = 64

    def __post_init__(self):
        if self.side_size < 1:
            raise InvalidSpec("side_size must be positive")
        if self.level < 0:
            raise InvalidSpec("level must be nonnegative")
        if self.level > self.side_size:
            raise InvalidSpec(
                f"level {self.level} exceeds side_size {self.side_size}: a demand "
                "can never be larger than the opposite side")
        if self.growth_cap < 1:
            raise InvalidSpec("growth_cap must be positive")


def _randomized_build(spec: ApproximantSpec, mode: Mode, draw, verify):
    """Shared retry loop: ``draw(rng)`` produces a candidate, ``verify``
    returns a passing report or None.  All attempts consume one seeded
    stream, so identical specs reproduce identical outputs."""
    rng = random.Random(spec.seed)
    best = -1
    for _ in range(MAX_BUILD_ATTEMPTS):
        candidate = draw(rng)
        if verify(candidate):
            return candidate
        best = max(best, achieved_level(
            candidate.underlying_bipartite() if mode is Mode.BIPARTITE else candidate,
            mode, spec.level))
    raise ApproximantNotFound(
        f"no attempt out of {MAX_BUILD_ATTEMPTS} reached level {spec.level} "
        f"at side size {spec.side_size} (best level achieved: {best})", best)


def generic_bipartite_approx(spec: ApproximantSpec,
                             direction: Direction = Direction.LEFT_TO_RIGHT) -> TwoPartiteDigraph:
    """Random bipartite digraph (each cross pair adjacent with probability
    1/2, all edges oriented ``direction``) whose underlying graph passes
    the undirected extension check at ``spec.level``."""
    n = spec.side_size
    left, right = _ids("x", n), _ids("y", n)

    def draw(rng: random.Random) -> TwoPartiteDigraph:
        edges = [_oriented(x, y, direction)
                 for x in left for y in right if rng.getrandbits(1)]
        return build(left, right, edges)

    def verify(candidate: TwoPartiteDigraph) -> bool:
        graph = candidate.underlying_bipartite()
        return first_defect(graph, spec.level, Mode.BIPARTITE) is None

    return _randomized_build(spec, Mode.BIPARTITE, draw, verify)


def generic_2partite_approx(spec: ApproximantSpec) -> TwoPartiteDigraph:
    """Complete underlying graph, each pair independently oriented with
    probability 1/2, verified at ``spec.level``."""
    n = spec.side_size
    left, right = _ids("x", n), _ids("y", n)

    def draw(rng: random.Random) -> TwoPartiteDigraph:
        edges = [(x, y) if rng.getrandbits(1) else (y, x)
                 for x in left for y in right]
        return build(left, right, edges)

    def verify(candidate: TwoPartiteDigraph) -> bool:
        return first_defect(candidate, spec.level, Mode.TWO_PARTITE) is None

    return _randomized_build(spec, Mode.TWO_PARTITE, draw, verify)


def generic_orientation_approx(spec: ApproximantSpec) -> TwoPartiteDigraph:
    """Each cross pair independently one of {->, <-, nonadjacent} with
    probability 1/3 each, verified at ``spec.level``."""
    n = spec.side_size
    left, right = _ids("x", n), _ids("y", n)

    def draw(rng: random.Random) -> TwoPartiteDigraph:
        edges = []
        for x in left:
            for y in right:
                state = rng.randrange(3)
                if state == 1:
                    edges.append((x, y))
                elif state == 2:
                    edges.append((y, x))
        return build(left, right, edges)

    def verify(candidate: TwoPartiteDigraph) -> bool:
        return first_defect(candidate, spec.level, Mode.ORIENTATION) is None

    return _randomized_build(spec, Mode.ORIENTATION, draw, verify)


def _fresh_names(taken: set[str], count: int) -> list[str]:
    names = []
    i = 1
    while len(names) < count:
        name = f"w{i}"
        if name not in taken:
            names.append(name)
            taken.add(name)
        i += 1
    return names


def witness_closure(digraph: TwoPartiteDigraph, mode: Mode, level: int,
                    cap: int) -> TwoPartiteDigraph:
    """Deterministically add witness vertices until every requirement of
    total size <= ``level`` over the *original* vertex set has a witness.

    The original vertices and their induced structure are untouched; the
    construction only adds.  In TWO_PARTITE mode a new witness is made
    adjacent to the whole opposite side, with pairs the requirement does
    not constrain oriented left-to-right.  In the other modes
    unconstrained pairs stay non-adjacent.  Raises CapExceeded (carrying
    the partial structure and the remaining defects) when more than
    ``cap`` vertices would be needed.
    """
    if mode is Mode.BIPARTITE and not digraph.is_bipartite_digraph():
        raise InvalidSpec("bipartite-mode closure needs a one-direction input")
    bip_direction = Direction.LEFT_TO_RIGHT
    if digraph.edges and digraph.edges[0][0] not in set(digraph.left):
        bip_direction = Direction.RIGHT_TO_LEFT

    orig_left, orig_right = digraph.left, digraph.right
    current = digraph
    added = 0
    while True:
        target = current.underlying_bipartite() if mode is Mode.BIPARTITE else current
        defects = [req for req in iter_requirements(orig_left, orig_right, level, mode)
                   if brute_witness_scan(target, req) is None]
        defects.sort(key=requirement_sort_key)
        if not defects:
            return current
        if added >= cap:
            raise CapExceeded(
                f"closure needs more than {cap} added vertices "
                f"({len(defects)} requirements still unwitnessed)",
                current, defects)
        batch = defects[:cap - added]
        current = _add_witnesses(current, batch, mode, bip_direction)
        added += len(batch)


def _add_witnesses(current: TwoPartiteDigraph, batch: list[Requirement],
                   mode: Mode, bip_direction: Direction) -> TwoPartiteDigraph:
    left = list(current.left)
    right = list(current.right)
    edges = list(current.edges)
    taken = set(left) | set(right)
    names = _fresh_names(taken, len(batch))
    for req, w in zip(batch, names):
        # the witness lives on the side opposite the requirement sets
        witness_on_left = req.side is Side.RIGHT
        if mode is Mode.BIPARTITE:
            # a demands adjacency, c non-adjacency; new edges follow the
            # input's single direction, everything else stays non-adjacent
            for u in sorted(req.a):
                x, y = (w, u) if witness_on_left else (u, w)
                edges.append(_oriented(x, y, bip_direction))
        else:
            for u in sorted(req.a):    # a ⊆ N+(w)
                edges.append((w, u))
            for u in sorted(req.b):    # b ⊆ N-(w)
                edges.append((u, w))
            if mode is Mode.TWO_PARTITE:
                # keep the underlying graph complete: unconstrained pairs
                # get the left-to-right default
                constrained = req.a | req.b | req.c
                for u in (right if witness_on_left else left):
                    if u in constrained:
                        continue
                    edges.append((w, u) if witness_on_left else (u, w))
        if witness_on_left:
            left.append(w)
        else:
            right.append(w)
    return build(left, right, edges)
