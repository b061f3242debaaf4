"""Tour of the catalog.

Five exact families (complete, empty, matching, complement of a
matching, and the matching/complement pair whose underlying graph is
complete) plus randomized approximants of the three generic classes.
"""

from twopartite import (
    ApproximantSpec,
    Direction,
    complement_matching_digraph,
    complete_bipartite_digraph,
    empty_digraph,
    generic_2partite_approx,
    generic_orientation_approx,
    matching_complement_pair,
    matching_digraph,
)

R2L = Direction.RIGHT_TO_LEFT

for name, d in [
    ("complete(2,3)", complete_bipartite_digraph(2, 3)),
    ("empty(2,2)", empty_digraph(2, 2)),
    ("matching(3)", matching_digraph(3)),
    ("matching(3) reversed", matching_digraph(3, R2L)),
    ("complement_matching(3)", complement_matching_digraph(3)),
    ("matching_complement_pair(3)", matching_complement_pair(3)),
]:
    profiles = sorted(set(d.degree_profile().values()))
    print(f"{name:24} edges={len(d.edges):2}  degree profiles={profiles}")

print()
print("matching_complement_pair(4): the matching runs one way, its complement the other;")
print("every cross pair is adjacent, so all perps are empty:")
m4 = matching_complement_pair(4)
on_left = set(m4.left)
lr = [e for e in m4.edges if e[0] in on_left]
rl = [e for e in m4.edges if e[0] not in on_left]
print(f"  left-to-right edges (the matching): {lr}")
print(f"  right-to-left edge count (the complement): {len(rl)}")

print()
print("randomized approximants are seeded and verified: same spec, same output")
spec = ApproximantSpec(side_size=16, level=1, seed=7)
a = generic_2partite_approx(spec)
b = generic_2partite_approx(spec)
print(f"  generic_2partite_approx(16, level=1, seed=7): "
      f"{len(a.edges)} edges, reproducible={a == b}")

o = generic_orientation_approx(ApproximantSpec(32, 1, seed=3))
profile = o.degree_profile()["x1"]
print(f"  generic_orientation_approx(32, level=1, seed=3): x1 profile {profile}"
      f" (all three pair states appear)")
