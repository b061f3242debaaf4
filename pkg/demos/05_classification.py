"""The classification decision tree.

Exact mode decides homogeneity outright, then names the class; finite
homogeneous structures are always a one-direction structure (labelled by
the structural kind of the underlying graph plus its orientation) or a
matching/complement pair.  Profile mode skips the homogeneity search and
instead consults the extension checkers at a caller-chosen level, which
is what the infinite generic classes' approximants need.
"""

from twopartite import (
    ApproximantSpec,
    build,
    classify_exact,
    classify_profile,
    complement_matching_digraph,
    empty_digraph,
    generic_2partite_approx,
    generic_bipartite_approx,
    generic_orientation_approx,
    matching_complement_pair,
    matching_digraph,
)


def show(label):
    parts = [label.case.value]
    if label.subkind:
        parts.append(label.subkind.value)
    if label.direction:
        parts.append(label.direction.value)
    if label.pair_size:
        parts.append(f"size={label.pair_size}")
    if label.reason:
        parts.append(f"reason: {label.reason}")
    return "  ".join(parts)


print("exact classification of finite structures:")
for name, d in [
    ("matching(2)", matching_digraph(2)),
    ("complement_matching(4)", complement_matching_digraph(4)),
    ("empty(2,2)", empty_digraph(2, 2)),
    ("matching_complement_pair(3)", matching_complement_pair(3)),
    ("edge plus isolated vertex", build(["x1", "x2"], ["y1"], [("x1", "y1")])),
]:
    print(f"  {name:26} -> {show(classify_exact(d))}")

print()
print("profile classification of level-verified approximants:")
two = generic_2partite_approx(ApproximantSpec(48, 2, seed=5))
ori = generic_orientation_approx(ApproximantSpec(128, 2, seed=5))
bip = generic_bipartite_approx(ApproximantSpec(32, 1, seed=5))
for name, d, level in [
    ("generic 2-partite approximant (side 48)", two, 2),
    ("generic orientation approximant (side 128)", ori, 2),
    ("generic bipartite approximant (side 32)", bip, 1),
]:
    print(f"  {name} at level {level}:")
    print(f"    -> {show(classify_profile(d, level))}")

print()
print("structural matches precede genericity: the matching/complement pair")
print("passes level-1 demands but is still named structurally:")
print("  ", show(classify_profile(matching_complement_pair(4), 1)))
