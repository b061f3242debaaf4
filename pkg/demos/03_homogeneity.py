"""Homogeneity, decided exactly.

A structure is homogeneous when every side-respecting isomorphism
between induced substructures extends to a side-preserving automorphism
of the whole structure.  The decider searches all small maps and returns
a smallest non-extending one as the counterexample.
"""

from twopartite import (
    build,
    complete_bipartite_digraph,
    extends_to_automorphism,
    is_homogeneous,
    matching_complement_pair,
)

print("the matching/complement pair on 2+2 vertices (a directed 4-cycle):")
verdict = is_homogeneous(matching_complement_pair(2))
print("  homogeneous?", verdict.holds)

print()
print("complete one-direction structure on 3+3 vertices:")
print("  homogeneous?", is_homogeneous(complete_bipartite_digraph(3, 3)).holds)

print()
print("now break the symmetry: x1 points at both right vertices, x2 has a")
print("mixed in/out profile;", "any map sending one onto the other is a")
print("partial isomorphism of single vertices but cannot extend:")
d = build(["x1", "x2"], ["y1", "y2"],
          [("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("y2", "x2")])
verdict = is_homogeneous(d)
print("  homogeneous?", verdict.holds)
print("  counterexample map:", dict(verdict.counterexample.pairs))
print("  extends to an automorphism?",
      extends_to_automorphism(d, verdict.counterexample))

print()
print("bounded search: the same structure already fails at domain size 1:")
print("  holds at k=1?", is_homogeneous(d, 1).holds)
