"""A first walk through the structure type.

A 2-partite digraph keeps two disjoint vertex sides; every edge crosses
between them and no pair of vertices carries both directions.  Each
vertex therefore splits the opposite side three ways: successors,
predecessors, and the perp (vertices it is not adjacent to at all).
"""

from twopartite import build, to_dot, to_json_text

d = build(
    left=["x1", "x2", "x3"],
    right=["y1", "y2"],
    edges=[("x1", "y1"), ("y1", "x2"), ("x3", "y2"), ("y2", "x1")],
)

print("vertices:", d.vertices())
print("edges:   ", d.edges)
print()

for v in d.vertices():
    print(f"{v}: successors={d.out_neighbourhood(v)} "
          f"predecessors={d.in_neighbourhood(v)} perp={d.perp(v)}")

print()
print("degree profiles (out, in, perp):")
for v, triple in d.degree_profile().items():
    print(f"  {v}: {triple}")

print()
print("one direction only?", d.is_bipartite_digraph())
print("underlying undirected edges:", d.underlying_bipartite().edges)

sub = d.induced({"x1", "x2", "y1"})
print()
print("induced on {x1, x2, y1}:", sub.edges)

print()
print("canonical JSON:")
print(to_json_text(d), end="")
print()
print("DOT rendering (left = boxes, right = ellipses):")
print(to_dot(d), end="")
