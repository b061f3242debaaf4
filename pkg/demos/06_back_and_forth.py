"""Aligning two approximants by back and forth.

Two independently seeded approximants of the same generic class agree on
all small configurations: that is what the extension property buys.  A
partial isomorphism between them can therefore be grown step by step:
forth picks the next vertex of the first structure and asks the second
for a witness matching its edge pattern; back swaps the roles.  At the
countable limit this is the uniqueness argument for the generic
structures; here it runs to a finite target size with a full trace.
"""

from twopartite import ApproximantSpec, Mode, generic_2partite_approx
from twopartite.backforth import back_and_forth, replay, uniqueness_demo

d1 = generic_2partite_approx(ApproximantSpec(48, 2, seed=2024))
d2 = generic_2partite_approx(ApproximantSpec(48, 2, seed=2025))

# interleave the sides so the second step already carries a demand
order1 = tuple(v for pair in zip(d1.left, d1.right) for v in pair)
order2 = tuple(v for pair in zip(d2.right, d2.left) for v in pair)
result, trace = back_and_forth(d1, d2, Mode.TWO_PARTITE, target_size=2,
                               order1=order1, order2=order2)
print("two level-2-verified approximants of side 48, target size 2:")
for step in trace.steps:
    req = step.requirement
    print(f"  {step.direction:5}  vertex {step.vertex!r} demanded "
          f"a={sorted(req.a)} b={sorted(req.b)} -> witness {step.witness!r}")
print("  final map:", dict(result.pairs))
print("  every prefix is a valid partial isomorphism:",
      len(replay(d1, d2, trace)), "prefixes replayed")

print()
print("the packaged experiment (build two approximants, align, report):")
report = uniqueness_demo(side_size=48, target_size=2, seed1=7, seed2=8,
                         mode=Mode.TWO_PARTITE)
print(f"  status={report.status}  {report.detail}")

print()
print("a target beyond the verified level is reported, not crashed:")
report = uniqueness_demo(side_size=48, target_size=4, seed1=7, seed2=8,
                         mode=Mode.TWO_PARTITE, build_level=2)
print(f"  status={report.status}")
if report.requirement is not None:
    req = report.requirement
    print(f"  unwitnessed demand: side={req.side.value} "
          f"a={sorted(req.a)} b={sorted(req.b)}")
