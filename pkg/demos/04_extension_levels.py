"""Extension properties at finite levels.

The generic classes are infinite; finite structures can only certify the
extension property up to a level: every demand set of total size at most
t must have a witness on the opposite side.  The checkers enumerate the
whole requirement space and report each unwitnessed demand.

The matching/complement pair shows why levels matter: it passes level 1
but fails level 2 in a characteristic way (no vertex has two
predecessors in the matching direction), which is precisely what keeps
it apart from the generic two-direction class.
"""

from twopartite import (
    ApproximantSpec,
    check_generic_2partite,
    check_generic_orientation,
    generic_2partite_approx,
    matching_complement_pair,
)

m5 = matching_complement_pair(5)
print("matching/complement pair on 5+5 vertices:")
print("  level 1 holds?", check_generic_2partite(m5, 1).holds)
report = check_generic_2partite(m5, 2)
print("  level 2 holds?", report.holds)
first = report.defects[0]
print(f"  first defect: side={first.side.value} a={sorted(first.a)} "
      f"b={sorted(first.b)} (two predecessors demanded, none possible)")
print(f"  defects at level 2: {len(report.defects)}")

print()
print("a randomized approximant passes the level it was verified at:")
d = generic_2partite_approx(ApproximantSpec(48, 2, seed=11))
print("  side 48, level 2:", check_generic_2partite(d, 2).holds)

print()
print("level checks are monotone; pushing the same structure to level 3")
report3 = check_generic_2partite(d, 3)
print(f"  level 3 holds? {report3.holds} ({len(report3.defects)} defects)")
print("  (side 48 is too small for level 3; the builders use ~160)")

print()
print("orientation mode additionally demands non-neighbours; a complete")
print("underlying graph has none, so it fails immediately at level 1:")
ro = check_generic_orientation(m5, 1)
print(f"  matching_complement_pair(5) at level 1: holds={ro.holds}, "
      f"first defect c-set={sorted(ro.defects[0].c) if ro.defects else None}")
