import random

import pytest

from twopartite.catalog import (
    ApproximantSpec,
    complete_bipartite_digraph,
    empty_digraph,
    generic_2partite_approx,
    generic_orientation_approx,
    matching_complement_pair,
)
from twopartite.core import Side
from twopartite.errors import InvalidRequirement
from twopartite.genericity import (
    Mode,
    brute_witness_scan,
    check_generic_2partite,
    check_generic_bipartite,
    check_generic_orientation,
    iter_requirements,
    requirement,
    requirement_sort_key,
)

from conftest import naive_witness, random_digraph


class TestWitnessScan:
    def test_vacuous_requirement(self):
        d = matching_complement_pair(3)
        assert brute_witness_scan(d, requirement(Side.LEFT)) == "y1"

    def test_m5_two_predecessors_impossible(self):
        # in the matching direction every right vertex has exactly one
        # in-neighbour, so a two-element b-demand has no witness
        d = matching_complement_pair(5)
        req = requirement(Side.LEFT, b={"x1", "x2"})
        assert brute_witness_scan(d, req) is None
        assert naive_witness(d, req) is None

    def test_complete_demand(self):
        d = complete_bipartite_digraph(2, 2)
        assert brute_witness_scan(d, requirement(Side.RIGHT, a={"y1"})) == "x1"

    def test_exclude(self):
        d = complete_bipartite_digraph(2, 2)
        req = requirement(Side.RIGHT, a={"y1"})
        assert brute_witness_scan(d, req, exclude={"x1"}) == "x2"
        assert brute_witness_scan(d, req, exclude={"x1", "x2"}) is None

    def test_undirected_scan(self):
        g = complete_bipartite_digraph(2, 2).underlying_bipartite()
        assert brute_witness_scan(g, requirement(Side.LEFT, a={"x1"})) == "y1"
        assert brute_witness_scan(g, requirement(Side.LEFT, c={"x1"})) is None

    def test_undirected_rejects_b(self):
        g = empty_digraph(1, 1).underlying_bipartite()
        with pytest.raises(InvalidRequirement):
            brute_witness_scan(g, requirement(Side.LEFT, b={"x1"}))

    def test_unknown_vertices_rejected(self):
        with pytest.raises(InvalidRequirement):
            brute_witness_scan(matching_complement_pair(2), requirement(Side.LEFT, a={"zz"}))

    def test_overlapping_sets_rejected(self):
        with pytest.raises(InvalidRequirement):
            requirement(Side.LEFT, a={"x1"}, b={"x1"})

    def test_matches_naive_scan(self):
        rng = random.Random(4)
        for _ in range(20):
            d = random_digraph(rng, max_side=6)
            for req in iter_requirements(d.left, d.right, 2, Mode.ORIENTATION):
                assert brute_witness_scan(d, req) == naive_witness(d, req)


class TestIterRequirements:
    def test_counts(self):
        left = ("x1", "x2", "x3")
        right = ("y1", "y2")
        # orientation mode, level 2: per side sum over sizes of
        # C(p,1)*3 and C(p,2)*9 plus the empty requirement
        n_left = 1 + 3 * 3 + 3 * 9
        n_right = 1 + 2 * 3 + 1 * 9
        got = list(iter_requirements(left, right, 2, Mode.ORIENTATION))
        assert len(got) == n_left + n_right

    def test_mode_restrictions(self):
        left, right = ("x1",), ("y1",)
        for req in iter_requirements(left, right, 1, Mode.TWO_PARTITE):
            assert not req.c
        for req in iter_requirements(left, right, 1, Mode.BIPARTITE):
            assert not req.b

    def test_deterministic(self):
        left, right = ("x1", "x2"), ("y1",)
        a = list(iter_requirements(left, right, 2, Mode.ORIENTATION))
        b = list(iter_requirements(left, right, 2, Mode.ORIENTATION))
        assert a == b


class TestTwoPartiteCheck:
    def test_m5_level1_holds(self):
        assert check_generic_2partite(matching_complement_pair(5), 1).holds

    def test_m5_level2_defect_shape(self):
        report = check_generic_2partite(matching_complement_pair(5), 2)
        assert not report.holds
        first = report.defects[0]
        assert first.side is Side.LEFT and not first.a and len(first.b) == 2

    def test_structural_defect(self):
        report = check_generic_2partite(empty_digraph(2, 2), 0)
        assert not report.holds
        assert report.nonadjacent == ("x1", "y1")
        assert report.defects == ()

    def test_level0_vacuous(self):
        assert check_generic_2partite(matching_complement_pair(2), 0).holds

    def test_holds_implies_empty_perp(self):
        d = generic_2partite_approx(ApproximantSpec(16, 1, seed=2))
        assert check_generic_2partite(d, 1).holds
        assert all(p[2] == 0 for p in d.degree_profile().values())


class TestOrientationCheck:
    def test_level0_nonempty_sides(self):
        assert check_generic_orientation(empty_digraph(1, 1), 0).holds

    def test_level0_empty_side_fails(self):
        assert not check_generic_orientation(empty_digraph(2, 0), 0).holds

    def test_complete_level1_defect(self):
        report = check_generic_orientation(complete_bipartite_digraph(3, 3), 1)
        assert not report.holds
        assert any(d.side is Side.LEFT and len(d.a) == 1 for d in report.defects)

    def test_built_approximant_passes(self):
        d = generic_orientation_approx(ApproximantSpec(32, 1, seed=6))
        assert check_generic_orientation(d, 1).holds


class TestBipartiteCheck:
    def test_level0(self):
        g = empty_digraph(1, 1).underlying_bipartite()
        assert check_generic_bipartite(g, 0).holds

    def test_complete_misses_nonneighbour(self):
        g = complete_bipartite_digraph(3, 3).underlying_bipartite()
        report = check_generic_bipartite(g, 1)
        assert not report.holds
        assert all(not d.a and len(d.c) == 1 for d in report.defects)


class TestReportProperties:
    def test_level_monotone(self):
        rng = random.Random(11)
        for _ in range(10):
            d = random_digraph(rng, max_side=6, min_side=1)
            holds = [check_generic_orientation(d, t).holds for t in range(3)]
            for lo, hi in zip(holds, holds[1:]):
                assert lo or not hi  # holds at t+1 implies holds at t

    def test_defect_soundness(self):
        rng = random.Random(21)
        for _ in range(10):
            d = random_digraph(rng, max_side=6)
            report = check_generic_orientation(d, 2)
            for defect in report.defects:
                assert brute_witness_scan(d, defect) is None

    def test_defects_normalized(self):
        d = complete_bipartite_digraph(4, 4)
        report = check_generic_orientation(d, 2)
        keys = [requirement_sort_key(r) for r in report.defects]
        assert keys == sorted(keys)

    def test_side_symmetry(self):
        rng = random.Random(31)
        for _ in range(8):
            d = random_digraph(rng, max_side=5)
            swapped = d.swap_sides()
            r1 = check_generic_orientation(d, 2)
            r2 = check_generic_orientation(swapped, 2)
            assert r1.holds == r2.holds
            flip = {Side.LEFT: Side.RIGHT, Side.RIGHT: Side.LEFT}
            got = {(flip[x.side], x.a, x.b, x.c) for x in r1.defects}
            want = {(x.side, x.a, x.b, x.c) for x in r2.defects}
            assert got == want

    def test_mode_coherence(self):
        d = generic_orientation_approx(ApproximantSpec(32, 1, seed=8))
        assert check_generic_orientation(d, 1).holds
        assert check_generic_bipartite(d.underlying_bipartite(), 1).holds

    def test_jobs_do_not_change_output(self):
        d = complete_bipartite_digraph(4, 3)
        seq = check_generic_orientation(d, 2)
        par = check_generic_orientation(d, 2, jobs=2)
        assert seq == par
