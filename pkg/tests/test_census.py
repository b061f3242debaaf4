import math

import pytest

from twopartite.catalog import Direction, matching_complement_pair, matching_digraph
from twopartite.census import (
    CensusEntry,
    census_homogeneous,
    enumerate_all,
    verify_classification,
)
from twopartite.classify import ClassCase, classify_exact
from twopartite.errors import EnumerationBudgetExceeded
from twopartite.iso import automorphisms, canonical_form, is_homogeneous

from conftest import burnside_class_count

L2R, R2L = Direction.LEFT_TO_RIGHT, Direction.RIGHT_TO_LEFT


class TestEnumerateAll:
    @pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (2, 1), (1, 3), (2, 2), (2, 3)])
    def test_class_count_matches_orbit_count(self, m, n):
        assert sum(1 for _ in enumerate_all(m, n)) == burnside_class_count(m, n)

    def test_one_one_has_three(self):
        assert sum(1 for _ in enumerate_all(1, 1)) == 3

    def test_zero_zero_has_one(self):
        assert sum(1 for _ in enumerate_all(0, 0)) == 1

    def test_no_duplicate_canonical_forms(self):
        forms = [canonical_form(d) for d in enumerate_all(2, 2)]
        assert len(forms) == len(set(forms))

    def test_budget_guard(self):
        with pytest.raises(EnumerationBudgetExceeded):
            next(enumerate_all(4, 4))

    def test_orbit_stabilizer_audit(self):
        # sum of orbit sizes m!n!/|Aut| over classes recovers the
        # labelled count 3^(m*n)
        for (m, n) in [(1, 1), (2, 1), (2, 2)]:
            total = 0
            for d in enumerate_all(m, n):
                total += (math.factorial(m) * math.factorial(n)
                          // len(automorphisms(d)))
            assert total == 3 ** (m * n)


class TestCensus:
    def test_one_one_shape_all_homogeneous(self):
        entries = census_homogeneous(1, 1)
        one_one = [e for e in entries
                   if len(e.representative.left) == 1 and len(e.representative.right) == 1]
        assert len(one_one) == 3
        assert all(e.verdict.holds for e in entries)

    def test_two_two_includes_directed_4_cycle(self, census33):
        sizes = [e for e in census33 if e.label.case is ClassCase.MATCHING_COMPLEMENT]
        assert any(e.label.pair_size == 2 for e in sizes)
        m2 = next(e for e in sizes if e.label.pair_size == 2)
        assert m2.canonical == canonical_form(matching_complement_pair(2))

    def test_matchings_both_directions_distinct(self, census33):
        forms = {e.canonical for e in census33}
        a = canonical_form(matching_digraph(2))
        b = canonical_form(matching_digraph(2, R2L))
        assert a != b and a in forms and b in forms

    def test_entry_invariants(self, census33):
        for e in census33:
            assert e.verdict.holds
            fresh = classify_exact(e.representative)
            assert (fresh.case, fresh.subkind, fresh.direction, fresh.pair_size) == \
                (e.label.case, e.label.subkind, e.label.direction, e.label.pair_size)

    def test_matching_complement_pair_entries_shape(self, census33):
        for e in census33:
            if e.label.case is not ClassCase.MATCHING_COMPLEMENT:
                continue
            rep = e.representative
            on_left = set(rep.left)
            lr = sum(1 for (u, _) in rep.edges if u in on_left)
            rl = len(rep.edges) - lr
            assert len(rep.left) == len(rep.right)
            assert len(rep.left) in (lr, rl)

    def test_closed_under_side_swap(self, census33):
        forms = {e.canonical for e in census33}
        for e in census33:
            assert canonical_form(e.representative.swap_sides()) in forms

    def test_jobs_do_not_change_census(self):
        seq = census_homogeneous(2, 2)
        par = census_homogeneous(2, 2, jobs=2)
        assert [e.canonical for e in seq] == [e.canonical for e in par]


class TestVerifyClassification:
    def test_two_by_two_passes(self):
        report = verify_classification(2, 2)
        assert report.ok
        assert report.classes_scanned == 47
        assert report.homogeneous_classes == 20

    def test_fault_injection_reported(self):
        # an honestly labelled non-homogeneous entry must be flagged
        from twopartite import build
        bad = build(["x1", "x2"], ["y1"], [("x1", "y1")])
        entry = CensusEntry(canonical_form(bad), bad, is_homogeneous(bad),
                            classify_exact(bad))
        census = census_homogeneous(1, 1) + [entry]
        report = verify_classification(1, 1, census=census)
        assert not report.ok
        kinds = {d.kind for d in report.discrepancies}
        assert "unexpected-label" in kinds and "non-homogeneous-entry" in kinds

    def test_missing_catalog_structure_reported(self):
        census = [e for e in census_homogeneous(2, 2)
                  if e.canonical != canonical_form(matching_complement_pair(2))]
        report = verify_classification(2, 2, census=census)
        assert not report.ok
        assert any(d.kind == "catalog-missing" for d in report.discrepancies)
