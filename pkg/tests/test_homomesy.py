# -*- coding: utf-8 -*-
"""
Tests for homomesy statistics, predicted constants and audits.
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from config import DevelopmentConfig
from minuscule.catalog import CatalogEntry, build_entry, enumerate_catalog
from minuscule.dynamics import decompose_orbits
from minuscule.homomesy import (
    OrbitReport,
    Statistic,
    StatisticKind,
    antichain_label_identity_check,
    audit,
    audit_entry,
    grid_constants,
    label_formula_check,
    norm_identity_check,
    orbit_sum_identity_check,
    predicted_constant,
    stat_antichain,
    stat_antichain_per_label,
    stat_per_label,
    stat_total,
)

CATALOG = enumerate_catalog(7)


def report_for(built):
    return audit(built.heap, built.lattice, decompose_orbits(built.heap))


class TestStatistics:
    """Tests for the statistics on order ideals."""

    def test_empty_and_full(self, a3_w2):
        heap = a3_w2.heap
        for i in (1, 2, 3):
            assert stat_per_label(heap.empty_ideal(), i) == 0
            assert stat_per_label(heap.full_ideal(), i) == len(heap.by_label[i])
        assert stat_antichain(heap.empty_ideal()) == 0
        assert stat_antichain(heap.full_ideal()) == 1

    def test_label_out_of_range(self, a3_w2):
        ideal = a3_w2.heap.full_ideal()
        for i in (0, 4):
            with pytest.raises(IndexError):
                stat_per_label(ideal, i)
            with pytest.raises(IndexError):
                stat_antichain_per_label(ideal, i)

    def test_principal_ideals_have_one_maximum(self, e6_w1):
        heap = e6_w1.heap
        for p in range(len(heap)):
            assert stat_antichain(heap.principal_ideal(p)) == 1

    @pytest.mark.parametrize("entry", [CatalogEntry('A', 4, 2), CatalogEntry('B', 3, 3), CatalogEntry('E', 6, 6)], ids=str)
    def test_sums_over_labels(self, entry):
        heap = build_entry(entry).heap
        labels = range(1, entry.rank + 1)
        for ideal in heap.ideals():
            assert sum(stat_per_label(ideal, i) for i in labels) == stat_total(ideal)
            assert sum(stat_antichain_per_label(ideal, i) for i in labels) == stat_antichain(ideal)

    def test_kind_label_rules(self):
        with pytest.raises(ValueError):
            StatisticKind(Statistic.PER_LABEL)
        with pytest.raises(ValueError):
            StatisticKind(Statistic.TOTAL_CARDINALITY, 2)
        assert str(StatisticKind.per_label(3)) == "PerLabel(3)"


class TestPredictedConstants:
    """Tests for the closed-form constants."""

    def test_a1(self, a1):
        assert predicted_constant(a1.rs, a1.lattice.lam, StatisticKind.per_label(1)) == Fraction(1, 2)

    def test_a3_w2(self, a3_w2):
        rs, lam = a3_w2.rs, a3_w2.lattice.lam
        assert predicted_constant(rs, lam, StatisticKind.total()) == 2
        assert predicted_constant(rs, lam, StatisticKind.antichain()) == 1
        assert predicted_constant(rs, lam, StatisticKind.antichain_per_label(2)) is None

    def test_b2_per_label(self, b2):
        rs, lam = b2.rs, b2.lattice.lam
        assert predicted_constant(rs, lam, StatisticKind.per_label(1)) == Fraction(1, 2)
        assert predicted_constant(rs, lam, StatisticKind.per_label(2)) == 1
        assert predicted_constant(rs, lam, StatisticKind.total()) is None
        assert predicted_constant(rs, lam, StatisticKind.antichain()) is None

    def test_c3_per_label(self, c3):
        values = [predicted_constant(c3.rs, c3.lattice.lam, StatisticKind.per_label(i)) for i in (1, 2, 3)]
        assert values == [1, 1, Fraction(1, 2)]

    def test_exceptional(self, e6_w1, e7_w7):
        assert predicted_constant(e6_w1.rs, e6_w1.lattice.lam, StatisticKind.total()) == 8
        assert predicted_constant(e6_w1.rs, e6_w1.lattice.lam, StatisticKind.antichain()) == Fraction(4, 3)
        assert predicted_constant(e7_w7.rs, e7_w7.lattice.lam, StatisticKind.total()) == Fraction(27, 2)
        assert predicted_constant(e7_w7.rs, e7_w7.lattice.lam, StatisticKind.antichain()) == Fraction(3, 2)

    def test_grid_constants(self):
        assert grid_constants(2, 2) == (2, 1)
        assert grid_constants(3, 2) == (3, Fraction(6, 5))

    @pytest.mark.parametrize("rank,k", [(r, k) for r in range(1, 6) for k in range(1, r + 1)])
    def test_type_a_matches_grid(self, rank, k):
        built = build_entry(CatalogEntry('A', rank, k))
        total, antichain = grid_constants(rank + 1 - k, k)
        assert predicted_constant(built.rs, built.lattice.lam, StatisticKind.total()) == total
        assert predicted_constant(built.rs, built.lattice.lam, StatisticKind.antichain()) == antichain


class TestAudit:
    """Tests for per-orbit audits."""

    def test_a1(self, a1):
        reports = report_for(a1)
        assert len(reports) == 1
        assert reports[0].averages[StatisticKind.per_label(1)] == Fraction(1, 2)
        assert reports[0].passed

    def test_a3_w2(self, a3_w2):
        reports = report_for(a3_w2)
        assert [r.size for r in reports] == [4, 2]
        for r in reports:
            assert r.averages[StatisticKind.total()] == 2
            assert r.averages[StatisticKind.antichain()] == 1
            assert r.verdicts[StatisticKind.antichain_per_label(1)] is None
            assert r.passed

    def test_multiply_laced_verdicts(self, b2):
        report = report_for(b2)[0]
        assert report.verdicts[StatisticKind.total()] is None
        assert report.verdicts[StatisticKind.per_label(1)] is True

    def test_mismatched_inputs(self, a3_w2, a4_w2):
        with pytest.raises(ValueError):
            audit(a3_w2.heap, a4_w2.lattice, decompose_orbits(a3_w2.heap))

    def test_failure_message_names_orbit_and_rationals(self):
        kind = StatisticKind.total()
        report = OrbitReport(3, 2, {kind: Fraction(3, 2)}, {kind: Fraction(2)}, {kind: False})
        assert not report.passed
        assert report.failures() == ["orbit 3: TotalCardinality average 3/2 != predicted 2"]

    @pytest.mark.parametrize("entry", CATALOG, ids=str)
    def test_averages_are_exact(self, entry):
        reports = report_for(build_entry(entry))
        for r in reports:
            for kind, average in r.averages.items():
                assert r.size % average.denominator == 0
            per_label = sum(r.averages[StatisticKind.per_label(i)] for i in range(1, entry.rank + 1))
            assert per_label == r.averages[StatisticKind.total()]


class TestIdentities:
    """Tests for the identities behind the constants."""

    def test_label_formula_a3_w2(self, a3_w2):
        assert label_formula_check(a3_w2.lattice, a3_w2.heap, a3_w2.heap.ideals())

    def test_orbit_sum_a1(self, a1):
        assert orbit_sum_identity_check(decompose_orbits(a1.heap), a1.lattice, 1)

    @pytest.mark.parametrize("entry", CATALOG, ids=str)
    def test_identities_hold(self, entry):
        built = build_entry(entry)
        decomposition = decompose_orbits(built.heap)
        for i in range(1, entry.rank + 1):
            assert orbit_sum_identity_check(decomposition, built.lattice, i)
            assert antichain_label_identity_check(decomposition, i)
        assert label_formula_check(built.lattice, built.heap, built.heap.ideals())
        norm = norm_identity_check(decomposition)
        assert norm is (True if entry.simply_laced else None)


class TestAuditEntry:
    """Tests for whole-entry audits."""

    @pytest.mark.parametrize("entry", CATALOG, ids=str)
    def test_catalog_passes(self, entry):
        summary = audit_entry(entry)
        assert summary.passed, summary.failures()
        assert summary.exhaustive
        assert summary.ideal_count == summary.lattice_size

    def test_default_catalog_passes(self):
        entries = enumerate_catalog(caps=DevelopmentConfig.rank_caps())
        assert len(entries) == 69
        assert CatalogEntry('A', 9, 5) in entries
        assert CatalogEntry('D', 7, 7) in entries
        for entry in entries:
            summary = audit_entry(entry)
            assert summary.passed, (str(entry), summary.failures())
            assert summary.exhaustive, str(entry)

    def test_a3_w2_summary(self):
        summary = audit_entry(CatalogEntry('A', 3, 2))
        assert (summary.lattice_size, summary.heap_size) == (6, 4)
        assert (summary.orbit_count, summary.order_of_action) == (2, 4)
        assert summary.checks['grid_isomorphism'] is True
        assert 'twin_isomorphism' not in summary.checks

    def test_twin_checked(self):
        summary = audit_entry(CatalogEntry('C', 3, 1))
        assert summary.checks['twin_isomorphism'] is True
        assert summary.checks['norm_identity'] is None

    def test_exhaustive_limit(self):
        summary = audit_entry(CatalogEntry('E', 6, 1), exhaustive_limit=10)
        assert not summary.exhaustive
        assert 'equivariance' not in summary.checks
        assert summary.passed
