# -*- coding: utf-8 -*-
"""
Tests for minuscule weight lattices.
"""
import sys
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from minuscule.catalog import CatalogEntry, build_entry, enumerate_catalog
from minuscule.rootsys import Family, Weight, root_system, simple_reflection, simple_root
from minuscule.weight_orbit import (
    expected_orbit_size,
    generate_lattice,
    longest_element_involution,
    minuscule_weights,
    rank_decomposition,
)


def nodes(rs):
    return [w.coords.index(1) + 1 for w in minuscule_weights(rs)]


class TestMinusculeWeights:
    """Tests for the minuscule criterion."""

    def test_type_a_all_fundamental(self):
        assert nodes(root_system('A', 5)) == [1, 2, 3, 4, 5]

    @pytest.mark.parametrize("family,rank,expected", [
        ('B', 2, [2]), ('B', 5, [5]), ('C', 4, [1]), ('D', 5, [1, 4, 5]),
        ('E', 6, [1, 6]), ('E', 7, [7]), ('E', 8, []),
    ])
    def test_nodes(self, family, rank, expected):
        assert nodes(root_system(family, rank)) == expected


class TestGenerateLattice:
    """Tests for breadth-first lattice generation."""

    def test_a1(self, a1):
        assert [w.coords for w in a1.lattice.elements] == [(1,), (-1,)]

    def test_a3_w2_elements(self, a3_w2):
        assert [w.coords for w in a3_w2.lattice.elements] == [
            (0, 1, 0), (1, -1, 1), (-1, 0, 1), (1, 0, -1), (-1, 1, -1), (0, -1, 0),
        ]

    def test_b2_chain(self, b2):
        assert [w.coords for w in b2.lattice.elements] == [(0, 1), (1, -1), (-1, 1), (0, -1)]

    def test_e7_size(self, e7_w7):
        assert len(e7_w7.lattice) == 56
        assert e7_w7.lattice.height == 27

    def test_non_minuscule_rejected(self):
        with pytest.raises(ValueError, match="not minuscule"):
            generate_lattice(root_system('B', 3), Weight((1, 0, 0)))

    def test_non_dominant_rejected(self):
        with pytest.raises(ValueError, match="not dominant"):
            generate_lattice(root_system('A', 3), Weight((0, -1, 0)))

    def test_wrong_rank_rejected(self):
        with pytest.raises(ValueError):
            generate_lattice(root_system('A', 3), Weight((0, 1)))

    def test_index_of_unknown_weight(self, a3_w2):
        with pytest.raises(KeyError):
            a3_w2.lattice.index_of(Weight((2, 0, 0)))

    @pytest.mark.parametrize("entry", enumerate_catalog(7), ids=str)
    def test_structure(self, entry):
        lat = build_entry(entry).lattice
        rs = lat.rs
        assert len(lat) == expected_orbit_size(entry.family, entry.rank, entry.weight_index)
        assert lat.elements[lat.bottom] == entry.weight
        assert lat.elements[lat.top].is_antidominant()
        for k, mu in enumerate(lat.elements):
            assert set(mu.coords) <= {-1, 0, 1}
            for label, target in lat.up_covers[k]:
                assert simple_reflection(rs, label, mu) == lat.elements[target]
                assert lat.elements[target] == mu - simple_root(rs, label)
                assert lat.levels[target] == lat.levels[k] + 1
            if k != lat.top:
                assert lat.up_covers[k]
            if k != lat.bottom:
                assert lat.down_covers(k)


class TestRanks:
    """Tests for level sets and the longest element."""

    def test_a1_levels(self, a1):
        assert [len(s) for s in rank_decomposition(a1.lattice)] == [1, 1]

    def test_a3_w2_levels(self, a3_w2):
        assert rank_decomposition(a3_w2.lattice) == [[0], [1], [2, 3], [4], [5]]

    @pytest.mark.parametrize("entry", enumerate_catalog(6), ids=str)
    def test_levels_symmetric(self, entry):
        sizes = [len(s) for s in rank_decomposition(build_entry(entry).lattice)]
        assert sizes == sizes[::-1]

    @pytest.mark.parametrize("entry", [
        CatalogEntry('A', 4, 2), CatalogEntry('D', 5, 5), CatalogEntry('E', 6, 1), CatalogEntry('B', 3, 3),
    ], ids=str)
    def test_w0_reverses_order(self, entry):
        lat = build_entry(entry).lattice
        w0 = longest_element_involution(lat)
        assert w0[lat.bottom] == lat.top
        for k in range(len(lat)):
            assert w0[w0[k]] == k
            assert lat.levels[w0[k]] == lat.height - lat.levels[k]

    def test_leq(self, a3_w2):
        lat = a3_w2.lattice
        assert lat.leq(lat.bottom, lat.top)
        assert not lat.leq(2, 3)
        assert not lat.leq(lat.top, lat.bottom)


class TestExpectedSizes:
    """Tests for the closed-form dimensions."""

    def test_type_a(self):
        assert expected_orbit_size(Family.A, 7, 3) == comb(8, 3)

    def test_spin(self):
        assert expected_orbit_size(Family.D, 6, 5) == 32
        assert expected_orbit_size(Family.B, 4, 4) == 16

    def test_not_minuscule(self):
        assert expected_orbit_size(Family.C, 4, 2) is None
        assert expected_orbit_size(Family.E, 8, 1) is None
