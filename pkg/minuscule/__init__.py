# -*- coding: utf-8 -*-
"""
Minuscule heaps, rowmotion and homomesy.

This package builds minuscule posets from Cartan data and checks, orbit by
orbit, which statistics on their order ideals are homomesic for rowmotion.

Modules:
- rootsys: Cartan matrices, exact inner products, simple reflections
- weight_orbit: the weight lattice of a minuscule representation
- heap: minuscule heaps, order ideals and the isomorphism phi
- dynamics: toggles, rowmotion and orbit decomposition
- homomesy: statistics, predicted constants and audits
- catalog: the minuscule catalog and entry construction
- report: JSON and text rendering

Usage:
    from minuscule import get_entry, audit_entry

    summary = audit_entry(get_entry('A', 3, 2))
    assert summary.passed
"""

from minuscule.rootsys import (
    CartanType,
    Family,
    RootSystem,
    Weight,
    build_root_system,
    inner,
    positive_roots,
    rho,
    root_system,
    simple_reflection,
)

from minuscule.weight_orbit import (
    WeightLattice,
    generate_lattice,
    minuscule_weights,
    rank_decomposition,
)

from minuscule.heap import (
    Heap,
    OrderIdeal,
    build_heap,
    phi,
    phi_inverse,
)

from minuscule.dynamics import (
    OrbitDecomposition,
    decompose_orbits,
    rowmotion,
    toggle,
    toggle_label,
)

from minuscule.catalog import (
    CatalogEntry,
    build_entry,
    enumerate_catalog,
    get_entry,
)

from minuscule.homomesy import (
    AuditSummary,
    OrbitReport,
    StatisticKind,
    audit,
    audit_entry,
    predicted_constant,
)

__all__ = [
    # Root systems
    'CartanType',
    'Family',
    'RootSystem',
    'Weight',
    'build_root_system',
    'inner',
    'positive_roots',
    'rho',
    'root_system',
    'simple_reflection',
    # Weight lattice
    'WeightLattice',
    'generate_lattice',
    'minuscule_weights',
    'rank_decomposition',
    # Heaps
    'Heap',
    'OrderIdeal',
    'build_heap',
    'phi',
    'phi_inverse',
    # Dynamics
    'OrbitDecomposition',
    'decompose_orbits',
    'rowmotion',
    'toggle',
    'toggle_label',
    # Catalog
    'CatalogEntry',
    'build_entry',
    'enumerate_catalog',
    'get_entry',
    # Homomesy
    'AuditSummary',
    'OrbitReport',
    'StatisticKind',
    'audit',
    'audit_entry',
    'predicted_constant',
]

__version__ = '1.0.0'
