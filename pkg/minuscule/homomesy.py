# -*- coding: utf-8 -*-
"""
Homomesy statistics, per-orbit averages and predicted constants.

A statistic f is c-mesic for rowmotion when its average over every orbit is
the same constant c. Three families are checked against closed forms:

- per-label cardinality f^i(I) = |I ∩ P^i|, constant 2(lambda, omega_i)/(alpha_i, alpha_i)
  in every Cartan type
- total cardinality |I|, constant 2(lambda, rho)/Omega^2 (simply-laced only)
- antichain cardinality g(I), constant 2(lambda, lambda)/Omega^2 (simply-laced only)

The per-label antichain counts g^i are reported as data with no prediction.

Functions:
- audit: one OrbitReport per orbit
- audit_entry: build, decompose, audit and run every identity check for a catalog entry
- orbit_sum_identity_check / label_formula_check / antichain_label_identity_check /
  norm_identity_check: the identities the constants are derived from
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from config import config
from minuscule.catalog import CatalogEntry, build_entry
from minuscule.dynamics import (
    OrbitDecomposition,
    check_bijective,
    check_equivariance,
    check_label_toggles,
    check_local_rowmotion,
    check_rowmotion_agreement,
    check_sign_flip,
    decompose_orbits,
)
from minuscule.heap import (
    Heap,
    OrderIdeal,
    find_isomorphism,
    grid_poset,
    ideals_from_lattice,
    phi,
)
from minuscule.rootsys import (
    Family,
    RootSystem,
    Weight,
    fundamental_weight,
    inner,
    rho,
    rho_from_roots,
    root_length_squared,
)
from minuscule.weight_orbit import WeightLattice, expected_orbit_size

logger = logging.getLogger(__name__)


class Statistic(Enum):
    """Statistic families; the value is the name used in reports."""
    PER_LABEL = "PerLabel"
    TOTAL_CARDINALITY = "TotalCardinality"
    ANTICHAIN_CARDINALITY = "AntichainCardinality"
    ANTICHAIN_PER_LABEL = "AntichainPerLabel"


LABELLED = (Statistic.PER_LABEL, Statistic.ANTICHAIN_PER_LABEL)


@dataclass(frozen=True)
class StatisticKind:
    """A statistic family, with a label for the per-label families."""
    kind: Statistic
    label: Optional[int] = None

    def __post_init__(self):
        if (self.kind in LABELLED) != (self.label is not None):
            raise ValueError(f"{self.kind.value} {'needs' if self.kind in LABELLED else 'takes no'} label")

    @classmethod
    def per_label(cls, i: int) -> 'StatisticKind':
        return cls(Statistic.PER_LABEL, i)

    @classmethod
    def total(cls) -> 'StatisticKind':
        return cls(Statistic.TOTAL_CARDINALITY)

    @classmethod
    def antichain(cls) -> 'StatisticKind':
        return cls(Statistic.ANTICHAIN_CARDINALITY)

    @classmethod
    def antichain_per_label(cls, i: int) -> 'StatisticKind':
        return cls(Statistic.ANTICHAIN_PER_LABEL, i)

    def __str__(self) -> str:
        if self.label is None:
            return self.kind.value
        return f"{self.kind.value}({self.label})"


def statistic_kinds(rank: int) -> List[StatisticKind]:
    """Every statistic audited for a root system of the given rank, in report order."""
    kinds = [StatisticKind.per_label(i) for i in range(1, rank + 1)]
    kinds += [StatisticKind.total(), StatisticKind.antichain()]
    kinds += [StatisticKind.antichain_per_label(i) for i in range(1, rank + 1)]
    return kinds


# Statistics

def stat_per_label(ideal: OrderIdeal, i: int) -> int:
    """f^i(I) = |I ∩ P^i|."""
    ideal.heap.rs.check_index(i)
    return bin(ideal.members & ideal.heap.label_mask(i)).count('1')


def stat_total(ideal: OrderIdeal) -> int:
    return len(ideal)


def stat_antichain(ideal: OrderIdeal) -> int:
    """g(I): number of maximal elements of I."""
    return len(ideal.maximal_elements())


def stat_antichain_per_label(ideal: OrderIdeal, i: int) -> int:
    """g^i(I): maximal elements of I labelled i."""
    ideal.heap.rs.check_index(i)
    labels = ideal.heap.labels
    return sum(1 for p in ideal.maximal_elements() if labels[p] == i)


def evaluate(kind: StatisticKind, ideal: OrderIdeal) -> int:
    if kind.kind is Statistic.PER_LABEL:
        return stat_per_label(ideal, kind.label)
    if kind.kind is Statistic.TOTAL_CARDINALITY:
        return stat_total(ideal)
    if kind.kind is Statistic.ANTICHAIN_CARDINALITY:
        return stat_antichain(ideal)
    return stat_antichain_per_label(ideal, kind.label)


def _check_rho(rs: RootSystem) -> None:
    derived = rho_from_roots(rs)
    if derived != tuple(Fraction(c) for c in rho(rs).coords):
        raise ValueError(f"rho of {rs.type} from positive roots is {derived}, expected all ones")


def predicted_constant(rs: RootSystem, lam: Weight, kind: StatisticKind) -> Optional[Fraction]:
    """
    Closed-form orbit average of a statistic.

    Args:
        rs: Root system
        lam: Minuscule weight
        kind: Statistic

    Returns:
        Exact constant, or None where no closed form applies (total and
        antichain cardinality on multiply-laced types; per-label antichain
        counts always)
    """
    if kind.kind is Statistic.PER_LABEL:
        omega = fundamental_weight(rs, kind.label)
        # (alpha_i, alpha_i) = 2 d_i
        return inner(rs, lam, omega) / rs.symmetrizer[kind.label - 1]
    if kind.kind is Statistic.ANTICHAIN_PER_LABEL:
        return None

    omega_sq = root_length_squared(rs)
    if omega_sq is None:
        return None
    if kind.kind is Statistic.TOTAL_CARDINALITY:
        _check_rho(rs)
        return 2 * inner(rs, lam, rho(rs)) / omega_sq
    return 2 * inner(rs, lam, lam) / omega_sq


@dataclass(frozen=True)
class OrbitReport:
    """Averages, predictions and verdicts for one rowmotion orbit."""
    orbit_id: int
    size: int
    averages: Dict[StatisticKind, Fraction]
    predicted: Dict[StatisticKind, Optional[Fraction]]
    verdicts: Dict[StatisticKind, Optional[bool]]

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.verdicts.values())

    def failures(self) -> List[str]:
        """One message per failed verdict, naming the orbit and both rationals."""
        return [
            f"orbit {self.orbit_id}: {kind} average {self.averages[kind]} != predicted {self.predicted[kind]}"
            for kind, verdict in self.verdicts.items() if verdict is False
        ]


def audit(heap: Heap, lattice: WeightLattice, decomposition: OrbitDecomposition) -> List[OrbitReport]:
    """
    Per-orbit averages of every statistic, compared exactly with the predictions.

    Args:
        heap: Heap of the entry
        lattice: Weight lattice of the same entry
        decomposition: Rowmotion orbits of the heap's ideals

    Returns:
        One OrbitReport per orbit, in decomposition order
    """
    if heap.lam != lattice.lam or heap.rs != lattice.rs:
        raise ValueError(f"Heap of {heap.lam} and lattice of {lattice.lam} come from different entries")
    rs = lattice.rs
    kinds = statistic_kinds(rs.rank)
    predicted = {kind: predicted_constant(rs, lattice.lam, kind) for kind in kinds}

    reports = []
    for orbit_id, orbit in enumerate(decomposition.orbits):
        size = len(orbit)
        averages = {kind: Fraction(sum(evaluate(kind, ideal) for ideal in orbit), size) for kind in kinds}
        verdicts = {
            kind: None if predicted[kind] is None else averages[kind] == predicted[kind]
            for kind in kinds
        }
        report = OrbitReport(orbit_id, size, averages, dict(predicted), verdicts)
        for message in report.failures():
            logger.warning(f"{rs.type} {lattice.lam}: {message}")
        reports.append(report)
    return reports


# Identities behind the constants

def orbit_sum_identity_check(decomposition: OrbitDecomposition, lattice: WeightLattice, i: int) -> bool:
    """Sum over each orbit of (phi(I), alpha_i^vee) vanishes."""
    lattice.rs.check_index(i)
    for orbit in decomposition.orbits:
        if sum(phi(ideal).coords[i - 1] for ideal in orbit) != 0:
            return False
    return True


def label_formula_check(lat: WeightLattice, heap: Heap, ideals: Sequence[OrderIdeal]) -> bool:
    """f^i(I) = 2((lambda, omega_i) - (phi(I), omega_i))/(alpha_i, alpha_i) for every ideal and label."""
    rs = lat.rs
    omegas = [fundamental_weight(rs, i) for i in range(1, rs.rank + 1)]
    lam_pairings = [inner(rs, lat.lam, w) for w in omegas]
    for ideal in ideals:
        mu = phi(ideal)
        for i, omega in enumerate(omegas, start=1):
            formula = (lam_pairings[i - 1] - inner(rs, mu, omega)) / rs.symmetrizer[i - 1]
            if formula != stat_per_label(ideal, i):
                logger.warning(f"{rs.type} {lat.lam}: f^{i}({ideal}) != {formula}")
                return False
    return True


def antichain_label_identity_check(decomposition: OrbitDecomposition, i: int) -> bool:
    """
    Sum over each orbit of g^i equals the sum of
    2 (phi, alpha_i^vee)(phi, omega_i) / (alpha_i, alpha_i).

    Holds in every type; summed over labels it gives the antichain constant
    on simply-laced types.
    """
    heap = decomposition.heap
    rs = heap.rs
    rs.check_index(i)
    omega = fundamental_weight(rs, i)
    d = rs.symmetrizer[i - 1]
    for orbit in decomposition.orbits:
        lhs = sum(stat_antichain_per_label(ideal, i) for ideal in orbit)
        rhs = Fraction(0)
        for ideal in orbit:
            mu = phi(ideal)
            rhs += mu.coords[i - 1] * inner(rs, mu, omega) / d
        if lhs != rhs:
            return False
    return True


def norm_identity_check(decomposition: OrbitDecomposition) -> Optional[bool]:
    """Sum over each orbit of g equals the sum of 2 (phi, phi)/Omega^2; None off simply-laced types."""
    rs = decomposition.heap.rs
    omega_sq = root_length_squared(rs)
    if omega_sq is None:
        return None
    for orbit in decomposition.orbits:
        lhs = sum(stat_antichain(ideal) for ideal in orbit)
        rhs = sum((2 * inner(rs, phi(ideal), phi(ideal)) / omega_sq for ideal in orbit), Fraction(0))
        if lhs != rhs:
            return False
    return True


def grid_constants(a: int, b: int) -> Tuple[Fraction, Fraction]:
    """Orbit averages of |I| and g(I) on the product of chains [a] x [b]."""
    return Fraction(a * b, 2), Fraction(a * b, a + b)


# Whole-entry audit

@dataclass
class AuditSummary:
    """Everything computed for one catalog entry."""
    entry: CatalogEntry
    lattice_size: int
    heap_size: int
    ideal_count: int
    orbit_count: int
    order_of_action: int
    reports: List[OrbitReport]
    checks: Dict[str, Optional[bool]] = field(default_factory=dict)
    exhaustive: bool = True

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports) and all(v is not False for v in self.checks.values())

    def failures(self) -> List[str]:
        messages = [m for r in self.reports for m in r.failures()]
        messages += [f"check {name} failed" for name, v in self.checks.items() if v is False]
        return messages


def _grid_check(entry: CatalogEntry, heap: Heap) -> bool:
    """Heap of A_r omega_k against [r+1-k] x [k], with labels matching grid columns."""
    k = entry.weight_index
    grid = grid_poset(entry.rank + 1 - k, k)
    columns = [0] * len(grid.points)
    for c, members in enumerate(grid.columns):
        for p in members:
            columns[p] = c
    return find_isomorphism(heap.below, grid.below, heap.labels, columns) is not None


def audit_entry(entry: CatalogEntry, exhaustive_limit: Optional[int] = None) -> AuditSummary:
    """
    Build an entry, decompose rowmotion into orbits, audit every orbit and
    run the identity checks.

    Per-ideal toggle checks (equivariance, sign flip, both rowmotions,
    local rowmotion) run only when the entry has at most exhaustive_limit
    ideals.

    Args:
        entry: Catalog entry
        exhaustive_limit: Ideal count cap for per-ideal checks (default from config)

    Returns:
        AuditSummary
    """
    if exhaustive_limit is None:
        exhaustive_limit = config.EXHAUSTIVE_LIMIT
    built = build_entry(entry)
    rs, lat, heap = built.rs, built.lattice, built.heap
    ideals = heap.ideals()
    decomposition = decompose_orbits(heap, ideals)
    reports = audit(heap, lat, decomposition)

    checks: Dict[str, Optional[bool]] = {}
    expected = expected_orbit_size(rs.type.family, rs.rank, entry.weight_index)
    checks['lattice_size'] = expected is None or expected == len(lat)
    checks['heap_height'] = len(heap) == lat.height
    checks['ideal_count'] = len(ideals) == len(lat)
    by_lattice = ideals_from_lattice(lat, heap)
    checks['phi_bijective'] = all(phi(ideal) == mu for ideal, mu in zip(by_lattice, lat.elements))
    checks['rowmotion_bijective'] = check_bijective(ideals)
    checks['orbit_sum'] = all(orbit_sum_identity_check(decomposition, lat, i) for i in range(1, rs.rank + 1))
    checks['label_formula'] = label_formula_check(lat, heap, ideals)
    checks['antichain_label_identity'] = all(
        antichain_label_identity_check(decomposition, i) for i in range(1, rs.rank + 1)
    )
    checks['norm_identity'] = norm_identity_check(decomposition)
    if rs.type.family is Family.A:
        checks['grid_isomorphism'] = _grid_check(entry, heap)
    twin = entry.simply_laced_twin
    if twin is not None:
        twin_heap = build_entry(twin).heap
        checks['twin_isomorphism'] = find_isomorphism(heap.below, twin_heap.below) is not None

    exhaustive = len(ideals) <= exhaustive_limit
    if exhaustive:
        checks['equivariance'] = not check_equivariance(lat, heap, ideals)
        checks['label_toggles'] = not check_label_toggles(ideals)
        checks['sign_flip'] = not check_sign_flip(heap, ideals)
        checks['rowmotion_agreement'] = not check_rowmotion_agreement(ideals)
        checks['local_rowmotion'] = not check_local_rowmotion(ideals)
    else:
        logger.info(f"{entry}: {len(ideals)} ideals, skipping per-ideal checks")

    summary = AuditSummary(
        entry=entry,
        lattice_size=len(lat),
        heap_size=len(heap),
        ideal_count=len(ideals),
        orbit_count=len(decomposition),
        order_of_action=decomposition.order_of_action,
        reports=reports,
        checks=checks,
        exhaustive=exhaustive,
    )
    status = "passed" if summary.passed else "FAILED"
    logger.info(
        f"Audit {entry}: {summary.orbit_count} orbits, order {summary.order_of_action}, {status}"
    )
    return summary
