# -*- coding: utf-8 -*-
"""
Toggles, rowmotion and orbit decomposition on order ideals of a heap.

Rowmotion (the Fon-Der-Flaass action) sends I to the ideal generated by the
minimal elements of P \\ I. It is implemented directly from that definition;
rowmotion_by_toggles is the second, independent implementation (toggle every
element from the top of a linear extension down) and the two are compared
by check_rowmotion_agreement.

The check_* functions return lists of violations; an empty list means the
property holds on every input.
"""
import logging
from dataclasses import dataclass
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from minuscule.heap import Heap, OrderIdeal, phi
from minuscule.rootsys import simple_reflection
from minuscule.weight_orbit import WeightLattice

logger = logging.getLogger(__name__)


def toggle(ideal: OrderIdeal, p: int) -> OrderIdeal:
    """I xor {p} if that is an ideal, otherwise I."""
    heap = ideal.heap
    bit = 1 << p
    mask = ideal.members
    if mask & bit:
        if heap.above[p] & mask:
            return ideal
    elif heap.below[p] & ~mask:
        return ideal
    return OrderIdeal(heap, mask ^ bit)


def toggleable(ideal: OrderIdeal, i: int) -> List[int]:
    """Elements labelled i at which toggling changes I."""
    return [p for p in ideal.heap.by_label.get(i, ()) if toggle(ideal, p) != ideal]


def toggle_label(ideal: OrderIdeal, i: int) -> OrderIdeal:
    """t_i: toggle every element labelled i, in ascending index order."""
    ideal.heap.rs.check_index(i)
    for p in ideal.heap.by_label.get(i, ()):
        ideal = toggle(ideal, p)
    return ideal


def rowmotion(ideal: OrderIdeal) -> OrderIdeal:
    """Down-closure of the minimal elements of the complement."""
    heap = ideal.heap
    mask = 0
    for p in ideal.minimal_elements_of_complement():
        mask |= heap.below[p] | (1 << p)
    return OrderIdeal(heap, mask)


def rowmotion_by_toggles(ideal: OrderIdeal) -> OrderIdeal:
    """Toggle at every element, from the top of the index linear extension to the bottom."""
    for p in reversed(range(len(ideal.heap))):
        ideal = toggle(ideal, p)
    return ideal


def orbit_of(ideal: OrderIdeal) -> List[OrderIdeal]:
    """The rowmotion orbit of I, starting at I."""
    orbit = [ideal]
    current = rowmotion(ideal)
    while current != ideal:
        orbit.append(current)
        current = rowmotion(current)
    return orbit


@dataclass(frozen=True)
class OrbitDecomposition:
    """
    Rowmotion orbits of J(P).

    Each orbit starts at its smallest bitmask, and orbits are ordered by that
    smallest member.
    """
    heap: Heap
    orbits: Tuple[Tuple[OrderIdeal, ...], ...]
    order_of_action: int

    def __len__(self) -> int:
        return len(self.orbits)

    def sizes(self) -> List[int]:
        return [len(o) for o in self.orbits]

    def ideals(self) -> List[OrderIdeal]:
        return sorted((i for o in self.orbits for i in o), key=lambda i: i.members)

    def canonical_order(self) -> List[int]:
        """Orbit indices sorted by (size, smallest member), used for exports."""
        return sorted(range(len(self.orbits)),
                      key=lambda k: (len(self.orbits[k]), self.orbits[k][0].members))


def decompose_orbits(heap: Heap, ideals: Optional[Sequence[OrderIdeal]] = None) -> OrbitDecomposition:
    """
    Partition J(P) into rowmotion orbits.

    Args:
        heap: The heap
        ideals: All ideals of the heap; enumerated from the heap when omitted

    Returns:
        OrbitDecomposition with deterministic orbit order
    """
    if ideals is None:
        ideals = heap.ideals()
    visited = set()
    orbits = []
    for start in sorted(ideals, key=lambda i: i.members):
        if start.members in visited:
            continue
        orbit = orbit_of(start)
        for ideal in orbit:
            if ideal.members in visited:
                raise ValueError(f"Rowmotion is not injective: {ideal} reached twice")
            visited.add(ideal.members)
        orbits.append(tuple(orbit))

    order = lcm(*(len(o) for o in orbits)) if orbits else 1
    logger.debug(f"{heap.rs.type} {heap.lam}: {len(orbits)} orbits, order {order}")
    return OrbitDecomposition(heap=heap, orbits=tuple(orbits), order_of_action=order)


def check_equivariance(
    lat: WeightLattice, heap: Heap, ideals: Optional[Iterable[OrderIdeal]] = None
) -> List[Tuple[int, int]]:
    """
    phi(t_i(I)) = s_i(phi(I)) for every ideal and label.

    Returns:
        (bitmask, label) mismatches; label 0 marks an ideal whose image is
        not in the lattice at all
    """
    rs = lat.rs
    mismatches = []
    for ideal in (heap.ideals() if ideals is None else ideals):
        mu = phi(ideal)
        if mu not in lat:
            mismatches.append((ideal.members, 0))
            continue
        for i in range(1, rs.rank + 1):
            if phi(toggle_label(ideal, i)) != simple_reflection(rs, i, mu):
                mismatches.append((ideal.members, i))
    return mismatches


def check_label_toggles(ideals: Iterable[OrderIdeal]) -> List[Tuple[int, int]]:
    """
    At most one element of a label is toggleable, and t_i does not depend on
    the toggle order within the label.
    """
    violations = []
    for ideal in ideals:
        heap = ideal.heap
        for i in range(1, heap.rs.rank + 1):
            if len(toggleable(ideal, i)) > 1:
                violations.append((ideal.members, i))
                continue
            backwards = ideal
            for p in reversed(heap.by_label.get(i, ())):
                backwards = toggle(backwards, p)
            if backwards != toggle_label(ideal, i):
                violations.append((ideal.members, i))
    return violations


def check_local_rowmotion(ideals: Iterable[OrderIdeal]) -> List[Tuple[int, int]]:
    """t_p(I) = I + {p} iff t_p(row(I)) = row(I) - {p}; returns (bitmask, element) violations."""
    violations = []
    for ideal in ideals:
        image = rowmotion(ideal)
        for p in range(len(ideal.heap)):
            adds = p not in ideal and toggle(ideal, p) != ideal
            removes = p in image and toggle(image, p) != image
            if adds != removes:
                violations.append((ideal.members, p))
    return violations


def check_rowmotion_agreement(ideals: Iterable[OrderIdeal]) -> List[int]:
    """Bitmasks where the two rowmotion implementations disagree."""
    return [i.members for i in ideals if rowmotion(i) != rowmotion_by_toggles(i)]


def check_bijective(ideals: Sequence[OrderIdeal]) -> bool:
    """Rowmotion permutes the given (complete) set of ideals."""
    images = {rowmotion(i).members for i in ideals}
    return images == {i.members for i in ideals}


def check_sign_flip(heap: Heap, ideals: Optional[Iterable[OrderIdeal]] = None) -> List[Tuple[int, int]]:
    """(phi(I), alpha_i^vee) = 1 iff (phi(row(I)), alpha_i^vee) = -1; returns violations."""
    violations = []
    for ideal in (heap.ideals() if ideals is None else ideals):
        before = phi(ideal).coords
        after = phi(rowmotion(ideal)).coords
        for i, (b, a) in enumerate(zip(before, after), start=1):
            if (b == 1) != (a == -1):
                violations.append((ideal.members, i))
    return violations
