# -*- coding: utf-8 -*-
"""
Weight lattice of a minuscule representation.

The weights of V^lambda form the Weyl orbit of lambda. They are ordered
opposite to root order, so lambda is the bottom and w0(lambda) the top, and
mu is covered by mu - alpha_i exactly when (mu, alpha_i^vee) = 1.

Functions:
- minuscule_weights: minuscule fundamental weights of a root system
- generate_lattice: breadth-first closure of lambda under covers
- rank_decomposition: level sets of the graded lattice
- expected_orbit_size: closed-form dimensions of the minuscule representations
"""
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Tuple

from minuscule.rootsys import (
    Family,
    RootSystem,
    Weight,
    positive_coroot_values,
    simple_reflection,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightLattice:
    """
    The orbit W.lambda with its labelled covering relations.

    elements are indexed level by level from lambda; up_covers[k] lists
    (label, target index) pairs sorted by label.
    """
    rs: RootSystem
    lam: Weight
    elements: Tuple[Weight, ...]
    up_covers: Tuple[Tuple[Tuple[int, int], ...], ...]
    levels: Tuple[int, ...]
    bottom: int
    top: int
    _index: Dict[Weight, int] = field(default_factory=dict, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, mu: Weight) -> bool:
        return mu in self._index

    @property
    def height(self) -> int:
        return self.levels[self.top]

    def index_of(self, mu: Weight) -> int:
        try:
            return self._index[mu]
        except KeyError:
            raise KeyError(f"Weight {mu} is not in the orbit of {self.lam} ({self.rs.type})")

    def down_covers(self, k: int) -> List[Tuple[int, int]]:
        """(label, source index) pairs with source covered by element k."""
        mu = self.elements[k]
        result = []
        for i, c in enumerate(mu.coords, start=1):
            if c == -1:
                # s_i(mu) = mu + alpha_i sits one level lower
                result.append((i, self._index[simple_reflection(self.rs, i, mu)]))
        return result

    def leq(self, a: int, b: int) -> bool:
        """Whether element a lies below element b."""
        if a == b:
            return True
        if self.levels[a] >= self.levels[b]:
            return False
        frontier = {a}
        for _ in range(self.levels[b] - self.levels[a]):
            frontier = {t for k in frontier for _, t in self.up_covers[k]}
        return b in frontier


def minuscule_weights(rs: RootSystem) -> List[Weight]:
    """
    Minuscule fundamental weights of a root system.

    A fundamental weight omega is minuscule when (omega, beta^vee) is 0 or 1
    for every positive root beta.

    Args:
        rs: Root system

    Returns:
        List of minuscule fundamental weights, by node number
    """
    result = []
    for i in range(1, rs.rank + 1):
        omega = Weight.fundamental(rs.rank, i)
        if all(v in (0, 1) for v in positive_coroot_values(rs, omega)):
            result.append(omega)
    logger.debug(f"{rs.type}: minuscule nodes {[w.coords.index(1) + 1 for w in result]}")
    return result


def generate_lattice(rs: RootSystem, lam: Weight) -> WeightLattice:
    """
    Generate the weight lattice of V^lambda by breadth-first closure.

    Every generated weight must have coordinates in {-1, 0, 1}; the first
    weight that does not is reported as evidence that lambda is not minuscule.

    Args:
        rs: Root system
        lam: Dominant minuscule weight

    Returns:
        WeightLattice with lambda at index 0

    Raises:
        ValueError: lambda has the wrong rank, is not dominant, or is not minuscule
    """
    if lam.rank != rs.rank:
        raise ValueError(f"Weight {lam} has {lam.rank} coordinates, {rs.type} needs {rs.rank}")
    if not lam.is_dominant():
        raise ValueError(f"Weight {lam} is not dominant")

    def check(mu: Weight) -> None:
        if any(c not in (-1, 0, 1) for c in mu.coords):
            raise ValueError(
                f"Weight {lam} is not minuscule for {rs.type}: its orbit contains {mu}"
            )

    check(lam)
    level_sets: List[List[Weight]] = [[lam]]
    while True:
        targets = set()
        for mu in level_sets[-1]:
            for i, c in enumerate(mu.coords, start=1):
                if c == 1:
                    nu = simple_reflection(rs, i, mu)
                    check(nu)
                    targets.add(nu)
        if not targets:
            break
        level_sets.append(sorted(targets))

    elements: List[Weight] = []
    levels: List[int] = []
    for depth, level_set in enumerate(level_sets):
        elements.extend(level_set)
        levels.extend([depth] * len(level_set))
    index = {mu: k for k, mu in enumerate(elements)}

    up_covers = []
    for mu in elements:
        covers = tuple(
            (i, index[simple_reflection(rs, i, mu)])
            for i, c in enumerate(mu.coords, start=1) if c == 1
        )
        up_covers.append(covers)

    if len(level_sets[-1]) != 1:
        raise ValueError(f"Orbit of {lam} has {len(level_sets[-1])} maximal weights")
    top = len(elements) - 1
    if not elements[top].is_antidominant():
        raise ValueError(f"Top weight {elements[top]} of the orbit of {lam} is not antidominant")

    logger.debug(f"{rs.type} {lam}: {len(elements)} weights in {len(level_sets)} levels")
    return WeightLattice(
        rs=rs,
        lam=lam,
        elements=tuple(elements),
        up_covers=tuple(up_covers),
        levels=tuple(levels),
        bottom=0,
        top=top,
        _index=index,
    )


def rank_decomposition(lat: WeightLattice) -> List[List[int]]:
    """Level sets (lists of element indices); level = number of simple roots subtracted from lambda."""
    result: List[List[int]] = [[] for _ in range(lat.height + 1)]
    for k, depth in enumerate(lat.levels):
        result[depth].append(k)
    return result


def longest_element_involution(lat: WeightLattice) -> List[int]:
    """
    w0 on the orbit, as a permutation of element indices.

    -w0 permutes the simple roots, so w0(mu) is obtained by permuting the
    coordinates of -mu the way -w0 permutes the nodes. The permutation is read
    off from the top weight: w0(lambda) = top.
    """
    n = lat.rs.rank
    star = _diagram_automorphism(lat.rs)
    result = []
    for mu in lat.elements:
        image = Weight(tuple(-mu.coords[star[j]] for j in range(n)))
        result.append(lat.index_of(image))
    if result[lat.bottom] != lat.top:
        raise ValueError(f"w0 does not send {lat.lam} to the top of its orbit")
    return result


def _diagram_automorphism(rs: RootSystem) -> List[int]:
    """The permutation of nodes induced by -w0 (0-based)."""
    n = rs.rank
    family = rs.type.family
    identity = list(range(n))
    if family is Family.A:
        return list(reversed(identity))
    if family is Family.D and n % 2 == 1:
        return identity[:n - 2] + [n - 1, n - 2]
    if family is Family.E and n == 6:
        # 1 <-> 6, 3 <-> 5, 2 and 4 fixed
        return [5, 1, 4, 3, 2, 0]
    return identity


def expected_orbit_size(family: Family, rank: int, node: int) -> Optional[int]:
    """
    Number of weights of the minuscule representation V^{omega_node}.

    Returns:
        Known dimension, or None if omega_node is not minuscule
    """
    n = rank
    if family is Family.A:
        return comb(n + 1, node)
    if family is Family.B and node == n:
        return 2 ** n
    if family is Family.C and node == 1:
        return 2 * n
    if family is Family.D:
        if node == 1:
            return 2 * n
        if node in (n - 1, n):
            return 2 ** (n - 1)
    if family is Family.E:
        if n == 6 and node in (1, 6):
            return 27
        if n == 7 and node == 7:
            return 56
    return None
