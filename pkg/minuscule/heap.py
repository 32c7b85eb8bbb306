# -*- coding: utf-8 -*-
"""
Minuscule heaps and the isomorphism phi: J(P_lambda) -> Lambda_lambda.

A heap is built from a reduced word read along a maximal chain of the weight
lattice. Element j carries the label of the j-th reflection; j lies below j'
when j < j' and the two reflections do not commute, closed transitively.
Heap element indices are therefore a linear extension of the heap order.

Order ideals are stored as int bitsets keyed by heap element index.

Functions:
- build_heap / heap_from_word: construct a heap
- phi / phi_along / phi_inverse: the lattice isomorphism both ways
- ideals_from_lattice: one ideal per weight
- grid_poset / find_isomorphism: product-of-chains comparison
- heap_to_dict / heap_from_dict: JSON shape used by the export command
"""
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from minuscule.rootsys import (
    CartanType,
    RootSystem,
    Weight,
    build_root_system,
    simple_reflection,
)
from minuscule.weight_orbit import WeightLattice

logger = logging.getLogger(__name__)


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Heap:
    """
    Labelled poset on elements 0..n-1.

    below[j] is the bitmask of elements strictly below j, above[j] the bitmask
    of elements strictly above j, by_label[i] the elements labelled i in
    ascending (chain) order.
    """
    rs: RootSystem
    lam: Weight
    labels: Tuple[int, ...]
    below: Tuple[int, ...]
    above: Tuple[int, ...]
    by_label: Dict[int, Tuple[int, ...]] = field(compare=False)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def less_than(self, a: int, b: int) -> bool:
        return bool(self.below[b] >> a & 1)

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.less_than(a, b) or self.less_than(b, a)

    def label_mask(self, i: int) -> int:
        mask = 0
        for p in self.by_label.get(i, ()):
            mask |= 1 << p
        return mask

    def covers(self) -> List[Tuple[int, int]]:
        """Hasse diagram as (lower, upper) pairs, sorted."""
        result = []
        for b in range(len(self)):
            for a in _bits(self.below[b]):
                # a is covered by b unless something sits strictly between
                if not (self.above[a] & self.below[b]):
                    result.append((a, b))
        return sorted(result)

    def is_ideal(self, mask: int) -> bool:
        if mask & ~self.full_mask:
            return False
        return all((self.below[p] & ~mask) == 0 for p in _bits(mask))

    def ideal(self, mask: int) -> 'OrderIdeal':
        return OrderIdeal(self, mask)

    def empty_ideal(self) -> 'OrderIdeal':
        return OrderIdeal(self, 0)

    def full_ideal(self) -> 'OrderIdeal':
        return OrderIdeal(self, self.full_mask)

    def principal_ideal(self, p: int) -> 'OrderIdeal':
        return OrderIdeal(self, self.below[p] | (1 << p))

    def ideals(self) -> List['OrderIdeal']:
        """
        All order ideals, sorted by bitmask.

        Elements are decided in index order; an element may join only when
        everything below it already has, so every branch ends in an ideal.
        """
        masks = [0]
        for p in range(len(self)):
            need = self.below[p]
            masks += [m | (1 << p) for m in masks if (m & need) == need]
        return [OrderIdeal(self, m) for m in sorted(masks)]


@dataclass(frozen=True)
class OrderIdeal:
    """A down-closed subset of a heap, as a bitset."""
    heap: Heap = field(compare=False, repr=False)
    members: int

    def __post_init__(self):
        if not self.heap.is_ideal(self.members):
            raise ValueError(f"Bitset {self.members:#b} is not an order ideal of the heap")

    @classmethod
    def from_elements(cls, heap: Heap, elements: Iterable[int]) -> 'OrderIdeal':
        mask = 0
        for p in elements:
            mask |= 1 << p
        return cls(heap, mask)

    def __contains__(self, p: int) -> bool:
        return bool(self.members >> p & 1)

    def __len__(self) -> int:
        return bin(self.members).count('1')

    def __iter__(self) -> Iterator[int]:
        return _bits(self.members)

    def elements(self) -> List[int]:
        return list(_bits(self.members))

    def issubset(self, other: 'OrderIdeal') -> bool:
        return (self.members & ~other.members) == 0

    def maximal_elements(self) -> List[int]:
        """Elements of I with nothing of I above them (the antichain of I)."""
        return [p for p in _bits(self.members) if not (self.heap.above[p] & self.members)]

    def minimal_elements_of_complement(self) -> List[int]:
        comp = self.heap.full_mask & ~self.members
        return [p for p in _bits(comp) if not (self.heap.below[p] & comp)]

    def __repr__(self) -> str:
        return f"OrderIdeal({self.elements()})"


def ideal_from_antichain(heap: Heap, antichain: Iterable[int]) -> OrderIdeal:
    """The ideal generated by an antichain (inverse of maximal_elements)."""
    mask = 0
    for p in antichain:
        mask |= heap.below[p] | (1 << p)
    return OrderIdeal(heap, mask)


def heap_from_word(rs: RootSystem, lam: Weight, word: Sequence[int]) -> Heap:
    """
    Heap of a reduced word, read left to right as applied to lambda.

    Args:
        rs: Root system
        lam: The weight the word starts from
        word: Labels i_1, i_2, ... (1-based simple-root indices)

    Returns:
        Heap whose element j carries label word[j]
    """
    for i in word:
        rs.check_index(i)
    n = len(word)
    below = [0] * n
    for j2 in range(n):
        for j1 in range(j2):
            if not rs.commutes(word[j1], word[j2]):
                below[j2] |= (1 << j1) | below[j1]
    above = [0] * n
    for j2 in range(n):
        for j1 in _bits(below[j2]):
            above[j1] |= 1 << j2

    by_label: Dict[int, List[int]] = {i: [] for i in range(1, rs.rank + 1)}
    for j, i in enumerate(word):
        by_label[i].append(j)

    return Heap(
        rs=rs,
        lam=lam,
        labels=tuple(word),
        below=tuple(below),
        above=tuple(above),
        by_label={i: tuple(v) for i, v in by_label.items()},
    )


def maximal_chain_word(lat: WeightLattice) -> List[int]:
    """Labels of the maximal chain that always takes the smallest available up-cover."""
    word = []
    k = lat.bottom
    while lat.up_covers[k]:
        label, k = lat.up_covers[k][0]
        word.append(label)
    return word


def build_heap(lat: WeightLattice) -> Heap:
    """
    Build the minuscule heap of a weight lattice.

    Args:
        lat: Generated weight lattice

    Returns:
        Heap with one element per step of a maximal chain bottom -> top
    """
    word = maximal_chain_word(lat)
    heap = heap_from_word(lat.rs, lat.lam, word)
    logger.debug(f"{lat.rs.type} {lat.lam}: heap of {len(heap)} elements, word {word}")
    return heap


def phi_along(ideal: OrderIdeal, extension: Sequence[int]) -> Weight:
    """Apply s_label(p) for p along the given linear extension of the ideal, starting at lambda."""
    heap = ideal.heap
    if sorted(extension) != ideal.elements():
        raise ValueError(f"{list(extension)} does not enumerate {ideal}")
    seen = 0
    mu = heap.lam
    for p in extension:
        if heap.below[p] & ~seen:
            raise ValueError(f"{list(extension)} is not a linear extension: {p} comes too early")
        seen |= 1 << p
        mu = simple_reflection(heap.rs, heap.labels[p], mu)
    return mu


def phi(ideal: OrderIdeal) -> Weight:
    """phi(I), computed along the index linear extension."""
    heap = ideal.heap
    mu = heap.lam
    for p in _bits(ideal.members):
        mu = simple_reflection(heap.rs, heap.labels[p], mu)
    return mu


def random_linear_extension(ideal: OrderIdeal, rng: random.Random) -> List[int]:
    """A uniformly chosen next-available element at every step."""
    heap = ideal.heap
    remaining = ideal.members
    placed = 0
    result = []
    while remaining:
        available = [p for p in _bits(remaining) if (heap.below[p] & ~placed) == 0]
        p = rng.choice(available)
        result.append(p)
        placed |= 1 << p
        remaining &= ~(1 << p)
    return result


def _add_label(heap: Heap, mask: int, label: int) -> int:
    """Add the lowest element of the given label that is not yet in the ideal."""
    for p in heap.by_label.get(label, ()):
        if not mask >> p & 1:
            if heap.below[p] & ~mask:
                raise ValueError(f"Element {p} (label {label}) cannot join ideal {mask:#b}")
            return mask | (1 << p)
    raise ValueError(f"No element labelled {label} is left to add to ideal {mask:#b}")


def phi_inverse(lat: WeightLattice, heap: Heap, mu: Weight) -> OrderIdeal:
    """
    The order ideal I with phi(I) = mu.

    Walks down from mu to lambda along down-covers, then replays the labels
    upwards, adding the next element of each label.

    Raises:
        KeyError: mu is not a weight of the lattice
    """
    k = lat.index_of(mu)
    labels = []
    while k != lat.bottom:
        label, k = lat.down_covers(k)[0]
        labels.append(label)
    mask = 0
    for label in reversed(labels):
        mask = _add_label(heap, mask, label)
    return OrderIdeal(heap, mask)


def ideals_from_lattice(lat: WeightLattice, heap: Heap) -> List[OrderIdeal]:
    """One ideal per lattice element, indexed like lat.elements."""
    masks: List[Optional[int]] = [None] * len(lat)
    masks[lat.bottom] = 0
    for k in range(len(lat)):
        # elements are stored level by level, so k is filled before its covers
        for label, target in lat.up_covers[k]:
            if masks[target] is None:
                masks[target] = _add_label(heap, masks[k], label)
    return [OrderIdeal(heap, m) for m in masks]


@dataclass(frozen=True)
class GridPoset:
    """[a] x [b], realised as points (y - x, y + x) with 1 <= x <= a, 1 <= y <= b."""
    a: int
    b: int
    points: Tuple[Tuple[int, int], ...]
    below: Tuple[int, ...]
    columns: Tuple[Tuple[int, ...], ...]


def grid_poset(a: int, b: int) -> GridPoset:
    """
    Product of chains [a] x [b].

    (y - x, y + x) <= (y' - x', y' + x') iff x <= x' and y <= y'. Columns are
    the classes of constant first coordinate y - x.
    """
    pairs = [(x, y) for x in range(1, a + 1) for y in range(1, b + 1)]
    points = tuple((y - x, y + x) for x, y in pairs)
    below = []
    for x2, y2 in pairs:
        mask = 0
        for k, (x1, y1) in enumerate(pairs):
            if (x1, y1) != (x2, y2) and x1 <= x2 and y1 <= y2:
                mask |= 1 << k
        below.append(mask)
    column_keys = sorted({p[0] for p in points})
    columns = tuple(
        tuple(k for k, p in enumerate(points) if p[0] == key) for key in column_keys
    )
    return GridPoset(a=a, b=b, points=points, below=tuple(below), columns=columns)


def find_isomorphism(
    below_a: Sequence[int],
    below_b: Sequence[int],
    classes_a: Optional[Sequence[int]] = None,
    classes_b: Optional[Sequence[int]] = None,
) -> Optional[List[int]]:
    """
    Search for an order isomorphism between two posets given by below-masks.

    When class tags are given, the map must also send elements sharing a tag
    in the first poset to elements sharing a tag in the second, with distinct
    tags going to distinct tags.

    Returns:
        mapping[a] = b, or None if no isomorphism exists
    """
    n = len(below_a)
    if n != len(below_b):
        return None

    def profile(below: Sequence[int]) -> List[Tuple[int, int]]:
        ups = [0] * len(below)
        for mask in below:
            for p in _bits(mask):
                ups[p] += 1
        return [(bin(below[p]).count('1'), ups[p]) for p in range(len(below))]

    prof_a, prof_b = profile(below_a), profile(below_b)
    if sorted(prof_a) != sorted(prof_b):
        return None

    mapping: List[int] = [-1] * n
    used = [False] * n
    tag_map: Dict[int, int] = {}
    tag_used: Dict[int, int] = {}

    def consistent(p: int, q: int) -> bool:
        if prof_a[p] != prof_b[q]:
            return False
        for r in range(p):
            s = mapping[r]
            if bool(below_a[p] >> r & 1) != bool(below_b[q] >> s & 1):
                return False
            if bool(below_a[r] >> p & 1) != bool(below_b[s] >> q & 1):
                return False
        return True

    def extend(p: int) -> bool:
        if p == n:
            return True
        for q in range(n):
            if used[q] or not consistent(p, q):
                continue
            added_tag = False
            if classes_a is not None:
                ta, tb = classes_a[p], classes_b[q]
                if ta in tag_map:
                    if tag_map[ta] != tb:
                        continue
                elif tb in tag_used:
                    continue
                else:
                    tag_map[ta] = tb
                    tag_used[tb] = ta
                    added_tag = True
            mapping[p] = q
            used[q] = True
            if extend(p + 1):
                return True
            used[q] = False
            mapping[p] = -1
            if added_tag:
                del tag_map[classes_a[p]]
                del tag_used[classes_b[q]]
        return False

    return list(mapping) if extend(0) else None


def heap_to_dict(heap: Heap) -> Dict[str, object]:
    """JSON-ready heap: elements with labels and the Hasse diagram."""
    return {
        'type': {'family': heap.rs.type.family.value, 'rank': heap.rs.rank},
        'lambda': list(heap.lam.coords),
        'elements': [{'index': j, 'label': label} for j, label in enumerate(heap.labels)],
        'covers': [list(pair) for pair in heap.covers()],
    }


def heap_from_dict(data: Dict[str, object]) -> Heap:
    """
    Rebuild a heap from its exported shape.

    The element order of an export is a linear extension, so reading the
    labels in index order is a reduced word for the same heap.
    """
    type_info = data['type']
    rs = build_root_system(CartanType(type_info['family'], int(type_info['rank'])))
    lam = Weight(tuple(int(c) for c in data['lambda']))
    elements = sorted(data['elements'], key=lambda e: e['index'])
    heap = heap_from_word(rs, lam, [int(e['label']) for e in elements])
    exported = sorted(tuple(pair) for pair in data['covers'])
    if exported != heap.covers():
        raise ValueError("Imported cover relation does not match the heap of its labels")
    return heap
