# -*- coding: utf-8 -*-
"""
Catalog of minuscule (family, rank, weight) triples.

Minuscule nodes per family are kept in a registry, the way output formats
are registered elsewhere; every entry is also checked against the minuscule
criterion when it is created.

Functions:
- enumerate_catalog: all entries inside the rank caps
- get_entry: validated lookup used by the command line
- build_entry: root system, weight lattice and heap of an entry
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional

from config import config
from minuscule.heap import Heap, build_heap
from minuscule.rootsys import CartanType, Family, RootSystem, Weight, build_root_system
from minuscule.weight_orbit import WeightLattice, generate_lattice, minuscule_weights

logger = logging.getLogger(__name__)


def _e_nodes(rank: int) -> List[int]:
    return {6: [1, 6], 7: [7]}.get(rank, [])


# Minuscule nodes per family, as a function of rank
MINUSCULE_NODES: Dict[Family, Callable[[int], List[int]]] = {
    Family.A: lambda n: list(range(1, n + 1)),
    Family.B: lambda n: [n],
    Family.C: lambda n: [1],
    Family.D: lambda n: [1, n - 1, n],
    Family.E: _e_nodes,
}

FAMILY_ORDER = (Family.A, Family.B, Family.C, Family.D, Family.E)


@dataclass(frozen=True)
class CatalogEntry:
    """A minuscule weight omega_k of a Cartan type."""
    family: Family
    rank: int
    weight_index: int

    def __post_init__(self):
        ct = CartanType(self.family, self.rank)
        object.__setattr__(self, 'family', ct.family)
        if self.weight_index not in MINUSCULE_NODES[ct.family](self.rank):
            available = MINUSCULE_NODES[ct.family](self.rank)
            raise ValueError(
                f"omega_{self.weight_index} is not minuscule for {ct}. Available: {available}"
            )

    @property
    def cartan_type(self) -> CartanType:
        return CartanType(self.family, self.rank)

    @property
    def weight(self) -> Weight:
        return Weight.fundamental(self.rank, self.weight_index)

    @property
    def simply_laced(self) -> bool:
        return self.cartan_type.simply_laced

    @property
    def poset_name(self) -> Optional[str]:
        """Classical name of the minuscule poset, when there is one."""
        n, k = self.rank, self.weight_index
        if self.family is Family.A:
            return f"[{n + 1 - k}]×[{k}]"
        if self.family is Family.C:
            return f"[{2 * n - 1}]"
        if self.family is Family.B:
            return f"shifted staircase of size {n}"
        if self.family is Family.D:
            if k == 1:
                return f"double-tailed diamond of rank {n}"
            return f"shifted staircase of size {n - 1}"
        return None

    @property
    def simply_laced_twin(self) -> Optional['CatalogEntry']:
        """
        The simply-laced entry with the same minuscule poset.

        B_n omega_n shares its poset with D_{n+1} omega_{n+1} (with D_3 read
        as A_3), C_n omega_1 with A_{2n-1} omega_1.
        """
        n = self.rank
        if self.family is Family.B:
            if n == 2:
                return CatalogEntry(Family.A, 3, 1)
            return CatalogEntry(Family.D, n + 1, n + 1)
        if self.family is Family.C:
            return CatalogEntry(Family.A, 2 * n - 1, 1)
        return None

    def to_dict(self) -> Dict[str, object]:
        return {'family': self.family.value, 'rank': self.rank, 'weight_index': self.weight_index}

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank} ω{self.weight_index}"


def enumerate_catalog(max_rank: Optional[int] = None, caps: Optional[Dict[str, int]] = None) -> List[CatalogEntry]:
    """
    All minuscule entries inside the per-family caps, or up to max_rank.

    An explicit max_rank replaces the caps for every family, E included.

    Args:
        max_rank: Global rank bound (None: caps only)
        caps: Per-family bounds keyed by family letter (default from config)

    Returns:
        Entries ordered by family (A, B, C, D, E), rank, node
    """
    if max_rank is not None and max_rank < 1:
        raise ValueError(f"max_rank must be >= 1, got {max_rank}")
    if caps is None:
        caps = config.rank_caps()

    entries = []
    for family in FAMILY_ORDER:
        bound = caps.get(family.value, 0) if max_rank is None else max_rank
        for rank in range(1, bound + 1):
            try:
                ct = CartanType(family, rank)
            except ValueError:
                continue
            if family is Family.E and max_rank is None and rank not in config.E_RANKS:
                continue
            _check_nodes(ct)
            entries.extend(CatalogEntry(family, rank, k) for k in MINUSCULE_NODES[family](rank))
    logger.debug(f"Catalog up to rank {max_rank}: {len(entries)} entries")
    return entries


def _check_nodes(ct: CartanType) -> None:
    """Registry nodes agree with the minuscule criterion."""
    found = [w.coords.index(1) + 1 for w in minuscule_weights(build_root_system(ct))]
    if found != MINUSCULE_NODES[ct.family](ct.rank):
        raise ValueError(f"Minuscule nodes of {ct} are {found}, registry has {MINUSCULE_NODES[ct.family](ct.rank)}")


def get_entry(family: str, rank: int, weight_index: int, max_rank: Optional[int] = None) -> CatalogEntry:
    """
    Validated catalog lookup.

    Args:
        family: Family letter
        rank: Rank
        weight_index: Minuscule node (1-based)
        max_rank: Rank guard; when None the configured per-family caps apply

    Raises:
        ValueError: unknown family, inadmissible type, non-minuscule node, or
            rank above the guard
    """
    entry = CatalogEntry(family, rank, weight_index)
    if max_rank is not None:
        if rank > max_rank:
            raise ValueError(f"{entry} exceeds --max-rank {max_rank}")
    elif not config.admits(entry.family.value, rank):
        raise ValueError(
            f"{entry} is outside the configured rank caps {config.rank_caps()} "
            f"(E ranks {list(config.E_RANKS)}); pass --max-rank to override"
        )
    return entry


@dataclass(frozen=True)
class BuiltEntry:
    """Root system, weight lattice and heap of a catalog entry."""
    entry: CatalogEntry
    rs: RootSystem
    lattice: WeightLattice
    heap: Heap


@lru_cache(maxsize=64)
def build_entry(entry: CatalogEntry) -> BuiltEntry:
    rs = build_root_system(entry.cartan_type)
    lattice = generate_lattice(rs, entry.weight)
    heap = build_heap(lattice)
    return BuiltEntry(entry=entry, rs=rs, lattice=lattice, heap=heap)
