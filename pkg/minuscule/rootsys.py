# -*- coding: utf-8 -*-
"""
Finite Cartan data and exact weight-space arithmetic.

Conventions (used by every other module in the package):
- Dynkin nodes follow Bourbaki numbering and are 1-based in the public API.
- cartan[i][j] = (alpha_j, alpha_i^vee), stored 0-based. Column j of the
  Cartan matrix is alpha_j written in the fundamental-weight basis.
- Long roots have squared length 2, so d_i = (alpha_i, alpha_i) / 2 is 1
  for every node of a simply-laced type.
- A Weight stores coords[i] = (mu, alpha_{i+1}^vee).

Functions:
- build_root_system: Cartan matrix, symmetrizer and Gram matrix of a type
- inner: exact inner product of two weights
- simple_reflection: s_i in fundamental-weight coordinates
- positive_roots / positive_coroot_values: positive-root closure
"""
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

import sympy

logger = logging.getLogger(__name__)


class Family(Enum):
    """Cartan families that carry minuscule weights."""
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


# Smallest admissible rank per family; E is further restricted to 6, 7, 8
MIN_RANK = {
    Family.A: 1,
    Family.B: 2,
    Family.C: 3,
    Family.D: 4,
    Family.E: 6,
}

SIMPLY_LACED = (Family.A, Family.D, Family.E)


@dataclass(frozen=True)
class CartanType:
    """A Cartan family together with its rank."""
    family: Family
    rank: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            try:
                object.__setattr__(self, 'family', Family(str(self.family).upper()))
            except ValueError:
                raise ValueError(
                    f"Unknown Cartan family: {self.family!r}. "
                    f"Available: {[f.value for f in Family]}"
                )
        if not self.is_admissible():
            raise ValueError(
                f"Inadmissible Cartan type {self.family.value}{self.rank}: "
                f"{self._admissible_ranks()}"
            )

    def _admissible_ranks(self) -> str:
        if self.family is Family.E:
            return "type E needs rank 6, 7 or 8"
        return f"type {self.family.value} needs rank >= {MIN_RANK[self.family]}"

    def is_admissible(self) -> bool:
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            return False
        if self.family is Family.E:
            return self.rank in (6, 7, 8)
        return self.rank >= MIN_RANK[self.family]

    @property
    def simply_laced(self) -> bool:
        return self.family in SIMPLY_LACED

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


@dataclass(frozen=True, order=True)
class Weight:
    """An integral weight in the fundamental-weight basis."""
    coords: Tuple[int, ...]

    @classmethod
    def fundamental(cls, rank: int, i: int) -> 'Weight':
        """omega_i (1-based)."""
        if not 1 <= i <= rank:
            raise IndexError(f"Fundamental weight index {i} out of range 1..{rank}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_antidominant(self) -> bool:
        return all(c <= 0 for c in self.coords)

    def __sub__(self, other: 'Weight') -> 'Weight':
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> 'Weight':
        return Weight(tuple(-a for a in self.coords))

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class RootSystem:
    """Cartan datum with the exact bilinear form on the weight space."""
    type: CartanType
    cartan: Tuple[Tuple[int, ...], ...]
    symmetrizer: Tuple[Fraction, ...]
    gram_fundamental: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def simply_laced(self) -> bool:
        return self.type.simply_laced

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise IndexError(f"Simple root index {i!r} out of range 1..{self.rank} for {self.type}")

    def commutes(self, i: int, j: int) -> bool:
        """Whether s_i and s_j commute (distinct, non-adjacent nodes)."""
        return i != j and self.cartan[i - 1][j - 1] == 0


def _dynkin_edges(ct: CartanType) -> List[Tuple[int, int]]:
    """Edges of the underlying Dynkin graph, 1-based, Bourbaki numbering."""
    n = ct.rank
    if ct.family in (Family.A, Family.B, Family.C):
        return [(i, i + 1) for i in range(1, n)]
    if ct.family is Family.D:
        edges = [(i, i + 1) for i in range(1, n - 1)]
        edges.append((n - 2, n))
        return edges
    # E_n: 1-3-4-5-...-n with 2 hanging off 4
    edges = [(1, 3), (2, 4)]
    edges += [(i, i + 1) for i in range(3, n)]
    return edges


def cartan_matrix(ct: CartanType) -> List[List[int]]:
    """
    Cartan matrix with A[i][j] = (alpha_j, alpha_i^vee), 0-based storage.

    B_n has its short root at node n, so row n carries the -2;
    C_n has its long root at node n, so row n-1 carries the -2.
    """
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(ct):
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1
    if ct.family is Family.B:
        a[n - 1][n - 2] = -2
    elif ct.family is Family.C:
        a[n - 2][n - 1] = -2
    return a


def symmetrizer(ct: CartanType) -> List[Fraction]:
    """d_i = (alpha_i, alpha_i) / 2 with long roots of squared length 2."""
    n = ct.rank
    if ct.family is Family.B:
        return [Fraction(1)] * (n - 1) + [Fraction(1, 2)]
    if ct.family is Family.C:
        return [Fraction(1, 2)] * (n - 1) + [Fraction(1)]
    return [Fraction(1)] * n


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


@lru_cache(maxsize=None)
def _build_cached(family: Family, rank: int) -> RootSystem:
    ct = CartanType(family, rank)
    a = cartan_matrix(ct)
    d = symmetrizer(ct)

    a_mat = sympy.Matrix(a)
    d_mat = sympy.diag(*[sympy.Rational(x.numerator, x.denominator) for x in d])

    # (alpha_i, alpha_j) = d_i * A[i][j] must be symmetric positive definite
    b_mat = d_mat * a_mat
    if b_mat != b_mat.T:
        raise ValueError(f"Symmetrized Cartan matrix of {ct} is not symmetric")
    if not b_mat.is_positive_definite:
        raise ValueError(f"Symmetrized Cartan matrix of {ct} is not positive definite")

    # (omega_i, omega_k) = d_i * (A^-1)[i][k]
    g_mat = d_mat * a_mat.inv()
    gram = tuple(
        tuple(_to_fraction(g_mat[i, j]) for j in range(rank))
        for i in range(rank)
    )

    logger.debug(f"Built root system {ct}")
    return RootSystem(
        type=ct,
        cartan=tuple(tuple(row) for row in a),
        symmetrizer=tuple(d),
        gram_fundamental=gram,
    )


def build_root_system(ct: CartanType) -> RootSystem:
    """
    Build the Cartan datum of an admissible type.

    Args:
        ct: Cartan type (admissibility is checked when the type is created)

    Returns:
        RootSystem with exact Gram matrix of the fundamental weights
    """
    return _build_cached(ct.family, ct.rank)


def root_system(family, rank: int) -> RootSystem:
    """Shorthand: root_system('A', 3)."""
    return build_root_system(CartanType(family, rank))


def _check_weight(rs: RootSystem, mu: Weight) -> None:
    if mu.rank != rs.rank:
        raise ValueError(f"Weight {mu} has {mu.rank} coordinates, {rs.type} needs {rs.rank}")


def inner(rs: RootSystem, mu: Weight, nu: Weight) -> Fraction:
    """Exact inner product (mu, nu) = mu^T G nu."""
    _check_weight(rs, mu)
    _check_weight(rs, nu)
    g = rs.gram_fundamental
    total = Fraction(0)
    for i, a in enumerate(mu.coords):
        if a == 0:
            continue
        row = g[i]
        for j, b in enumerate(nu.coords):
            if b:
                total += a * b * row[j]
    return total


def simple_root(rs: RootSystem, i: int) -> Weight:
    """alpha_i in the fundamental-weight basis (column i of the Cartan matrix)."""
    rs.check_index(i)
    return Weight(tuple(rs.cartan[j][i - 1] for j in range(rs.rank)))


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    rs.check_index(i)
    return Weight.fundamental(rs.rank, i)


def simple_reflection(rs: RootSystem, i: int, mu: Weight) -> Weight:
    """s_i(mu) = mu - (mu, alpha_i^vee) alpha_i."""
    rs.check_index(i)
    _check_weight(rs, mu)
    c = mu.coords[i - 1]
    if c == 0:
        return mu
    return Weight(tuple(mu.coords[j] - c * rs.cartan[j][i - 1] for j in range(rs.rank)))


def coroot_pairing(rs: RootSystem, mu: Weight, i: int) -> Fraction:
    """(mu, alpha_i^vee) = 2 (mu, alpha_i) / (alpha_i, alpha_i), through the Gram matrix."""
    return inner(rs, mu, simple_root(rs, i)) / rs.symmetrizer[i - 1]


def is_simply_laced(rs: RootSystem) -> bool:
    return rs.simply_laced


def root_length_squared(rs: RootSystem) -> Optional[Fraction]:
    """Omega^2, the common squared root length; None for multiply-laced types."""
    if not rs.simply_laced:
        return None
    return 2 * rs.symmetrizer[0]


def rho(rs: RootSystem) -> Weight:
    """Half-sum of positive roots, which is omega_1 + ... + omega_t."""
    return Weight((1,) * rs.rank)


@lru_cache(maxsize=None)
def _positive_roots_cached(family: Family, rank: int) -> Tuple[Tuple[int, ...], ...]:
    rs = _build_cached(family, rank)
    a = rs.cartan
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]

    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(rank):
            # (beta, alpha_i^vee) for beta = sum_j c_j alpha_j
            pairing = sum(beta[j] * a[i][j] for j in range(rank))
            if pairing == 0:
                continue
            image = tuple(beta[j] - (pairing if j == i else 0) for j in range(rank))
            if all(c >= 0 for c in image) and image not in seen:
                seen.add(image)
                queue.append(image)

    # height, then lexicographic
    return tuple(sorted(seen, key=lambda r: (sum(r), r)))


def positive_roots(rs: RootSystem) -> List[Tuple[int, ...]]:
    """
    Positive roots in simple-root coordinates.

    Every positive root is reached from a simple root through simple
    reflections that stay positive, so the closure never leaves the
    positive cone.
    """
    return list(_positive_roots_cached(rs.type.family, rs.rank))


def root_as_weight(rs: RootSystem, beta: Tuple[int, ...]) -> Weight:
    """Convert simple-root coordinates to fundamental-weight coordinates."""
    return Weight(tuple(
        sum(rs.cartan[k][j] * beta[j] for j in range(rs.rank))
        for k in range(rs.rank)
    ))


def _root_norm(rs: RootSystem, beta: Tuple[int, ...]) -> Fraction:
    d = rs.symmetrizer
    return sum(
        (beta[i] * beta[j] * d[i] * rs.cartan[i][j]
         for i in range(rs.rank) for j in range(rs.rank) if beta[i] and beta[j]),
        Fraction(0),
    )


def positive_coroot_values(rs: RootSystem, lam: Weight) -> List[int]:
    """
    (lam, beta^vee) for every positive root beta.

    Args:
        rs: Root system
        lam: Weight in fundamental coordinates

    Returns:
        List of integers, one per positive root (ordered as positive_roots)
    """
    _check_weight(rs, lam)
    d = rs.symmetrizer
    values = []
    for beta in positive_roots(rs):
        # (lam, alpha_j) = lam_j d_j
        pairing = sum((beta[j] * lam.coords[j] * d[j] for j in range(rs.rank)), Fraction(0))
        value = 2 * pairing / _root_norm(rs, beta)
        if value.denominator != 1:
            raise ValueError(f"Non-integral coroot pairing {value} for {lam} in {rs.type}")
        values.append(int(value))
    return values


def rho_from_roots(rs: RootSystem) -> Tuple[Fraction, ...]:
    """Half-sum of the enumerated positive roots, in fundamental coordinates."""
    total = [Fraction(0)] * rs.rank
    for beta in positive_roots(rs):
        for k, c in enumerate(root_as_weight(rs, beta).coords):
            total[k] += c
    return tuple(x / 2 for x in total)


def coroot_map_matrix(rs: RootSystem) -> sympy.Matrix:
    """
    theta -> sum_i (theta, alpha_i^vee) alpha_i^vee in the fundamental basis.

    Column k is the image of omega_k, which is alpha_k^vee = alpha_k / d_k.
    """
    n = rs.rank
    return sympy.Matrix(n, n, lambda j, k: sympy.Rational(rs.cartan[j][k]) / sympy.Rational(
        rs.symmetrizer[k].numerator, rs.symmetrizer[k].denominator))


def expand_in_fundamental_basis(rs: RootSystem, theta: Weight) -> Tuple[Fraction, ...]:
    """Coordinates of sum_i (theta, alpha_i^vee) omega_i, with pairings taken via the Gram matrix."""
    return tuple(coroot_pairing(rs, theta, i) for i in range(1, rs.rank + 1))

