"""Exact integer models of the finite root systems.

Roots live in the simple-root basis and weights in the fundamental-weight
basis, both as plain tuples of Python ints, so every pairing and reflection
below is exact.  Simple roots are numbered 1..rank following Bourbaki.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import InvariantViolation

Root = tuple[int, ...]
Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_RANK_CONSTRAINTS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _positive_root_count(family: str, rank: int) -> int:
    """Classical count of positive roots, used as a generation oracle."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    return 24 if family == "F" else 6


def _cartan_matrix(family: str, rank: int) -> Matrix:
    """Cartan matrix with entry[i][j] = <alpha_i^vee, alpha_j> (0-based)."""
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if family in ("A", "B", "C"):
        for i in range(1, rank):
            bond(i, i + 1)
        if family == "B":
            bond(rank - 1, rank, -1, -2)  # alpha_rank is short
        elif family == "C":
            bond(rank - 1, rank, -2, -1)  # alpha_rank is long
    elif family == "D":
        for i in range(1, rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1)
        bond(rank - 2, rank)
    elif family == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: rank - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(2, 4)
    elif family == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)  # alpha_3, alpha_4 short
        bond(3, 4)
    elif family == "G":
        bond(1, 2, -3, -1)  # alpha_1 short
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Matrix) -> tuple[int, ...]:
    """Positive integers d with d_i * a_ij = d_j * a_ji, normalized to gcd 1.

    With this normalization short roots have squared length 2 under the
    bilinear form (alpha_i, alpha_j) = d_i * a_ij.
    """
    rank = len(cartan)
    d: list[Fraction | None] = [None] * rank
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(rank):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise InvariantViolation("Dynkin diagram is not connected")
    denom = 1
    for x in d:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    for i in range(rank):
        for j in range(rank):
            if ints[i] * cartan[i][j] != ints[j] * cartan[j][i]:
                raise InvariantViolation("symmetrizer does not symmetrize the Cartan matrix")
    return tuple(ints)


@dataclass(frozen=True)
class RootSystem:
    """A finite root system, immutable after construction.

    Use :func:`build_root_system`; the constructor performs no validation.
    """

    family: str
    rank: int
    cartan: Matrix
    positive_roots: tuple[Root, ...]
    highest_root: Root
    symmetrizer: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def simple_root(self, i: int) -> Root:
        """Coefficient vector of alpha_i (1-based Bourbaki index)."""
        self._check_index(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def fundamental_weight(self, k: int) -> Weight:
        """Coefficient vector of the fundamental weight with 1-based index k."""
        self._check_index(k)
        return tuple(1 if j == k - 1 else 0 for j in range(self.rank))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple index {i} out of range [1, {self.rank}]")

    def bilinear(self, x: Root, y: Root) -> int:
        """Invariant form (x, y); short roots have (x, x) = 2."""
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = self.cartan[i]
                di = self.symmetrizer[i]
                total += xi * di * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return total

    def pairing(self, x: Root, y: Root) -> int:
        """Exact coroot pairing <x^vee, y> = 2(x, y)/(x, x) for roots x, y.

        >>> rs = build_root_system("A", 2)
        >>> rs.pairing((1, 0), (0, 1))
        -1
        >>> rs.pairing((1, 0), (1, 1))
        1
        """
        norm = self.bilinear(x, x)
        if norm == 0:
            raise ValueError("zero vector has no coroot")
        num = 2 * self.bilinear(x, y)
        if num % norm:
            raise InvariantViolation(f"non-integral pairing of {x} with {y}")
        return num // norm

    def weight_pairing(self, x: Root, lam: Weight) -> int:
        """Pairing <x^vee, lam> of a coroot against a weight."""
        norm = self.bilinear(x, x)
        if norm == 0:
            raise ValueError("zero vector has no coroot")
        num = 2 * sum(xi * di * li for xi, di, li in zip(x, self.symmetrizer, lam))
        if num % norm:
            raise InvariantViolation(f"non-integral pairing of {x} with weight {lam}")
        return num // norm

    def reflect(self, i: int, y: Root) -> Root:
        """Simple reflection s_i applied to a root-basis vector.

        >>> rs = build_root_system("A", 2)
        >>> rs.reflect(1, (0, 1))
        (1, 1)
        >>> rs.reflect(1, (1, 0))
        (-1, 0)
        """
        self._check_index(i)
        c = sum(self.cartan[i - 1][j] * yj for j, yj in enumerate(y) if yj)
        if not c:
            return y
        out = list(y)
        out[i - 1] -= c
        return tuple(out)

    def reflect_weight(self, i: int, lam: Weight) -> Weight:
        """Simple reflection s_i applied to a weight-basis vector."""
        self._check_index(i)
        c = lam[i - 1]
        if not c:
            return lam
        return tuple(lk - c * self.cartan[k][i - 1] for k, lk in enumerate(lam))

    def reflect_along(self, x: Root, y: Root) -> Root:
        """Reflection s_x in an arbitrary root x, applied to the root y."""
        c = self.pairing(x, y)
        return tuple(yj - c * xj for xj, yj in zip(x, y))

    def is_positive_root(self, y: Root) -> bool:
        return y in self._root_set() and all(c >= 0 for c in y)

    def _root_set(self) -> frozenset[Root]:
        cached = self._cache.get("root_set")
        if cached is None:
            cached = frozenset(self.positive_roots)
            self._cache["root_set"] = cached
        return cached


def build_root_system(family: str, rank: int) -> RootSystem:
    """Build the full root system of the given finite type.

    Positive roots are generated by closing the simple roots under all simple
    reflections; the result is checked against the classical root count.

    >>> rs = build_root_system("A", 2)
    >>> rs.cartan
    ((2, -1), (-1, 2))
    >>> sorted(rs.positive_roots)
    [(0, 1), (1, 0), (1, 1)]
    """
    if family not in _RANK_CONSTRAINTS:
        raise ValueError(f"unknown family {family!r}: expected one of A B C D E F G")
    low, high = _RANK_CONSTRAINTS[family]
    if rank < low:
        raise ValueError(f"type {family} requires rank >= {low} (got {rank})")
    if high is not None and rank > high:
        raise ValueError(f"type {family} requires rank <= {high} (got {rank})")

    cartan = _cartan_matrix(family, rank)
    d = _symmetrizer(cartan)

    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    seen: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(rank):
                c = sum(cartan[i][j] * rj for j, rj in enumerate(r) if rj)
                if not c:
                    continue
                img = list(r)
                img[i] -= c
                t = tuple(img)
                if all(x >= 0 for x in t) and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    positive = tuple(sorted(seen))

    expected = _positive_root_count(family, rank)
    if len(positive) != expected:
        raise InvariantViolation(
            f"{family}{rank}: generated {len(positive)} positive roots, expected {expected}"
        )
    highest = max(positive, key=lambda r: (sum(r), r))
    for r in positive:
        if any(ri > hi for ri, hi in zip(r, highest)):
            raise InvariantViolation(f"{family}{rank}: highest root is not dominant over {r}")

    return RootSystem(family, rank, cartan, positive, highest, d)


def classify_minuscule(rs: RootSystem) -> list[tuple[int, bool, bool]]:
    """Per fundamental weight: (index, is_minuscule, is_cominuscule).

    A weight is minuscule when every positive coroot pairs with it to at most
    1, and cominuscule when its node carries coefficient 1 in the highest
    root.  The latter is the table characterization; the coroot form
    <alpha_0^vee, w> = 1 agrees with it exactly in the simply-laced types.
    """
    out = []
    for k in range(1, rs.rank + 1):
        wt = rs.fundamental_weight(k)
        minuscule = all(rs.weight_pairing(a, wt) <= 1 for a in rs.positive_roots)
        cominuscule = rs.highest_root[k - 1] == 1
        out.append((k, minuscule, cominuscule))
    return out


def minuscule_weight_indices(rs: RootSystem) -> tuple[int, ...]:
    """Indices of the minuscule fundamental weights."""
    return tuple(k for k, m, _ in classify_minuscule(rs) if m)
